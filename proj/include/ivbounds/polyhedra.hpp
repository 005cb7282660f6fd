#pragma once

#include <vector>

#include "ivbounds/rational.hpp"

namespace ivbounds::polyhedra {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 }. `columns` is needed when m has no rows.
Matrix null_space(const Matrix& m, std::size_t columns);

/// Scale a nonzero vector by a positive factor so that it is integral with coprime entries.
Vector primitive(Vector v);

/**
 * Extreme rays of the pointed cone { x : constraints * x >= 0 }, by the double
 * description method with the combinatorial adjacency test. Rays are primitive
 * integer vectors. Throws std::invalid_argument when the cone is not pointed
 * (constraint matrix without full column rank).
 */
std::vector<Vector> extreme_rays(const Matrix& constraints);

/**
 * Facet description of the convex hull of finitely many points.
 *
 * Every row h = (h0, h1..hn) stands for h0 + h1 x1 + ... + hn xn, which is
 * == 0 for the equalities (affine hull) and >= 0 for the facet inequalities.
 */
struct HRepresentation {
    Matrix equalities;
    Matrix inequalities;

    bool contains(const Vector& x) const;
};

HRepresentation convex_hull(const Matrix& points);

}  // namespace ivbounds::polyhedra
