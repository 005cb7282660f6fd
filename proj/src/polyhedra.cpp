#include "ivbounds/polyhedra.hpp"

#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace ivbounds::polyhedra {

namespace {

using Bits = boost::dynamic_bitset<>;

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

/// Reduced row echelon form in place, pivoting only on the first `columns` columns; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t found = row;
        while (found < m.size() && m[found][col] == 0) ++found;
        if (found == m.size()) continue;
        std::swap(m[row], m[found]);
        const Rational inv = 1 / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t j = 0; j < m[row].size(); ++j) {
                if (m[row][j] != 0) m[i][j] -= factor * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Indices of a maximal linearly independent subset of rows, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t columns) {
    std::vector<std::size_t> chosen;
    Matrix echelon;  // reduced basis of the span of chosen rows, with pivot columns
    std::vector<std::size_t> pivot_cols;
    for (std::size_t i = 0; i < m.size() && chosen.size() < columns; ++i) {
        Vector v = m[i];
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            if (v[pivot_cols[k]] == 0) continue;
            const Rational factor = v[pivot_cols[k]];
            for (std::size_t j = 0; j < columns; ++j) {
                if (echelon[k][j] != 0) v[j] -= factor * echelon[k][j];
            }
        }
        std::size_t pc = columns;
        for (std::size_t j = 0; j < columns; ++j) {
            if (v[j] != 0) {
                pc = j;
                break;
            }
        }
        if (pc == columns) continue;
        const Rational inv = 1 / v[pc];
        for (auto& x : v) x *= inv;
        echelon.push_back(std::move(v));
        pivot_cols.push_back(pc);
        chosen.push_back(i);
    }
    return chosen;
}

/// Inverse of a square nonsingular matrix by Gauss-Jordan elimination.
Matrix inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix aug(n, Vector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = row_reduce(aug, n);
    if (pivots.size() != n) throw std::logic_error("singular basis in double description start");
    Matrix inv(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    }
    return inv;
}

struct Ray {
    Vector coords;
    Bits zeros;  // processed constraint rows that are tight on this ray
};

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    Matrix copy = m;
    return row_reduce(copy, m.front().size()).size();
}

Matrix null_space(const Matrix& m, std::size_t columns) {
    Matrix reduced = m;
    auto pivots = row_reduce(reduced, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        Vector v(columns);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced[k][free];
        basis.push_back(primitive(std::move(v)));
    }
    return basis;
}

Vector primitive(Vector v) {
    Integer lcm_den = 1;
    for (const auto& x : v) {
        if (x != 0) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
    }
    Integer g = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        Integer num = boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, num);
    }
    if (g == 0) throw std::invalid_argument("cannot normalize a zero vector");
    if (g < 0) g = -g;
    const Rational scale(lcm_den, g);
    for (auto& x : v) {
        if (x != 0) x *= scale;
    }
    return v;
}

std::vector<Vector> extreme_rays(const Matrix& constraints) {
    if (constraints.empty()) throw std::invalid_argument("cone with no constraints is not pointed");
    const std::size_t dim = constraints.front().size();
    const std::size_t m = constraints.size();

    auto start = independent_rows(constraints, dim);
    if (start.size() != dim) throw std::invalid_argument("constraint matrix lacks full column rank; cone not pointed");

    // Simplicial start: rays are the columns of the inverse of the chosen rows.
    Matrix basis_rows;
    for (auto i : start) basis_rows.push_back(constraints[i]);
    Matrix inv = inverse(basis_rows);

    Bits processed(m);
    for (auto i : start) processed.set(i);

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < dim; ++k) {
        Ray r;
        r.coords.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) r.coords[j] = inv[j][k];
        r.coords = primitive(std::move(r.coords));
        r.zeros.resize(m);
        for (std::size_t s = 0; s < start.size(); ++s) {
            if (s != k) r.zeros.set(start[s]);
        }
        rays.push_back(std::move(r));
    }

    for (std::size_t row = 0; row < m; ++row) {
        if (processed.test(row)) continue;
        const Vector& a = constraints[row];

        std::vector<std::size_t> pos, neg;
        std::vector<Rational> value(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(a, rays[r].coords);
            if (value[r] > 0) {
                pos.push_back(r);
            } else if (value[r] < 0) {
                neg.push_back(r);
            } else {
                rays[r].zeros.set(row);
            }
        }

        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] >= 0) next.push_back(rays[r]);
        }

        for (auto p : pos) {
            for (auto n : neg) {
                Bits common = rays[p].zeros & rays[n].zeros;
                if (common.count() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
                    if (q == p || q == n) continue;
                    if (common.is_subset_of(rays[q].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray combined;
                combined.coords.resize(dim);
                const Rational& vp = value[p];
                const Rational& vn = value[n];
                for (std::size_t j = 0; j < dim; ++j) {
                    combined.coords[j] = vp * rays[n].coords[j] - vn * rays[p].coords[j];
                }
                combined.coords = primitive(std::move(combined.coords));
                combined.zeros = common;
                combined.zeros.set(row);
                next.push_back(std::move(combined));
            }
        }
        processed.set(row);
        rays = std::move(next);
    }

    std::vector<Vector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.coords));
    return out;
}

bool HRepresentation::contains(const Vector& x) const {
    auto eval = [&](const Vector& h) {
        Rational s = h[0];
        for (std::size_t i = 0; i < x.size(); ++i) s += h[i + 1] * x[i];
        return s;
    };
    for (const auto& e : equalities) {
        if (eval(e) != 0) return false;
    }
    for (const auto& h : inequalities) {
        if (eval(h) < 0) return false;
    }
    return true;
}

HRepresentation convex_hull(const Matrix& points) {
    if (points.empty()) throw std::invalid_argument("convex hull of no points");
    const std::size_t n = points.front().size();

    Matrix lifted;
    for (const auto& p : points) {
        if (p.size() != n) throw std::invalid_argument("points differ in dimension");
        Vector row(n + 1);
        row[0] = 1;
        for (std::size_t i = 0; i < n; ++i) row[i + 1] = p[i];
        lifted.push_back(std::move(row));
    }

    HRepresentation out;
    out.equalities = null_space(lifted, n + 1);

    // Valid inequalities h satisfy lifted * h >= 0. Restricting h to the row space of
    // `lifted` removes the lineality (the affine-hull equations) and leaves a pointed cone.
    Matrix row_basis;
    for (auto i : independent_rows(lifted, n + 1)) row_basis.push_back(lifted[i]);
    const std::size_t r = row_basis.size();

    Matrix reduced(lifted.size(), Vector(r));
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        for (std::size_t k = 0; k < r; ++k) reduced[i][k] = dot(lifted[i], row_basis[k]);
    }

    for (const auto& z : extreme_rays(reduced)) {
        Vector h(n + 1);
        for (std::size_t k = 0; k < r; ++k) {
            for (std::size_t j = 0; j <= n; ++j) h[j] += z[k] * row_basis[k][j];
        }
        bool tight_somewhere = false;
        for (const auto& p : lifted) tight_somewhere = tight_somewhere || dot(p, h) == 0;
        if (tight_somewhere) out.inequalities.push_back(primitive(std::move(h)));
    }
    return out;
}

}  // namespace ivbounds::polyhedra
