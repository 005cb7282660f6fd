#pragma once

#include <array>
#include <variant>
#include <vector>

#include "ivbounds/constraints.hpp"
#include "ivbounds/polyhedra.hpp"
#include "ivbounds/simplex.hpp"

namespace ivbounds {

struct OptimumReport {
    Rational value;
    MassFunction witness;
    /// One multiplier per equality row of the spec; see lp::DenseSolution for the sign convention.
    std::vector<Rational> dual_certificate;
};

lp::DenseProgram to_dense(const LinearProgramSpec& spec);
std::vector<Rational> to_dense(const LinearFunctional& f);

/// A spec with phase 1 already done, reusable across objectives.
class BoundSolver {
public:
    explicit BoundSolver(const LinearProgramSpec& spec);

    bool feasible() const noexcept { return simplex_.feasible(); }
    std::variant<MassFunction, InfeasibilityCertificate> feasibility() const;
    /// Throws InfeasibleProgram when the spec is infeasible.
    OptimumReport optimize(const LinearFunctional& f, Direction direction) const;

private:
    lp::ExactSimplex simplex_;
};

OptimumReport solve(const LinearProgramSpec& spec, const LinearFunctional& f, Direction direction);

std::variant<MassFunction, InfeasibilityCertificate> feasibility(const LinearProgramSpec& spec);

/// Exact re-check of a report: witness feasibility, value, and the dual certificate.
bool certifies(const LinearProgramSpec& spec, const LinearFunctional& f, Direction direction,
               const OptimumReport& report);

/// Exact re-check of a Farkas certificate against the spec.
bool certifies(const LinearProgramSpec& spec, const InfeasibilityCertificate& certificate);

// ------------------------------------------------------------ dual vertices

/**
 * The spec in inequality form A q <= b, q >= 0: every equality row i becomes
 * row 2i (a_i, b_i) and row 2i+1 (-a_i, -b_i).
 */
struct InequalityForm {
    polyhedra::Matrix a;
    polyhedra::Vector b;
};

InequalityForm inequality_form(const LinearProgramSpec& spec);

/**
 * Extreme point of the dual feasible set.
 *
 * For a maximization, u >= 0 with A'u >= c and objective_value = b'u; the primal
 * maximum is the least objective_value. For a minimization the dual is written for
 * the negated objective, so u >= 0 with A'u >= -c and objective_value = -b'u; the
 * primal minimum is the greatest objective_value.
 */
struct DualVertex {
    std::vector<Rational> u;
    Rational objective_value;
};

/// Vertices of { u >= 0 : A'u >= +-c }. They depend on the rows' coefficients only, never on b.
std::vector<std::vector<Rational>> dual_extreme_points(const LinearProgramSpec& spec, const LinearFunctional& f,
                                                       Direction direction);

/// Throws InfeasibleProgram when the spec is infeasible.
std::vector<DualVertex> enumerate_dual_vertices(const LinearProgramSpec& spec, const LinearFunctional& f,
                                                Direction direction);

/// Objective values of precomputed dual extreme points against a spec's right-hand sides.
std::vector<DualVertex> evaluate_dual_vertices(const std::vector<std::vector<Rational>>& points,
                                               const LinearProgramSpec& spec, Direction direction);

/// The bound certified by a vertex list: least value for Maximize, greatest for Minimize.
Rational dual_bound(const std::vector<DualVertex>& vertices, Direction direction);

/// Exact post-check that u is dual feasible for the spec and objective.
bool is_dual_feasible(const LinearProgramSpec& spec, const LinearFunctional& f, Direction direction,
                      const std::vector<Rational>& u);

// -------------------------------------------------------- image membership

/// Candidate probabilities of the four singleton events, indexed by OutcomeCell::index().
using SingletonTargets = std::array<Rational, kNumCells>;

/**
 * Separating certificate for a point outside the image. Rows are the 8 data
 * cells (ObservedCell order), the 4 singleton events, then the convexity row.
 */
struct NotInImage {
    InfeasibilityCertificate separation;
};

/// Response types whose unit masses are the extreme points of the constraint polytope.
std::vector<ResponseType> admissible_vertices(AssumptionSet assumptions);

/// The images of those extreme points under the stacked data/singleton map, one 12-vector each.
polyhedra::Matrix image_points(AssumptionSet assumptions);

/// The stacked target vector (data values, then singleton targets).
polyhedra::Vector stacked_targets(const DataDistribution& p, const SingletonTargets& targets);

/**
 * Decide whether the stacked data and singleton targets lie in the convex hull of
 * the image points. On success the convex weights are returned as a mass function
 * that reproduces p and the targets. Throws MalformedTargets when the targets are
 * negative or do not sum to one.
 */
std::variant<MassFunction, NotInImage> image_membership(const DataDistribution& p, AssumptionSet assumptions,
                                                        const SingletonTargets& targets);

/// Facet description of the image hull, for inspection.
polyhedra::HRepresentation image_h_representation(AssumptionSet assumptions);

}  // namespace ivbounds
