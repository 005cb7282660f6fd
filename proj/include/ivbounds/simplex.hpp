#pragma once

#include <cstddef>
#include <vector>

#include "ivbounds/errors.hpp"
#include "ivbounds/rational.hpp"

namespace ivbounds {

enum class Direction { Minimize, Maximize };

/**
 * Farkas certificate for { x >= 0 : A x = b } being empty: one multiplier per row
 * with y'A <= 0 componentwise and y'b = residual > 0.
 */
struct InfeasibilityCertificate {
    std::vector<Rational> multipliers;
    Rational residual;
};

class InfeasibleProgram : public Error {
public:
    explicit InfeasibleProgram(InfeasibilityCertificate certificate)
        : Error("linear program is infeasible (certificate residual " + to_string(certificate.residual) + ")"),
          certificate_(std::move(certificate)) {}

    const InfeasibilityCertificate& certificate() const noexcept { return certificate_; }

private:
    InfeasibilityCertificate certificate_;
};

class UnboundedProgram : public Error {
public:
    using Error::Error;
};

namespace lp {

/// { x in Q^n : x >= 0, rows[i] . x = rhs[i] }
struct DenseProgram {
    std::size_t num_variables = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
};

/**
 * Optimal primal point together with row multipliers y.
 * For a maximization A'y >= c, for a minimization A'y <= c, and b'y == value in both cases.
 */
struct DenseSolution {
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> duals;
};

/**
 * Two-phase tableau simplex over exact rationals with Bland's rule.
 *
 * Phase 1 runs once at construction. Artificial variables left basic at zero level
 * mark redundant rows; they stay in the basis and never re-enter, so redundant or
 * duplicated equalities need no preprocessing. Each optimize() call copies the
 * phase-1 tableau, so one instance can serve many objectives.
 */
class ExactSimplex {
public:
    explicit ExactSimplex(DenseProgram program);

    bool feasible() const noexcept { return feasible_; }
    /// Throws std::logic_error when the program is feasible.
    const InfeasibilityCertificate& infeasibility() const;
    /// A basic feasible point; throws InfeasibleProgram when there is none.
    std::vector<Rational> feasible_point() const;

    DenseSolution optimize(const std::vector<Rational>& objective, Direction direction) const;

    const DenseProgram& program() const noexcept { return program_; }

private:
    struct Tableau {
        std::vector<std::vector<Rational>> body;  // m x (n + m); trailing m columns are artificials
        std::vector<Rational> rhs;
        std::vector<std::size_t> basis;
    };

    DenseSolution maximize(const std::vector<Rational>& objective) const;

    DenseProgram program_;
    std::vector<int> row_sign_;
    Tableau phase_one_;
    bool feasible_ = false;
    InfeasibilityCertificate certificate_;
};

/// Exact check of a Farkas certificate against the program.
bool certifies_infeasibility(const DenseProgram& program, const InfeasibilityCertificate& certificate);

/// Exact primal feasibility, objective value and dual-certificate checks.
bool certifies_optimum(const DenseProgram& program, const std::vector<Rational>& objective, Direction direction,
                       const DenseSolution& solution);

}  // namespace lp
}  // namespace ivbounds
