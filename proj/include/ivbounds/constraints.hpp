#pragma once

#include <array>
#include <string>
#include <vector>

#include "ivbounds/model.hpp"

namespace ivbounds {

using Coefficients = std::array<Rational, kNumResponseTypes>;

/// c'q over response-type masses, coefficients in canonical response-type order.
class LinearFunctional {
public:
    LinearFunctional() = default;
    explicit LinearFunctional(Coefficients coefficients) : coefficients_(std::move(coefficients)) {}

    const Coefficients& coefficients() const noexcept { return coefficients_; }
    const Rational& operator[](int index) const { return coefficients_[index]; }

    Rational evaluate(const MassFunction& q) const;
    bool is_zero() const;

    LinearFunctional operator+(const LinearFunctional& other) const;
    LinearFunctional operator-(const LinearFunctional& other) const;
    LinearFunctional operator-() const;

    bool operator==(const LinearFunctional&) const = default;

private:
    Coefficients coefficients_;
};

/// coefficients . q == rhs
struct EqualityRow {
    Coefficients coefficients;
    Rational rhs;
    std::string label;

    Rational lhs(const MassFunction& q) const;
};

/**
 * Feasible set of a bound problem: q >= 0 together with equality rows.
 * The sum-to-one row is always present, so every feasible q lies in the simplex.
 */
struct LinearProgramSpec {
    std::vector<EqualityRow> rows;

    std::size_t num_rows() const noexcept { return rows.size(); }
    static constexpr std::size_t num_variables() noexcept { return kNumResponseTypes; }

    /// Exact check of every equality row (nonnegativity is guaranteed by MassFunction).
    bool is_satisfied_by(const MassFunction& q) const;

    /// Copy with one extra row appended.
    LinearProgramSpec with_row(EqualityRow row) const;
};

/// Rows: the 8 data restrictions in ObservedCell order, sum-to-one, and for EM the zero-defier row.
LinearProgramSpec build_lp(const DataDistribution& p, AssumptionSet assumptions);

/// Only the sum-to-one row: the whole probability simplex.
LinearProgramSpec simplex_lp();

LinearFunctional event_functional(const Event& event);
/// Prob{Y_d = 1}.
LinearFunctional marginal_functional(int d);
/// E[Y1 - Y0].
LinearFunctional ate_functional();

}  // namespace ivbounds
