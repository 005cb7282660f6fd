#include "ivbounds/constraints.hpp"

#include <stdexcept>

namespace ivbounds {

Rational LinearFunctional::evaluate(const MassFunction& q) const {
    Rational sum = 0;
    for (int i = 0; i < kNumResponseTypes; ++i) {
        if (coefficients_[i] != 0) sum += coefficients_[i] * q[i];
    }
    return sum;
}

bool LinearFunctional::is_zero() const {
    for (const auto& c : coefficients_) {
        if (c != 0) return false;
    }
    return true;
}

LinearFunctional LinearFunctional::operator+(const LinearFunctional& other) const {
    Coefficients out;
    for (int i = 0; i < kNumResponseTypes; ++i) out[i] = coefficients_[i] + other.coefficients_[i];
    return LinearFunctional(out);
}

LinearFunctional LinearFunctional::operator-(const LinearFunctional& other) const {
    Coefficients out;
    for (int i = 0; i < kNumResponseTypes; ++i) out[i] = coefficients_[i] - other.coefficients_[i];
    return LinearFunctional(out);
}

LinearFunctional LinearFunctional::operator-() const {
    Coefficients out;
    for (int i = 0; i < kNumResponseTypes; ++i) out[i] = -coefficients_[i];
    return LinearFunctional(out);
}

Rational EqualityRow::lhs(const MassFunction& q) const {
    return LinearFunctional(coefficients).evaluate(q);
}

bool LinearProgramSpec::is_satisfied_by(const MassFunction& q) const {
    for (const auto& row : rows) {
        if (row.lhs(q) != row.rhs) return false;
    }
    return true;
}

LinearProgramSpec LinearProgramSpec::with_row(EqualityRow row) const {
    LinearProgramSpec out = *this;
    out.rows.push_back(std::move(row));
    return out;
}

namespace {

EqualityRow sum_to_one_row() {
    EqualityRow row;
    row.coefficients.fill(Rational(1));
    row.rhs = 1;
    row.label = "sum";
    return row;
}

}  // namespace

LinearProgramSpec simplex_lp() {
    return LinearProgramSpec{{sum_to_one_row()}};
}

LinearProgramSpec build_lp(const DataDistribution& p, AssumptionSet assumptions) {
    LinearProgramSpec spec;
    for (int i = 0; i < kNumObservedCells; ++i) {
        auto cell = ObservedCell::from_index(i);
        EqualityRow row;
        for (const auto& w : response_types_for_cell(cell.y, cell.d, cell.z)) row.coefficients[w.index()] = 1;
        row.rhs = p.at(cell);
        row.label = "P(" + cell.label() + ")";
        spec.rows.push_back(std::move(row));
    }
    spec.rows.push_back(sum_to_one_row());
    if (assumptions == AssumptionSet::ExogeneityPlusMonotonicity) {
        EqualityRow row;
        for (const auto& w : all_response_types()) {
            if (w.is_defier()) row.coefficients[w.index()] = 1;
        }
        row.rhs = 0;
        row.label = "defiers";
        spec.rows.push_back(std::move(row));
    }
    return spec;
}

LinearFunctional event_functional(const Event& event) {
    Coefficients c;
    for (const auto& w : response_types_for_event(event)) c[w.index()] = 1;
    return LinearFunctional(c);
}

LinearFunctional marginal_functional(int d) {
    if (d != 0 && d != 1) throw std::invalid_argument("treatment arm must be 0 or 1");
    Coefficients c;
    for (const auto& w : all_response_types()) {
        if (w.outcome(d) == 1) c[w.index()] = 1;
    }
    return LinearFunctional(c);
}

LinearFunctional ate_functional() {
    return marginal_functional(1) - marginal_functional(0);
}

}  // namespace ivbounds
