#include "ivbounds/simplex.hpp"

#include <stdexcept>

namespace ivbounds::lp {

namespace {

struct Objective {
    std::vector<Rational> reduced;  // c_j - c_B' B^-1 A_j, per tableau column
    Rational value;                 // c_B' B^-1 b
};

template <typename TableauT>
void pivot(TableauT& t, Objective& obj, std::size_t row, std::size_t col) {
    auto& prow = t.body[row];
    const std::size_t width = prow.size();
    if (prow[col] != 1) {
        const Rational inv = 1 / prow[col];
        for (std::size_t j = 0; j < width; ++j) {
            if (prow[j] != 0) prow[j] *= inv;
        }
        t.rhs[row] *= inv;
    }
    for (std::size_t i = 0; i < t.body.size(); ++i) {
        if (i == row || t.body[i][col] == 0) continue;
        const Rational factor = t.body[i][col];
        auto& target = t.body[i];
        for (std::size_t j = 0; j < width; ++j) {
            if (prow[j] != 0) target[j] -= factor * prow[j];
        }
        t.rhs[i] -= factor * t.rhs[row];
    }
    if (obj.reduced[col] != 0) {
        const Rational factor = obj.reduced[col];
        for (std::size_t j = 0; j < width; ++j) {
            if (prow[j] != 0) obj.reduced[j] -= factor * prow[j];
        }
        obj.value += factor * t.rhs[row];
    }
    t.basis[row] = col;
}

// Bland's rule: lowest-index improving column, ratio ties broken by lowest basic index.
template <typename TableauT>
void run_simplex(TableauT& t, Objective& obj, std::size_t entering_limit) {
    for (;;) {
        std::size_t col = entering_limit;
        for (std::size_t j = 0; j < entering_limit; ++j) {
            if (obj.reduced[j] > 0) {
                col = j;
                break;
            }
        }
        if (col == entering_limit) return;

        std::size_t leave = t.body.size();
        Rational best_ratio;
        for (std::size_t i = 0; i < t.body.size(); ++i) {
            if (t.body[i][col] <= 0) continue;
            Rational ratio = t.rhs[i] / t.body[i][col];
            if (leave == t.body.size() || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == t.body.size()) throw UnboundedProgram("linear program is unbounded");
        pivot(t, obj, leave, col);
    }
}

}  // namespace

ExactSimplex::ExactSimplex(DenseProgram program) : program_(std::move(program)) {
    const std::size_t m = program_.rows.size();
    const std::size_t n = program_.num_variables;
    if (program_.rhs.size() != m) throw std::invalid_argument("row and right-hand side counts differ");
    for (const auto& row : program_.rows) {
        if (row.size() != n) throw std::invalid_argument("row width differs from variable count");
    }

    row_sign_.assign(m, 1);
    Tableau& t = phase_one_;
    t.body.assign(m, std::vector<Rational>(n + m));
    t.rhs.resize(m);
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        row_sign_[i] = program_.rhs[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t.body[i][j] = row_sign_[i] * program_.rows[i][j];
        t.body[i][n + i] = 1;
        t.rhs[i] = row_sign_[i] * program_.rhs[i];
        t.basis[i] = n + i;
    }

    // phase 1: maximize minus the sum of artificials
    Objective obj;
    obj.reduced.assign(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) obj.reduced[j] += t.body[i][j];
        obj.value -= t.rhs[i];
    }
    run_simplex(t, obj, n + m);

    if (obj.value < 0) {
        feasible_ = false;
        certificate_.multipliers.assign(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            Rational y = 0;
            for (std::size_t r = 0; r < m; ++r) {
                if (t.basis[r] >= n) y -= t.body[r][n + i];
            }
            certificate_.multipliers[i] = -row_sign_[i] * y;
        }
        certificate_.residual = -obj.value;
        return;
    }

    feasible_ = true;
    // Drive zero-level artificials out where a structural column can replace them.
    Objective scratch;
    scratch.reduced.assign(n + m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (t.body[r][j] != 0) {
                pivot(t, scratch, r, j);
                break;
            }
        }
    }
}

const InfeasibilityCertificate& ExactSimplex::infeasibility() const {
    if (feasible_) throw std::logic_error("program is feasible; no infeasibility certificate");
    return certificate_;
}

std::vector<Rational> ExactSimplex::feasible_point() const {
    if (!feasible_) throw InfeasibleProgram(certificate_);
    std::vector<Rational> x(program_.num_variables);
    for (std::size_t r = 0; r < phase_one_.basis.size(); ++r) {
        if (phase_one_.basis[r] < program_.num_variables) x[phase_one_.basis[r]] = phase_one_.rhs[r];
    }
    return x;
}

DenseSolution ExactSimplex::optimize(const std::vector<Rational>& objective, Direction direction) const {
    if (objective.size() != program_.num_variables) throw std::invalid_argument("objective width differs");
    if (direction == Direction::Maximize) return maximize(objective);

    std::vector<Rational> negated(objective.size());
    for (std::size_t j = 0; j < objective.size(); ++j) negated[j] = -objective[j];
    DenseSolution sol = maximize(negated);
    sol.value = -sol.value;
    for (auto& y : sol.duals) y = -y;
    return sol;
}

DenseSolution ExactSimplex::maximize(const std::vector<Rational>& c) const {
    if (!feasible_) throw InfeasibleProgram(certificate_);
    const std::size_t m = program_.rows.size();
    const std::size_t n = program_.num_variables;

    Tableau t = phase_one_;
    auto basic_cost = [&](std::size_t r) -> const Rational& {
        static const Rational zero = 0;
        return t.basis[r] < n ? c[t.basis[r]] : zero;
    };

    Objective obj;
    obj.reduced.assign(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) obj.reduced[j] = c[j];
    for (std::size_t r = 0; r < m; ++r) {
        const Rational& cb = basic_cost(r);
        if (cb == 0) continue;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (t.body[r][j] != 0) obj.reduced[j] -= cb * t.body[r][j];
        }
        obj.value += cb * t.rhs[r];
    }
    run_simplex(t, obj, n);

    DenseSolution sol;
    sol.value = obj.value;
    sol.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < n) sol.x[t.basis[r]] = t.rhs[r];
    }
    sol.duals.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        Rational y = 0;
        for (std::size_t r = 0; r < m; ++r) {
            const Rational& cb = basic_cost(r);
            if (cb != 0 && t.body[r][n + i] != 0) y += cb * t.body[r][n + i];
        }
        sol.duals[i] = row_sign_[i] * y;
    }
    return sol;
}

bool certifies_infeasibility(const DenseProgram& program, const InfeasibilityCertificate& certificate) {
    const std::size_t m = program.rows.size();
    if (certificate.multipliers.size() != m || certificate.residual <= 0) return false;
    for (std::size_t j = 0; j < program.num_variables; ++j) {
        Rational column = 0;
        for (std::size_t i = 0; i < m; ++i) column += certificate.multipliers[i] * program.rows[i][j];
        if (column > 0) return false;
    }
    Rational rhs = 0;
    for (std::size_t i = 0; i < m; ++i) rhs += certificate.multipliers[i] * program.rhs[i];
    return rhs == certificate.residual;
}

bool certifies_optimum(const DenseProgram& program, const std::vector<Rational>& objective, Direction direction,
                       const DenseSolution& solution) {
    const std::size_t m = program.rows.size();
    const std::size_t n = program.num_variables;
    if (solution.x.size() != n || solution.duals.size() != m || objective.size() != n) return false;

    Rational primal = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (solution.x[j] < 0) return false;
        primal += objective[j] * solution.x[j];
    }
    if (primal != solution.value) return false;
    for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += program.rows[i][j] * solution.x[j];
        if (lhs != program.rhs[i]) return false;
    }

    for (std::size_t j = 0; j < n; ++j) {
        Rational column = 0;
        for (std::size_t i = 0; i < m; ++i) column += solution.duals[i] * program.rows[i][j];
        if (direction == Direction::Maximize ? column < objective[j] : column > objective[j]) return false;
    }
    Rational dual = 0;
    for (std::size_t i = 0; i < m; ++i) dual += solution.duals[i] * program.rhs[i];
    return dual == solution.value;
}

}  // namespace ivbounds::lp
