#pragma once

// Test-only oracles. Nothing here calls the simplex or the double description code.

#include <array>
#include <optional>
#include <vector>

#include "ivbounds/constraints.hpp"

namespace ivbounds::testing {

inline DataDistribution p_star() {
    return DataDistribution::from_conditionals({Rational(1, 2), Rational(1, 5), Rational(1, 10), Rational(1, 5)},
                                               {Rational(3, 10), Rational(1, 10), Rational(1, 5), Rational(2, 5)});
}

inline DataDistribution p_diamond() {
    return DataDistribution::from_conditionals({Rational(2, 5), Rational(3, 10), Rational(1, 10), Rational(1, 5)},
                                               {Rational(1, 5), Rational(1, 10), Rational(3, 10), Rational(2, 5)});
}

inline DataDistribution p_perfect_compliance() {
    return DataDistribution::from_conditionals({Rational(1, 2), Rational(1, 2), 0, 0},
                                               {0, 0, Rational(1, 2), Rational(1, 2)});
}

inline DataDistribution p_bad() {
    return DataDistribution::from_conditionals({Rational(3, 5), 0, 0, Rational(2, 5)},
                                               {0, Rational(3, 5), Rational(2, 5), 0});
}

inline DataDistribution p_defier() {
    return DataDistribution::from_conditionals({0, 0, 0, 1}, {1, 0, 0, 0});
}

/**
 * Every basic feasible solution of { q >= 0 : rows } found by trying each set of
 * rank-many columns and solving the square system by elimination. The optimum of
 * any linear functional is attained at one of them; an empty result means the
 * program is infeasible.
 */
class BasisEnumerationOracle {
public:
    explicit BasisEnumerationOracle(const LinearProgramSpec& spec) {
        const int n = kNumResponseTypes;
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (const auto& row : spec.rows) {
            a.emplace_back(row.coefficients.begin(), row.coefficients.end());
            b.push_back(row.rhs);
        }

        // Keep a maximal independent subset of rows.
        std::vector<int> keep;
        {
            std::vector<std::vector<Rational>> echelon;
            std::vector<int> lead;
            for (int i = 0; i < static_cast<int>(a.size()); ++i) {
                auto v = a[i];
                for (std::size_t k = 0; k < echelon.size(); ++k) {
                    if (v[lead[k]] == 0) continue;
                    Rational f = v[lead[k]] / echelon[k][lead[k]];
                    for (int j = 0; j < n; ++j) v[j] -= f * echelon[k][j];
                }
                int l = -1;
                for (int j = 0; j < n && l < 0; ++j) {
                    if (v[j] != 0) l = j;
                }
                if (l < 0) continue;
                echelon.push_back(v);
                lead.push_back(l);
                keep.push_back(i);
            }
        }
        const int r = static_cast<int>(keep.size());

        std::vector<int> cols(r);
        for (int i = 0; i < r; ++i) cols[i] = i;
        for (;;) {
            try_basis(a, b, keep, cols);
            int i = r - 1;
            while (i >= 0 && cols[i] == n - r + i) --i;
            if (i < 0) break;
            ++cols[i];
            for (int k = i + 1; k < r; ++k) cols[k] = cols[k - 1] + 1;
        }
    }

    bool feasible() const { return !points_.empty(); }
    const std::vector<std::array<Rational, kNumResponseTypes>>& points() const { return points_; }

    Rational maximum(const LinearFunctional& f) const { return extreme(f, true); }
    Rational minimum(const LinearFunctional& f) const { return extreme(f, false); }

private:
    void try_basis(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                   const std::vector<int>& keep, const std::vector<int>& cols) {
        const int r = static_cast<int>(cols.size());
        std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
        for (int i = 0; i < r; ++i) {
            for (int k = 0; k < r; ++k) m[i][k] = a[keep[i]][cols[k]];
            m[i][r] = b[keep[i]];
        }
        for (int c = 0; c < r; ++c) {
            int p = c;
            while (p < r && m[p][c] == 0) ++p;
            if (p == r) return;  // singular
            std::swap(m[p], m[c]);
            for (int i = 0; i < r; ++i) {
                if (i == c || m[i][c] == 0) continue;
                Rational f = m[i][c] / m[c][c];
                for (int k = c; k <= r; ++k) m[i][k] -= f * m[c][k];
            }
        }
        std::array<Rational, kNumResponseTypes> q;
        for (int i = 0; i < r; ++i) {
            Rational x = m[i][r] / m[i][i];
            if (x < 0) return;
            q[cols[i]] = x;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rational lhs = 0;
            for (int j = 0; j < kNumResponseTypes; ++j) lhs += a[i][j] * q[j];
            if (lhs != b[i]) return;
        }
        points_.push_back(q);
    }

    Rational extreme(const LinearFunctional& f, bool want_max) const {
        std::optional<Rational> best;
        for (const auto& q : points_) {
            Rational v = 0;
            for (int j = 0; j < kNumResponseTypes; ++j) v += f[j] * q[j];
            if (!best || (want_max ? v > *best : v < *best)) best = v;
        }
        return best.value();
    }

    std::vector<std::array<Rational, kNumResponseTypes>> points_;
};

}  // namespace ivbounds::testing
