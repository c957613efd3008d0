#include "jp/counting.hpp"

#include <algorithm>
#include <string>

namespace jp {

JaggedCounts::JaggedCounts(const RestrictionParams& r, int m_max, int n_max)
    : r_(r), m_max_(std::max(m_max, 0)), n_max_(std::max(n_max, 0)) {
    by_pairs_.assign(m_max_ + 1, {});
    by_ones_.assign(m_max_ + 1, {});
    for (int m = 0; m <= m_max_; ++m) {
        by_pairs_[m].assign(n_max_ + 1, {});
        by_ones_[m].assign(n_max_ + 1, {});
        for_each_jagged(m, n_max_, r_, [&](const Parts& p, int n) {
            const int t01 = trailing_01_pairs(p);
            auto& pairs = by_pairs_[m][n];
            if (static_cast<int>(pairs.size()) <= t01) pairs.resize(t01 + 1, 0);
            ++pairs[t01];
            // the ones-tail sets contain only zero-free partitions (no
            // trailing 01 pair; the two are equivalent on jagged partitions)
            if (t01 == 0) {
                const int t1 = trailing_ones(p);
                auto& ones = by_ones_[m][n];
                if (static_cast<int>(ones.size()) <= t1) ones.resize(t1 + 1, 0);
                ++ones[t1];
            }
        });
    }
}

// Shared boundary conventions: index 0 counts nothing; negative length or
// weight counts nothing; (0, 0) holds the empty partition.
static long long sum_histogram(const std::vector<long long>& hist, int bound) {
    long long total = 0;
    const int top = std::min<int>(bound, static_cast<int>(hist.size()));
    for (int t = 0; t < top; ++t) total += hist[t];
    return total;
}

long long JaggedCounts::count_A(int i, int m, int n) const {
    if (i <= 0 || m < 0 || n < 0) return 0;
    if (m > m_max_ || n > n_max_) throw std::out_of_range("JaggedCounts::count_A: off grid");
    return sum_histogram(by_pairs_[m][n], i);
}

long long JaggedCounts::count_B(int j, int m, int n) const {
    if (j <= 0 || m < 0 || n < 0) return 0;
    if (m > m_max_ || n > n_max_) throw std::out_of_range("JaggedCounts::count_B: off grid");
    return sum_histogram(by_ones_[m][n], j);
}

long long count_A(const RestrictionParams& r, int i, int m, int n) {
    if (i <= 0 || m < 0 || n < 0) return 0;
    long long total = 0;
    for (const Parts& p : enumerate_jagged(m, n, r))
        if (trailing_01_pairs(p) <= i - 1) ++total;
    return total;
}

long long count_B(const RestrictionParams& r, int j, int m, int n) {
    if (j <= 0 || m < 0 || n < 0) return 0;
    long long total = 0;
    for (const Parts& p : enumerate_jagged(m, n, r))
        if (trailing_01_pairs(p) == 0 && trailing_ones(p) <= j - 1) ++total;
    return total;
}

namespace {

void report_cell_failure(IdentityReport& rep, const std::string& relation, int m, int n,
                         long long lhs, long long rhs) {
    IdentityReport::Witness w;
    w.relation = relation;
    w.z_exp = m;  // grid coordinates double as the witness position
    w.q_exp = n;
    w.lhs = std::to_string(lhs);
    w.rhs = std::to_string(rhs);
    rep.fail(std::move(w));
}

}  // namespace

IdentityReport check_count_recurrences(const RestrictionParams& r, int m_max, int n_max) {
    IdentityReport rep;
    rep.name = "count-recurrences";
    rep.add_param("K", r.K);
    rep.add_param("m_max", m_max);
    rep.add_param("n_max", n_max);

    const int K = r.K;
    const int kappa = r.kappa();
    const int eps = r.epsilon();
    JaggedCounts c(r, std::max(m_max, 0), std::max(n_max, 0));

    auto A = [&](int i, int m, int n) -> long long {
        if (m < 0 || n < 0) return 0;
        return c.count_A(i, m, n);
    };
    auto B = [&](int j, int m, int n) -> long long {
        if (m < 0 || n < 0) return 0;
        return c.count_B(j, m, n);
    };

    for (int m = 0; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            // (i): A_{2i} - A_{2i-2} against B at reduced length/weight
            for (int i = 1; i <= kappa; ++i) {
                long long lhs = A(i, m, n) - A(i - 1, m, n);
                long long rhs = B(K - 2 * i + 2, m - 2 * i + 2, n - i + 1);
                if (lhs != rhs)
                    report_cell_failure(rep, "pair-tail i=" + std::to_string(i), m, n, lhs, rhs);
            }
            // (ii): B_{2i+1} - B_{2i} against A after stripping (1^m)
            for (int i = 0; 2 * i + 1 <= K; ++i) {
                long long lhs = B(2 * i + 1, m, n) - B(2 * i, m, n);
                long long rhs = A(kappa - i, m - 2 * i, n - m);
                if (lhs != rhs)
                    report_cell_failure(rep, "ones-tail-odd i=" + std::to_string(i), m, n, lhs,
                                        rhs);
            }
            // (iii): B_{2i} - B_{2i-1} against A after stripping (1^m)
            for (int i = 1; 2 * i <= K; ++i) {
                long long lhs = B(2 * i, m, n) - B(2 * i - 1, m, n);
                long long rhs = A(kappa - i + 1 - eps, m - 2 * i + 1, n - m);
                if (lhs != rhs)
                    report_cell_failure(rep, "ones-tail-even i=" + std::to_string(i), m, n, lhs,
                                        rhs);
            }
        }
    }
    rep.verified = "all three recurrences on the full grid";
    return rep;
}

IdentityReport check_exclusion_duality(int max_weight, int k_max, int shift_max) {
    IdentityReport rep;
    rep.name = "exclusion-duality";
    rep.add_param("max_weight", max_weight);
    rep.add_param("K_max", k_max);
    rep.add_param("shift_max", shift_max);

    for (int n = 0; n <= max_weight && rep.pass; ++n) {
        for (const Parts& p : enumerate_jagged_weight(n)) {
            for (int K = 3; K <= k_max; ++K) {
                RestrictionParams r(K);
                const bool restricted = is_k_restricted(p, r);
                if (restricted == contains_excluded_window(p, r)) {
                    report_cell_failure(rep, "duality K=" + std::to_string(K),
                                        static_cast<int>(p.size()), n, restricted ? 1 : 0,
                                        contains_excluded_window(p, r) ? 1 : 0);
                }
                for (int cshift = 0; cshift <= shift_max; ++cshift) {
                    if (is_k_restricted(shifted_parts(p, cshift), r) != restricted)
                        report_cell_failure(rep,
                                            "shift-invariance K=" + std::to_string(K) +
                                                " c=" + std::to_string(cshift),
                                            static_cast<int>(p.size()), n, restricted ? 1 : 0,
                                            restricted ? 0 : 1);
                }
            }
            if (!rep.pass) break;
        }
    }
    rep.verified = "restriction == no excluded window, shift-invariant";
    return rep;
}

}  // namespace jp
