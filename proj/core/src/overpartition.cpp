#include "jp/overpartition.hpp"

#include "jp/counting.hpp"
#include "jp/errors.hpp"
#include "jp/pochhammer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace jp {

int Overpartition::weight() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0) +
           std::accumulate(beta.begin(), beta.end(), 0);
}

bool Overpartition::valid() const {
    for (size_t t = 0; t < alpha.size(); ++t) {
        if (alpha[t] < 1) return false;
        if (t > 0 && alpha[t - 1] <= alpha[t]) return false;  // distinct, decreasing
    }
    for (size_t t = 0; t < beta.size(); ++t) {
        if (beta[t] < 1) return false;
        if (t > 0 && beta[t - 1] < beta[t]) return false;
    }
    return true;
}

bool operator<(const Overpartition& a, const Overpartition& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
}

Overpartition jagged_to_overpartition(const Parts& p) {
    if (!is_jagged(p))
        throw std::invalid_argument("jagged_to_overpartition: input is not jagged");
    Overpartition o;
    size_t j = 0;
    while (j < p.size()) {
        if (j + 1 < p.size() && (p[j] == p[j + 1] - 1 || p[j] == p[j + 1])) {
            o.beta.push_back(p[j] + p[j + 1]);  // (n, n+1) -> 2n+1, (n, n) -> 2n
            j += 2;
        } else {
            o.alpha.push_back(p[j]);
            j += 1;
        }
    }
    std::sort(o.alpha.rbegin(), o.alpha.rend());
    std::sort(o.beta.rbegin(), o.beta.rend());
    for (size_t t = 0; t < o.alpha.size(); ++t) {
        if (o.alpha[t] == 0)
            throw BijectionError("jagged_to_overpartition: unpaired zero entry");
        if (t > 0 && o.alpha[t - 1] == o.alpha[t])
            throw BijectionError("jagged_to_overpartition: repeated overlined part");
    }
    return o;
}

namespace {

// DFS over orderings of the blocks; the weak-ordering constraints only bound
// later entries from above, so a prefix that fails can never be completed.
// Distinct orderings can concatenate to the same sequence (blocks sharing a
// prefix), so solutions are collected as a set.
struct Interleaver {
    std::vector<Parts> blocks;          // sorted so equal blocks are adjacent
    std::vector<char> used;
    Parts current;
    const Overpartition* target;
    std::set<Parts> solutions;

    bool can_append(const Parts& block) const {
        const int k = static_cast<int>(current.size());
        for (size_t t = 0; t < block.size(); ++t) {
            const int pos = k + static_cast<int>(t);
            const int v = block[t];
            const auto at = [&](int idx) { return idx < k ? current[idx]
                                                          : block[idx - k]; };
            if (pos >= 1 && at(pos - 1) < v - 1) return false;
            if (pos >= 2 && at(pos - 2) < v) return false;
        }
        return true;
    }

    void search() {
        if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) {
            if (!current.empty() && current.back() < 1) return;
            try {
                if (jagged_to_overpartition(current) == *target) solutions.insert(current);
            } catch (const BijectionError&) {
                // not a preimage
            }
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (used[b]) continue;
            if (b > 0 && !used[b - 1] && blocks[b] == blocks[b - 1]) continue;  // dedupe
            if (!can_append(blocks[b])) continue;
            used[b] = 1;
            current.insert(current.end(), blocks[b].begin(), blocks[b].end());
            search();
            current.resize(current.size() - blocks[b].size());
            used[b] = 0;
        }
    }
};

}  // namespace

Parts overpartition_to_jagged(const Overpartition& o) {
    if (!o.valid()) throw BijectionError("overpartition_to_jagged: malformed overpartition");
    Interleaver it;
    for (int b : o.beta)
        it.blocks.push_back(b % 2 == 0 ? Parts{b / 2, b / 2} : Parts{b / 2, b / 2 + 1});
    for (int a : o.alpha) it.blocks.push_back(Parts{a});
    std::sort(it.blocks.begin(), it.blocks.end());
    it.used.assign(it.blocks.size(), 0);
    it.target = &o;
    it.search();
    if (it.solutions.size() != 1)
        throw BijectionError("overpartition_to_jagged: " +
                             std::to_string(it.solutions.size()) +
                             " reassemblies (expected exactly 1)");
    return *it.solutions.begin();
}

namespace {

void partitions_rec(int n, int max_part, bool distinct, Parts& cur,
                    std::vector<Parts>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = std::min(n, max_part); v >= 1; --v) {
        cur.push_back(v);
        partitions_rec(n - v, distinct ? v - 1 : v, distinct, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Overpartition> enumerate_overpartitions(int n) {
    std::vector<Overpartition> out;
    if (n < 0) return out;
    std::vector<Parts> alphas;
    Parts cur;
    for (int wa = 0; wa <= n; ++wa) {
        alphas.clear();
        partitions_rec(wa, wa, /*distinct=*/true, cur, alphas);
        std::vector<Parts> betas;
        partitions_rec(n - wa, n - wa, /*distinct=*/false, cur, betas);
        for (const Parts& a : alphas)
            for (const Parts& b : betas) out.push_back(Overpartition{a, b});
    }
    return out;
}

namespace {

long long count_restricted_partitions(int n, int max_part, bool distinct,
                                      const std::function<bool(int)>& ok) {
    if (n == 0) return 1;
    long long total = 0;
    for (int v = std::min(n, max_part); v >= 1; --v) {
        if (!ok(v)) continue;
        total += count_restricted_partitions(n - v, distinct ? v - 1 : v, distinct, ok);
    }
    return total;
}

}  // namespace

long long count_congruence_restricted(const RestrictionParams& r, int i, int n) {
    if (i < 1 || i > r.kappa())
        throw std::invalid_argument("count_congruence_restricted: boundary index out of range");
    if (n < 0) return 0;
    const int kappa = r.kappa();
    const int modulus = r.K + 1;
    const bool both_restricted = (r.epsilon() == 1 && i == kappa);
    auto beta_ok = [&](int v) {
        if (both_restricted) return v % kappa != 0;
        const int res = v % modulus;
        return res != 0 && res != i % modulus && res != (modulus - i) % modulus;
    };
    auto alpha_ok = [&](int v) { return !both_restricted || v % kappa != 0; };

    long long total = 0;
    // split the weight between the overlined (distinct) and plain parts
    for (int wa = 0; wa <= n; ++wa)
        total += count_restricted_partitions(wa, wa, /*distinct=*/true, alpha_ok) *
                 count_restricted_partitions(n - wa, n - wa, /*distinct=*/false, beta_ok);
    return total;
}

IdentityReport check_bijection(int max_weight) {
    IdentityReport rep;
    rep.name = "bijection-roundtrip";
    rep.add_param("max_weight", max_weight);

    PowerSeries overpartition_gf = pochhammer_inf_u(-1, 1, 1, max_weight) *
                                   pochhammer_inf_u(1, 1, 1, max_weight).invert_unit();

    for (int n = 0; n <= max_weight && rep.pass; ++n) {
        const auto all_jagged = enumerate_jagged_weight(n);
        for (const Parts& p : all_jagged) {
            try {
                Overpartition o = jagged_to_overpartition(p);
                if (!o.valid() || o.weight() != n) {
                    rep.fail({"forward image invalid at weight " + std::to_string(n), -1, n,
                              "-", "-"});
                    break;
                }
                if (overpartition_to_jagged(o) != p) {
                    rep.fail({"forward round trip at weight " + std::to_string(n), -1, n, "-",
                              "-"});
                    break;
                }
            } catch (const BijectionError& e) {
                rep.fail({std::string("fault: ") + e.what(), -1, n, "-", "-"});
                break;
            }
        }
        if (!rep.pass) break;

        const auto overs = enumerate_overpartitions(n);
        if (static_cast<long long>(overs.size()) != static_cast<long long>(all_jagged.size())) {
            rep.fail({"cardinality at weight " + std::to_string(n), -1, n,
                      std::to_string(all_jagged.size()), std::to_string(overs.size())});
            break;
        }
        if (overpartition_gf[n] != static_cast<long long>(overs.size())) {
            rep.fail({"series count at weight " + std::to_string(n), -1, n,
                      overpartition_gf[n].str(), std::to_string(overs.size())});
            break;
        }
        for (const Overpartition& o : overs) {
            try {
                Parts p = overpartition_to_jagged(o);
                if (weight(p) != n || !(jagged_to_overpartition(p) == o)) {
                    rep.fail({"reverse round trip at weight " + std::to_string(n), -1, n, "-",
                              "-"});
                    break;
                }
            } catch (const BijectionError& e) {
                rep.fail({std::string("fault: ") + e.what(), -1, n, "-", "-"});
                break;
            }
        }
    }
    rep.verified = "both round trips, weights, and cardinalities";
    return rep;
}

IdentityReport check_congruence_counts(const RestrictionParams& r, int n_max) {
    IdentityReport rep;
    rep.name = "congruence-counts";
    rep.add_param("K", r.K);
    rep.add_param("n_max", n_max);

    JaggedCounts counts(r, 2 * n_max, n_max);
    for (int i = 1; i <= r.kappa(); ++i) {
        for (int n = 0; n <= n_max; ++n) {
            const long long lhs = count_congruence_restricted(r, i, n);
            long long rhs = 0;
            for (int m = 0; m <= 2 * n; ++m) rhs += counts.count_A(i, m, n);
            if (lhs != rhs)
                rep.fail({"i=" + std::to_string(i), -1, n, std::to_string(lhs),
                          std::to_string(rhs)});
        }
    }
    rep.verified = "restricted overpartition counts equal summed A-counts";
    return rep;
}

}  // namespace jp
