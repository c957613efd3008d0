#include "jp/jagged.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jp {

RestrictionParams::RestrictionParams(int K_) : K(K_) {
    if (K < 3) throw std::invalid_argument("RestrictionParams: K must be > 2");
}

int weight(const Parts& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

Parts shifted_parts(const Parts& p, int c) {
    Parts q = p;
    for (int& v : q) v += c;
    return q;
}

bool is_jagged(const Parts& p) {
    for (int v : p)
        if (v < 0) throw std::invalid_argument("is_jagged: negative entry");
    const int m = static_cast<int>(p.size());
    if (m == 0) return true;
    if (p[m - 1] < 1) return false;
    for (int j = 0; j + 1 < m; ++j)
        if (p[j] < p[j + 1] - 1) return false;
    for (int j = 0; j + 2 < m; ++j)
        if (p[j] < p[j + 2]) return false;
    return true;
}

// One window of the K-restriction: w[0] >= w[K-1] + 1, or
// w[0] = w[1] - 1 = w[K-2] + 1 = w[K-1].
static bool window_ok(const Parts& p, int j, int K) {
    if (p[j] >= p[j + K - 1] + 1) return true;
    return p[j] == p[j + 1] - 1 && p[j] == p[j + K - 2] + 1 && p[j] == p[j + K - 1];
}

bool is_k_restricted(const Parts& p, const RestrictionParams& r) {
    const int m = static_cast<int>(p.size());
    for (int j = 0; j + r.K - 1 < m; ++j)
        if (!window_ok(p, j, r.K)) return false;
    return true;
}

int trailing_01_pairs(const Parts& p) {
    int count = 0;
    int e = static_cast<int>(p.size());
    while (e >= 2 && p[e - 2] == 0 && p[e - 1] == 1) {
        ++count;
        e -= 2;
    }
    return count;
}

int trailing_ones(const Parts& p) {
    int count = 0;
    for (int j = static_cast<int>(p.size()) - 1; j >= 0 && p[j] == 1; --j) ++count;
    return count;
}

bool contains_excluded_window(const Parts& p, const RestrictionParams& r) {
    const int K = r.K;
    const int m = static_cast<int>(p.size());
    for (int j = 0; j + K <= m; ++j) {
        for (int l = 0; 2 * l <= K; ++l) {
            const int flat = K - 2 * l;
            // form 1: flat copies of v, then l pairs (v-1, v)
            {
                const int v = p[j + K - 1];  // both block types end with v
                bool ok = true;
                for (int t = 0; t < flat && ok; ++t) ok = p[j + t] == v;
                for (int t = 0; t < 2 * l && ok; ++t)
                    ok = p[j + flat + t] == (t % 2 == 0 ? v - 1 : v);
                if (ok) return true;
            }
            // form 2: l pairs (v, v+1), then flat copies of v
            {
                const int v = flat > 0 ? p[j + K - 1] : p[j + K - 1] - 1;
                bool ok = true;
                for (int t = 0; t < 2 * l && ok; ++t)
                    ok = p[j + t] == (t % 2 == 0 ? v : v + 1);
                for (int t = 0; t < flat && ok; ++t) ok = p[j + 2 * l + t] == v;
                if (ok) return true;
            }
        }
    }
    return false;
}

namespace {

// Depth-first enumeration.  All ordering constraints bound later entries from
// above (n_{j+1} <= n_j + 1, n_{j+2} <= n_j), so candidates are scanned
// upward, which makes the output lexicographic.  Any suffix of r entries
// weighs at least ceil(r/2): zeros cannot be adjacent and the last entry is
// positive.
struct Enumerator {
    int length;
    int n_max;  // visit every weight up to n_max
    const RestrictionParams* restriction;
    const JaggedVisitor& visit;

    Parts buf;

    void run() {
        buf.clear();
        buf.reserve(length);
        extend(0);
    }

    void extend(int used_weight) {
        const int j = static_cast<int>(buf.size());
        if (j == length) {
            visit(buf, used_weight);
            return;
        }
        const int remaining_after = length - j - 1;
        const int min_tail = (remaining_after + 1) / 2;
        int hi = n_max - used_weight - min_tail;
        if (j >= 1) hi = std::min(hi, buf[j - 1] + 1);
        if (j >= 2) hi = std::min(hi, buf[j - 2]);
        const int lo = (j == length - 1) ? 1 : 0;
        for (int v = lo; v <= hi; ++v) {
            buf.push_back(v);
            bool ok = true;
            if (restriction) {
                const int K = restriction->K;
                if (j >= K - 1) ok = window_ok(buf, j - K + 1, K);
            }
            if (ok) extend(used_weight + v);
            buf.pop_back();
        }
    }
};

}  // namespace

void for_each_jagged(int length, int max_weight, const std::optional<RestrictionParams>& r,
                     const JaggedVisitor& visit) {
    if (length < 0 || max_weight < 0) return;
    if (max_weight < (length + 1) / 2) return;  // below the minimal weight
    Enumerator e{length, max_weight, r ? &*r : nullptr, visit, {}};
    e.run();
}

std::vector<Parts> enumerate_jagged(int length, int weight,
                                    const std::optional<RestrictionParams>& r) {
    std::vector<Parts> out;
    if (length < 0 || weight < 0) return out;
    for_each_jagged(length, weight, r, [&](const Parts& p, int w) {
        if (w == weight) out.push_back(p);
    });
    return out;
}

std::vector<Parts> enumerate_jagged_weight(int weight,
                                           const std::optional<RestrictionParams>& r) {
    std::vector<Parts> out;
    if (weight < 0) return out;
    for (int m = 0; m <= 2 * weight; ++m) {
        auto part = enumerate_jagged(m, weight, r);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

long long count_partitions_rec(int weight, int length, int distance, int gap, int max_ones,
                               Parts& stack) {
    const int j = static_cast<int>(stack.size());
    if (j == length) return weight == 0 ? 1 : 0;
    const int slots = length - j;
    long long total = 0;
    int hi = weight - (slots - 1);  // later parts are >= 1 each
    if (j >= 1) hi = std::min(hi, stack[j - 1]);
    for (int v = 1; v <= hi; ++v) {
        // a part equal to 1 forces all remaining parts to 1
        if (v == 1 && max_ones >= 0 && slots > max_ones) continue;
        if (j >= distance && stack[j - distance] < v + gap) break;  // v only grows
        stack.push_back(v);
        total += count_partitions_rec(weight - v, length, distance, gap, max_ones, stack);
        stack.pop_back();
    }
    return total;
}

}  // namespace

long long count_partitions_distance_gap(int weight, int length, int distance, int gap,
                                        int max_ones) {
    if (length < 0 || weight < 0) return 0;
    if (length == 0) return weight == 0 ? 1 : 0;
    Parts stack;
    stack.reserve(length);
    return count_partitions_rec(weight, length, distance, gap, max_ones, stack);
}

}  // namespace jp
