#pragma once

#include "jp/jagged.hpp"
#include "jp/report.hpp"

#include <vector>

namespace jp {

/// An overpartition: a partition whose first occurrence of a part may be
/// overlined.  Stored as the pair (alpha, beta) with alpha the overlined
/// parts (distinct, strictly decreasing) and beta the rest (weakly
/// decreasing).
struct Overpartition {
    std::vector<int> alpha;
    std::vector<int> beta;

    int weight() const;
    bool valid() const;

    friend bool operator==(const Overpartition&, const Overpartition&) = default;
    friend bool operator<(const Overpartition& a, const Overpartition& b);
};

/// Jagged partition -> overpartition: scanning left to right, an adjacent
/// pair (n, n+1) becomes the beta part 2n+1, an adjacent pair (n, n) becomes
/// the beta part 2n, and every unpaired entry becomes an alpha part.
/// Throws std::invalid_argument if p is not jagged, BijectionError if the
/// produced alpha has a zero or repeated part.
Overpartition jagged_to_overpartition(const Parts& p);

/// Overpartition -> jagged partition: each beta part is split by parity into
/// a block (n, n) or (n, n+1); blocks and alpha singletons are interleaved
/// into the unique jagged partition that maps back to o.  Throws
/// BijectionError if no or several interleavings qualify.
Parts overpartition_to_jagged(const Overpartition& o);

/// All overpartitions of weight n, deterministically ordered.
std::vector<Overpartition> enumerate_overpartitions(int n);

/// Number of overpartitions of weight n with congruence-restricted parts:
/// for i < (K+1)/2, beta parts must avoid 0, +-i mod (K+1); for odd K with
/// i = kappa, both alpha and beta parts must avoid 0 mod kappa.
long long count_congruence_restricted(const RestrictionParams& r, int i, int n);

/// Round trips in both directions for every weight <= max_weight, weight
/// preservation, and cardinality against the overpartition product series.
IdentityReport check_bijection(int max_weight);

/// count_congruence_restricted(r, i, n) against the summed A-type counts, for
/// every valid i and every n <= n_max.
IdentityReport check_congruence_counts(const RestrictionParams& r, int n_max);

}  // namespace jp
