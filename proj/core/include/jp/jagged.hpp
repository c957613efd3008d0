#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace jp {

/// Parts of a (jagged) partition, leftmost first.
using Parts = std::vector<int>;

/// The restriction order K >= 3, split as K = 2*kappa - epsilon.
struct RestrictionParams {
    explicit RestrictionParams(int K_);
    int K;
    int kappa() const { return (K + 1) / 2; }
    int epsilon() const { return 2 * kappa() - K; }
};

int weight(const Parts& p);

/// Adds c to every part.
Parts shifted_parts(const Parts& p, int c);

/// A jagged partition is a sequence of non-negative integers with
///   n_j >= n_{j+1} - 1,   n_j >= n_{j+2},   n_m >= 1  (m >= 1).
/// The empty sequence is the unique jagged partition of length 0.
/// Throws std::invalid_argument on negative entries.
bool is_jagged(const Parts& p);

/// The K-restriction: every window of K consecutive parts satisfies
///   n_j >= n_{j+K-1} + 1   or
///   n_j = n_{j+1} - 1 = n_{j+K-2} + 1 = n_{j+K-1}.
bool is_k_restricted(const Parts& p, const RestrictionParams& r);

/// Number of consecutive (0,1) pairs terminating p.
int trailing_01_pairs(const Parts& p);

/// Maximal t with the last t parts all equal to 1.
int trailing_ones(const Parts& p);

/// True iff some window of K consecutive parts matches one of the excluded
/// patterns
///   (p,...,p, p-1,p,...,p-1,p)   or   (p,p+1,...,p,p+1, p,...,p)
/// with 2l jagged entries and K-2l equal entries, 0 <= l <= K/2.
bool contains_excluded_window(const Parts& p, const RestrictionParams& r);

using JaggedVisitor = std::function<void(const Parts&, int weight)>;

/// Visits every jagged partition of the given length with weight <= max_weight
/// (restricted when r is present), in lexicographic order.
void for_each_jagged(int length, int max_weight, const std::optional<RestrictionParams>& r,
                     const JaggedVisitor& visit);

/// All jagged partitions of the given length and weight, restricted when r is
/// present, in lexicographic order.
std::vector<Parts> enumerate_jagged(int length, int weight,
                                    const std::optional<RestrictionParams>& r = std::nullopt);

/// All jagged partitions of the given weight, any length, ordered by length
/// then lexicographically.
std::vector<Parts> enumerate_jagged_weight(int weight,
                                           const std::optional<RestrictionParams>& r = std::nullopt);

/// Partitions of `weight` into exactly `length` parts >= 1 with
/// lambda_j >= lambda_{j+distance} + gap for all j, and (when max_ones >= 0)
/// at most max_ones parts equal to 1.  Brute-force count.
long long count_partitions_distance_gap(int weight, int length, int distance, int gap,
                                        int max_ones = -1);

}  // namespace jp
