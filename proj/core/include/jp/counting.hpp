#pragma once

#include "jp/jagged.hpp"
#include "jp/report.hpp"

#include <vector>

namespace jp {

/// Counts of K-restricted jagged partitions on a full (length, weight) grid,
/// bucketed by the two tail statistics.
///
/// count_A(i, m, n): partitions of n into m parts with at most i-1 trailing
/// (0,1) pairs.  count_B(j, m, n): zero-free partitions (equivalently, not
/// ending in a (0,1) pair) with at most j-1 trailing ones; positivity is what
/// lets the recurrences strip (1^m) from them.  Both honor the boundary
/// conventions: value 1 at (m, n) = (0, 0) when the index is positive, 0
/// whenever the index is 0 or m or n is negative or exactly one of m, n is
/// zero.
class JaggedCounts {
public:
    JaggedCounts(const RestrictionParams& r, int m_max, int n_max);

    long long count_A(int i, int m, int n) const;
    long long count_B(int j, int m, int n) const;

    int m_max() const { return m_max_; }
    int n_max() const { return n_max_; }
    const RestrictionParams& params() const { return r_; }

private:
    RestrictionParams r_;
    int m_max_, n_max_;
    // by_pairs_[m][n][t]: partitions with exactly t trailing 01 pairs
    std::vector<std::vector<std::vector<long long>>> by_pairs_;
    std::vector<std::vector<std::vector<long long>>> by_ones_;
};

/// Single-cell counts by direct enumeration (same conventions as above).
long long count_A(const RestrictionParams& r, int i, int m, int n);
long long count_B(const RestrictionParams& r, int j, int m, int n);

/// Verifies the three recurrence relations tying count_A and count_B
/// together over the whole (m, n) grid, for every index for which both sides
/// stay in range.  Failures are report content, not faults.
IdentityReport check_count_recurrences(const RestrictionParams& r, int m_max, int n_max);

/// Exhaustively checks, for all jagged partitions of weight <= max_weight and
/// all 3 <= K <= k_max, that the K-restriction is equivalent to containing no
/// excluded window, and that it is invariant under shifting all parts by
/// c = 0..shift_max.
IdentityReport check_exclusion_duality(int max_weight, int k_max, int shift_max);

}  // namespace jp
