#pragma once

#include "jp/bivariate_series.hpp"
#include "jp/counting.hpp"
#include "jp/jagged.hpp"
#include "jp/power_series.hpp"
#include "jp/report.hpp"

namespace jp {

// ---------------------------------------------------------------------------
// Multiple-sum generating functions.
//
// All builders enumerate mode tuples by depth-first search; a tuple is kept
// iff its minimal q-exponent fits below q_max (+ mode_slack) and its
// z-exponent fits below z_max.  Both exponents are monotone in every mode, so
// the pruning is exact: enlarging the bound can only add terms that truncate
// to zero (mode_slack exists to let tests assert exactly that).
// ---------------------------------------------------------------------------

/// Andrews' multiple sum: the generating function, by length (z) and weight
/// (q), of partitions with difference at least 2 at distance k-1 and at most
/// i-1 parts equal to 1.  i in {-1, 0} gives the zero series.
BivariateSeries andrews_f(int k, int i, int z_max, int q_max, int mode_slack = 0);

/// A-type series: generating function of K-restricted jagged partitions with
/// at most i-1 trailing (0,1) pairs, built as the fully developed multiple
/// sum (the infinite-Pochhammer prefactor expanded into an extra mode).
/// i = 0 gives the zero series.
BivariateSeries series_A(const RestrictionParams& r, int i, int z_max, int q_max,
                         int mode_slack = 0);

/// Same series built the second way: the prefactor kept as an explicit
/// (-z q^{1+eps*m}; q)_inf table multiplied onto the partial sums.
BivariateSeries series_A_prefactor_route(const RestrictionParams& r, int i, int z_max,
                                         int q_max);

/// B-type series: at most j-1 trailing ones.  Even j comes from its own
/// multiple sum; odd j = 2i-1 is assembled as
///   B_{2i}(z) - (zq)^{2i-1} A_{2(kappa-i+1-eps)}(zq).
/// j = 0 gives the zero series.
BivariateSeries series_B(const RestrictionParams& r, int j, int z_max, int q_max);

// ---------------------------------------------------------------------------
// Transforms.
// ---------------------------------------------------------------------------

/// Staircase transform on series: coefficient (a, b) moves to
/// (a, b + a(a-1)/2).  On the counting side this turns jagged partitions into
/// ordinary partitions by adding (m-1, m-2, ..., 1, 0).  Content pushed past
/// q_max is dropped and flagged.
BivariateSeries staircase(const BivariateSeries& f);

/// A z_max large enough that every term of series_A / series_B with q-exponent
/// <= q_max has z-exponent <= the bound (so the z = 1 specialization is exact).
int z1_required_zmax(const RestrictionParams& r, int q_max);
/// Same bound for andrews_f.
int z1_required_zmax_f(int k, int q_max);

/// Sets z = 1 by summing each q-row over z.  The caller passes the adequacy
/// bound justifying that the full z-support fits the table; the operation
/// throws TruncationError if f.z_max() < adequate_z_max or if content was
/// clipped in the z direction.
PowerSeries specialize_z1(const BivariateSeries& f, int adequate_z_max);

// ---------------------------------------------------------------------------
// Product sides and single-variable sum sides.
// ---------------------------------------------------------------------------

/// Product form of the z = 1 A-type series:
///   prod (1+q^n) * prod_{n != 0, +-i mod K+1} (1-q^n)^{-1}    (i < (K+1)/2)
///   prod_{n != 0 mod kappa} (1+q^n)(1-q^n)^{-1}               (K odd, i = kappa)
PowerSeries product_side(const RestrictionParams& r, int i, int q_max);

/// Alternate product expressions valid for odd K = 2*kappa - 1:
///   i < kappa:  (-q)inf/(q)inf * (q^i; q^2k)inf (q^{2k-i}; q^2k)inf (q^2k; q^2k)inf
///   i = kappa:  (-q)inf/(q)inf * (q^k; q^k)inf / (-q^k; q^k)inf
/// These products are also specializations of a two-parameter extension of
/// the Andrews sums (an extra part-counting variable); that extension is out
/// of scope here, so only the product forms are provided and cross-checked.
PowerSeries product_side_odd(int kappa, int i, int q_max);

/// z = 1 sum side computed directly in one variable, with the prefactor
/// factored out as (-q)_inf and the last mode's denominator absorbing
/// (-q; q)_{eps*m}.  Independent of the bivariate builders.
PowerSeries series_A_z1_direct(const RestrictionParams& r, int i, int q_max);

/// Generating function of unrestricted jagged partitions by (length, weight),
/// from exhaustive enumeration.
BivariateSeries unrestricted_jagged_gf(int z_max, int q_max);

// ---------------------------------------------------------------------------
// Identity checks.  All comparisons are coefficientwise over the full shared
// truncation rectangle and report a minimal witness on failure.
// ---------------------------------------------------------------------------

/// The three-term recurrence of Andrews' sums,
///   F_{k,i}(z) - F_{k,i-1}(z) = (zq)^{i-1} F_{k,k-i+1}(zq),  1 <= i <= k,
/// plus the boundary identities (zero at index 0, value 1 on either axis,
/// F_{k,1}(z) = F_{k,k}(zq)).
IdentityReport check_andrews_recurrence(int k, int z_max, int q_max);

/// The three q-difference relations tying the A- and B-type series together,
/// for every index with both sides in range.
IdentityReport check_qdifference_relations(const RestrictionParams& r, int z_max, int q_max);

/// For even K: the A-type series factors as (-zq)_inf * F_{kappa,i}(z^2; q).
BivariateSeries series_A_factored(const RestrictionParams& r, int i, int z_max, int q_max);

/// Even-K factorization check: series_A_factored == series_A for every i,
/// plus the functional equation f(z) = (1+zq) f(zq) for f = (-zq)_inf.
IdentityReport check_even_factorization(const RestrictionParams& r, int z_max, int q_max);

/// Verifies that the factored family
///   A_i = f F_{kappa,i}(z^2), B_{2i} = f F_{kappa,i}(z^2 q), f = (-zq)_inf
/// satisfies all three q-difference relations for K = 2*kappa.
IdentityReport check_factored_solution(int kappa, int z_max, int q_max);

/// Coefficientwise equality of the A-/B-type series against exhaustive
/// counts, for every boundary index, on the full grid m <= m_max, n <= n_max.
IdentityReport check_series_vs_counts(const RestrictionParams& r, int m_max, int n_max);

/// Mode-sum, Andrews-sum, staircased-enumeration and product expressions for
/// partitions with lambda_j >= lambda_{j+2} + 2, all compared pairwise, plus
/// brute-force counts.  kappa_proxy must make the restriction vacuous on the
/// grid (2*kappa_proxy - 1 > z_max).
IdentityReport check_distance2_partitions(int z_max, int q_max, int kappa_proxy);

/// Same programme for lambda_j >= lambda_{j+2} + 3 via the staircased A-type
/// series at K = 3.
IdentityReport check_distance3_partitions(int z_max, int q_max);

/// Sum side (z = 1 specialization and the direct one-variable sum) against
/// the product side for one (K, i); odd K also checks the alternate products.
IdentityReport check_product_identities(const RestrictionParams& r, int i, int q_max);

}  // namespace jp
