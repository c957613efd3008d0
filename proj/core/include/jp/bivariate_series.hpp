#pragma once

#include <optional>
#include <vector>

#include "jp/bigint.hpp"
#include "jp/power_series.hpp"

namespace jp {

/// sign * z^z_exp * q^q_exp with sign in {+1, -1}.
struct Monomial {
    int sign = 1;
    int z_exp = 0;
    int q_exp = 0;
};

/// Truncated formal power series in z and q, exact integer coefficients,
/// independent truncation in each variable.
///
/// The coefficient of z^a q^b is exact for all a <= z_max, b <= q_max.
/// Operations that rearrange exponents (scale_z_exponent, the staircase
/// transform in genfun) may push nonzero content out of the table; they
/// record that in the clipped flags, which comparisons ignore but the z = 1
/// specialization refuses to sum over.
class BivariateSeries {
public:
    BivariateSeries(int z_max, int q_max);
    static BivariateSeries constant(Int value, int z_max, int q_max);

    int z_max() const { return static_cast<int>(rows_.size()) - 1; }
    int q_max() const { return q_max_; }

    /// Coefficient of z^a q^b; zero outside the table.
    const Int& coeff(int a, int b) const;
    void set(int a, int b, Int value);
    /// Adds into the coefficient of z^a q^b; out-of-table targets are dropped.
    void add_at(int a, int b, const Int& value);
    /// Adds z^a q^{q_shift} * s(q) into the table.
    void add_row(int a, const PowerSeries& s, int q_shift);

    const std::vector<Int>& row(int a) const { return rows_[a]; }
    PowerSeries row_series(int a) const;

    bool z_clipped() const { return z_clipped_; }
    bool q_clipped() const { return q_clipped_; }
    void mark_z_clipped() { z_clipped_ = true; }
    void mark_q_clipped() { q_clipped_ = true; }

    BivariateSeries truncated(int z_max, int q_max) const;

    /// Multiplication by a monomial, truncated to this table.
    BivariateSeries times_monomial(Monomial x) const;

    /// Substitution z -> z q^t, t >= 0: coefficient (a, b) of the result is
    /// the input coefficient (a, b - t*a).
    BivariateSeries subst_z_shift(int t) const;

    /// Substitution z -> z^k, k >= 1: coefficient (a, b) moves to (k*a, b).
    /// Sources above z_max/k fall outside the table and set the z-clip flag.
    BivariateSeries scale_z_exponent(int k) const;

    bool is_zero() const;

    BivariateSeries& operator+=(const BivariateSeries& g);
    BivariateSeries& operator-=(const BivariateSeries& g);
    friend BivariateSeries operator+(const BivariateSeries& f, const BivariateSeries& g);
    friend BivariateSeries operator-(const BivariateSeries& f, const BivariateSeries& g);
    /// Cauchy product truncated to the componentwise minimum orders.
    friend BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g);

    /// Equality on the overlap of the truncation rectangles (flags ignored).
    friend bool operator==(const BivariateSeries& f, const BivariateSeries& g);

private:
    int q_max_;
    std::vector<std::vector<Int>> rows_;  // rows_[a][b] = coefficient of z^a q^b
    bool z_clipped_ = false;
    bool q_clipped_ = false;
};

struct BivariateMismatch {
    int z_exp, q_exp;
    Int lhs, rhs;
};

/// First position (lexicographic in (z_exp, q_exp)) where the two series
/// disagree on the overlap of their truncation rectangles.
std::optional<BivariateMismatch> first_mismatch(const BivariateSeries& f,
                                                const BivariateSeries& g);

}  // namespace jp
