#pragma once

#include <optional>
#include <vector>

#include "jp/bigint.hpp"

namespace jp {

/// Truncated formal power series in q with exact integer coefficients.
///
/// A series of order q_max stores the coefficients of q^0 .. q^q_max and
/// guarantees that every arithmetic result is exact on that range.  Binary
/// operations on series of different orders truncate to the smaller one;
/// equality compares the overlap of the two ranges.
class PowerSeries {
public:
    explicit PowerSeries(int q_max);
    static PowerSeries constant(Int value, int q_max);
    static PowerSeries monomial(Int value, int q_exp, int q_max);

    int q_max() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^e; zero outside [0, q_max].
    const Int& operator[](int e) const;
    void set(int e, Int value);
    /// Adds into the coefficient of q^e; exponents beyond q_max are dropped.
    void add_at(int e, const Int& value);

    PowerSeries truncated(int q_max) const;
    /// Multiplication by q^t (t >= 0).
    PowerSeries shifted(int t) const;

    /// Multiplicative inverse; requires constant term 1.
    PowerSeries invert_unit() const;

    /// In-place multiplication by (1 - q^t), t >= 1.
    void mul_one_minus_q(int t);
    /// In-place multiplication by (1 + q^t), t >= 1.
    void mul_one_plus_q(int t);
    /// In-place multiplication by 1/(1 - q^t) = sum_j q^{jt}, t >= 1.
    void div_one_minus_q(int t);

    bool is_zero() const;

    PowerSeries& operator+=(const PowerSeries& g);
    PowerSeries& operator-=(const PowerSeries& g);
    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);

    /// Equality on the overlap of the truncation ranges.
    friend bool operator==(const PowerSeries& f, const PowerSeries& g);

private:
    std::vector<Int> coeffs_;  // coeffs_[e] is the coefficient of q^e
};

struct SeriesMismatch {
    int q_exp;
    Int lhs, rhs;
};

/// First exponent (if any) where the two series disagree on their overlap.
std::optional<SeriesMismatch> first_mismatch(const PowerSeries& f, const PowerSeries& g);

}  // namespace jp
