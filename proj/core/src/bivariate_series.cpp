#include "jp/bivariate_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace jp {

namespace {
const Int kZero = 0;
}

BivariateSeries::BivariateSeries(int z_max, int q_max) : q_max_(q_max) {
    if (z_max < 0 || q_max < 0)
        throw std::invalid_argument("BivariateSeries: truncation orders must be >= 0");
    rows_.assign(static_cast<size_t>(z_max) + 1,
                 std::vector<Int>(static_cast<size_t>(q_max) + 1, Int(0)));
}

BivariateSeries BivariateSeries::constant(Int value, int z_max, int q_max) {
    BivariateSeries f(z_max, q_max);
    f.rows_[0][0] = std::move(value);
    return f;
}

const Int& BivariateSeries::coeff(int a, int b) const {
    if (a < 0 || a > z_max() || b < 0 || b > q_max_) return kZero;
    return rows_[a][b];
}

void BivariateSeries::set(int a, int b, Int value) {
    if (a < 0 || a > z_max() || b < 0 || b > q_max_)
        throw std::out_of_range("BivariateSeries::set: exponent out of range");
    rows_[a][b] = std::move(value);
}

void BivariateSeries::add_at(int a, int b, const Int& value) {
    if (a < 0 || b < 0) throw std::out_of_range("BivariateSeries::add_at: negative exponent");
    if (a <= z_max() && b <= q_max_) rows_[a][b] += value;
}

void BivariateSeries::add_row(int a, const PowerSeries& s, int q_shift) {
    if (a < 0 || q_shift < 0)
        throw std::out_of_range("BivariateSeries::add_row: negative exponent");
    if (a > z_max()) return;
    int top = std::min(q_max_ - q_shift, s.q_max());
    for (int b = 0; b <= top; ++b) rows_[a][b + q_shift] += s[b];
}

PowerSeries BivariateSeries::row_series(int a) const {
    PowerSeries s(q_max_);
    if (a >= 0 && a <= z_max())
        for (int b = 0; b <= q_max_; ++b) s.set(b, rows_[a][b]);
    return s;
}

BivariateSeries BivariateSeries::truncated(int new_z_max, int new_q_max) const {
    BivariateSeries f(std::min(new_z_max, z_max()), std::min(new_q_max, q_max_));
    for (int a = 0; a <= f.z_max(); ++a)
        for (int b = 0; b <= f.q_max_; ++b) f.rows_[a][b] = rows_[a][b];
    f.z_clipped_ = z_clipped_;
    f.q_clipped_ = q_clipped_;
    return f;
}

BivariateSeries BivariateSeries::times_monomial(Monomial x) const {
    if (x.sign != 1 && x.sign != -1)
        throw std::invalid_argument("times_monomial: sign must be +1 or -1");
    if (x.z_exp < 0 || x.q_exp < 0)
        throw std::invalid_argument("times_monomial: negative exponent");
    BivariateSeries f(z_max(), q_max_);
    f.z_clipped_ = z_clipped_;
    f.q_clipped_ = q_clipped_;
    for (int a = x.z_exp; a <= z_max(); ++a)
        for (int b = x.q_exp; b <= q_max_; ++b) {
            const Int& c = rows_[a - x.z_exp][b - x.q_exp];
            if (c == 0) continue;
            f.rows_[a][b] = (x.sign == 1) ? c : -c;
        }
    return f;
}

BivariateSeries BivariateSeries::subst_z_shift(int t) const {
    if (t < 0) throw std::invalid_argument("subst_z_shift: t must be >= 0");
    BivariateSeries f(z_max(), q_max_);
    f.z_clipped_ = z_clipped_;
    f.q_clipped_ = q_clipped_;
    for (int a = 0; a <= z_max(); ++a) {
        long long shift = static_cast<long long>(t) * a;
        for (int b = 0; b <= q_max_; ++b) {
            long long src = b - shift;
            if (src >= 0) f.rows_[a][b] = rows_[a][src];
        }
    }
    return f;
}

BivariateSeries BivariateSeries::scale_z_exponent(int k) const {
    if (k < 1) throw std::invalid_argument("scale_z_exponent: k must be >= 1");
    BivariateSeries f(z_max(), q_max_);
    f.z_clipped_ = z_clipped_;
    f.q_clipped_ = q_clipped_;
    for (int a = 0; a <= z_max(); ++a) {
        long long target = static_cast<long long>(k) * a;
        if (target > z_max()) {
            // source row falls outside the table; flag it if it held content
            for (int b = 0; b <= q_max_; ++b)
                if (rows_[a][b] != 0) {
                    f.z_clipped_ = true;
                    break;
                }
            continue;
        }
        for (int b = 0; b <= q_max_; ++b) f.rows_[target][b] = rows_[a][b];
    }
    return f;
}

bool BivariateSeries::is_zero() const {
    for (const auto& row : rows_)
        for (const Int& c : row)
            if (c != 0) return false;
    return true;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& g) {
    *this = *this + g;
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& g) {
    *this = *this - g;
    return *this;
}

BivariateSeries operator+(const BivariateSeries& f, const BivariateSeries& g) {
    BivariateSeries h(std::min(f.z_max(), g.z_max()), std::min(f.q_max(), g.q_max()));
    for (int a = 0; a <= h.z_max(); ++a)
        for (int b = 0; b <= h.q_max_; ++b) h.rows_[a][b] = f.rows_[a][b] + g.rows_[a][b];
    h.z_clipped_ = f.z_clipped_ || g.z_clipped_;
    h.q_clipped_ = f.q_clipped_ || g.q_clipped_;
    return h;
}

BivariateSeries operator-(const BivariateSeries& f, const BivariateSeries& g) {
    BivariateSeries h(std::min(f.z_max(), g.z_max()), std::min(f.q_max(), g.q_max()));
    for (int a = 0; a <= h.z_max(); ++a)
        for (int b = 0; b <= h.q_max_; ++b) h.rows_[a][b] = f.rows_[a][b] - g.rows_[a][b];
    h.z_clipped_ = f.z_clipped_ || g.z_clipped_;
    h.q_clipped_ = f.q_clipped_ || g.q_clipped_;
    return h;
}

BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g) {
    BivariateSeries h(std::min(f.z_max(), g.z_max()), std::min(f.q_max(), g.q_max()));
    h.z_clipped_ = f.z_clipped_ || g.z_clipped_;
    h.q_clipped_ = f.q_clipped_ || g.q_clipped_;
    for (int a1 = 0; a1 <= std::min(f.z_max(), h.z_max()); ++a1) {
        for (int b1 = 0; b1 <= std::min(f.q_max(), h.q_max_); ++b1) {
            const Int& c1 = f.rows_[a1][b1];
            if (c1 == 0) continue;
            int a2_top = std::min(g.z_max(), h.z_max() - a1);
            int b2_top = std::min(g.q_max(), h.q_max_ - b1);
            for (int a2 = 0; a2 <= a2_top; ++a2)
                for (int b2 = 0; b2 <= b2_top; ++b2) {
                    const Int& c2 = g.rows_[a2][b2];
                    if (c2 == 0) continue;
                    h.rows_[a1 + a2][b1 + b2] += c1 * c2;
                }
        }
    }
    return h;
}

bool operator==(const BivariateSeries& f, const BivariateSeries& g) {
    return !first_mismatch(f, g).has_value();
}

std::optional<BivariateMismatch> first_mismatch(const BivariateSeries& f,
                                                const BivariateSeries& g) {
    int az = std::min(f.z_max(), g.z_max());
    int bq = std::min(f.q_max(), g.q_max());
    for (int a = 0; a <= az; ++a)
        for (int b = 0; b <= bq; ++b)
            if (f.coeff(a, b) != g.coeff(a, b))
                return BivariateMismatch{a, b, f.coeff(a, b), g.coeff(a, b)};
    return std::nullopt;
}

}  // namespace jp
