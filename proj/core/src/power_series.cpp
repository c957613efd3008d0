#include "jp/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace jp {

namespace {
const Int kZero = 0;
}

PowerSeries::PowerSeries(int q_max) {
    if (q_max < 0) throw std::invalid_argument("PowerSeries: q_max must be >= 0");
    coeffs_.assign(static_cast<size_t>(q_max) + 1, Int(0));
}

PowerSeries PowerSeries::constant(Int value, int q_max) {
    PowerSeries f(q_max);
    f.coeffs_[0] = std::move(value);
    return f;
}

PowerSeries PowerSeries::monomial(Int value, int q_exp, int q_max) {
    if (q_exp < 0) throw std::invalid_argument("PowerSeries::monomial: negative exponent");
    PowerSeries f(q_max);
    if (q_exp <= q_max) f.coeffs_[q_exp] = std::move(value);
    return f;
}

const Int& PowerSeries::operator[](int e) const {
    if (e < 0 || e > q_max()) return kZero;
    return coeffs_[e];
}

void PowerSeries::set(int e, Int value) {
    if (e < 0 || e > q_max()) throw std::out_of_range("PowerSeries::set: exponent out of range");
    coeffs_[e] = std::move(value);
}

void PowerSeries::add_at(int e, const Int& value) {
    if (e < 0) throw std::out_of_range("PowerSeries::add_at: negative exponent");
    if (e <= q_max()) coeffs_[e] += value;
}

PowerSeries PowerSeries::truncated(int new_q_max) const {
    PowerSeries f(std::min(new_q_max, q_max()));
    for (int e = 0; e <= f.q_max(); ++e) f.coeffs_[e] = coeffs_[e];
    return f;
}

PowerSeries PowerSeries::shifted(int t) const {
    if (t < 0) throw std::invalid_argument("PowerSeries::shifted: t must be >= 0");
    PowerSeries f(q_max());
    for (int e = t; e <= q_max(); ++e) f.coeffs_[e] = coeffs_[e - t];
    return f;
}

PowerSeries PowerSeries::invert_unit() const {
    if (coeffs_[0] != 1) throw std::invalid_argument("invert_unit: constant term must be 1");
    PowerSeries g(q_max());
    g.coeffs_[0] = 1;
    for (int e = 1; e <= q_max(); ++e) {
        Int acc = 0;
        for (int k = 1; k <= e; ++k) {
            if (coeffs_[k] != 0) acc += coeffs_[k] * g.coeffs_[e - k];
        }
        g.coeffs_[e] = -acc;
    }
    return g;
}

void PowerSeries::mul_one_minus_q(int t) {
    if (t < 1) throw std::invalid_argument("mul_one_minus_q: t must be >= 1");
    for (int e = q_max(); e >= t; --e) coeffs_[e] -= coeffs_[e - t];
}

void PowerSeries::mul_one_plus_q(int t) {
    if (t < 1) throw std::invalid_argument("mul_one_plus_q: t must be >= 1");
    for (int e = q_max(); e >= t; --e) coeffs_[e] += coeffs_[e - t];
}

void PowerSeries::div_one_minus_q(int t) {
    if (t < 1) throw std::invalid_argument("div_one_minus_q: t must be >= 1");
    for (int e = t; e <= q_max(); ++e) coeffs_[e] += coeffs_[e - t];
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& g) {
    *this = *this + g;
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& g) {
    *this = *this - g;
    return *this;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    PowerSeries h(std::min(f.q_max(), g.q_max()));
    for (int e = 0; e <= h.q_max(); ++e) h.coeffs_[e] = f.coeffs_[e] + g.coeffs_[e];
    return h;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    PowerSeries h(std::min(f.q_max(), g.q_max()));
    for (int e = 0; e <= h.q_max(); ++e) h.coeffs_[e] = f.coeffs_[e] - g.coeffs_[e];
    return h;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    PowerSeries h(std::min(f.q_max(), g.q_max()));
    for (int a = 0; a <= h.q_max(); ++a) {
        if (f.coeffs_[a] == 0) continue;
        for (int b = 0; a + b <= h.q_max(); ++b) {
            if (g.coeffs_[b] == 0) continue;
            h.coeffs_[a + b] += f.coeffs_[a] * g.coeffs_[b];
        }
    }
    return h;
}

bool operator==(const PowerSeries& f, const PowerSeries& g) {
    return !first_mismatch(f, g).has_value();
}

std::optional<SeriesMismatch> first_mismatch(const PowerSeries& f, const PowerSeries& g) {
    int overlap = std::min(f.q_max(), g.q_max());
    for (int e = 0; e <= overlap; ++e) {
        if (f[e] != g[e]) return SeriesMismatch{e, f[e], g[e]};
    }
    return std::nullopt;
}

}  // namespace jp
