#include "jp/pochhammer.hpp"

#include <stdexcept>

namespace jp {

// Multiplies f in place by (1 - sign * z^zs q^qe), truncated.
static void mul_binomial(BivariateSeries& f, int sign, int zs, int qe) {
    if (zs == 0 && qe == 0) throw std::invalid_argument("mul_binomial: unit offset");
    for (int a = f.z_max(); a >= zs; --a)
        for (int b = f.q_max(); b >= qe; --b) {
            const Int& src = f.coeff(a - zs, b - qe);
            if (src == 0) continue;
            f.add_at(a, b, sign == 1 ? Int(-src) : src);
        }
}

BivariateSeries pochhammer_finite(Monomial x, int n, int z_max, int q_max) {
    if (n < 0) throw std::invalid_argument("pochhammer_finite: n must be >= 0");
    if (x.sign != 1 && x.sign != -1)
        throw std::invalid_argument("pochhammer_finite: sign must be +1 or -1");
    if (x.z_exp < 0 || x.q_exp < 0 || x.z_exp + x.q_exp < 1)
        throw std::invalid_argument("pochhammer_finite: x must be a non-constant monomial");
    BivariateSeries f = BivariateSeries::constant(1, z_max, q_max);
    for (int i = 0; i < n; ++i) {
        long long qe = static_cast<long long>(x.q_exp) + i;
        if (qe > q_max) break;  // this and all later factors are 1 within truncation
        mul_binomial(f, x.sign, x.z_exp, static_cast<int>(qe));
    }
    return f;
}

BivariateSeries pochhammer_neg_inf(int c, int z_max, int q_max) {
    if (c < 1) throw std::invalid_argument("pochhammer_neg_inf: offset c must be >= 1");
    BivariateSeries f = BivariateSeries::constant(1, z_max, q_max);
    // factor (1 + z q^{c+i}) only matters while c + i <= q_max
    for (int e = c; e <= q_max; ++e) mul_binomial(f, -1, 1, e);
    return f;
}

PowerSeries pochhammer_inf_u(int sign, int a, int step, int q_max) {
    if (a < 1) throw std::invalid_argument("pochhammer_inf_u: offset must be >= 1");
    if (step < 1) throw std::invalid_argument("pochhammer_inf_u: step must be >= 1");
    PowerSeries f = PowerSeries::constant(1, q_max);
    for (long long e = a; e <= q_max; e += step) {
        int t = static_cast<int>(e);
        if (sign == 1)
            f.mul_one_minus_q(t);
        else
            f.mul_one_plus_q(t);
    }
    return f;
}

PowerSeries pochhammer_finite_u(int sign, int t, int n, int q_max) {
    if (n < 0) throw std::invalid_argument("pochhammer_finite_u: n must be >= 0");
    if (t < 1) throw std::invalid_argument("pochhammer_finite_u: offset must be >= 1");
    PowerSeries f = PowerSeries::constant(1, q_max);
    for (int i = 0; i < n; ++i) {
        long long e = static_cast<long long>(t) + i;
        if (e > q_max) break;
        int off = static_cast<int>(e);
        if (sign == 1)
            f.mul_one_minus_q(off);
        else
            f.mul_one_plus_q(off);
    }
    return f;
}

std::vector<PowerSeries> inv_pochhammer_table(int m_max, int q_max, int step) {
    if (m_max < 0) throw std::invalid_argument("inv_pochhammer_table: m_max must be >= 0");
    if (step < 1) throw std::invalid_argument("inv_pochhammer_table: step must be >= 1");
    std::vector<PowerSeries> table;
    table.reserve(static_cast<size_t>(m_max) + 1);
    table.push_back(PowerSeries::constant(1, q_max));
    for (int m = 1; m <= m_max; ++m) {
        PowerSeries next = table.back();
        long long t = static_cast<long long>(step) * m;
        if (t <= q_max) next.div_one_minus_q(static_cast<int>(t));
        table.push_back(std::move(next));
    }
    return table;
}

}  // namespace jp
