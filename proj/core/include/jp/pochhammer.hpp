#pragma once

#include <vector>

#include "jp/bivariate_series.hpp"
#include "jp/power_series.hpp"

namespace jp {

/// (x; q)_n = prod_{i=0}^{n-1} (1 - x q^i) for a signed monomial x, truncated.
BivariateSeries pochhammer_finite(Monomial x, int n, int z_max, int q_max);

/// (-z q^c; q)_inf = prod_{i>=0} (1 + z q^{c+i}), truncated.  Requires c >= 1;
/// factors whose q-offset exceeds q_max contribute only their leading 1.
BivariateSeries pochhammer_neg_inf(int c, int z_max, int q_max);

/// Univariate prod_{j>=0} (1 - sign * q^{a + j*step}), truncated.  a >= 1.
PowerSeries pochhammer_inf_u(int sign, int a, int step, int q_max);

/// Univariate prod_{i=0}^{n-1} (1 - sign * q^{t+i}).
PowerSeries pochhammer_finite_u(int sign, int t, int n, int q_max);

/// Table of 1/(q^step; q^step)_m for m = 0..m_max, each truncated at q_max.
std::vector<PowerSeries> inv_pochhammer_table(int m_max, int q_max, int step = 1);

}  // namespace jp
