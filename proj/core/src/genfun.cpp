#include "jp/genfun.hpp"

#include "jp/errors.hpp"
#include "jp/pochhammer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace jp {

namespace {

int isqrt(int x) {
    int r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// largest m with m(m+1)/2 <= q_max
int max_triangular_mode(int q_max) {
    int m = 0;
    while (static_cast<long long>(m + 1) * (m + 2) / 2 <= q_max) ++m;
    return m;
}

std::string itos(long long v) { return std::to_string(v); }

void fail_bivariate(IdentityReport& rep, const std::string& relation,
                    const BivariateMismatch& w) {
    rep.fail({relation, w.z_exp, w.q_exp, w.lhs.str(), w.rhs.str()});
}

void fail_series(IdentityReport& rep, const std::string& relation, const SeriesMismatch& w) {
    rep.fail({relation, -1, w.q_exp, w.lhs.str(), w.rhs.str()});
}

// ---------------------------------------------------------------------------
// Mode-tuple enumeration shared by every multiple sum.
//
// Modes are visited outermost-first (the last mode first, so the
// epsilon-coupling partner of the extra Pochhammer mode is fixed early).
// With suffix sums N_level = m_level + N_{level+1}, every tuple contributes
//   q-exponent: sum of N_level^2, plus N_level for level >= boundary
//   z-exponent: z_factor * sum of N_level (plus whatever the leaf adds)
// and the running denominator picks up 1/(q^step; q^step)_{m} per mode.
// Both exponents are monotone in every mode, so breaking a mode loop at the
// first overflow of the minimal completion is exact.
// ---------------------------------------------------------------------------
class ModeSum {
public:
    using Leaf = std::function<void(int m_last, int sum_n, long long q_part,
                                    const PowerSeries& denom)>;

    ModeSum(int levels, int boundary, int z_factor, int z_max, int q_max, int slack,
            int outer_step = 1)
        : levels_(levels),
          boundary_(boundary),
          z_factor_(z_factor),
          z_max_(z_max),
          q_max_(q_max),
          slack_(slack),
          outer_step_(outer_step) {}

    void enumerate(const Leaf& leaf) {
        leaf_ = &leaf;
        PowerSeries one = PowerSeries::constant(1, q_max_);
        if (levels_ == 0) {
            (*leaf_)(0, 0, 0, one);
            return;
        }
        descend(levels_, 0, 0, 0, -1, one);
    }

private:
    void descend(int level, int n_next, int sum_n, long long q_part, int m_last,
                 const PowerSeries& denom) {
        PowerSeries d = denom;
        const int step = (level == levels_) ? outer_step_ : 1;
        for (int m = 0;; ++m) {
            if (m > 0) {
                long long t = static_cast<long long>(step) * m;
                if (t <= q_max_) d.div_one_minus_q(static_cast<int>(t));
            }
            const long long nj = m + n_next;
            const long long q_here = q_part + nj * nj + (level >= boundary_ ? nj : 0);
            // minimal completion: all lower modes zero, so N stays at nj
            const long long q_rest = (level - 1) * nj * nj +
                                     static_cast<long long>(std::max(0, level - boundary_)) * nj;
            if (q_here + q_rest > q_max_ + slack_) break;
            if (static_cast<long long>(z_factor_) * (sum_n + level * nj) > z_max_) break;
            const int last = (level == levels_) ? m : m_last;
            if (level == 1)
                (*leaf_)(last, sum_n + static_cast<int>(nj), q_here, d);
            else
                descend(level - 1, static_cast<int>(nj), sum_n + static_cast<int>(nj), q_here,
                        last, d);
        }
    }

    int levels_, boundary_, z_factor_, z_max_, q_max_, slack_, outer_step_;
    const Leaf* leaf_ = nullptr;
};

// Appends the extra Pochhammer mode of the fully developed sums: for each
// m0 the term picks up z^m0 q^{m0(m0+1)/2 + eps*m0*m_last} / (q)_{m0}.
void add_expanded_prefactor_terms(BivariateSeries& out, int eps, bool extra_n, int m_last,
                                  int sum_n, long long q_part, const PowerSeries& denom,
                                  int slack) {
    const long long base_q = q_part + (extra_n ? sum_n : 0);
    const int base_z = 2 * sum_n;
    PowerSeries d = denom;
    for (int m0 = 0;; ++m0) {
        if (m0 > 0 && m0 <= out.q_max()) d.div_one_minus_q(m0);
        const long long z_exp = base_z + m0;
        if (z_exp > out.z_max()) break;
        const long long q_exp = base_q + static_cast<long long>(m0) * (m0 + 1) / 2 +
                                static_cast<long long>(eps) * m0 * m_last;
        if (q_exp > out.q_max() + slack) break;
        if (q_exp <= out.q_max()) out.add_row(static_cast<int>(z_exp), d, static_cast<int>(q_exp));
    }
}

void require_boundary_index(int i, int top, const char* who) {
    if (i < 0 || i > top)
        throw std::invalid_argument(std::string(who) + ": boundary index out of range");
}

}  // namespace

BivariateSeries andrews_f(int k, int i, int z_max, int q_max, int mode_slack) {
    if (k < 1) throw std::invalid_argument("andrews_f: k must be >= 1");
    if (i < -1 || i > k) throw std::invalid_argument("andrews_f: boundary index out of range");
    BivariateSeries out(z_max, q_max);
    if (i <= 0) return out;
    ModeSum sum(k - 1, i, /*z_factor=*/1, z_max, q_max, mode_slack);
    sum.enumerate([&](int, int sum_n, long long q_part, const PowerSeries& denom) {
        if (sum_n <= z_max && q_part <= q_max)
            out.add_row(sum_n, denom, static_cast<int>(q_part));
    });
    return out;
}

BivariateSeries series_A(const RestrictionParams& r, int i, int z_max, int q_max,
                         int mode_slack) {
    require_boundary_index(i, r.kappa(), "series_A");
    BivariateSeries out(z_max, q_max);
    if (i == 0) return out;
    const int eps = r.epsilon();
    ModeSum sum(r.kappa() - 1, i, /*z_factor=*/2, z_max, q_max, mode_slack);
    sum.enumerate([&](int m_last, int sum_n, long long q_part, const PowerSeries& denom) {
        add_expanded_prefactor_terms(out, eps, /*extra_n=*/false, m_last, sum_n, q_part, denom,
                                     mode_slack);
    });
    return out;
}

BivariateSeries series_A_prefactor_route(const RestrictionParams& r, int i, int z_max,
                                         int q_max) {
    require_boundary_index(i, r.kappa(), "series_A_prefactor_route");
    BivariateSeries out(z_max, q_max);
    if (i == 0) return out;
    const int eps = r.epsilon();
    // partial sums grouped by the coupled mode, prefactor multiplied on at the end
    std::map<int, BivariateSeries> groups;
    ModeSum sum(r.kappa() - 1, i, /*z_factor=*/2, z_max, q_max, 0);
    sum.enumerate([&](int m_last, int sum_n, long long q_part, const PowerSeries& denom) {
        if (q_part > q_max) return;
        const int key = eps == 1 ? m_last : 0;
        auto [it, inserted] = groups.try_emplace(key, BivariateSeries(z_max, q_max));
        it->second.add_row(2 * sum_n, denom, static_cast<int>(q_part));
    });
    for (const auto& [m_last, partial] : groups)
        out += pochhammer_neg_inf(1 + eps * m_last, z_max, q_max) * partial;
    return out;
}

namespace {

BivariateSeries series_B_even(const RestrictionParams& r, int i, int z_max, int q_max) {
    BivariateSeries out(z_max, q_max);
    if (i == 0) return out;
    const int eps = r.epsilon();
    ModeSum sum(r.kappa() - 1, i, /*z_factor=*/2, z_max, q_max, 0);
    sum.enumerate([&](int m_last, int sum_n, long long q_part, const PowerSeries& denom) {
        add_expanded_prefactor_terms(out, eps, /*extra_n=*/true, m_last, sum_n, q_part, denom, 0);
    });
    return out;
}

}  // namespace

BivariateSeries series_B(const RestrictionParams& r, int j, int z_max, int q_max) {
    if (j < 0 || j > r.K) throw std::invalid_argument("series_B: boundary index out of range");
    if (j == 0) return BivariateSeries(z_max, q_max);
    if (j % 2 == 0) return series_B_even(r, j / 2, z_max, q_max);
    const int i = (j + 1) / 2;
    const int i_a = r.kappa() - i + 1 - r.epsilon();
    BivariateSeries even = series_B_even(r, i, z_max, q_max);
    BivariateSeries tail = series_A(r, i_a, z_max, q_max)
                               .subst_z_shift(1)
                               .times_monomial({1, 2 * i - 1, 2 * i - 1});
    return even - tail;
}

BivariateSeries staircase(const BivariateSeries& f) {
    BivariateSeries g(f.z_max(), f.q_max());
    if (f.z_clipped()) g.mark_z_clipped();
    if (f.q_clipped()) g.mark_q_clipped();
    for (int a = 0; a <= f.z_max(); ++a) {
        const long long shift = static_cast<long long>(a) * (a - 1) / 2;
        for (int b = 0; b <= f.q_max(); ++b) {
            const Int& c = f.coeff(a, b);
            if (c == 0) continue;
            const long long target = b + shift;
            if (target > f.q_max()) {
                g.mark_q_clipped();  // everything further in this row lands outside too
                break;
            }
            g.add_at(a, static_cast<int>(target), c);
        }
    }
    return g;
}

int z1_required_zmax(const RestrictionParams& r, int q_max) {
    const int levels = r.kappa() - 1;
    const int n_top = std::min(q_max, levels * isqrt(q_max));
    return max_triangular_mode(q_max) + 2 * n_top;
}

int z1_required_zmax_f(int k, int q_max) {
    return std::min(q_max, (k - 1) * isqrt(q_max));
}

PowerSeries specialize_z1(const BivariateSeries& f, int adequate_z_max) {
    if (adequate_z_max < 0)
        throw std::invalid_argument("specialize_z1: adequacy bound must be >= 0");
    if (f.z_max() < adequate_z_max)
        throw TruncationError("specialize_z1: z_max " + itos(f.z_max()) +
                              " is below the adequacy bound " + itos(adequate_z_max));
    if (f.z_clipped())
        throw TruncationError("specialize_z1: operand lost content in the z direction");
    PowerSeries s(f.q_max());
    for (int b = 0; b <= f.q_max(); ++b) {
        Int acc = 0;
        for (int a = 0; a <= f.z_max(); ++a) acc += f.coeff(a, b);
        s.set(b, std::move(acc));
    }
    return s;
}

PowerSeries product_side(const RestrictionParams& r, int i, int q_max) {
    const int kappa = r.kappa();
    if (i < 1 || i > kappa)
        throw std::invalid_argument("product_side: boundary index out of range");
    const int modulus = r.K + 1;
    if (2 * i < modulus) {
        PowerSeries num = pochhammer_inf_u(-1, 1, 1, q_max);  // all (1 + q^n)
        PowerSeries den = PowerSeries::constant(1, q_max);
        for (int n = 1; n <= q_max; ++n) {
            const int res = n % modulus;
            if (res == 0 || res == i % modulus || res == (modulus - i) % modulus) continue;
            den.mul_one_minus_q(n);
        }
        return num * den.invert_unit();
    }
    // K odd with i = kappa
    PowerSeries num = PowerSeries::constant(1, q_max);
    PowerSeries den = PowerSeries::constant(1, q_max);
    for (int n = 1; n <= q_max; ++n) {
        if (n % kappa == 0) continue;
        num.mul_one_plus_q(n);
        den.mul_one_minus_q(n);
    }
    return num * den.invert_unit();
}

PowerSeries product_side_odd(int kappa, int i, int q_max) {
    if (kappa < 2) throw std::invalid_argument("product_side_odd: kappa must be >= 2");
    if (i < 1 || i > kappa)
        throw std::invalid_argument("product_side_odd: boundary index out of range");
    PowerSeries ratio =
        pochhammer_inf_u(-1, 1, 1, q_max) * pochhammer_inf_u(1, 1, 1, q_max).invert_unit();
    if (i < kappa) {
        PowerSeries triple = pochhammer_inf_u(1, i, 2 * kappa, q_max) *
                             pochhammer_inf_u(1, 2 * kappa - i, 2 * kappa, q_max) *
                             pochhammer_inf_u(1, 2 * kappa, 2 * kappa, q_max);
        return ratio * triple;
    }
    PowerSeries num = pochhammer_inf_u(1, kappa, kappa, q_max);
    PowerSeries den = pochhammer_inf_u(-1, kappa, kappa, q_max);
    return ratio * num * den.invert_unit();
}

PowerSeries series_A_z1_direct(const RestrictionParams& r, int i, int q_max) {
    if (i < 1 || i > r.kappa())
        throw std::invalid_argument("series_A_z1_direct: boundary index out of range");
    const int eps = r.epsilon();
    PowerSeries acc(q_max);
    // prefactor extracted as (-q)_inf; the last mode's denominator absorbs
    // (-q; q)_m, i.e. it steps in q^{1+eps}
    ModeSum sum(r.kappa() - 1, i, /*z_factor=*/2, /*z_max=*/2 * q_max, q_max, 0,
                /*outer_step=*/1 + eps);
    sum.enumerate([&](int, int, long long q_part, const PowerSeries& denom) {
        if (q_part <= q_max) acc += denom.shifted(static_cast<int>(q_part));
    });
    return pochhammer_inf_u(-1, 1, 1, q_max) * acc;
}

BivariateSeries unrestricted_jagged_gf(int z_max, int q_max) {
    BivariateSeries out(z_max, q_max);
    const Int one = 1;
    for (int m = 0; m <= z_max; ++m)
        for_each_jagged(m, q_max, std::nullopt,
                        [&](const Parts&, int n) { out.add_at(m, n, one); });
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks.
// ---------------------------------------------------------------------------

namespace {

using IndexedSeries = std::function<const BivariateSeries&(int)>;

// The three q-difference relations, taken over every index for which both
// sides stay in range.  A and B fetch the family members by boundary index.
void check_family_relations(IdentityReport& rep, const RestrictionParams& r,
                            const IndexedSeries& A, const IndexedSeries& B) {
    const int K = r.K;
    const int kappa = r.kappa();
    const int eps = r.epsilon();
    for (int i = 1; i <= kappa; ++i) {
        BivariateSeries lhs = A(i) - A(i - 1);
        BivariateSeries rhs = B(K - 2 * i + 2).times_monomial({1, 2 * (i - 1), i - 1});
        if (auto w = first_mismatch(lhs, rhs))
            fail_bivariate(rep, "pair-tail i=" + itos(i), *w);
    }
    for (int i = 0; 2 * i + 1 <= K; ++i) {
        BivariateSeries lhs = B(2 * i + 1) - B(2 * i);
        BivariateSeries rhs = A(kappa - i).subst_z_shift(1).times_monomial({1, 2 * i, 2 * i});
        if (auto w = first_mismatch(lhs, rhs))
            fail_bivariate(rep, "ones-tail-odd i=" + itos(i), *w);
    }
    for (int i = 1; 2 * i <= K; ++i) {
        BivariateSeries lhs = B(2 * i) - B(2 * i - 1);
        BivariateSeries rhs =
            A(kappa - i + 1 - eps).subst_z_shift(1).times_monomial({1, 2 * i - 1, 2 * i - 1});
        if (auto w = first_mismatch(lhs, rhs))
            fail_bivariate(rep, "ones-tail-even i=" + itos(i), *w);
    }
}

// coefficient (a, b) must be 1 at the origin and 0 elsewhere on both axes
void check_axes_are_one(IdentityReport& rep, const BivariateSeries& f,
                        const std::string& relation) {
    for (int a = 0; a <= f.z_max(); ++a)
        if (f.coeff(a, 0) != (a == 0 ? 1 : 0))
            rep.fail({relation + " (q = 0 slice)", a, 0, f.coeff(a, 0).str(),
                      a == 0 ? "1" : "0"});
    for (int b = 0; b <= f.q_max(); ++b)
        if (f.coeff(0, b) != (b == 0 ? 1 : 0))
            rep.fail({relation + " (z = 0 slice)", 0, b, f.coeff(0, b).str(),
                      b == 0 ? "1" : "0"});
}

}  // namespace

IdentityReport check_andrews_recurrence(int k, int z_max, int q_max) {
    IdentityReport rep;
    rep.name = "andrews-recurrence";
    rep.add_param("k", k);
    rep.z_max = z_max;
    rep.q_max = q_max;

    std::vector<BivariateSeries> f;
    f.reserve(k + 1);
    for (int i = 0; i <= k; ++i) f.push_back(andrews_f(k, i, z_max, q_max));

    if (!f[0].is_zero()) rep.fail({"zero boundary at index 0", 0, 0, "nonzero", "0"});
    for (int i = 1; i <= k; ++i) check_axes_are_one(rep, f[i], "i=" + itos(i));

    for (int i = 1; i <= k; ++i) {
        BivariateSeries lhs = f[i] - f[i - 1];
        BivariateSeries rhs = f[k - i + 1].subst_z_shift(1).times_monomial({1, i - 1, i - 1});
        if (auto w = first_mismatch(lhs, rhs)) fail_bivariate(rep, "recurrence i=" + itos(i), *w);
    }
    // index 1 equals the top index at argument zq
    if (auto w = first_mismatch(f[1], f[k].subst_z_shift(1)))
        fail_bivariate(rep, "first equals top at zq", *w);

    rep.verified = "recurrence and boundaries for all indices";
    return rep;
}

IdentityReport check_qdifference_relations(const RestrictionParams& r, int z_max, int q_max) {
    IdentityReport rep;
    rep.name = "qdifference-relations";
    rep.add_param("K", r.K);
    rep.z_max = z_max;
    rep.q_max = q_max;

    std::vector<BivariateSeries> a_family, b_family;
    for (int i = 0; i <= r.kappa(); ++i) a_family.push_back(series_A(r, i, z_max, q_max));
    for (int j = 0; j <= r.K; ++j) b_family.push_back(series_B(r, j, z_max, q_max));

    for (int i = 1; i <= r.kappa(); ++i)
        check_axes_are_one(rep, a_family[i], "A i=" + itos(i));
    for (int j = 1; j <= r.K; ++j) check_axes_are_one(rep, b_family[j], "B j=" + itos(j));

    check_family_relations(
        rep, r, [&](int i) -> const BivariateSeries& { return a_family[i]; },
        [&](int j) -> const BivariateSeries& { return b_family[j]; });

    rep.verified = "three q-difference relations, all indices in range";
    return rep;
}

BivariateSeries series_A_factored(const RestrictionParams& r, int i, int z_max, int q_max) {
    if (r.epsilon() != 0)
        throw std::invalid_argument("series_A_factored: K must be even");
    require_boundary_index(i, r.kappa(), "series_A_factored");
    BivariateSeries f = andrews_f(r.kappa(), i, z_max, q_max).scale_z_exponent(2);
    return pochhammer_neg_inf(1, z_max, q_max) * f;
}

IdentityReport check_even_factorization(const RestrictionParams& r, int z_max, int q_max) {
    IdentityReport rep;
    rep.name = "even-factorization";
    rep.add_param("K", r.K);
    rep.z_max = z_max;
    rep.q_max = q_max;
    if (r.epsilon() != 0) throw std::invalid_argument("check_even_factorization: K must be even");

    for (int i = 1; i <= r.kappa(); ++i) {
        BivariateSeries direct = series_A(r, i, z_max, q_max);
        BivariateSeries factored = series_A_factored(r, i, z_max, q_max);
        if (auto w = first_mismatch(direct, factored))
            fail_bivariate(rep, "factorization i=" + itos(i), *w);
    }
    // f(z) = (1 + zq) f(zq) for f = (-zq)_inf
    BivariateSeries f = pochhammer_neg_inf(1, z_max, q_max);
    BivariateSeries fzq = f.subst_z_shift(1);
    BivariateSeries rhs = fzq + fzq.times_monomial({1, 1, 1});
    if (auto w = first_mismatch(f, rhs)) fail_bivariate(rep, "functional equation", *w);

    rep.verified = "factored equals direct for every index";
    return rep;
}

IdentityReport check_factored_solution(int kappa, int z_max, int q_max) {
    IdentityReport rep;
    rep.name = "factored-solution";
    rep.add_param("kappa", kappa);
    rep.z_max = z_max;
    rep.q_max = q_max;
    if (kappa < 2) throw std::invalid_argument("check_factored_solution: kappa must be >= 2");
    RestrictionParams r(2 * kappa);

    const BivariateSeries f = pochhammer_neg_inf(1, z_max, q_max);
    const BivariateSeries fzq = f.subst_z_shift(1);

    std::vector<BivariateSeries> andrews;
    for (int i = 0; i <= kappa; ++i) andrews.push_back(andrews_f(kappa, i, z_max, q_max));

    std::vector<BivariateSeries> a_family, b_family;
    for (int i = 0; i <= kappa; ++i)
        a_family.push_back(f * andrews[i].scale_z_exponent(2));
    b_family.emplace_back(z_max, q_max);  // index 0 is the zero series
    for (int j = 1; j <= r.K; ++j) {
        if (j % 2 == 0) {
            b_family.push_back(f * andrews[j / 2].subst_z_shift(1).scale_z_exponent(2));
        } else {
            const int i = (j + 1) / 2;
            BivariateSeries even = f * andrews[i].subst_z_shift(1).scale_z_exponent(2);
            BivariateSeries tail =
                (fzq * andrews[kappa - i + 1].subst_z_shift(2).scale_z_exponent(2))
                    .times_monomial({1, 2 * i - 1, 2 * i - 1});
            b_family.push_back(even - tail);
        }
    }

    check_family_relations(
        rep, r, [&](int i) -> const BivariateSeries& { return a_family[i]; },
        [&](int j) -> const BivariateSeries& { return b_family[j]; });

    rep.verified = "factored family satisfies all three relations";
    return rep;
}

IdentityReport check_series_vs_counts(const RestrictionParams& r, int m_max, int n_max) {
    IdentityReport rep;
    rep.name = "series-vs-counts";
    rep.add_param("K", r.K);
    rep.add_param("m_max", m_max);
    rep.add_param("n_max", n_max);
    rep.z_max = m_max;
    rep.q_max = n_max;

    JaggedCounts counts(r, m_max, n_max);
    for (int i = 0; i <= r.kappa(); ++i) {
        BivariateSeries s = series_A(r, i, m_max, n_max);
        for (int m = 0; m <= m_max; ++m)
            for (int n = 0; n <= n_max; ++n)
                if (s.coeff(m, n) != counts.count_A(i, m, n))
                    rep.fail({"A i=" + itos(i), m, n, s.coeff(m, n).str(),
                              itos(counts.count_A(i, m, n))});
    }
    for (int j = 0; j <= r.K; ++j) {
        BivariateSeries s = series_B(r, j, m_max, n_max);
        for (int m = 0; m <= m_max; ++m)
            for (int n = 0; n <= n_max; ++n)
                if (s.coeff(m, n) != counts.count_B(j, m, n))
                    rep.fail({"B j=" + itos(j), m, n, s.coeff(m, n).str(),
                              itos(counts.count_B(j, m, n))});
    }
    rep.verified = "series coefficients equal enumeration counts on the grid";
    return rep;
}

IdentityReport check_distance2_partitions(int z_max, int q_max, int kappa_proxy) {
    IdentityReport rep;
    rep.name = "distance2-partitions";
    rep.add_param("kappa_proxy", kappa_proxy);
    rep.z_max = z_max;
    rep.q_max = q_max;
    if (2 * kappa_proxy - 1 <= z_max)
        throw std::invalid_argument("check_distance2_partitions: kappa_proxy too small");

    const auto invq = inv_pochhammer_table(std::max(z_max, isqrt(q_max) + 1), q_max);

    // literal double sum: z^{a+2b} q^{(a+b)^2 + b^2} / ((q)_a (q)_b)
    BivariateSeries double_sum(z_max, q_max);
    for (int a = 0; a <= z_max; ++a) {
        for (int b = 0; a + 2 * b <= z_max; ++b) {
            const long long e = static_cast<long long>(a + b) * (a + b) +
                                static_cast<long long>(b) * b;
            if (e > q_max) break;
            double_sum.add_row(a + 2 * b, invq[a] * invq[b], static_cast<int>(e));
        }
    }

    BivariateSeries f33 = andrews_f(3, 3, z_max, q_max);
    if (auto w = first_mismatch(double_sum, f33)) fail_bivariate(rep, "double sum vs andrews", *w);

    BivariateSeries jag = unrestricted_jagged_gf(z_max, q_max);

    // a vacuous restriction must reproduce the unrestricted counts
    RestrictionParams proxy(2 * kappa_proxy);
    JaggedCounts counts(proxy, z_max, q_max);
    for (int m = 0; m <= z_max; ++m)
        for (int n = 0; n <= q_max; ++n)
            if (jag.coeff(m, n) != counts.count_A(kappa_proxy, m, n))
                rep.fail({"vacuous restriction", m, n, jag.coeff(m, n).str(),
                          itos(counts.count_A(kappa_proxy, m, n))});

    // closed product form: jag * (z^2 q; q)_inf == (-zq)_inf
    BivariateSeries lhs = jag * pochhammer_finite({1, 2, 1}, q_max, z_max, q_max);
    if (auto w = first_mismatch(lhs, pochhammer_neg_inf(1, z_max, q_max)))
        fail_bivariate(rep, "product form", *w);

    // staircased enumeration equals the double sum
    BivariateSeries stair = staircase(jag);
    if (auto w = first_mismatch(stair, double_sum))
        fail_bivariate(rep, "staircase vs double sum", *w);

    // brute-force partition counts with lambda_j >= lambda_{j+2} + 2
    for (int m = 0; m <= z_max; ++m)
        for (int n = 0; n <= q_max; ++n) {
            const long long oracle = count_partitions_distance_gap(n, m, 2, 2);
            if (stair.coeff(m, n) != oracle)
                rep.fail({"brute-force counts", m, n, stair.coeff(m, n).str(), itos(oracle)});
        }

    rep.verified = "double sum, Andrews form, staircased counts and product all agree";
    return rep;
}

IdentityReport check_distance3_partitions(int z_max, int q_max) {
    IdentityReport rep;
    rep.name = "distance3-partitions";
    rep.z_max = z_max;
    rep.q_max = q_max;

    const auto invq = inv_pochhammer_table(std::max(z_max, isqrt(q_max) + 1), q_max);

    // z^{a+2b} q^{a^2 + 3ab + 3b^2 - b} / ((q)_a (q)_b), integer exponents
    BivariateSeries double_sum(z_max, q_max);
    for (int a = 0; a <= z_max; ++a) {
        for (int b = 0; a + 2 * b <= z_max; ++b) {
            const long long e = static_cast<long long>(a) * a +
                                3ll * a * b + 3ll * b * b - b;
            if (e > q_max) break;
            double_sum.add_row(a + 2 * b, invq[a] * invq[b], static_cast<int>(e));
        }
    }

    RestrictionParams r(3);
    BivariateSeries stair = staircase(series_A(r, 2, z_max, q_max));
    if (auto w = first_mismatch(double_sum, stair))
        fail_bivariate(rep, "double sum vs staircased series", *w);

    for (int m = 0; m <= z_max; ++m)
        for (int n = 0; n <= q_max; ++n) {
            const long long oracle = count_partitions_distance_gap(n, m, 2, 3);
            if (stair.coeff(m, n) != oracle)
                rep.fail({"brute-force counts", m, n, stair.coeff(m, n).str(), itos(oracle)});
        }

    rep.verified = "double sum, staircased series and brute-force counts agree";
    return rep;
}

IdentityReport check_product_identities(const RestrictionParams& r, int i, int q_max) {
    IdentityReport rep;
    rep.name = "product-identities";
    rep.add_param("K", r.K);
    rep.add_param("i", i);
    rep.q_max = q_max;

    const int zreq = z1_required_zmax(r, q_max);
    rep.z_max = zreq;
    PowerSeries sum_side = specialize_z1(series_A(r, i, zreq, q_max), zreq);
    PowerSeries prod = product_side(r, i, q_max);
    if (auto w = first_mismatch(sum_side, prod)) fail_series(rep, "sum vs product", *w);

    PowerSeries direct = series_A_z1_direct(r, i, q_max);
    if (auto w = first_mismatch(sum_side, direct)) fail_series(rep, "sum vs direct sum", *w);

    if (r.epsilon() == 1) {
        PowerSeries alt = product_side_odd(r.kappa(), i, q_max);
        if (auto w = first_mismatch(prod, alt)) fail_series(rep, "product vs alternate", *w);
    }

    rep.verified = "sum side equals product side to truncation";
    return rep;
}

}  // namespace jp
