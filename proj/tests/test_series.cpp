#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/bivariate_series.hpp"
#include "jp/pochhammer.hpp"
#include "jp/power_series.hpp"
#include "jp/serialize.hpp"

#include <random>
#include <vector>

using jp::BivariateSeries;
using jp::Int;
using jp::Monomial;
using jp::PowerSeries;

namespace {

BivariateSeries random_table(std::mt19937& rng, int z_max, int q_max) {
    std::uniform_int_distribution<int> val(-9, 9);
    BivariateSeries f(z_max, q_max);
    for (int a = 0; a <= z_max; ++a)
        for (int b = 0; b <= q_max; ++b) f.set(a, b, val(rng));
    return f;
}

// naive reference product used as the oracle for mul
BivariateSeries naive_mul(const BivariateSeries& f, const BivariateSeries& g) {
    BivariateSeries h(std::min(f.z_max(), g.z_max()), std::min(f.q_max(), g.q_max()));
    for (int a = 0; a <= h.z_max(); ++a)
        for (int b = 0; b <= h.q_max(); ++b) {
            Int acc = 0;
            for (int a1 = 0; a1 <= a; ++a1)
                for (int b1 = 0; b1 <= b; ++b1) acc += f.coeff(a1, b1) * g.coeff(a - a1, b - b1);
            h.set(a, b, acc);
        }
    return h;
}

}  // namespace

TEST_CASE("addition identities") {
    std::mt19937 rng(42);
    BivariateSeries f = random_table(rng, 5, 7);
    BivariateSeries zero(5, 7);
    CHECK(f + zero == f);

    // (1 + zq) + (1 - zq) == 2
    BivariateSeries a = BivariateSeries::constant(1, 4, 4);
    a.set(1, 1, 1);
    BivariateSeries b = BivariateSeries::constant(1, 4, 4);
    b.set(1, 1, -1);
    CHECK(a + b == BivariateSeries::constant(2, 4, 4));
}

TEST_CASE("addition against coefficientwise oracle on random tables") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        BivariateSeries f = random_table(rng, 6, 8);
        BivariateSeries g = random_table(rng, 6, 8);
        BivariateSeries h = f + g;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 8; ++b) CHECK(h.coeff(a, b) == f.coeff(a, b) + g.coeff(a, b));
    }
}

TEST_CASE("multiplication identities") {
    std::mt19937 rng(3);
    BivariateSeries f = random_table(rng, 5, 6);
    CHECK(f * BivariateSeries::constant(1, 5, 6) == f);

    // (1 + q)(1 - q) == 1 - q^2
    BivariateSeries a = BivariateSeries::constant(1, 2, 4);
    a.set(0, 1, 1);
    BivariateSeries b = BivariateSeries::constant(1, 2, 4);
    b.set(0, 1, -1);
    BivariateSeries expect = BivariateSeries::constant(1, 2, 4);
    expect.set(0, 2, -1);
    CHECK(a * b == expect);
}

TEST_CASE("finite Pochhammer against hand expansion") {
    // (q; q)_3 = (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
    BivariateSeries p = jp::pochhammer_finite({1, 0, 1}, 3, 2, 8);
    const int expected[] = {1, -1, -1, 0, 1, 1, -1, 0, 0};
    for (int b = 0; b <= 8; ++b) {
        CHECK(p.coeff(0, b) == expected[b]);
        CHECK(p.coeff(1, b) == 0);
    }
}

TEST_CASE("finite Pochhammer basics") {
    CHECK(jp::pochhammer_finite({1, 0, 1}, 0, 3, 5) == BivariateSeries::constant(1, 3, 5));
    BivariateSeries one_minus_q = BivariateSeries::constant(1, 3, 5);
    one_minus_q.set(0, 1, -1);
    CHECK(jp::pochhammer_finite({1, 0, 1}, 1, 3, 5) == one_minus_q);
}

TEST_CASE("finite Pochhammer n = 5 against naive product of binomials") {
    const int q_max = 16;
    BivariateSeries p = jp::pochhammer_finite({1, 0, 1}, 5, 1, q_max);
    // oracle: multiply the five binomials naively
    BivariateSeries expect = BivariateSeries::constant(1, 1, q_max);
    for (int i = 1; i <= 5; ++i) {
        BivariateSeries binom = BivariateSeries::constant(1, 1, q_max);
        binom.set(0, i, -1);
        expect = naive_mul(expect, binom);
    }
    CHECK(p == expect);
}

TEST_CASE("multiplication against naive Cauchy oracle") {
    std::mt19937 rng(11);
    for (int round = 0; round < 5; ++round) {
        BivariateSeries f = random_table(rng, 4, 5);
        BivariateSeries g = random_table(rng, 4, 5);
        CHECK(f * g == naive_mul(f, g));
    }
}

TEST_CASE("ring axioms on random truncated tables") {
    std::mt19937 rng(99);
    for (int round = 0; round < 10; ++round) {
        BivariateSeries f = random_table(rng, 4, 5);
        BivariateSeries g = random_table(rng, 4, 5);
        BivariateSeries h = random_table(rng, 4, 5);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("mixed truncation takes the componentwise minimum") {
    std::mt19937 rng(5);
    BivariateSeries f = random_table(rng, 6, 9);
    BivariateSeries g = random_table(rng, 4, 12);
    BivariateSeries sum = f + g;
    CHECK(sum.z_max() == 4);
    CHECK(sum.q_max() == 9);
    BivariateSeries prod = f * g;
    CHECK(prod.z_max() == 4);
    CHECK(prod.q_max() == 9);
}

TEST_CASE("invert_unit") {
    // 1/(1-q) is the geometric series
    PowerSeries f = PowerSeries::constant(1, 10);
    f.set(1, -1);
    PowerSeries g = f.invert_unit();
    for (int e = 0; e <= 10; ++e) CHECK(g[e] == 1);

    // two-sided inverse on a denser unit
    PowerSeries h = PowerSeries::constant(1, 12);
    h.set(1, 3);
    h.set(2, -2);
    h.set(5, 7);
    CHECK(h * h.invert_unit() == PowerSeries::constant(1, 12));
    CHECK(h.invert_unit() * h == PowerSeries::constant(1, 12));

    PowerSeries bad = PowerSeries::constant(2, 4);
    CHECK_THROWS_AS(bad.invert_unit(), std::invalid_argument);
}

TEST_CASE("coefficient of q^5 in 1/(q;q)_inf counts partitions of 5") {
    const int q_max = 10;
    PowerSeries den = jp::pochhammer_inf_u(1, 1, 1, q_max);
    PowerSeries partitions_gf = den.invert_unit();

    // independent oracle: exhaustive enumeration of partitions
    auto count_partitions = [](int n) {
        std::function<long long(int, int)> rec = [&](int left, int max_part) -> long long {
            if (left == 0) return 1;
            long long total = 0;
            for (int v = std::min(left, max_part); v >= 1; --v) total += rec(left - v, v);
            return total;
        };
        return rec(n, n);
    };
    for (int n = 0; n <= q_max; ++n) CHECK(partitions_gf[n] == count_partitions(n));
    CHECK(partitions_gf[5] == 7);
}

TEST_CASE("infinite negative Pochhammer rows") {
    const int z_max = 6, q_max = 12;
    BivariateSeries p = jp::pochhammer_neg_inf(1, z_max, q_max);

    // z^0 row is the constant 1
    CHECK(p.coeff(0, 0) == 1);
    for (int b = 1; b <= q_max; ++b) CHECK(p.coeff(0, b) == 0);
    // z^1 row of (-zq)_inf: one factor fires per exponent
    for (int b = 1; b <= q_max; ++b) CHECK(p.coeff(1, b) == 1);
    CHECK(p.coeff(1, 0) == 0);

    // row m equals q^{m(m+1)/2} / (q)_m termwise
    auto invq = jp::inv_pochhammer_table(z_max, q_max);
    for (int m = 0; m <= z_max; ++m) {
        const int tri = m * (m + 1) / 2;
        for (int b = 0; b <= q_max; ++b) {
            Int expect = (b >= tri) ? invq[m][b - tri] : Int(0);
            CHECK(p.coeff(m, b) == expect);
        }
    }

    CHECK_THROWS_AS(jp::pochhammer_neg_inf(0, 3, 3), std::invalid_argument);
}

TEST_CASE("subst_z_shift bookkeeping") {
    BivariateSeries c = BivariateSeries::constant(5, 4, 9);
    CHECK(c.subst_z_shift(3) == c);

    BivariateSeries f(4, 9);
    f.set(2, 3, 1);  // z^2 q^3
    BivariateSeries g = f.subst_z_shift(1);
    CHECK(g.coeff(2, 5) == 1);  // z^2 q^5
    CHECK(g.coeff(2, 3) == 0);
}

TEST_CASE("subst_z_shift composes additively") {
    std::mt19937 rng(17);
    BivariateSeries f = random_table(rng, 5, 14);
    for (int s = 0; s <= 2; ++s)
        for (int t = 0; t <= 2; ++t)
            CHECK(f.subst_z_shift(s).subst_z_shift(t) == f.subst_z_shift(s + t));
}

TEST_CASE("scale_z_exponent") {
    std::mt19937 rng(23);
    BivariateSeries f = random_table(rng, 5, 6);
    CHECK(f.scale_z_exponent(1) == f);

    BivariateSeries g(4, 4);
    g.set(1, 2, 1);  // z q^2
    BivariateSeries h = g.scale_z_exponent(2);
    CHECK(h.coeff(2, 2) == 1);
    CHECK(h.coeff(1, 2) == 0);
    CHECK_FALSE(h.z_clipped());

    // content above z_max / k is dropped and flagged
    BivariateSeries tall(4, 4);
    tall.set(3, 0, 1);
    CHECK(tall.scale_z_exponent(2).z_clipped());
}

TEST_CASE("exactness: all integer coefficients survive a product chain") {
    // (1 - q)^-1 * (1 - q) == 1 within truncation
    PowerSeries f = PowerSeries::constant(1, 30);
    f.set(1, -1);
    CHECK(f.invert_unit() * f == PowerSeries::constant(1, 30));
}

TEST_CASE("identity reports serialize with their witness") {
    jp::IdentityReport rep;
    rep.name = "demo";
    rep.add_param("K", 5);
    rep.z_max = 3;
    rep.q_max = 4;
    rep.verified = "nothing";
    CHECK(jp::to_json(rep) ==
          R"({"name":"demo","params":{"K":"5"},"truncation":{"z_max":3,"q_max":4},)"
          R"("status":"pass","witness":null,"verified":"nothing"})");

    rep.fail({"sub", 1, 2, "7", "8"});
    rep.fail({"later", 3, 4, "0", "1"});  // first witness wins
    auto parsed_text = jp::to_text(rep);
    CHECK(parsed_text.find("[FAIL]") == 0);
    CHECK(jp::to_json(rep).find(R"("witness":{"relation":"sub","z_exp":1,"q_exp":2,)"
                                R"("lhs":"7","rhs":"8"})") != std::string::npos);
}

TEST_CASE("json emission of series uses decimal strings") {
    PowerSeries f(2);
    f.set(0, 1);
    f.set(2, -12);
    CHECK(jp::to_json(f) == R"({"q_max":2,"coeffs":["1","0","-12"]})");

    BivariateSeries g(1, 1);
    g.set(0, 0, 1);
    g.set(1, 1, 3);
    CHECK(jp::to_json(g) == R"({"z_max":1,"q_max":1,"coeffs":[["1","0"],["0","3"]]})");
}
