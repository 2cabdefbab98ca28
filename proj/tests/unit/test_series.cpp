#include <doctest.h>

#include "cylkit/laurent.hpp"
#include "cylkit/series.hpp"

#include <random>

using namespace cylkit;

namespace {

// p(n) by the classical coin-change recurrence.
std::vector<long> partition_numbers(int n) {
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p;
}

TruncatedSeries from_coeffs(const Window& w, const std::vector<long>& c) {
    TruncatedSeries s(w);
    for (std::size_t k = 0; k < c.size(); ++k) s.add_term(0, static_cast<std::int64_t>(k), c[k]);
    return s;
}

TruncatedSeries random_series(std::mt19937& rng, const Window& w, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    TruncatedSeries s(w);
    for (int z = 0; z <= w.z_order; ++z)
        for (std::int64_t q = 0; q < w.q_limit; ++q) s.add_term(z, q, d(rng));
    return s;
}

} // namespace

TEST_CASE("finite Pochhammer expansions") {
    Window w = Window::make(10);
    CHECK(poch_finite(PochFactor::q(1, 1), 0, w) == TruncatedSeries::one(w));
    CHECK(poch_finite(PochFactor::q(1, 1), 3, w) == from_coeffs(w, {1, -1, -1, 0, 1, 1, -1}));

    Window wz = Window::make(12, 4);
    TruncatedSeries expect = TruncatedSeries::one(wz);
    expect.add_term(1, 3, 1);
    expect.add_term(1, 7, 1);
    expect.add_term(2, 10, 1);
    CHECK(poch_finite(PochFactor::zq(3, 4, -1), 2, wz) == expect);
}

TEST_CASE("negative-index Pochhammer conventions") {
    Window w = Window::make(12);
    // 1/(q;q)_{-1} contains the factor (1 - q^0) = 0
    CHECK(poch_reciprocal(PochFactor::q(1, 1), -1, w).is_zero());
    // (q^3;q)_{-2} = 1/((1-q^2)(1-q))
    TruncatedSeries a = poch_finite(PochFactor::q(3, 1), -2, w);
    TruncatedSeries b = poch_reciprocal(PochFactor::q(1, 1), 2, w);
    CHECK(a == b);
    CHECK_THROWS_AS(poch_finite(PochFactor::q(1, 1), -1, w), Error);
}

TEST_CASE("infinite Pochhammer products") {
    Window w = Window::make(8);
    CHECK(poch_infinite(PochFactor::q(1, 1), w) == from_coeffs(w, {1, -1, -1, 0, 0, 1, 0, 1}));

    Window wz = Window::make(5, 1);
    TruncatedSeries expect = TruncatedSeries::one(wz);
    for (int k = 1; k <= 4; ++k) expect.add_term(1, k, -1);
    CHECK(poch_infinite(PochFactor::zq(1, 1), wz) == expect);

    Window w1 = Window::make(1);
    CHECK(poch_infinite(PochFactor::q(2, 2, -1), w1) * poch_infinite(PochFactor::q(1, 2), w1) == TruncatedSeries::one(w1));

    CHECK_THROWS_AS(poch_infinite(PochFactor::q(0, 1), w), Error);
}

TEST_CASE("inverse of the Euler product gives partition numbers") {
    Window w = Window::make(40);
    TruncatedSeries inv = poch_infinite(PochFactor::q(1, 1), w).inverse();
    auto p = partition_numbers(39);
    for (int k = 0; k < 40; ++k) CHECK(inv.at(0, k) == p[static_cast<std::size_t>(k)]);
    CHECK(inv == poch_infinite_reciprocal(PochFactor::q(1, 1), w));

    TruncatedSeries g = TruncatedSeries::one(w);
    g.add_term(0, 2, 1);
    TruncatedSeries gi = g.inverse();
    for (int k = 0; k < 40; ++k) CHECK(gi.at(0, k) == (k % 2 ? 0 : (k % 4 == 0 ? 1 : -1)));
    CHECK_THROWS_AS((TruncatedSeries::one(w) * BigInt(2)).inverse(), Error);
}

TEST_CASE("ring axioms on random bivariate series") {
    std::mt19937 rng(7);
    Window w = Window::make(25, 5);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_series(rng, w, 9);
        auto b = random_series(rng, w, 9);
        auto c = random_series(rng, w, 9);
        CHECK((a - a).is_zero());
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        auto u = TruncatedSeries::one(w) + a.shift_q(1);
        CHECK(u * u.inverse() == TruncatedSeries::one(w));
        CHECK(u.inverse() * u == TruncatedSeries::one(w));
    }
}

TEST_CASE("big coefficients take the exact path") {
    Window w = Window::make(30);
    TruncatedSeries a = TruncatedSeries::one(w);
    a.add_term(0, 1, BigInt("100000000000"));
    TruncatedSeries sq = a * a;
    CHECK(sq.at(0, 2) == BigInt("10000000000000000000000"));
    CHECK(sq.at(0, 1) == BigInt("200000000000"));
}

TEST_CASE("substitutions") {
    Window w = Window::make(10, 3);
    TruncatedSeries s = TruncatedSeries::one(w) + TruncatedSeries::monomial(w, 1, 1);
    CHECK(s.substitute_z(1) == TruncatedSeries::one(w) + TruncatedSeries::monomial(w, 1, 2));

    Window w2 = Window::make(10, 3, 2);
    TruncatedSeries t = TruncatedSeries::monomial(w2, 2, make_rational(3));
    CHECK(t.substitute_z(make_rational(1, 2)) == TruncatedSeries::monomial(w2, 2, make_rational(4)));

    Window wz = Window::make(20, 6);
    CHECK(poch_infinite(PochFactor::zq(1, 1), wz).substitute_z(1) == poch_infinite(PochFactor::zq(2, 1), wz));
    CHECK_THROWS_AS(s.substitute_z(-1), Error);

    // z -> q on (zq;q)_inf gives (q^2;q)_inf up to q^((D+1))
    TruncatedSeries col = poch_infinite(PochFactor::zq(1, 1), wz).collapse_z(1);
    CHECK(col.q_limit() == 7);
    CHECK(agree(col, poch_infinite(PochFactor::q(2, 1), Window::make(20))));

    TruncatedSeries half = poch_infinite(PochFactor::q(2, 2), Window::make(20)).substitute_q_power(make_rational(1, 2));
    CHECK(half.q_scale() == 2);
    CHECK(agree(half, poch_infinite(PochFactor::q(1, 1), Window::make(10)).rescaled(2)));
}

TEST_CASE("Euler product-sum, column by column") {
    Window w = Window::make(30, 8);
    TruncatedSeries lhs = poch_infinite(PochFactor::zq(1, 1), w).inverse();
    for (int n = 0; n <= 8; ++n) {
        TruncatedSeries col = poch_reciprocal(PochFactor::q(1, 1), n, Window::make(30)).shift_q(n);
        CHECK(lhs.z_column(n) == col);
    }
}

TEST_CASE("Gaussian binomials") {
    Window w = Window::make(12);
    CHECK(gauss_binomial(4, 2, w) == from_coeffs(w, {1, 1, 2, 1, 1}));
    CHECK(gauss_binomial(3, 5, w).is_zero());
    CHECK(gauss_binomial(3, -1, w).is_zero());
    for (int n = 0; n < 6; ++n) CHECK(gauss_binomial(n, 0, w) == TruncatedSeries::one(w));
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    for (int n = 1; n < 8; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(gauss_binomial(n, k, w) == gauss_binomial(n - 1, k - 1, w) + gauss_binomial(n - 1, k, w).shift_q(k));
}

TEST_CASE("theta sums") {
    Window w = Window::make(60);
    CHECK(theta_sum(1, 2, w) == poch_infinite(PochFactor::q(1, 1), w));
    CHECK(theta_sum(make_rational(1, 2), make_rational(3, 2), Window::make(6, 0, 2)).at(0, 0) == 1);
    Window w2 = Window::make(30, 0, 2);
    auto t = theta_sum(make_rational(1, 2), make_rational(3, 2), w2);
    // (-a,-b,ab;ab) with a = -q^(1/2), b = -q^(3/2)
    auto expect = poch_infinite(PochFactor::q(make_rational(1, 2), 2, 1), w2) * poch_infinite(PochFactor::q(make_rational(3, 2), 2, 1), w2) *
                  poch_infinite(PochFactor::q(2, 2), w2);
    CHECK(t == expect);
}

TEST_CASE("windows intersect and mismatch reports") {
    TruncatedSeries a = poch_infinite(PochFactor::q(1, 1), Window::make(20));
    TruncatedSeries b = poch_infinite(PochFactor::q(1, 1), Window::make(12));
    CHECK((a + b).q_limit() == 12);
    CHECK(agree(a, b));
    TruncatedSeries c = b;
    c.add_term(0, 9, 3);
    auto m = first_mismatch(a, c);
    REQUIRE(m.has_value());
    CHECK(m->q == 9);
    CHECK(m->z == 0);
    CHECK(m->right - m->left == 3);
}

TEST_CASE("Laurent polynomials and shifted series") {
    LaurentPoly p = LaurentPoly::monomial(-1) + LaurentPoly::constant(1);
    LaurentPoly sq = p * p;
    CHECK(sq.coeff(-2) == 1);
    CHECK(sq.coeff(-1) == 2);
    CHECK(sq.min_exponent() == -2);
    CHECK(sq.to_string() == "q^(-2) + 2*q^(-1) + 1");

    Window rel = Window::make(20);
    ShiftedSeries a = ShiftedSeries::of(poch_reciprocal(PochFactor::q(1, 1), 3, rel), 5);
    ShiftedSeries b = a * LaurentPoly::binomial(1, 3);  // times (1 - q^3)
    ShiftedSeries c = ShiftedSeries::of(poch_reciprocal(PochFactor::q(1, 1), 2, rel), 5);
    CHECK((b - c).is_zero());
    CHECK(b.exact_limit() == 25);
    CHECK_THROWS_AS(ShiftedSeries::of(LaurentPoly::monomial(-1), rel).to_series(Window::make(3)), Error);
}
