#include <doctest.h>

#include "cylkit/products.hpp"

#include <random>

using namespace cylkit;

namespace {

WMultiset ms(std::initializer_list<long> e, long m) {
    std::vector<Rational> v;
    for (long x : e) v.emplace_back(x);
    return WMultiset(std::move(v), Rational(m));
}

std::vector<long> partition_numbers(int n) {
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p;
}

long discordant_pairs(const Profile& p) {
    long c = 0;
    for (int i = 1; i <= p.width(); ++i)
        for (int j = i + 1; j <= p.width(); ++j) c += p.at(i) != p.at(j);
    return c;
}

} // namespace

TEST_CASE("standard cylindric multisets") {
    CHECK(w3_standard(Profile({1})) == ms({1}, 1));
    CHECK(w3_standard(Profile({-1, 1})) == ms({1, 2}, 2));
    for (int h = 1; h <= 7; ++h)
        for (const Profile& p : all_profiles(h)) CHECK(static_cast<long>(w3_standard(p).size()) == 1 + discordant_pairs(p));

    // (q;q)_inf * CP = 1/(q^2,q^3,q^3,q^4,q^4,q^5;q^7)_inf for the width-7 rank-3 profile
    Window w = Window::make(40);
    TruncatedSeries cp = expand_product(w3_standard(Profile({-1, -1, -1, 1, 1, 1, 1})), w);
    TruncatedSeries rhs = expand_product(ms({2, 3, 3, 4, 4, 5}, 7), w);
    CHECK(poch_infinite(PochFactor::q(1, 1), w) * cp == rhs);
}

TEST_CASE("weighted cylindric multisets") {
    for (W3Orientation o : {W3Orientation::mirrored, W3Orientation::as_printed}) {
        CHECK(w3_weighted(Profile({-1, -1, 1}), WeightVector::of({1, 3, 1}), o) == ms({1, 4, 5}, 5));
        CHECK(w3_weighted(Profile({-1, 1, 1}), WeightVector::of({2, 2, 1}), o) == ms({2, 3, 5}, 5));
    }
    for (int h = 1; h <= 6; ++h)
        for (const Profile& p : all_profiles(h))
            for (W3Orientation o : {W3Orientation::mirrored, W3Orientation::as_printed})
                CHECK(w3_weighted(p, WeightVector::standard(h), o) == w3_standard(p));

    // the two orientations differ once weights break the symmetry; enumeration decides
    Profile p({-1, 1});
    WeightVector a = WeightVector::of({1, 2});
    CHECK(w3_weighted(p, a, W3Orientation::mirrored) == ms({1, 3}, 3));
    CHECK(w3_weighted(p, a, W3Orientation::as_printed) == ms({2, 3}, 3));
    Window w = Window::make(20, 19);
    TruncatedSeries enumerated = genfun_by_enumeration(Kind::CP, p, a, w).z_marginal();
    CHECK(agree(enumerated, expand_product(w3_weighted(p, a, W3Orientation::mirrored), Window::make(20))));
    CHECK_FALSE(agree(enumerated, expand_product(w3_weighted(p, a, W3Orientation::as_printed), Window::make(20))));

    CHECK_THROWS_AS(w3_weighted(Profile({-1, 1}), WeightVector::of({0, 1})), Error);
    CHECK_THROWS_AS(w3_weighted(Profile({-1, 1}), WeightVector::of({1, 1, 1})), Error);
}

TEST_CASE("weighted cylindric products match enumeration") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(1, 3);
    const int N = 11;
    for (int trial = 0; trial < 12; ++trial) {
        int h = 2 + trial % 2;
        std::vector<Rational> a;
        for (int j = 0; j < h; ++j) a.emplace_back(d(rng));
        WeightVector wv(a);
        for (const Profile& p : all_profiles(h)) {
            TruncatedSeries e = genfun_by_enumeration(Kind::CP, p, wv, Window::make(N, N - 1)).z_marginal();
            CHECK(agree(e, expand_product(w3_weighted(p, wv), Window::make(N))));
        }
    }
}

TEST_CASE("DSPP multisets") {
    auto [w1, w2] = w1_w2(Profile({1, -1}), WeightVector::of({0, 1, 0}));
    CHECK(w1 == ms({1, 1, 1}, 1));
    CHECK(w2 == ms({1}, 2));
    auto [v1, v2] = w1_w2(Profile({1}), WeightVector::of({1, 1}));
    CHECK(v1 == ms({1, 2}, 2));
    CHECK(v2.size() == 0);
    CHECK(v2.modulus == 4);
    auto [u1, u2] = w1_w2(Profile({1, -1, 1}), WeightVector::standard(4));
    CHECK(u1 == ms({1, 2, 3, 4}, 4));
    CHECK(u2 == ms({1, 4, 7}, 8));

    Window w = Window::make(16);
    auto p = partition_numbers(15);
    TruncatedSeries width_one = expand_product(dspp_product(Profile({1}), WeightVector::standard(2)), w);
    for (int k = 0; k < 16; ++k) CHECK(width_one.at(0, k) == p[static_cast<std::size_t>(k)]);

    // 1/((q;q)^3 (q;q^2))
    TruncatedSeries target = poch_infinite_reciprocal(PochFactor::q(1, 1), w);
    target = target * target * target * poch_infinite_reciprocal(PochFactor::q(1, 2), w);
    CHECK(expand_product(dspp_product(Profile({1, -1}), WeightVector::of({0, 1, 0})), w) == target);
}

TEST_CASE("DSPP products match enumeration") {
    const int N = 10;
    for (int h = 1; h <= 3; ++h)
        for (const Profile& p : all_profiles(h)) {
            TruncatedSeries e = genfun_by_enumeration(Kind::DSPP, p, WeightVector::standard(h + 1), Window::make(N, N - 1)).z_marginal();
            CHECK(agree(e, expand_product(dspp_product(p, WeightVector::standard(h + 1)), Window::make(N))));
        }
    for (int h = 1; h <= 2; ++h)
        for (const Profile& p : all_profiles(h)) {
            WeightVector a = WeightVector::symmetric(h + 1);
            TruncatedSeries e = genfun_by_enumeration(Kind::DSPP, p, a, Window::make(N, N - 1)).z_marginal();
            CHECK(agree(e, expand_product(dspp_product(p, a), Window::make(N))));
        }
    // the (q^1,q^4,q^7;q^8) block is what enumeration wants, not (q^2,q^4,q^7;q^8)
    Profile gamma({1, -1, 1});
    TruncatedSeries e = genfun_by_enumeration(Kind::DSPP, gamma, WeightVector::standard(4), Window::make(N, N - 1)).z_marginal();
    CHECK_FALSE(agree(e, expand_product(std::vector<WMultiset>{ms({1, 2, 3, 4}, 4), ms({2, 4, 7}, 8)}, Window::make(N))));
}

TEST_CASE("product expansion") {
    Window w = Window::make(30);
    CHECK(expand_product(WMultiset({}, Rational(3)), w) == TruncatedSeries::one(w));
    CHECK(expand_product(ms({1, 4, 5}, 5), w) ==
          poch_infinite_reciprocal(PochFactor::q(1, 5), w) * poch_infinite_reciprocal(PochFactor::q(4, 5), w) *
              poch_infinite_reciprocal(PochFactor::q(5, 5), w));

    ProductSpec spec;
    spec.num.push_back(PochFactor::zq(1, 1));
    Window wz = Window::make(20, 6);
    CHECK(expand_product(spec, wz) == poch_infinite(PochFactor::zq(1, 1), wz));
    spec.den.push_back(PochFactor::q(0, 1));
    CHECK_THROWS_AS(expand_product(spec, wz), Error);
    CHECK(to_string(ProductSpec::from_multiset(ms({1, 4}, 5))) == "1 / (q^1;q^5)(q^4;q^5)");
}

TEST_CASE("arbitrary products from weighted profiles") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        int r = 1 + trial % 4;
        std::vector<Rational> b;
        for (int i = 0; i <= r; ++i) b.push_back(make_rational(num(rng), 1 + trial % 3));
        std::sort(b.begin(), b.end());
        std::vector<Rational> a{b[0]};
        for (int i = 1; i <= r; ++i) a.push_back(b[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i - 1)]);
        std::vector<int> delta(static_cast<std::size_t>(r), -1);
        delta.push_back(1);
        WMultiset got = w3_weighted(Profile(delta), WeightVector(a));
        CHECK(got == WMultiset(b, b.back()));
    }

    // reciprocal theta function
    for (auto [b1, b2] : {std::pair{make_rational(1), make_rational(2)}, {make_rational(1, 2), make_rational(3, 2)}, {make_rational(2), make_rational(5)}}) {
        WeightVector a({b1, b2 - b1, b1});
        Window w = window_for(30, 0, {b1, b2});
        TruncatedSeries prod = expand_product(w3_weighted(Profile({-1, -1, 1}), a), w);
        CHECK(prod * theta_sum(b1, b2, w) == TruncatedSeries::one(w));
    }
}

TEST_CASE("balance") {
    CHECK(is_balanced(Profile({1})));
    for (const Profile& p : all_profiles(6)) CHECK(is_balanced(p));
    CHECK(is_balanced(ms({1, 4, 5}, 5)));
    CHECK_FALSE(is_balanced(ms({1, 3}, 3)));
    BalanceReport r = balance_report(8);
    CHECK(r.profiles == 510);
    CHECK(r.ok());
}

TEST_CASE("non-symmetric cylindric partitions") {
    for (int h = 1; h <= 4; ++h)
        for (const Profile& p : all_profiles(h)) {
            auto [w1, w2] = w1_w2(p, WeightVector::symmetric(h + 1));
            WMultiset half = w2.scaled(make_rational(1, 2));
            std::vector<int> full;
            for (int j = h; j >= 1; --j) full.push_back(-p.at(j));
            for (int x : p.delta) full.push_back(x);
            CHECK(w3_standard(Profile(full)) == disjoint_union(disjoint_union(w1, half), half));
        }
    Window w = Window::make(11, 10);
    for (int h = 1; h <= 2; ++h)
        for (const Profile& p : all_profiles(h)) {
            std::vector<int> full;
            for (int j = h; j >= 1; --j) full.push_back(-p.at(j));
            for (int x : p.delta) full.push_back(x);
            TruncatedSeries diff = genfun_by_enumeration(Kind::CP, Profile(full), WeightVector::standard(2 * h), w).z_marginal() -
                                   genfun_by_enumeration(Kind::SCP, p, WeightVector(), w).z_marginal();
            TruncatedSeries prod = scp_nonsymmetric_product(p, Window::make(11));
            CHECK(prod.at(0, 0) == 0);
            CHECK(agree(diff, prod));
        }
}
