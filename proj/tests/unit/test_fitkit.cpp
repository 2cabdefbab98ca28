#include <doctest.h>

#include "cylkit/fitkit.hpp"

#include <algorithm>

using namespace cylkit;

namespace {

WMultiset ms(std::initializer_list<long> e, long m) {
    std::vector<Rational> v;
    for (long x : e) v.emplace_back(x);
    return WMultiset(std::move(v), Rational(m));
}

bool contains(const FitResult& r, const WeightVector& a) {
    return std::any_of(r.solutions.begin(), r.solutions.end(), [&](const FitSolution& s) { return s.weights == a; });
}

bool all_forward(const FitResult& r) {
    return std::all_of(r.solutions.begin(), r.solutions.end(), [](const FitSolution& s) { return s.forward_check; });
}

} // namespace

TEST_CASE("fitting cylindric weights") {
    FitResult a = fit_weights({Kind::CP, Profile({-1, -1, 1}), {ms({1, 4, 5}, 5)}});
    CHECK_FALSE(a.infeasible);
    CHECK(contains(a, WeightVector::of({1, 3, 1})));
    CHECK(all_forward(a));
    CHECK(a.assignments > 0);

    FitResult b = fit_weights({Kind::CP, Profile({-1, 1, 1}), {ms({2, 3, 5}, 5)}});
    CHECK(contains(b, WeightVector::of({2, 2, 1})));
    CHECK(all_forward(b));

    // every solution found reproduces the target exactly
    for (const auto& s : a.solutions) CHECK(w3_weighted(Profile({-1, -1, 1}), s.weights) == ms({1, 4, 5}, 5));

    // standard weights are recovered from the standard multiset
    for (int h = 2; h <= 4; ++h)
        for (const Profile& p : all_profiles(h)) {
            if (p.is_constant()) continue;
            FitResult r = fit_weights({Kind::CP, p, {w3_standard(p)}, true});
            CAPTURE(to_string(p));
            CHECK(contains(r, WeightVector::standard(h)));
            CHECK(all_forward(r));
        }
}

TEST_CASE("fitting double shifted weights") {
    FitResult r = fit_weights({Kind::DSPP, Profile({1, -1}), {ms({1, 1, 1}, 1), ms({1}, 2)}});
    CHECK_FALSE(r.infeasible);
    CHECK(contains(r, WeightVector::of({0, 1, 0})));
    CHECK(all_forward(r));
    for (const auto& s : r.solutions) {
        auto [w1, w2] = w1_w2(Profile({1, -1}), s.weights);
        CHECK(w1 == ms({1, 1, 1}, 1));
        CHECK(w2 == ms({1}, 2));
    }
}

TEST_CASE("infeasible shapes and empty answers") {
    FitResult shape = fit_weights({Kind::CP, Profile({-1, -1, 1}), {ms({1, 4}, 5)}});
    REQUIRE(shape.infeasible);
    CHECK(shape.solutions.empty());
    FitResult none = fit_weights({Kind::CP, Profile({-1, 1}), {ms({1, 1}, 7)}});
    CHECK_FALSE(none.infeasible);
    CHECK(none.solutions.empty());
    FitResult bad = fit_weights({Kind::DSPP, Profile({1, -1}), {ms({1, 1, 1}, 1), ms({1}, 3)}});
    CHECK(bad.infeasible);
    CHECK_THROWS_AS(fit_weights({Kind::DCP, Profile({1, -1}), {ms({1, 2}, 2)}}), Error);
}

TEST_CASE("integral toggle") {
    // (-1,1) with W = {1, 2} mod 2 forces A_2 = 2; rational solutions include a_0 = 1/2 only if free
    FitResult r = fit_weights({Kind::CP, Profile({-1, 1}), {ms({1, 2}, 2)}, true});
    for (const auto& s : r.solutions)
        for (const auto& x : s.weights.a) CHECK(x.get_den() == 1);
    CHECK(contains(r, WeightVector::of({1, 1})));
}

TEST_CASE("composition form round-trips") {
    for (int h = 1; h <= 12; ++h)
        for (const Profile& p : all_profiles(h)) {
            CwComposition c = to_composition(p);
            CHECK(c.width() == h);
            CHECK(c.rank() == p.rank());
            CHECK(from_composition(c) == p);
            CHECK(parse_composition(to_string(c)) == c);
        }
    CwComposition c = to_composition(Profile({-1, -1, -1, 1, 1, 1, 1}));
    CHECK(c.gaps == std::vector<int>{0, 0, 4});
    CHECK(c.offset == 0);
    CHECK(to_string(c) == "[0,0,4]@0");
    CwComposition one = to_composition(Profile({-1}));
    CHECK(one.gaps == std::vector<int>{0});
    CHECK(from_composition(one) == Profile({-1}));
    CHECK(to_composition(Profile({1, 1})).gaps.empty());
    CHECK_THROWS_AS(parse_composition("[1,-1]@0"), Error);
    CHECK_THROWS_AS(parse_composition("1,2@0"), Error);
    CHECK_THROWS_AS(parse_composition("[0,1]@3"), Error);
    CHECK_THROWS_AS(parse_composition("[0,]@0"), Error);
}

TEST_CASE("equivalence search") {
    EquivalenceSearch s;
    s.max_width = 3;
    s.max_weight = 3;
    s.N = 12;
    s.verify_order = 6;
    auto groups = discover_equivalences(s);
    CHECK_FALSE(groups.empty());

    auto find_group = [&](Kind k, const Profile& p, const WeightVector& a) -> const EquivalenceGroup* {
        for (const auto& g : groups)
            for (const auto& m : g.members)
                if (m.kind == k && m.profile == p && m.weights == a) return &g;
        return nullptr;
    };
    const EquivalenceGroup* pair = find_group(Kind::CP, Profile({-1, 1}), WeightVector::of({1, 1}));
    REQUIRE(pair);
    CHECK(find_group(Kind::CP, Profile({1, -1}), WeightVector::of({1, 1})) == pair);
    TruncatedSeries target = expand_product(ms({1, 2}, 2), Window::make(12));
    for (std::int64_t q = 0; q < 12; ++q) CHECK(pair->coefficients[static_cast<std::size_t>(q)] == target.at(0, q));
    // no other tuple in this range shares the product of DSPP (1,-1) with weights (0,1,0)
    CHECK(find_group(Kind::DSPP, Profile({1, -1}), WeightVector::of({0, 1, 0})) == nullptr);

    const EquivalenceGroup* g8 = find_group(Kind::CP, Profile({-1, -1, 1}), WeightVector::of({1, 3, 1}));
    const EquivalenceGroup* g9 = find_group(Kind::CP, Profile({-1, 1, 1}), WeightVector::of({2, 2, 1}));
    REQUIRE(g8);
    REQUIRE(g9);
    CHECK(g8 != g9);

    // group members with a runnable enumeration agree with it
    for (const auto& g : groups)
        for (const auto& m : g.members)
            if (m.enumeration_agrees) CHECK(*m.enumeration_agrees);

    EquivalenceSearch empty;
    empty.kinds = {};
    CHECK(discover_equivalences(empty).empty());
}
