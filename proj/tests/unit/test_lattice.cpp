#include <doctest.h>

#include "cylkit/lattice.hpp"

#include <map>
#include <set>

using namespace cylkit;

namespace {

// Independent interlacing check written directly from the chain definition.
bool chain_ok(const std::vector<int>& big, const std::vector<int>& small, bool strict) {
    auto at = [](const std::vector<int>& v, std::size_t i) { return i < v.size() ? v[i] : 0; };
    std::vector<int> chain;
    std::size_t n = std::max(big.size(), small.size()) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        chain.push_back(at(big, i));
        chain.push_back(at(small, i));
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i] < chain[i + 1]) return false;
        if (strict && chain[i + 1] > 0 && chain[i] == chain[i + 1]) return false;
    }
    return true;
}

std::vector<std::vector<int>> all_partitions_up_to(int n) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& p : partitions_of(k)) out.push_back(p.parts());
    return out;
}

// Brute force over tuples of partitions of bounded size; accumulates z^max q^{weighted size}.
// Zero-weight diagonals need a larger size bound, given per diagonal in `sizes`.
std::map<std::pair<int, long>, long> brute_force(Kind kind, const std::vector<int>& delta, const std::vector<long>& w, int N,
                                                 int D, std::vector<int> sizes = {}) {
    const int h = static_cast<int>(delta.size());
    const bool wrap = kind == Kind::CP || kind == Kind::DCP;
    const int free = wrap ? h : h + 1;
    if (sizes.empty()) sizes.assign(static_cast<std::size_t>(free), N);
    std::vector<std::vector<std::vector<int>>> pools;
    for (int s : sizes) pools.push_back(all_partitions_up_to(s));
    std::map<std::pair<int, long>, long> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(free), 0);
    while (true) {
        std::vector<std::vector<int>> d;
        for (int j = 0; j < free; ++j) d.push_back(pools[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]]);
        if (wrap) d.push_back(d.front());
        bool ok = true;
        for (int j = 1; j <= h && ok; ++j) {
            const auto& l = d[static_cast<std::size_t>(j - 1)];
            const auto& r = d[static_cast<std::size_t>(j)];
            ok = delta[static_cast<std::size_t>(j - 1)] == -1 ? chain_ok(l, r, kind == Kind::DCP) : chain_ok(r, l, kind == Kind::DCP);
        }
        if (ok) {
            long size = 0;
            int mx = 0;
            for (int j = 0; j < free; ++j) {
                long s = 0;
                for (int x : d[static_cast<std::size_t>(j)]) s += x;
                size += w[static_cast<std::size_t>(j)] * s;
            }
            for (const auto& p : d)
                if (!p.empty()) mx = std::max(mx, p.front());
            if (size < N && mx <= D) ++out[{mx, size}];
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == pools[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

TruncatedSeries from_counts(const Window& w, const std::map<std::pair<int, long>, long>& c) {
    TruncatedSeries s(w);
    for (const auto& [k, v] : c) s.add_term(k.first, k.second, v);
    return s;
}

// Symmetric objects via the full cylindric partition of profile (-rev d, d), filtered by mirror symmetry.
TruncatedSeries symmetric_by_filter(const std::vector<int>& delta, int N, int D) {
    const int h = static_cast<int>(delta.size());
    std::vector<int> full;
    for (int j = h - 1; j >= 0; --j) full.push_back(-delta[static_cast<std::size_t>(j)]);
    for (int x : delta) full.push_back(x);
    auto pool = all_partitions_up_to(N);
    Window w = Window::make(N, D);
    TruncatedSeries s(w);
    // mu^0 .. mu^{2h-1}; symmetric means mu^j = mu^{2h-j}, so only mu^0..mu^h are free.
    std::vector<std::size_t> idx(static_cast<std::size_t>(h + 1), 0);
    while (true) {
        std::vector<std::vector<int>> mu(static_cast<std::size_t>(2 * h + 1));
        for (int j = 0; j <= h; ++j) mu[static_cast<std::size_t>(j)] = pool[idx[static_cast<std::size_t>(j)]];
        for (int j = h + 1; j <= 2 * h; ++j) mu[static_cast<std::size_t>(j)] = mu[static_cast<std::size_t>(2 * h - j)];
        bool ok = true;
        for (int j = 1; j <= 2 * h && ok; ++j) {
            const auto& l = mu[static_cast<std::size_t>(j - 1)];
            const auto& r = mu[static_cast<std::size_t>(j)];
            ok = full[static_cast<std::size_t>(j - 1)] == -1 ? chain_ok(l, r, false) : chain_ok(r, l, false);
        }
        if (ok) {
            long size = 0;
            int mx = 0;
            for (int j = 0; j < 2 * h; ++j)
                for (int x : mu[static_cast<std::size_t>(j)]) size += x;
            for (const auto& p : mu)
                if (!p.empty()) mx = std::max(mx, p.front());
            if (size < N && mx <= D) s.add_term(mx, size, 1);
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == pool.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return s;
}

std::vector<long> partition_numbers(int n) {
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p;
}

GridPartition figure_cylindric() {
    return {Kind::CP, Profile({-1, 1, -1, 1, 1, -1, 1, -1}), WeightVector::standard(8),
            {Partition({3, 1}), Partition({2}), Partition({5, 1}), Partition({2}), Partition({4, 2}), Partition({4, 3}),
             Partition({4}), Partition({5, 2}), Partition({3, 1})}};
}

} // namespace

TEST_CASE("interlacing") {
    CHECK(interlaces(Partition({3, 1}), Partition({2, 1})));
    CHECK_FALSE(interlaces(Partition({2, 2}), Partition({3})));
    CHECK(interlaces(Partition({3, 1}), Partition({2})));
    CHECK_FALSE(interlaces(Partition({3, 1}), Partition({2, 2})));
    CHECK(interlaces(Partition(), Partition()));
    CHECK_FALSE(interlaces(Partition(), Partition({1})));
    CHECK(interlaces(Partition({1}), Partition()));
    // strict only between positive entries
    CHECK(interlaces(Partition({3, 1}), Partition({2}), true));
    CHECK_FALSE(interlaces(Partition({3, 1}), Partition({3}), true));
    CHECK_FALSE(interlaces(Partition({3, 2}), Partition({2}), true));
    CHECK(interlaces(Partition({1}), Partition(), true));
}

TEST_CASE("partition basics") {
    Partition p({4, 2, 2, 1});
    CHECK(p.size() == 9);
    CHECK(p.length() == 4);
    CHECK(p.largest_hook() == 7);
    CHECK_FALSE(p.is_distinct());
    CHECK(Partition({3, 0, 0}).length() == 1);
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK(partitions_of(5).size() == 7);
    CHECK(all_profiles(3).size() == 8);
    CHECK(all_profiles(2).front() == Profile({-1, -1}));
    CHECK(parse_profile("(1,-1,1)") == Profile({1, -1, 1}));
    CHECK(parse_profile("+-+") == Profile({1, -1, 1}));
    CHECK(Profile({-1, -1, 1}).negated_reverse() == Profile({-1, 1, 1}));
    CHECK(Profile({-1, 1, -1}).rank() == 2);
    CHECK(parse_weights("(1, 3/2, 0)").partial(2) == make_rational(5, 2));
    CHECK_THROWS_AS(parse_weights("(0,0)"), Error);
}

TEST_CASE("pictured objects satisfy their constraints") {
    GridPartition cp = figure_cylindric();
    CHECK(cp.valid());
    CHECK(cp.profile.rank() == 4);
    CHECK(cp.size() == 38);
    long all_diagonals = 0;
    for (const auto& d : cp.diagonals) all_diagonals += d.size();
    CHECK(all_diagonals == 42);

    // Symmetric object stored from its axis outwards: profile (-1,1,1,-1,-1,1) is (-rev d, d) with d = (-1,-1,1).
    GridPartition scp{Kind::SCP, Profile({-1, -1, 1}), WeightVector::symmetric(4),
                      {Partition({5, 2, 1}), Partition({5, 2}), Partition({3}), Partition({4, 1})}};
    CHECK(scp.valid());
    CHECK(scp.size() == 33);
    // all seven diagonals of the unfolded picture
    CHECK(scp.diagonals[0].size() + 2 * (scp.diagonals[1].size() + scp.diagonals[2].size() + scp.diagonals[3].size()) == 38);

    GridPartition dspp{Kind::DSPP, Profile({-1, -1, 1, -1, -1, 1}), WeightVector::standard(7),
                       {Partition({6, 4, 2}), Partition({5, 3, 1}), Partition({5, 1}), Partition({7, 3}), Partition({6, 2}),
                        Partition({4, 1}), Partition({7, 4})}};
    CHECK(dspp.valid());
    CHECK(dspp.size() == 61);
    CHECK(dspp.weighted_size() == 61);
    CHECK(dspp.max_part() == 7);

    GridPartition broken = dspp;
    broken.diagonals[3] = Partition({4, 3});
    CHECK_FALSE(broken.valid());
}

TEST_CASE("enumeration matches brute force over partition tuples") {
    const int N = 7, D = 6;
    Window w = Window::make(N, D);
    for (int h = 1; h <= 3; ++h)
        for (const Profile& p : all_profiles(h)) {
            std::vector<long> ones_cp(static_cast<std::size_t>(h), 1), ones_dspp(static_cast<std::size_t>(h + 1), 1);
            if (h <= 2 || p.delta[0] == -1) {
                CHECK(genfun_by_enumeration(Kind::DSPP, p, WeightVector::standard(h + 1), w) ==
                      from_counts(w, brute_force(Kind::DSPP, p.delta, ones_dspp, N, D)));
            }
            CHECK(genfun_by_enumeration(Kind::CP, p, WeightVector::standard(h), w) ==
                  from_counts(w, brute_force(Kind::CP, p.delta, ones_cp, N, D)));
            CHECK(genfun_by_enumeration(Kind::DCP, p, WeightVector::standard(h), w) ==
                  from_counts(w, brute_force(Kind::DCP, p.delta, ones_cp, N, D)));
        }
    // a weighted family with a zero-weight diagonal
    Window w2 = Window::make(6, 5);
    CHECK(genfun_by_enumeration(Kind::CP, Profile({-1, 1}), WeightVector::of({0, 1}), w2) ==
          from_counts(w2, brute_force(Kind::CP, {-1, 1}, {0, 1}, 6, 5, {18, 5})));
    CHECK(genfun_by_enumeration(Kind::DSPP, Profile({1, -1}), WeightVector::of({2, 1, 3}), w2) ==
          from_counts(w2, brute_force(Kind::DSPP, {1, -1}, {2, 1, 3}, 6, 5)));
}

TEST_CASE("symmetric objects equal the mirror-filtered cylindric partitions") {
    const int N = 9, D = 8;
    for (int h = 1; h <= 2; ++h)
        for (const Profile& p : all_profiles(h)) {
            TruncatedSeries direct = genfun_by_enumeration(Kind::SCP, p, WeightVector(), Window::make(N, D));
            CHECK(direct == symmetric_by_filter(p.delta, N, D));
            // as a weighted DSPP
            CHECK(direct == genfun_by_enumeration(Kind::DSPP, p, WeightVector::symmetric(h + 1), Window::make(N, D)));
        }
}

TEST_CASE("reversal symmetries") {
    Window w = Window::make(12, 11);
    for (const Profile& p : all_profiles(3)) {
        CHECK(genfun_by_enumeration(Kind::DSPP, p, WeightVector::standard(4), w) ==
              genfun_by_enumeration(Kind::DSPP, p.negated_reverse(), WeightVector::standard(4), w));
        CHECK(genfun_by_enumeration(Kind::SCP, p, WeightVector(), w) == genfun_by_enumeration(Kind::SCP, p.negated_reverse(), WeightVector(), w));
    }
}

TEST_CASE("small generating functions") {
    Window w = Window::make(25, 24);
    auto p = partition_numbers(24);
    TruncatedSeries dspp = genfun_by_enumeration(Kind::DSPP, Profile({1}), WeightVector::standard(2), w).z_marginal();
    TruncatedSeries cp = genfun_by_enumeration(Kind::CP, Profile({-1}), WeightVector::standard(1), w).z_marginal();
    for (int k = 0; k < 25; ++k) {
        CHECK(dspp.at(0, k) == p[static_cast<std::size_t>(k)]);
        CHECK(cp.at(0, k) == p[static_cast<std::size_t>(k)]);
    }

    // 36 weighted objects of size 3 on the profile (1,-1) with weights (0,1,0)
    TruncatedSeries weighted = genfun_by_enumeration(Kind::DSPP, Profile({1, -1}), WeightVector::of({0, 1, 0}), Window::make(4, 3));
    CHECK(weighted.z_marginal().at(0, 3) == 36);
}

TEST_CASE("rational weights live on a finer grid") {
    Window w = Window::make(12, 5, 2);
    WeightVector half = parse_weights("(1/2,1)");
    TruncatedSeries s = genfun_by_enumeration(Kind::DSPP, Profile({1}), half, w);
    // lambda^0 <= lambda^1: the object ((1),(1)) has size 3/2 and max 1
    CHECK(s.coeff(1, make_rational(3, 2)) == 1);
    CHECK(s.coeff(1, 1) == 1);
    CHECK_THROWS_AS(genfun_by_enumeration(Kind::DSPP, Profile({1}), half, Window::make(6, 5)), Error);
}

TEST_CASE("enumeration is duplicate-free, sorted and valid") {
    EnumCaps caps;
    caps.max_weighted_size = Rational(6);
    for (const Profile& p : all_profiles(3)) {
        for (Kind k : {Kind::CP, Kind::DSPP, Kind::DCP, Kind::SCP}) {
            WeightVector w = k == Kind::SCP ? WeightVector::symmetric(4) : WeightVector::standard(weight_count(k, 3));
            auto objs = enumerate(k, p, w, caps);
            std::set<std::string> keys;
            Rational prev = 0;
            for (const auto& g : objs) {
                CHECK(g.valid());
                CHECK(g.weighted_size() <= 6);
                CHECK(g.weighted_size() >= prev);
                prev = g.weighted_size();
                keys.insert(canonical_key(g));
            }
            CHECK(keys.size() == objs.size());
        }
    }
}

TEST_CASE("unbounded enumeration is refused") {
    EnumCaps caps;
    caps.max_weighted_size = Rational(5);
    // lambda^0 >= lambda^1 with lambda^0 weightless: its first part is free
    CHECK_THROWS_AS(enumerate(Kind::DSPP, Profile({-1}), WeightVector::of({0, 1}), caps), Error);
    caps.max_part = 3;
    CHECK_NOTHROW(enumerate(Kind::DSPP, Profile({-1}), WeightVector::of({0, 1}), caps));
    CHECK_THROWS_AS(enumerate(Kind::CP, Profile({-1}), WeightVector::standard(1), EnumCaps{}), Error);
    CHECK_THROWS_AS(enumerate(Kind::CP, Profile({-1, 1}), WeightVector::standard(3), caps), Error);
}

TEST_CASE("diamonds") {
    CHECK(Diamond({3, 2, 1, 1, 1, 0, 0}).valid());
    CHECK(Diamond({3, 2, 1, 1}).weight() == 4);
    CHECK_THROWS_AS(Diamond({1, 2}), Error);
    CHECK_THROWS_AS(Diamond({3, 1, 2, 2}), Error);

    Window w = Window::make(8, 7);
    TruncatedSeries d = schmidt_genfun(SchmidtClass::diamond, Parity::odd_indexed, w);
    // lambda_1 = 2 with a free pair below it (9), or lambda_1 = lambda_4 = 1 (4)
    CHECK(d.z_marginal().at(0, 2) == 13);
    // diamonds are weighted DSPPs on (1,-1) with weights (0,1,0)
    CHECK(d == genfun_by_enumeration(Kind::DSPP, Profile({1, -1}), WeightVector::of({0, 1, 0}), w));
}

TEST_CASE("Schmidt-type generating functions") {
    const int N = 16;
    Window w = Window::make(N, N);
    auto p = partition_numbers(N - 1);
    TruncatedSeries distinct_odd = schmidt_genfun(SchmidtClass::distinct, Parity::odd_indexed, w).z_marginal();
    for (int k = 0; k < N; ++k) CHECK(distinct_odd.at(0, k) == p[static_cast<std::size_t>(k)]);

    TruncatedSeries unrestricted = schmidt_genfun(SchmidtClass::unrestricted, Parity::odd_indexed, w);
    TruncatedSeries e = poch_infinite_reciprocal(PochFactor::zq(1, 1), w);
    CHECK(unrestricted == e * e);

    // Interleaving the two diagonals of a width-2 object gives the partition; the weighted
    // diagonal carries the odd-indexed parts exactly when it is the larger one.
    CHECK(unrestricted == genfun_by_enumeration(Kind::CP, Profile({1, -1}), WeightVector::of({0, 1}), w));
    CHECK(schmidt_genfun(SchmidtClass::unrestricted, Parity::even_indexed, w) ==
          genfun_by_enumeration(Kind::CP, Profile({-1, 1}), WeightVector::of({0, 1}), w));
    CHECK(schmidt_genfun(SchmidtClass::distinct, Parity::odd_indexed, w) ==
          genfun_by_enumeration(Kind::DCP, Profile({1, -1}), WeightVector::of({0, 1}), w));
    CHECK(schmidt_genfun(SchmidtClass::distinct, Parity::even_indexed, w) ==
          genfun_by_enumeration(Kind::DCP, Profile({-1, 1}), WeightVector::of({0, 1}), w));
}

TEST_CASE("hook and alternating-sum counts") {
    CHECK(count_by_hook(0, 0) == 1);
    CHECK(count_distinct_by_altsum(0, 0) == 1);
    long total = 0;
    for (int m = 0; m <= 3; ++m) total += count_by_hook(3, m);
    CHECK(total == 3);
    for (int n = 0; n <= 14; ++n)
        for (int m = 0; m <= n; ++m) CHECK(count_by_hook(n, m) == count_distinct_by_altsum(n, m));
    for (int n = 1; n <= 12; ++n)
        for (int m = 0; m <= n + 1; ++m) CHECK(count_distinct_by_first_plus_even(n, m) == count_by_hook_parts_above_one(n + 1, m + 1));
}

TEST_CASE("signed distinct partitions") {
    Window w = Window::make(30);
    TruncatedSeries s = weighted_distinct_signed_genfun(w);
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(0, 1) == -1);
    CHECK(s == poch_infinite(PochFactor::q(1, 2), w) * poch_infinite(PochFactor::q(2, 2, -1), w));
}
