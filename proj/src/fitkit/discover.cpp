#include "cylkit/fitkit.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cylkit {

namespace {

void for_each_weight_vector(int length, int max_weight, const std::function<void(const WeightVector&)>& f) {
    std::vector<long> v(static_cast<std::size_t>(length), 0);
    for (;;) {
        if (std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) f(WeightVector(std::vector<Rational>(v.begin(), v.end())));
        std::size_t i = 0;
        while (i < v.size() && v[i] == max_weight) v[i++] = 0;
        if (i == v.size()) return;
        ++v[i];
    }
}

std::vector<WMultiset> multisets_of(Kind k, const Profile& p, const WeightVector& a) {
    if (k == Kind::CP) return {w3_weighted(p, a)};
    auto [w1, w2] = w1_w2(p, a);
    return {w1, w2};
}

std::string describe(const std::vector<WMultiset>& ms) {
    std::string s;
    for (const auto& m : ms) {
        if (m.size() == 0) continue;
        s += (s.empty() ? "" : " x ") + to_string(m);
    }
    return s;
}

} // namespace

std::vector<EquivalenceGroup> discover_equivalences(const EquivalenceSearch& s) {
    const Window w = Window::make(s.N);
    std::map<std::vector<BigInt>, std::vector<EquivalenceMember>> by_series;
    for (Kind k : s.kinds) {
        if (k != Kind::CP && k != Kind::DSPP) throw Error("equivalence search covers CP and DSPP");
        for (int h = 1; h <= s.max_width; ++h)
            for (const Profile& p : all_profiles(h))
                for_each_weight_vector(k == Kind::CP ? h : h + 1, s.max_weight, [&](const WeightVector& a) {
                    std::vector<WMultiset> ms;
                    try {
                        ms = multisets_of(k, p, a);
                        for (const auto& m : ms)
                            for (const auto& e : m.entries)
                                if (e <= 0) return;
                    } catch (const Error&) {
                        return;
                    }
                    TruncatedSeries series = expand_product(ms, w);
                    std::vector<BigInt> key(series.row(0).begin(), series.row(0).end());
                    by_series[key].push_back({k, p, a, describe(ms), std::nullopt});
                });
    }
    std::vector<EquivalenceGroup> out;
    for (auto& [coeffs, members] : by_series) {
        if (members.size() < 2) continue;
        EquivalenceGroup g;
        g.coefficients = coeffs;
        g.members = std::move(members);
        if (s.verify_order > 0) {
            const std::int64_t n = std::min(s.verify_order, s.N);
            for (auto& m : g.members) {
                try {
                    TruncatedSeries e = genfun_by_enumeration(m.kind, m.profile, m.weights, Window::make(n, static_cast<int>(n - 1))).z_marginal();
                    bool same = true;
                    for (std::int64_t q = 0; q < n; ++q) same = same && e.at(0, q) == g.coefficients[static_cast<std::size_t>(q)];
                    m.enumeration_agrees = same;
                } catch (const Error&) {
                    m.enumeration_agrees = std::nullopt;
                }
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace cylkit
