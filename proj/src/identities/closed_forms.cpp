#include "cylkit/identities.hpp"

#include <algorithm>

namespace cylkit {

namespace {

long ceil_half(long n) { return (n + 1) / 2; }
long choose2(long n) { return n * (n - 1) / 2; }

// dst += q^delta * src (univariate, delta >= 0)
void add_at(TruncatedSeries& dst, const TruncatedSeries& src, std::int64_t delta) {
    auto s = src.row(0);
    auto d = dst.mutable_row(0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::int64_t e = static_cast<std::int64_t>(i) + delta;
        if (e >= static_cast<std::int64_t>(d.size())) break;
        if (s[i] != 0) d[static_cast<std::size_t>(e)] += s[i];
    }
}

struct KernelTerm {
    int sign;
    std::int64_t exponent;
    LaurentPoly factor;
};

KernelTerm width6_term(WidthSixCase c, long n, long m, FormVariant v) {
    const std::int64_t mm = 3 * m * (m + 1);
    KernelTerm t;
    switch (c) {
    case WidthSixCase::C:
        t.sign = m % 2 ? -1 : 1;
        t.exponent = 3 * choose2(n + 1) - mm;
        t.factor = LaurentPoly::constant(1);
        return t;
    case WidthSixCase::B:
    case WidthSixCase::A: {
        t.sign = m % 2 ? 1 : -1;
        if (c == WidthSixCase::B)
            t.exponent = 3 * (v == FormVariant::as_printed ? choose2(n - 1) : choose2(n)) + 2 * n - mm - 1;
        else
            t.exponent = 3 * choose2(n + 1) - mm - 1;
        LaurentPoly f = LaurentPoly::constant(1);
        f.add_term(3 * n + 1, -1);
        f.add_term(3 * n - 6 * m, v == FormVariant::as_printed ? 1 : -1);
        t.factor = f;
        return t;
    }
    case WidthSixCase::G:
        t.sign = m % 2 ? 1 : -1;
        t.exponent = 3 * choose2(n + 1) - 2 * n - mm - 1;
        t.factor = width6_sigma_factor(n, m, false);
        return t;
    }
    throw Error("unknown width-six case");
}

} // namespace

Profile width_six_profile(WidthSixCase c) {
    switch (c) {
    case WidthSixCase::A: return Profile({1, 1, 1});
    case WidthSixCase::B: return Profile({1, 1, -1});
    case WidthSixCase::C: return Profile({1, -1, 1});
    case WidthSixCase::G: return Profile({-1, 1, 1});
    }
    throw Error("unknown width-six case");
}

std::string_view width_six_name(WidthSixCase c) {
    switch (c) {
    case WidthSixCase::A: return "A";
    case WidthSixCase::B: return "B";
    case WidthSixCase::C: return "C";
    case WidthSixCase::G: return "G";
    }
    return "?";
}

LaurentPoly width6_sigma_factor(long n, long m, bool expanded) {
    if (expanded) {
        LaurentPoly p = LaurentPoly::constant(1);
        p.add_term(3 * n + 1, -1);
        p.add_term(3 * n - 2, -1);
        p.add_term(3 * n - 6 * m, -1);
        p.add_term(3 * n - 6 * m - 3, -1);
        p.add_term(6 * n - 6 * m - 2, 1);
        p.add_term(6 * n - 12 * m - 3, 1);
        return p;
    }
    // 1 + q^{3n-12m-3} (1 + q^{1+6m}) (q^{3n} - q^{6m} (1 + q^3))
    LaurentPoly inner = LaurentPoly::monomial(3 * n) - LaurentPoly::monomial(6 * m) - LaurentPoly::monomial(6 * m + 3);
    LaurentPoly mid = LaurentPoly::constant(1) + LaurentPoly::monomial(1 + 6 * m);
    return LaurentPoly::constant(1) + LaurentPoly::monomial(3 * n - 12 * m - 3) * mid * inner;
}

std::int64_t h_width6_floor(WidthSixCase c, long n, FormVariant v) {
    std::int64_t best = 0;
    for (long m = 0; 2 * m <= n; ++m) {
        KernelTerm t = width6_term(c, n, m, v);
        std::int64_t f = t.exponent + t.factor.min_exponent();
        if (m == 0 || f < best) best = f;
    }
    return best;
}

ShiftedSeries h_width6(WidthSixCase c, long n, std::int64_t abs_limit, FormVariant v) {
    if (n < 0) return ShiftedSeries(0, TruncatedSeries(Window{1, 0, 1}));
    const std::int64_t floor = h_width6_floor(c, n, v);
    const std::int64_t len = std::max<std::int64_t>(1, abs_limit - floor);
    TruncatedSeries acc(Window{len, 0, 1});
    for (long m = 0; 2 * m <= n; ++m) {
        KernelTerm t = width6_term(c, n, m, v);
        const std::int64_t lo = t.exponent + t.factor.min_exponent();
        const std::int64_t room = floor + len - lo;
        if (room <= 0) continue;
        const Window w{room, 0, 1};
        TruncatedSeries k = poch_finite(PochFactor::q(1, 6, -1), m, w) * poch_finite(PochFactor::q(5, 6, -1), m, w);
        k *= poch_reciprocal(PochFactor::q(6, 6), m, w);
        k *= poch_reciprocal(PochFactor::q(3, 3), n - 2 * m, w);
        k *= t.factor.shifted(-t.factor.min_exponent()).to_series(w);
        if (t.sign < 0) k = -k;
        add_at(acc, k, lo - floor);
    }
    return ShiftedSeries(floor, std::move(acc));
}

ShiftedSeries h_width4(const Profile& delta, long n, std::int64_t abs_limit) {
    if (delta.width() != 2 || (delta.at(1) == -1 && delta.at(2) == -1))
        throw Error("width-four closed forms cover (1,1), (1,-1) and (-1,1)");
    if (n < 0) return ShiftedSeries(0, TruncatedSeries(Window{1, 0, 1}));
    const bool both_up = delta.at(1) == 1 && delta.at(2) == 1;
    const bool lead_down = delta.at(1) == -1;
    const std::int64_t offset = both_up ? n * (n + 1) : n * n;
    const long sign_index = lead_down ? n / 2 : ceil_half(n);
    const Window w{std::max<std::int64_t>(1, abs_limit - offset), 0, 1};
    TruncatedSeries s = poch_finite(PochFactor::q(2, 4), ceil_half(n), w);
    s *= poch_finite(PochFactor::q(4, 4, -1), n / 2, w);
    s *= poch_reciprocal(PochFactor::q(4, 4), n, w);
    if (sign_index % 2) s = -s;
    return ShiftedSeries(offset, std::move(s));
}

namespace {

// coefficient sum of c q^{a + b n}
ShiftPoly sp(std::initializer_list<std::tuple<std::int64_t, std::int64_t, long>> terms) {
    ShiftPoly p;
    for (const auto& [a, b, c] : terms) p.add_term(a, b, c);
    return p;
}

} // namespace

CoefficientRelation width4_recurrence(const Profile& delta, FormVariant v) {
    if (delta.width() != 2) throw Error("width-four recurrences are indexed by a width-two profile");
    CoefficientRelation r;
    r.entries.push_back({std::nullopt, 2, sp({{0, 0, 1}, {8, 4, -1}})});
    if (delta == Profile({1, 1})) {
        r.entries.push_back({std::nullopt, 1, sp({{6, 4, 1}, {8, 4, -1}})});
        r.entries.push_back({std::nullopt, 0, sp({{6, 4, 1}})});
    } else if (delta == Profile({1, -1})) {
        r.entries.push_back({std::nullopt, 1, sp({{5, 4, 1}, {7, 4, -1}})});
        r.entries.push_back({std::nullopt, 0, sp({{4, 4, 1}})});
    } else if (delta == Profile({-1, 1})) {
        const long s = v == FormVariant::as_printed ? 1 : -1;
        r.entries.push_back({std::nullopt, 1, sp({{5, 4, s}, {7, 4, -s}})});
        r.entries.push_back({std::nullopt, 0, sp({{4, 4, -s}})});
    } else {
        throw Error("no width-four recurrence for " + to_string(delta));
    }
    return r;
}

CoefficientRelation width6_recurrence(WidthSixCase c) {
    CoefficientRelation r;
    switch (c) {
    case WidthSixCase::C:
        r.entries.push_back({std::nullopt, 3, sp({{0, 0, 1}, {9, 3, -1}})});
        r.entries.push_back({std::nullopt, 2, sp({{15, 6, -1}})});
        r.entries.push_back({std::nullopt, 1, sp({{6, 3, 1}, {10, 6, 1}, {14, 6, 1}})});
        r.entries.push_back({std::nullopt, 0, sp({{9, 6, -1}})});
        return r;
    case WidthSixCase::G:
        r.entries.push_back({std::nullopt, 3, sp({{0, 0, 1}, {9, 3, -1}})});
        r.entries.push_back({std::nullopt, 2, sp({{13, 6, -1}})});
        r.entries.push_back({std::nullopt, 1, sp({{8, 3, 1}, {10, 6, 1}, {12, 6, 1}})});
        r.entries.push_back({std::nullopt, 0, sp({{9, 6, -1}})});
        return r;
    case WidthSixCase::A:
    case WidthSixCase::B: {
        const bool alpha = c == WidthSixCase::A;
        const std::int64_t e2 = alpha ? 7 : 6, e1 = alpha ? 9 : 7, e0 = alpha ? 12 : 9;
        ShiftPoly lead = sp({{0, 0, 1}, {9, 3, -1}}) * sp({{0, 0, 1}, {5, 3, 1}, {6, 3, -1}});
        ShiftPoly p2 = ShiftPoly::monomial(e2, 3) * sp({{0, 0, 1}, {3, 0, -1}, {11, 3, -1}, {16, 6, -1}, {17, 6, 1}});
        ShiftPoly p1 = ShiftPoly::monomial(e1, 3) *
                       sp({{0, 0, 1}, {5, 3, 1}, {7, 3, 1}, {8, 3, 1}, {9, 3, -1}, {12, 6, 1}, {14, 6, -1}});
        ShiftPoly p0 = ShiftPoly::monomial(e0, 6) * sp({{0, 0, 1}, {8, 3, 1}, {9, 3, -1}});
        r.entries.push_back({std::nullopt, 3, lead});
        r.entries.push_back({std::nullopt, 2, p2});
        r.entries.push_back({std::nullopt, 1, p1});
        r.entries.push_back({std::nullopt, 0, -p0});
        return r;
    }
    }
    throw Error("unknown width-six case");
}

ProductSpec scp_width4_product(const Profile& delta) {
    ProductSpec p;
    if (delta == Profile({1, 1})) p.num = {PochFactor::zq(4, 4, -1), PochFactor::zq(2, 4)};
    else if (delta == Profile({1, -1})) p.num = {PochFactor::zq(3, 4, -1), PochFactor::zq(1, 4)};
    else if (delta == Profile({-1, 1})) p.num = {PochFactor::zq(1, 4, -1), PochFactor::zq(3, 4)};
    else throw Error("width-four products cover (1,1), (1,-1) and (-1,1)");
    p.den = {PochFactor::zq(1, 1)};
    return p;
}

} // namespace cylkit
