#include <doctest.h>

#include "cylkit/identities.hpp"

#include <functional>

using namespace cylkit;

namespace {

// Partitions of 0..n with parts from the allowed set, by direct counting.
std::vector<long> restricted_counts(int n, const std::function<bool(int)>& allowed) {
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        if (!allowed(part)) continue;
        for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    }
    return p;
}

// Partitions with consecutive parts differing by at least `gap` and smallest part >= lo.
long gap_partitions(int n, int gap, int lo) {
    std::function<long(int, int)> go = [&](int rest, int min_part) -> long {
        if (rest == 0) return 1;
        long c = 0;
        for (int part = min_part; part <= rest; ++part) c += go(rest - part, part + gap);
        return c;
    };
    return go(n, lo);
}

std::vector<long> row_of(const TruncatedSeries& s) {
    std::vector<long> v;
    for (std::int64_t q = 0; q < s.q_limit(); ++q) v.push_back(s.at(0, q).get_si());
    return v;
}

} // namespace

TEST_CASE("Rogers-Ramanujan sums count gap-two partitions") {
    const int N = 30;
    TruncatedSeries s0 = sum_rr(0, Window::make(N));
    TruncatedSeries s1 = sum_rr(1, Window::make(N));
    CHECK(s0.at(0, 0) == 1);
    for (int n = 0; n < N; ++n) {
        CHECK(s0.at(0, n) == gap_partitions(n, 2, 1));
        CHECK(s1.at(0, n) == gap_partitions(n, 2, 2));
    }
    auto mod5 = restricted_counts(N - 1, [](int k) { return k % 5 == 1 || k % 5 == 4; });
    CHECK(row_of(s0) == mod5);
}

TEST_CASE("width-seven double sum") {
    CHECK(sum_cw_width7(Window::make(1)).at(0, 0) == 1);
    const int N = 40;
    // 1/(q^2,q^3,q^3,q^4,q^4,q^5;q^7): residues 3 and 4 counted twice
    std::vector<long> twice(static_cast<std::size_t>(N), 0);
    twice[0] = 1;
    for (int part = 1; part < N; ++part) {
        int r = part % 7, mult = r == 2 || r == 5 ? 1 : r == 3 || r == 4 ? 2 : 0;
        for (int c = 0; c < mult; ++c)
            for (int k = part; k < N; ++k) twice[static_cast<std::size_t>(k)] += twice[static_cast<std::size_t>(k - part)];
    }
    CHECK(row_of(sum_cw_width7(Window::make(N))) == twice);
}

TEST_CASE("bivariate width-four sum") {
    Window w = Window::make(40, 10);
    TruncatedSeries s = sum_thm12(w);
    // only n = 0 reaches the z^0 column
    CHECK(s.z_column(0) == TruncatedSeries::one(Window::make(40)));
    // z^1: -q/(1+q^2)
    CHECK(s.at(1, 1) == -1);
    CHECK(s.at(1, 3) == 1);
    CHECK(s.at(1, 5) == -1);
    // (zq;q^4)(-zq^3;q^4) directly: z^1 coefficient is -sum q^{4k+1} + sum q^{4k+3}
    for (int k = 0; 4 * k + 3 < 40; ++k) {
        CHECK(s.at(1, 4 * k + 1) == -1);
        CHECK(s.at(1, 4 * k + 3) == 1);
    }
}

TEST_CASE("closed forms of width four") {
    for (const Profile& d : {Profile({1, 1}), Profile({1, -1}), Profile({-1, 1})}) {
        CHECK(h_width4(d, 0, 10).to_series(Window::make(10)) == TruncatedSeries::one(Window::make(10)));
        CHECK(h_width4(d, -1, 10).is_zero());
        for (FormVariant v : {FormVariant::corrected}) {
            auto f = [d](long n) { return h_width4(d, n, (n + 2) * (n + 2) + 20); };
            CHECK(check_closed_form(f, width4_recurrence(d, v), 25).ok());
        }
    }
    // h_(1,-1)(1) = -q / (1 - q^4) ... times (1 - q^2): -q (1 - q^2)/(1 - q^4) = -q/(1 + q^2)
    TruncatedSeries h1 = h_width4(Profile({1, -1}), 1, 12).to_series(Window::make(12));
    CHECK(h1.at(0, 1) == -1);
    CHECK(h1.at(0, 3) == 1);
    CHECK(h1.at(0, 5) == -1);
    auto f = [](long n) { return h_width4(Profile({-1, 1}), n, (n + 2) * (n + 2) + 20); };
    ClosedFormReport shown = check_closed_form(f, width4_recurrence(Profile({-1, 1}), FormVariant::as_printed), 25);
    CHECK_FALSE(shown.ok());
    CHECK(shown.failing_n == 0);
    CHECK_THROWS_AS(h_width4(Profile({-1, -1}), 1, 5), Error);
}

TEST_CASE("closed forms of width six") {
    for (WidthSixCase c : {WidthSixCase::A, WidthSixCase::B, WidthSixCase::C, WidthSixCase::G}) {
        CHECK(h_width6(c, 0, 20).to_series(Window::make(20)) == TruncatedSeries::one(Window::make(20)));
        auto f = [c](long n) { return h_width6(c, n, h_width6_floor(c, n + 3) + 16); };
        CHECK(check_closed_form(f, width6_recurrence(c), 18).ok());
    }
    // the displayed alpha kernel leaves q^{-1} at n = 0
    ShiftedSeries a0 = h_width6(WidthSixCase::A, 0, 10, FormVariant::as_printed);
    CHECK(a0.valuation() == -1);
    CHECK_THROWS_AS(sum_thm13(WidthSixCase::A, Window::make(10), FormVariant::as_printed), Error);
    CHECK_THROWS_AS(sum_thm13(WidthSixCase::B, Window::make(20), FormVariant::as_printed), Error);
    for (long n = 0; n <= 20; ++n)
        for (long m = 0; m <= 20; ++m) CHECK(width6_sigma_factor(n, m, false) == width6_sigma_factor(n, m, true));
    // the n = m = 0 sigma summand is -q^{-1} (1 - 1 - q) = 1
    CHECK(h_width6(WidthSixCase::G, 0, 5).valuation() == 0);
}

TEST_CASE("width-six double sums against direct product counts") {
    const int N = 40;
    // (q^4,q^8;q^12)/(q^6;q^12) as a signed product expanded here by hand
    std::vector<long> expect(static_cast<std::size_t>(N), 0);
    expect[0] = 1;
    auto mul = [&](int part, int sign) {
        // times (1 - q^part) when sign = 1, divided by (1 - q^part) when sign = -1
        if (sign > 0)
            for (int k = N - 1; k >= part; --k) expect[static_cast<std::size_t>(k)] -= expect[static_cast<std::size_t>(k - part)];
        else
            for (int k = part; k < N; ++k) expect[static_cast<std::size_t>(k)] += expect[static_cast<std::size_t>(k - part)];
    };
    for (int k = 0; k < N; ++k) {
        int r = k % 12;
        if (k == 0) continue;
        if (r == 4 || r == 8) mul(k, 1);
        if (r == 6) mul(k, -1);
    }
    CHECK(row_of(sum_thm13(WidthSixCase::C, Window::make(N))) == expect);
}

TEST_CASE("Göllnitz-type sums count congruence partitions") {
    const int N = 60;
    struct {
        int c;
        std::function<bool(int)> allowed;
    } cases[] = {
        {1, [](int k) { int r = k % 8; return r == 3 || r == 4 || r == 5; }},
        {2, [](int k) { return k % 4 == 3 || k % 8 == 2; }},
        {3, [](int k) { int r = k % 8; return r == 1 || r == 4 || r == 7; }},
        {4, [](int k) { return k % 4 == 1 || k % 8 == 6; }},
    };
    for (const auto& c : cases) {
        CAPTURE(c.c);
        CHECK(row_of(sum_gollnitz(c.c, Window::make(N))) == restricted_counts(N - 1, c.allowed));
    }
    CHECK_THROWS_AS(sum_gollnitz(5, Window::make(4)), Error);
}

TEST_CASE("Schmidt-type closed forms") {
    Window w = Window::make(16, 10);
    // case 3 at z = 1 column sums: 1/(q;q)^2 when the z-window covers
    Window wide = Window::make(16, 15);
    auto p = restricted_counts(15, [](int) { return true; });
    TruncatedSeries m3 = sum_schmidt(3, wide).z_marginal();
    for (int n = 0; n < 16; ++n) {
        long conv = 0;
        for (int k = 0; k <= n; ++k) conv += p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(n - k)];
        CHECK(m3.at(0, n) == conv);
    }
    // case 4 = case 3 / (1 - z)
    TruncatedSeries s3 = sum_schmidt(3, w), s4 = sum_schmidt(4, w);
    for (int z = 0; z <= 10; ++z)
        for (int q = 0; q < 16; ++q) {
            BigInt acc = 0;
            for (int j = 0; j <= z; ++j) acc += s3.at(j, q);
            CHECK(s4.at(z, q) == acc);
        }
    // every class has exactly one object of weight 0
    for (int c = 1; c <= 5; ++c) CHECK(sum_schmidt(c, w).at(0, 0) == 1);
    CHECK_THROWS_AS(sum_schmidt(0, w), Error);
}

TEST_CASE("signed distinct-part sum") {
    TruncatedSeries s = sum_signed_distinct(Window::make(40));
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(0, 1) == -1);
    CHECK(s == weighted_distinct_signed_genfun(Window::make(40)));
}

TEST_CASE("comparison reports") {
    Window w = Window::make(10);
    TruncatedSeries a = sum_rr(0, w), b = a;
    b.mutable_at(0, 7) += 1;
    Comparison c = compare("perturbed", "sum", a, "sum + q^7", b);
    CHECK_FALSE(c.equal);
    REQUIRE(c.first_mismatch);
    CHECK(c.first_mismatch->q == 7);
    CHECK(c.first_mismatch->right - c.first_mismatch->left == 1);
    CHECK(c.difference_count == 1);
    CHECK(compare("same", "a", a, "a", a).equal);
}

TEST_CASE("case registry") {
    CHECK(resolve_case("thm1.4") == "thm1.4");
    CHECK(resolve_case("gollnitz") == "thm1.4");
    CHECK(resolve_case("eq1.4") == "thm1.4/1");
    CHECK(resolve_case("lemma4.1/(1,-1)") == "lemma4.1/(1,-1)");
    CHECK_FALSE(resolve_case("lemma4.1/(2,2)"));
    CHECK_FALSE(resolve_case("nonsense"));
    CHECK_THROWS_AS(verify_case("nonsense"), Error);
    for (const auto& info : registered_cases()) CHECK(resolve_case(info.label) == info.label);

    CaseReport g = verify_case("thm1.4", {.N = 40});
    CHECK(g.ok());
    CHECK(summary_line(g) == "4/4 identities equal through q^40");

    CaseReport one = verify_case("lemma4.1/(-1,1)", {.N = 8, .D = 8});
    CHECK(one.ok());
    CHECK(one.comparisons.size() == 3);

    // report-only cases never fail and carry per-coefficient detail
    CaseReport cp = verify_case("eq2.10-cp", {.N = 8});
    CHECK(cp.ok());
    REQUIRE(cp.comparisons.size() == 1);
    CHECK(cp.comparisons[0].report_only);
    CHECK_FALSE(cp.comparisons[0].equal);
    CHECK_FALSE(cp.comparisons[0].differences.empty());
    CHECK(to_text(cp).find("differing coefficient") != std::string::npos);
}
