#include "cylkit/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace cylkit {

bool CaseReport::ok() const {
    return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.report_only || c.equal; });
}

int CaseReport::asserted() const {
    return static_cast<int>(std::count_if(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.report_only; }));
}

int CaseReport::asserted_equal() const {
    return static_cast<int>(
        std::count_if(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.report_only && c.equal; }));
}

std::int64_t CaseReport::max_q() const {
    std::int64_t m = 0;
    for (const auto& c : comparisons) {
        Rational r = c.window.q_order();
        m = std::max<std::int64_t>(m, static_cast<std::int64_t>(mpz_class(r.get_num() / r.get_den()).get_si()));
    }
    return m;
}

Comparison compare(std::string label, std::string lhs_source, const TruncatedSeries& lhs, std::string rhs_source,
                   const TruncatedSeries& rhs, bool report_only) {
    Comparison c;
    c.label = std::move(label);
    c.lhs_source = std::move(lhs_source);
    c.rhs_source = std::move(rhs_source);
    c.report_only = report_only;
    c.window = intersect(lhs.window(), rhs.window());
    c.first_mismatch = first_mismatch(lhs, rhs);
    c.equal = !c.first_mismatch;
    if (!c.equal) {
        TruncatedSeries a = lhs.rescaled(c.window.q_scale).restricted(c.window);
        TruncatedSeries b = rhs.rescaled(c.window.q_scale).restricted(c.window);
        const std::size_t cap = 64;
        for (int z = 0; z <= c.window.z_order; ++z)
            for (std::int64_t q = 0; q < c.window.q_limit; ++q) {
                if (a.at(z, q) == b.at(z, q)) continue;
                ++c.difference_count;
                if (c.differences.size() < cap)
                    c.differences.push_back({z, make_rational(static_cast<long>(q), c.window.q_scale), a.at(z, q), b.at(z, q)});
            }
    }
    return c;
}

namespace {

Window W(std::int64_t N, int D = 0) { return Window::make(N, D); }

TruncatedSeries univariate_enumeration(Kind k, const Profile& p, const WeightVector& a, std::int64_t N) {
    return genfun_by_enumeration(k, p, a, W(N, static_cast<int>(N - 1))).z_marginal();
}

Comparison failed(std::string label, std::string lhs, std::string rhs, const Window& w, const std::string& why, bool report_only) {
    Comparison c;
    c.label = std::move(label);
    c.lhs_source = std::move(lhs);
    c.rhs_source = std::move(rhs);
    c.window = w;
    c.report_only = report_only;
    c.note = "evaluation failed: " + why;
    return c;
}

struct Context {
    std::string sub;
    VerifyOptions opt;
    CaseReport* report;

    std::int64_t N(std::int64_t dflt) const { return opt.N.value_or(dflt); }
    int D(int dflt) const { return opt.D.value_or(dflt); }
    bool want(const std::string& id) const { return sub.empty() || id == sub || id.rfind(sub + "-", 0) == 0 || id.rfind(sub + " ", 0) == 0; }

    // Runs one comparison, turning evaluation errors into a failed entry.
    void run(const std::string& id, const std::string& lhs, const std::string& rhs, const Window& w,
             const std::function<Comparison()>& f, bool report_only = false) {
        if (!want(id)) return;
        try {
            report->comparisons.push_back(f());
        } catch (const Error& e) {
            report->comparisons.push_back(failed(id, lhs, rhs, w, e.what(), report_only));
        }
    }
};

// A relation check presented as a comparison.
Comparison relation_check(std::string label, std::string source, const SequenceFormula& f, const CoefficientRelation& rel,
                          long n_max, std::int64_t precision, bool report_only) {
    ClosedFormReport r = check_closed_form(f, rel, n_max);
    Comparison c;
    c.label = std::move(label);
    c.lhs_source = std::move(source);
    c.rhs_source = "recurrence";
    c.window = Window::make(precision);
    c.report_only = report_only;
    c.equal = r.ok();
    std::ostringstream os;
    if (r.ok()) os << "checked n <= " << r.checked_up_to << "; ";
    os << rel.to_string("h");
    if (!r.ok()) os << "; " << r.detail;
    c.note = os.str();
    return c;
}

TruncatedSeries bivariate_from(const std::function<ShiftedSeries(long)>& h, const Window& w) {
    TruncatedSeries out(w);
    for (int n = 0; n <= w.z_order; ++n) {
        TruncatedSeries col = h(n).to_series(Window{w.q_limit, 0, 1});
        auto src = col.row(0);
        auto dst = out.mutable_row(n);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
    }
    return out;
}

void rogers_ramanujan(Context& cx) {
    const Window w = W(cx.N(60));
    cx.run("eps0", "sum", "product", w, [&] {
        return compare("eps0", "closed-form sum", sum_rr(0, w), "product",
                       expand_product(WMultiset({1, 4}, 5), w));
    });
    cx.run("eps1", "sum", "product", w, [&] {
        return compare("eps1", "closed-form sum", sum_rr(1, w), "product",
                       expand_product(WMultiset({2, 3}, 5), w));
    });
}

void width7(Context& cx) {
    const Window w = W(cx.N(40));
    cx.run("sum", "sum", "product", w, [&] {
        return compare("sum", "closed-form sum", sum_cw_width7(w), "product",
                       expand_product(WMultiset({2, 3, 3, 4, 4, 5}, 7), w));
    });
    cx.run("cp", "enumeration", "product", w, [&] {
        const std::int64_t n = std::min<std::int64_t>(w.q_limit, 14);
        return compare("cp", "enumeration CP(-1,-1,1,1,-1,1,1)", univariate_enumeration(Kind::CP, Profile({-1, -1, 1, 1, -1, 1, 1}), WeightVector::standard(7), n),
                       "product", expand_product(w3_standard(Profile({-1, -1, 1, 1, -1, 1, 1})), W(n)));
    });
}

void width4_sum(Context& cx) {
    const Window w = W(cx.N(40), cx.D(10));
    ProductSpec rhs;
    rhs.num = {PochFactor::zq(1, 4), PochFactor::zq(3, 4, -1)};
    cx.run("product", "sum", "product", w, [&] {
        return compare("product", "closed-form sum", sum_thm12(w), "product " + to_string(rhs), expand_product(rhs, w));
    });
    cx.run("split", "sum", "closed form", w, [&] {
        auto h = [&](long n) { return h_width4(Profile({1, -1}), n, w.q_limit); };
        return compare("split", "closed-form sum", sum_thm12(w), "sum_n h_(1,-1)(n) z^n", bivariate_from(h, w));
    });
    cx.run("solver", "solver", "product", w, [&] {
        auto sys = build_system(Kind::SCP, Profile({1, -1}), WeightVector(), {.normalized = true});
        return compare("solver", "normalized solver H_(1,-1)", solve_fixed_point(sys, w).at(sys.canonical(Profile({1, -1}))),
                       "product", expand_product(rhs, w));
    });
}

const WidthSixCase kSixCases[] = {WidthSixCase::C, WidthSixCase::B, WidthSixCase::A, WidthSixCase::G};

void width6_sums(Context& cx) {
    const Window w = W(cx.N(60));
    for (WidthSixCase c : kSixCases) {
        const std::string id(width_six_name(c));
        if (!cx.want(id)) continue;
        cx.report->comparisons.push_back([&] {
            try {
                return compare(id, "double sum", sum_thm13(c, w), "product " + to_string(product_thm13(c)),
                               expand_product(product_thm13(c), w));
            } catch (const Error& e) {
                return failed(id, "double sum", "product", w, e.what(), false);
            }
        }());
        if (c == WidthSixCase::A || c == WidthSixCase::B) {
            const std::string pid = id + "-as-displayed";
            try {
                cx.report->comparisons.push_back(compare(pid, "double sum (displayed kernel)", sum_thm13(c, w, FormVariant::as_printed),
                                                         "product", expand_product(product_thm13(c), w), true));
            } catch (const Error& e) {
                cx.report->comparisons.push_back(failed(pid, "double sum (displayed kernel)", "product", w, e.what(), true));
            }
        }
        // closed form coefficients against the normalized symmetric solver
        const Window sw = W(std::min<std::int64_t>(w.q_limit, 30), 8);
        try {
            auto sys = build_system(Kind::SCP, width_six_profile(c), WeightVector(), {.normalized = true});
            auto h = [&](long n) { return h_width6(c, n, sw.q_limit); };
            cx.report->comparisons.push_back(compare(id + "-solver", "closed form sum_n h(n) z^n", bivariate_from(h, sw),
                                                     "normalized solver H_" + to_string(width_six_profile(c)),
                                                     solve_fixed_point(sys, sw).at(sys.canonical(width_six_profile(c)))));
        } catch (const Error& e) {
            cx.report->comparisons.push_back(failed(id + "-solver", "closed form", "solver", sw, e.what(), false));
        }
    }
    if (cx.want("factor")) {
        Comparison c;
        c.label = "factor";
        c.lhs_source = "factored kernel polynomial";
        c.rhs_source = "expanded kernel polynomial";
        c.window = Window::make(1);
        long bad = 0;
        for (long n = 0; n <= 20; ++n)
            for (long m = 0; m <= 20; ++m)
                if (!(width6_sigma_factor(n, m, false) == width6_sigma_factor(n, m, true))) ++bad;
        c.equal = bad == 0;
        c.difference_count = bad;
        c.note = "Laurent polynomial identity for 0 <= n, m <= 20";
        cx.report->comparisons.push_back(std::move(c));
    }
}

void gollnitz(Context& cx) {
    const Window w = W(cx.N(80));
    for (int k = 1; k <= 4; ++k) {
        const std::string id = std::to_string(k);
        cx.run(id, "sum", "product", w, [&] {
            return compare(id, "closed-form sum", sum_gollnitz(k, w), "product " + to_string(product_gollnitz(k)),
                           expand_product(product_gollnitz(k), w));
        });
    }
}

struct SchmidtEntry {
    SchmidtClass cls;
    Parity parity;
    const char* name;
};

const SchmidtEntry kSchmidt[] = {
    {SchmidtClass::distinct, Parity::odd_indexed, "distinct, odd-indexed"},
    {SchmidtClass::distinct, Parity::even_indexed, "distinct, even-indexed"},
    {SchmidtClass::unrestricted, Parity::odd_indexed, "unrestricted, odd-indexed"},
    {SchmidtClass::unrestricted, Parity::even_indexed, "unrestricted, even-indexed"},
    {SchmidtClass::diamond, Parity::odd_indexed, "diamonds"},
};

void schmidt_marginals(Context& cx) {
    const std::int64_t N = cx.N(20);
    const std::int64_t Nd = std::min<std::int64_t>(N, 14);
    cx.run("1", "enumeration", "product", W(N), [&] {
        return compare("1", "enumeration (distinct, odd-indexed) at z=1",
                       schmidt_genfun(SchmidtClass::distinct, Parity::odd_indexed, W(N, static_cast<int>(N - 1))).z_marginal(),
                       "1/(q;q)_inf", poch_infinite_reciprocal(PochFactor::q(1, 1), W(N)));
    });
    cx.run("2", "enumeration", "product", W(N), [&] {
        TruncatedSeries r = poch_infinite_reciprocal(PochFactor::q(1, 1), W(N));
        return compare("2", "enumeration (unrestricted, odd-indexed) at z=1",
                       schmidt_genfun(SchmidtClass::unrestricted, Parity::odd_indexed, W(N, static_cast<int>(N - 1))).z_marginal(),
                       "1/(q;q)_inf^2", r * r);
    });
    cx.run("3", "enumeration", "product", W(Nd), [&] {
        TruncatedSeries r = poch_infinite_reciprocal(PochFactor::q(1, 1), W(Nd));
        return compare("3", "enumeration (diamonds) at z=1",
                       schmidt_genfun(SchmidtClass::diamond, Parity::odd_indexed, W(Nd, static_cast<int>(Nd - 1))).z_marginal(),
                       "(-q;q)_inf/(q;q)_inf^3", poch_infinite(PochFactor::q(1, 1, -1), W(Nd)) * r * r * r);
    });
}

void schmidt_refined(Context& cx) {
    const std::int64_t N = cx.N(20);
    const int D = cx.D(20);
    for (int k = 1; k <= 5; ++k) {
        const std::string id = std::to_string(k);
        const Window w = k == 5 ? W(std::min<std::int64_t>(N, 14), std::min(D, 14)) : W(N, D);
        const SchmidtEntry& e = kSchmidt[k - 1];
        cx.run(id, "enumeration", "closed form", w, [&] {
            return compare(id, std::string("enumeration (") + e.name + ")", schmidt_genfun(e.cls, e.parity, w), "closed form",
                           sum_schmidt(k, w));
        });
    }
    // the first four classes as cylindric objects with weights (0,1)
    const Window sw = W(std::min<std::int64_t>(N, 16), std::min(D, 12));
    const struct {
        Kind kind;
        Profile p;
        int k;
    } cyl[] = {{Kind::DCP, Profile({1, -1}), 1}, {Kind::DCP, Profile({-1, 1}), 2}, {Kind::CP, Profile({1, -1}), 3}, {Kind::CP, Profile({-1, 1}), 4}};
    for (const auto& c : cyl) {
        const std::string id = std::to_string(c.k) + "-solver";
        cx.run(id, "solver", "closed form", sw, [&] {
            auto sys = build_system(c.kind, c.p, WeightVector::of({0, 1}));
            return compare(id, std::string("solver ") + std::string(kind_name(c.kind)) + to_string(c.p) + " weights (0,1)",
                           solve_fixed_point(sys, sw).at(c.p), "closed form", sum_schmidt(c.k, sw));
        });
    }
}

void width4_products(Context& cx) {
    const Window w = W(cx.N(12), cx.D(12));
    for (const Profile& d : {Profile({1, 1}), Profile({1, -1}), Profile({-1, 1})}) {
        const std::string id = to_string(d);
        if (!cx.want(id)) continue;
        const ProductSpec spec = scp_width4_product(d);
        const std::string pname = "product " + to_string(spec);
        cx.run(id, "enumeration", "product", w, [&] {
            return compare(id + " enumeration", "enumeration SCP" + to_string(Profile(d)), genfun_by_enumeration(Kind::SCP, d, WeightVector(), w),
                           pname, expand_product(spec, w));
        });
        cx.run(id, "solver", "product", w, [&] {
            auto sys = build_system(Kind::SCP, d, WeightVector());
            return compare(id + " solver", "solver SCP" + to_string(d), solve_fixed_point(sys, w).at(sys.canonical(d)), pname,
                           expand_product(spec, w));
        });
        const std::int64_t n = w.q_limit;
        cx.run(id, "product", "weighted product", W(n), [&] {
            return compare(id + " at z=1", pname + " at z=1", expand_product(spec, W(n, static_cast<int>(n - 1))).z_marginal(),
                           "weighted double shifted product", expand_product(dspp_product(d, WeightVector::symmetric(3)), W(n)));
        });
    }
}

void signed_distinct(Context& cx) {
    const Window w = W(cx.N(40));
    ProductSpec rhs;
    rhs.num = {PochFactor::q(1, 2), PochFactor::q(2, 2, -1)};
    cx.run("product", "sum", "product", w, [&] {
        return compare("product", "closed-form sum", sum_signed_distinct(w), "product " + to_string(rhs), expand_product(rhs, w));
    });
    cx.run("enumeration", "sum", "enumeration", w, [&] {
        return compare("enumeration", "closed-form sum", sum_signed_distinct(w), "signed enumeration of distinct partitions",
                       weighted_distinct_signed_genfun(w));
    });
    cx.run("specialization", "specialized bivariate sum", "sum", w, [&] {
        const std::int64_t M = 2 * w.q_limit;
        TruncatedSeries s = sum_thm12(W(M, static_cast<int>(M - 1))).collapse_z(1).substitute_q_power(make_rational(1, 2));
        return compare("specialization", "bivariate sum at z=q, q^2 -> q", s, "closed-form sum", sum_signed_distinct(w));
    });
}

TruncatedSeries count_table(const std::function<long(int, int)>& f, int n_max, int first_n = 0) {
    TruncatedSeries s(W(n_max + 1, n_max + 1));
    for (int n = first_n; n <= n_max; ++n)
        for (int m = 0; m <= n + 1; ++m) s.add_term(m, n, BigInt(f(n, m)));
    return s;
}

void hook_counts(Context& cx) {
    const int n_max = static_cast<int>(cx.N(25));
    const Window w = W(n_max + 1, n_max + 1);
    cx.run("hook", "count", "count", w, [&] {
        return compare("hook", "partitions of n by largest hook m", count_table(count_by_hook, n_max),
                       "distinct partitions by alternating sum n, largest part m", count_table(count_distinct_by_altsum, n_max));
    });
    cx.run("shifted", "count", "count", w, [&] {
        return compare("shifted", "distinct partitions by first plus even-indexed sum n, largest part m",
                       count_table(count_distinct_by_first_plus_even, n_max, 1),
                       "partitions of n+1 into parts > 1 by largest hook m+1",
                       count_table([](int n, int m) { return count_by_hook_parts_above_one(n + 1, m + 1); }, n_max, 1));
    });
}

struct ChainEntry {
    Profile p;
    WeightVector a;
};

void weighted_chain(Context& cx, const std::vector<ChainEntry>& chain, const WMultiset& target) {
    const std::int64_t N = cx.N(16);
    const Window w = W(N);
    const TruncatedSeries rhs = expand_product(target, w);
    std::map<int, int> seen;
    for (const auto& e : chain) {
        std::string id = "width" + std::to_string(e.p.width());
        if (std::count_if(chain.begin(), chain.end(), [&](const ChainEntry& x) { return x.p.width() == e.p.width(); }) > 1)
            id += static_cast<char>('a' + seen[e.p.width()]++);
        const bool report_only = e.p.width() > 3;
        const std::string name = "CP" + to_string(e.p) + " weights " + to_string(e.a);
        cx.run(id, "enumeration", "product", w, [&] {
            Comparison c = compare(id, "enumeration " + name, univariate_enumeration(Kind::CP, e.p, e.a, N),
                                   "product " + to_string(target), rhs, report_only);
            return c;
        }, report_only);
        cx.run(id + "-w3", "enumeration", "weighted product", w, [&] {
            const WMultiset w3 = w3_weighted(e.p, e.a);
            return compare(id + "-w3", "enumeration " + name, univariate_enumeration(Kind::CP, e.p, e.a, N),
                           "weighted cylindric product " + to_string(w3), expand_product(w3, w));
        });
        cx.run(id + "-as-printed", "enumeration", "weighted product", w, [&] {
            const TruncatedSeries en = univariate_enumeration(Kind::CP, e.p, e.a, N);
            const WMultiset printed = w3_weighted(e.p, e.a, W3Orientation::as_printed);
            Comparison c = compare(id + "-as-printed", "enumeration " + name, en,
                                   "weighted cylindric product, as-printed orientation " + to_string(printed), expand_product(printed, w), true);
            const bool mirrored = agree(en, expand_product(w3_weighted(e.p, e.a), w));
            c.note = std::string("enumeration matches: ") + (mirrored && c.equal ? "both orientations" : mirrored ? "mirrored orientation" : c.equal ? "as-printed orientation" : "neither orientation");
            return c;
        }, true);
        cx.run(id + "-solver", "solver", "enumeration", w, [&] {
            auto sys = build_system(Kind::CP, e.p, e.a);
            TruncatedSeries s = solve_fixed_point(sys, W(N, static_cast<int>(N - 1))).at(e.p).z_marginal();
            return compare(id + "-solver", "solver " + name, s, "enumeration " + name, univariate_enumeration(Kind::CP, e.p, e.a, N));
        });
    }
}

WMultiset eq210_target() { return WMultiset({1, 1, 1}, 1); }

TruncatedSeries eq210_product(const Window& w) { return expand_product(std::vector<WMultiset>{eq210_target(), WMultiset({1}, 2)}, w); }

void eq210_cp(Context& cx) {
    const std::int64_t N = cx.N(12);
    const Window w = W(N);
    const Profile p({-1, 1, 1, 1});
    const WeightVector a = WeightVector::of({1, 1, 0, 0});
    cx.run("cp", "enumeration", "product", w, [&] {
        return compare("cp", "enumeration CP" + to_string(p) + " weights " + to_string(a), univariate_enumeration(Kind::CP, p, a, N),
                       "1/((q;q)_inf^3 (q;q^2)_inf)", eq210_product(w), true);
    }, true);
}

void eq210_dspp(Context& cx) {
    const std::int64_t N = cx.N(12);
    const Window w = W(N);
    const Profile p({1, -1});
    const WeightVector a = WeightVector::of({0, 1, 0});
    cx.run("dspp", "enumeration", "product", w, [&] {
        TruncatedSeries e = univariate_enumeration(Kind::DSPP, p, a, N);
        Comparison c = compare("dspp", "enumeration DSPP" + to_string(p) + " weights " + to_string(a), e,
                               "1/((q;q)_inf^3 (q;q^2)_inf)", eq210_product(w));
        c.note = "coefficient of q^3: " + (N > 3 ? e.at(0, 3).get_str() : std::string("outside window"));
        return c;
    });
    cx.run("dspp-product", "product", "product", w, [&] {
        return compare("dspp-product", "weighted double shifted product", expand_product(dspp_product(p, a), w),
                       "1/((q;q)_inf^3 (q;q^2)_inf)", eq210_product(w));
    });
}

void width4_recurrences(Context& cx) {
    const long n_max = cx.N(40);
    const std::int64_t R = 24;
    for (const Profile& d : {Profile({1, 1}), Profile({1, -1}), Profile({-1, 1})}) {
        const std::string id = to_string(d);
        auto f = [d, R](long n) { return h_width4(d, n, (n + 2) * (n + 2) + R); };
        cx.run(id, "closed form", "recurrence", Window::make(R), [&] {
            return relation_check(id, "closed form h_" + id, f, width4_recurrence(d), n_max, R, false);
        });
        if (d == Profile({-1, 1}))
            cx.run(id + "-as-displayed", "closed form", "recurrence", Window::make(R), [&] {
                return relation_check(id + "-as-displayed", "closed form h_" + id, f, width4_recurrence(d, FormVariant::as_printed), n_max, R, true);
            }, true);
        // the recurrence derived from the system by elimination; (1,1) only feeds into the coupled pair
        if (d == Profile({1, 1})) continue;
        cx.run(id + "-derived", "closed form", "derived recurrence", Window::make(R), [&] {
            auto sys = build_system(Kind::SCP, d, WeightVector(), {.normalized = true});
            Elimination el = eliminate(sys, d);
            if (!el.ok) throw Error(el.failure);
            return relation_check(id + "-derived", "closed form h_" + id, f, to_coefficient_relation(el.equation, sys.canonical(d), sys.scale),
                                  n_max, R, false);
        });
    }
}

void width6_recurrences(Context& cx) {
    const long n_max = cx.N(30);
    const std::int64_t R = 20;
    for (WidthSixCase c : kSixCases) {
        const std::string id(width_six_name(c));
        for (FormVariant v : {FormVariant::corrected, FormVariant::as_printed}) {
            if (v == FormVariant::as_printed && (c == WidthSixCase::C || c == WidthSixCase::G)) continue;
            const bool shown = v == FormVariant::as_printed;
            const std::string label = shown ? id + "-as-displayed" : id;
            auto f = [c, v, R](long n) { return h_width6(c, n, h_width6_floor(c, n + 3, v) + R, v); };
            cx.run(label, "closed form", "recurrence", Window::make(R), [&] {
                return relation_check(label, std::string(shown ? "displayed closed form h_" : "closed form h_") + id, f,
                                      width6_recurrence(c), n_max, R, shown);
            }, shown);
        }
    }
}

void solver_width3(Context& cx) {
    const Window w = W(cx.N(12), cx.D(12));
    for (Kind k : {Kind::CP, Kind::DSPP})
        for (const Profile& p : all_profiles(3)) {
            const WeightVector a = WeightVector::standard(k == Kind::CP ? 3 : 4);
            const std::string id = std::string(kind_name(k)) + to_string(p);
            cx.run(id, "solver", "enumeration", w, [&] {
                auto sys = build_system(k, p, a);
                return compare(id, "solver " + id, solve_fixed_point(sys, w).at(sys.canonical(p)), "enumeration " + id,
                               genfun_by_enumeration(k, p, a, w));
            });
        }
    const Window dw = W(cx.N(15), cx.D(15));
    cx.run("DCP(1,-1)", "solver", "closed form", dw, [&] {
        auto sys = build_system(Kind::DCP, Profile({1, -1}), WeightVector::of({0, 1}));
        return compare("DCP(1,-1)", "solver DCP(1,-1) weights (0,1)", solve_fixed_point(sys, dw).at(Profile({1, -1})),
                       "sum z^{2n} q^{n(n+1)} / ((zq;q)_n (zq;q)_{n+1})", sum_schmidt(1, dw));
    });
}

void standard_products(Context& cx) {
    const std::int64_t N = cx.N(16);
    for (int h = 1; h <= 4; ++h)
        for (const Profile& p : all_profiles(h)) {
            const std::string id = "CP" + to_string(p);
            cx.run(id, "enumeration", "product", W(N), [&] {
                return compare(id, "enumeration " + id, univariate_enumeration(Kind::CP, p, WeightVector::standard(h), N),
                               "product " + to_string(w3_standard(p)), expand_product(w3_standard(p), W(N)));
            });
        }
}

void dspp_products(Context& cx) {
    const std::int64_t N = cx.N(14);
    for (int h = 1; h <= 3; ++h)
        for (const Profile& p : all_profiles(h)) {
            const std::string id = "DSPP" + to_string(p);
            const WeightVector a = WeightVector::standard(h + 1);
            cx.run(id, "enumeration", "product", W(N), [&] {
                return compare(id, "enumeration " + id, univariate_enumeration(Kind::DSPP, p, a, N), "product " + to_string(dspp_product(p, a)),
                               expand_product(dspp_product(p, a), W(N)));
            });
        }
}

struct Registered {
    CaseInfo info;
    std::vector<std::string> subs;
    std::function<void(Context&)> run;
};

const std::vector<Registered>& table() {
    static const std::vector<Registered> t = [] {
        std::vector<Registered> v;
        v.push_back({{"eq1.1", {"rogers-ramanujan"}, "Rogers-Ramanujan sums against their products"}, {"eps0", "eps1"}, rogers_ramanujan});
        v.push_back({{"eq1.2", {"width7"}, "width-seven double sum against its product"}, {"sum", "cp"}, width7});
        v.push_back({{"eq2.1", {"cp-products"}, "cylindric partitions of width <= 4 against their products"}, {}, standard_products});
        v.push_back({{"prop2.6", {"dspp-products"}, "double shifted plane partitions of width <= 3 against their products"}, {}, dspp_products});
        v.push_back({{"eq2.8", {"chain-145"}, "weighted cylindric chain with product 1/(q,q^4,q^5;q^5)_inf"},
                     {"width3", "width4", "width5a", "width5b"},
                     [](Context& cx) {
                         weighted_chain(cx,
                                        {{Profile({-1, -1, 1}), WeightVector::of({1, 3, 1})},
                                         {Profile({-1, -1, 1, 1}), WeightVector::of({1, 3, 1, 5})},
                                         {Profile({-1, 1, -1, 1, 1}), WeightVector::of({1, 4, 4, 1, 5})},
                                         {Profile({-1, 1, -1, 1, -1}), WeightVector::of({5, 4, 1, 1, 4})}},
                                        WMultiset({1, 4, 5}, 5));
                     }});
        v.push_back({{"eq2.9", {"chain-235"}, "weighted cylindric chain with product 1/(q^2,q^3,q^5;q^5)_inf"},
                     {"width3", "width4", "width5a", "width5b"},
                     [](Context& cx) {
                         weighted_chain(cx,
                                        {{Profile({-1, 1, 1}), WeightVector::of({2, 2, 1})},
                                         {Profile({-1, 1, -1, 1}), WeightVector::of({2, 2, 3, 3})},
                                         {Profile({-1, 1, -1, 1, 1}), WeightVector::of({2, 3, 3, 2, 5})},
                                         {Profile({-1, 1, -1, 1, -1}), WeightVector::of({5, 3, 2, 2, 3})}},
                                        WMultiset({2, 3, 5}, 5));
                     }});
        v.push_back({{"eq2.10-cp", {"cp-zero-weights"}, "cylindric side of the zero-weight example (report only)"}, {"cp"}, eq210_cp});
        v.push_back({{"eq2.10-dspp", {"dspp-zero-weights"}, "double shifted side of the zero-weight example"}, {"dspp", "dspp-product"}, eq210_dspp});
        v.push_back({{"thm1.2", {"scp-width4-sum"}, "width-four symmetric sum against (zq,-zq^3;q^4)_inf"}, {"product", "split", "solver"}, width4_sum});
        v.push_back({{"thm1.3", {"scp-width6-sums"}, "width-six symmetric double sums against their products"}, {"C", "B", "A", "G", "factor"}, width6_sums});
        v.push_back({{"thm1.4", {"gollnitz"}, "Göllnitz-type sums against their products"}, {"1", "2", "3", "4"}, gollnitz});
        v.push_back({{"thm1.5", {"schmidt-marginals"}, "Schmidt-type generating functions at z = 1"}, {"1", "2", "3"}, schmidt_marginals});
        v.push_back({{"thm1.6", {"schmidt-refined"}, "refined Schmidt-type generating functions"}, {"1", "2", "3", "4", "5"}, schmidt_refined});
        v.push_back({{"cor1.7", {"hook-counts"}, "largest hook counts against alternating-sum counts"}, {"hook", "shifted"}, hook_counts});
        v.push_back({{"lemma4.1", {"scp-width4-products"}, "width-four symmetric products against enumeration and solver"},
                     {"(1,1)", "(1,-1)", "(-1,1)"}, width4_products});
        v.push_back({{"cor4.2", {"signed-distinct"}, "signed distinct-part sum, product and enumeration"},
                     {"product", "enumeration", "specialization"}, signed_distinct});
        v.push_back({{"rec4", {"width4-recurrences"}, "width-four closed forms against their recurrences"}, {}, width4_recurrences});
        v.push_back({{"rec6", {"width6-recurrences"}, "width-six closed forms against their recurrences"}, {}, width6_recurrences});
        v.push_back({{"solver3", {"solver-width3", "eq5.1"}, "fixed-point solver against enumeration"}, {}, solver_width3});
        return v;
    }();
    return t;
}

// Göllnitz-type identities are also addressed individually.
const std::vector<std::pair<std::string, std::string>>& extra_aliases() {
    static const std::vector<std::pair<std::string, std::string>> a = {
        {"eq1.4", "thm1.4/1"}, {"eq1.5", "thm1.4/2"}, {"eq1.6", "thm1.4/3"}, {"eq1.7", "thm1.4/4"}, {"eq4.23", "cor4.2"}};
    return a;
}

const Registered* find(const std::string& name) {
    for (const auto& r : table()) {
        if (r.info.label == name) return &r;
        for (const auto& a : r.info.aliases)
            if (a == name) return &r;
    }
    return nullptr;
}

} // namespace

const std::vector<CaseInfo>& registered_cases() {
    static const std::vector<CaseInfo> v = [] {
        std::vector<CaseInfo> out;
        for (const auto& r : table()) out.push_back(r.info);
        return out;
    }();
    return v;
}

std::optional<std::string> resolve_case(const std::string& label0) {
    std::string label = label0;
    for (const auto& [a, target] : extra_aliases())
        if (a == label) label = target;
    std::string head = label, sub;
    if (auto slash = label.find('/'); slash != std::string::npos) {
        head = label.substr(0, slash);
        sub = label.substr(slash + 1);
    }
    const Registered* r = find(head);
    if (!r) return std::nullopt;
    if (sub.empty()) return r->info.label;
    if (!r->subs.empty() && std::find(r->subs.begin(), r->subs.end(), sub) == r->subs.end()) return std::nullopt;
    return r->info.label + "/" + sub;
}

CaseReport verify_case(const std::string& label, const VerifyOptions& opt) {
    auto resolved = resolve_case(label);
    if (!resolved) throw Error("unknown case '" + label + "'");
    std::string head = *resolved, sub;
    if (auto slash = head.find('/'); slash != std::string::npos) {
        sub = head.substr(slash + 1);
        head = head.substr(0, slash);
    }
    const Registered* r = find(head);
    CaseReport rep;
    rep.label = *resolved;
    rep.title = r->info.title;
    Context cx{sub, opt, &rep};
    r->run(cx);
    if (rep.comparisons.empty()) throw Error("case '" + label + "' selects no comparisons");
    return rep;
}

std::string summary_line(const CaseReport& r) {
    std::ostringstream os;
    const int n = r.asserted(), eq = r.asserted_equal();
    const long reports = static_cast<long>(r.comparisons.size()) - n;
    long unequal = 0;
    for (const auto& c : r.comparisons)
        if (c.report_only && !c.equal) ++unequal;
    if (n > 0) {
        os << eq << "/" << n << " identities equal through q^" << r.max_q();
        if (reports > 0) os << "; " << reports << " report-only comparison" << (reports == 1 ? "" : "s") << ", " << unequal << " unequal";
    } else {
        os << "report only: " << reports << " comparison" << (reports == 1 ? "" : "s") << ", " << unequal << " unequal";
    }
    return os.str();
}

std::string to_text(const CaseReport& r) {
    std::ostringstream os;
    os << "case " << r.label << ": " << r.title << "\n";
    for (const auto& c : r.comparisons) {
        os << "  [" << (c.equal ? "equal" : c.report_only ? "differs" : "MISMATCH") << "] " << c.label << ": " << c.lhs_source
           << " vs " << c.rhs_source << " (N=" << c.window.q_order().get_str() << ", D=" << c.window.z_order << ")"
           << (c.report_only ? " [report only]" : "") << "\n";
        if (!c.note.empty()) os << "    " << c.note << "\n";
        if (c.first_mismatch) {
            const auto& m = *c.first_mismatch;
            os << "    first mismatch at z^" << m.z << " q^" << m.q.get_str() << ": " << m.left.get_str() << " vs " << m.right.get_str() << "\n";
        }
        if (c.difference_count > 0 && !c.differences.empty()) {
            os << "    " << c.difference_count << " differing coefficient" << (c.difference_count == 1 ? "" : "s") << "\n";
            for (const auto& d : c.differences)
                os << "      z^" << d.z << " q^" << d.q.get_str() << ": " << d.left.get_str() << " - " << d.right.get_str() << " = "
                   << BigInt(d.left - d.right).get_str() << "\n";
        }
    }
    os << summary_line(r) << "\n";
    return os.str();
}

} // namespace cylkit
