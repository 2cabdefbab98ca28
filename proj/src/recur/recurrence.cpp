#include "cylkit/recur.hpp"

#include <algorithm>
#include <sstream>

namespace cylkit {

ShiftPoly ShiftPoly::monomial(std::int64_t a, std::int64_t b, const BigInt& c) {
    ShiftPoly p;
    p.add_term(a, b, c);
    return p;
}

void ShiftPoly::add_term(std::int64_t a, std::int64_t b, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ShiftPoly& ShiftPoly::operator+=(const ShiftPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

ShiftPoly& ShiftPoly::operator-=(const ShiftPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

ShiftPoly operator*(const ShiftPoly& a, const ShiftPoly& b) {
    ShiftPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

ShiftPoly operator-(const ShiftPoly& a) {
    ShiftPoly out = a;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly ShiftPoly::at(long n) const {
    LaurentPoly p;
    for (const auto& [k, c] : terms_) p.add_term(k.first + k.second * n, c);
    return p;
}

ShiftPoly ShiftPoly::shift_n(long k) const {
    ShiftPoly out;
    for (const auto& [key, c] : terms_) out.add_term(key.first + key.second * k, key.second, c);
    return out;
}

namespace {

std::string exponent(std::int64_t a, std::int64_t b, int scale) {
    // (b n + a) / scale
    std::ostringstream os;
    if (scale == 1) {
        if (b != 0) os << (b == 1 ? "" : b == -1 ? "-" : std::to_string(b)) << "n";
        if (a != 0) os << (b != 0 && a > 0 ? "+" : "") << a;
        return os.str();
    }
    Rational rb = make_rational(static_cast<long>(b), scale), ra = make_rational(static_cast<long>(a), scale);
    if (b != 0) os << (rb == 1 ? "" : rb == -1 ? "-" : rb.get_str()) << "n";
    if (a != 0) os << (b != 0 && ra > 0 ? "+" : "") << ra.get_str();
    return os.str();
}

} // namespace

std::string ShiftPoly::to_string(int scale) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        BigInt mag = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (k.first == 0 && k.second == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << " ";
        std::string e = exponent(k.first, k.second, scale);
        if (e == "1") os << "q";
        else os << "q^" << (k.second == 0 && k.first > 0 ? e : "(" + e + ")");
    }
    return os.str();
}

int CoefficientRelation::max_offset() const {
    int m = entries.empty() ? 0 : entries.front().offset;
    for (const auto& e : entries) m = std::max(m, e.offset);
    return m;
}

int CoefficientRelation::min_offset() const {
    int m = entries.empty() ? 0 : entries.front().offset;
    for (const auto& e : entries) m = std::min(m, e.offset);
    return m;
}

std::string CoefficientRelation::to_string(const std::string& seq) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries) {
        std::string c = e.coeff.to_string(scale);
        bool single = e.coeff.terms().size() == 1;
        bool negative = single && c[0] == '-';
        if (negative) c = c.substr(1);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (c != "1") os << (single ? c : "(" + c + ")") << " ";
        os << seq;
        if (e.target) os << "_" << cylkit::to_string(*e.target);
        os << "(n";
        if (e.offset != 0) os << (e.offset > 0 ? "+" : "") << e.offset;
        os << ")";
    }
    if (first) os << "0";
    os << " = ";
    if (rhs.is_zero()) os << "0";
    else os << "[z^n](" << rhs.to_string(scale) << ")";
    return os.str();
}

namespace {

std::vector<Binomial> missing_from(const std::vector<Binomial>& big, std::vector<Binomial> small) {
    std::sort(small.begin(), small.end());
    std::vector<Binomial> out;
    std::size_t j = 0;
    for (const auto& x : big) {
        if (j < small.size() && small[j] == x) ++j;
        else out.push_back(x);
    }
    return out;
}

BiPoly product_of(const std::vector<Binomial>& bs) {
    BiPoly p = BiPoly::constant(1);
    for (const auto& b : bs) p = p * BiPoly::binomial(b);
    return p;
}

} // namespace

CoefficientRelation to_coefficient_relation(const Equation& eq, const Profile& self, int scale) {
    std::vector<Binomial> den;
    for (const auto& t : eq.terms) {
        std::vector<Binomial> d = t.coeff.den;
        std::sort(d.begin(), d.end());
        den = binomial_lcm(den, d);
    }
    const BiPoly D = product_of(den);

    std::map<std::pair<std::optional<Profile>, int>, ShiftPoly> acc;
    auto add_poly = [&](const std::optional<Profile>& target, const BiPoly& p, std::int64_t s, int sign) {
        for (const auto& [k, c] : p.terms()) {
            // c z^k q^e F(z q^s) contributes c q^(e + s(n-k)) f(n-k)
            acc[{target, -k.first}].add_term(k.second - s * k.first, s, sign * c);
        }
    };
    CoefficientRelation rel;
    rel.scale = scale;
    add_poly(std::nullopt, D, 0, 1);
    for (const auto& t : eq.terms) {
        BiPoly num = t.coeff.num * product_of(missing_from(den, t.coeff.den));
        if (!t.target) {
            rel.rhs += num;
            continue;
        }
        std::optional<Profile> target = *t.target == self ? std::nullopt : t.target;
        add_poly(target, num, t.shift, -1);
    }
    for (auto& [k, c] : acc)
        if (!c.is_zero()) rel.entries.push_back({k.first, k.second, c});
    std::sort(rel.entries.begin(), rel.entries.end(), [](const auto& x, const auto& y) {
        if (x.target.has_value() != y.target.has_value()) return !x.target.has_value();
        if (x.target != y.target) return x.target < y.target;
        return x.offset > y.offset;
    });
    return rel;
}

std::map<Profile, CoefficientRelation> to_coefficient_relations(const FunctionalSystem& sys) {
    std::map<Profile, CoefficientRelation> out;
    for (const auto& [p, eq] : sys.equations) out.emplace(p, to_coefficient_relation(eq, p, sys.scale));
    return out;
}

namespace {

// q^(grid exponents of p, times stretch) * s
ShiftedSeries times_grid(const ShiftedSeries& s, const LaurentPoly& p, std::int64_t stretch) {
    const Window& bw = s.body().window();
    if (p.is_zero()) return ShiftedSeries(s.offset(), TruncatedSeries(bw));
    std::int64_t m = p.min_exponent();
    TruncatedSeries ps(Window{bw.q_limit, 0, bw.q_scale});
    for (const auto& [e, c] : p.terms()) {
        std::int64_t g = (e - m) * stretch;
        if (g < bw.q_limit) ps.add_term(0, g, c);
    }
    return ShiftedSeries(s.offset() + m * stretch, s.body() * ps);
}

} // namespace

ClosedFormReport check_closed_form(const SequenceFormula& f, const CoefficientRelation& rel, long n_max) {
    ClosedFormReport r;
    for (const auto& e : rel.entries)
        if (e.target) throw Error("closed-form check needs a relation in a single sequence");

    ShiftedSeries h0 = f(0);
    const int body_scale = h0.body().q_scale();
    if (body_scale % rel.scale != 0) throw Error("closed form grid must refine the relation grid");
    const std::int64_t stretch = body_scale / rel.scale;
    {
        TruncatedSeries one(Window{h0.body().q_limit(), h0.body().z_order(), body_scale});
        one.add_term(0, 0, 1);
        ShiftedSeries d = h0 - ShiftedSeries(0, one);
        r.initial_ok = d.is_zero();
        if (!r.initial_ok) r.detail = "h(0) differs from 1";
    }

    std::map<long, ShiftedSeries> cache;
    auto value = [&](long m) -> const ShiftedSeries& {
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, f(m)).first;
        return it->second;
    };

    r.recurrence_ok = true;
    const int top = rel.max_offset();
    for (long n = 0; n + top <= n_max; ++n) {
        std::optional<ShiftedSeries> acc;
        try {
            for (const auto& e : rel.entries) {
                long m = n + e.offset;
                if (m < 0) continue;
                LaurentPoly c = e.coeff.at(n);
                if (c.is_zero()) continue;
                ShiftedSeries term = times_grid(value(m), c, stretch);
                if (acc) *acc += term;
                else acc = term;
            }
            LaurentPoly rhs = rel.rhs.z_coeff(static_cast<int>(n));
            if (!rhs.is_zero()) {
                const Window& bw = acc ? acc->body().window() : h0.body().window();
                TruncatedSeries one(Window{bw.q_limit, 0, bw.q_scale});
                one.add_term(0, 0, 1);
                ShiftedSeries term = times_grid(ShiftedSeries(0, one), rhs, stretch);
                if (acc) *acc -= term;
                else acc = -term;
            }
        } catch (const Error& ex) {
            r.recurrence_ok = false;
            r.failing_n = n;
            r.detail = std::string("insufficient precision: ") + ex.what();
            return r;
        }
        if (acc && !acc->is_zero()) {
            r.recurrence_ok = false;
            r.failing_n = n;
            std::ostringstream os;
            os << "relation fails at n = " << n << " (lowest nonzero exponent " << *acc->valuation() << "/" << body_scale << ")";
            r.detail = os.str();
            return r;
        }
        r.checked_up_to = n + top;
    }
    return r;
}

} // namespace cylkit
