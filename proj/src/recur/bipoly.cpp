#include "cylkit/recur.hpp"

#include <algorithm>
#include <sstream>

namespace cylkit {

BiPoly BiPoly::constant(const BigInt& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int z, std::int64_t q, const BigInt& c) {
    BiPoly p;
    p.add_term(z, q, c);
    return p;
}

BiPoly BiPoly::binomial(const Binomial& b) {
    BiPoly p = constant(1);
    p.add_term(b.zdeg, b.q, -b.c);
    return p;
}

void BiPoly::add_term(int z, std::int64_t q, const BigInt& c) {
    if (c == 0) return;
    if (z < 0) throw Error("negative z-degree in a polynomial prefactor");
    auto [it, fresh] = terms_.try_emplace({z, q}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt BiPoly::coeff(int z, std::int64_t q) const {
    auto it = terms_.find({z, q});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int BiPoly::max_z() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

std::int64_t BiPoly::max_q() const {
    std::int64_t m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.second > m) m = k.second;
        first = false;
    }
    return m;
}

std::int64_t BiPoly::min_q() const {
    std::int64_t m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.second < m) m = k.second;
        first = false;
    }
    return m;
}

LaurentPoly BiPoly::z_coeff(int k) const {
    LaurentPoly p;
    for (auto it = terms_.lower_bound({k, INT64_MIN}); it != terms_.end() && it->first.first == k; ++it)
        p.add_term(it->first.second, it->second);
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly out = a;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

BiPoly BiPoly::shifted(std::int64_t s) const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second + s * k.first, c);
    return out;
}

std::optional<BiPoly> BiPoly::divide_exact(const Binomial& b) const {
    if (is_zero()) return BiPoly();
    if (b.zdeg == 0 && b.q == 0) {
        if (b.c == 1) return std::nullopt;
        BiPoly out;  // 1 - (-1) = 2
        for (const auto& [k, c] : terms_) {
            if (c % 2 != 0) return std::nullopt;
            out.add_term(k.first, k.second, c / 2);
        }
        return out;
    }
    if (b.zdeg == 0 && b.q < 0) {
        // 1 - c q^e = -c q^e (1 - c q^-e) with c = +-1
        auto inner = shifted_q(-b.q).divide_exact({b.c, 0, -b.q});
        if (!inner) return std::nullopt;
        return -(*inner) * constant(b.c);
    }
    // Q = P + c z^i q^e Q, solved in increasing (z, q) order
    BiPoly quot;
    const int top_z = max_z() - b.zdeg;
    const std::int64_t top_q = max_q() - (b.zdeg == 0 ? b.q : 0);
    if (top_z < 0) return std::nullopt;
    for (int z = 0; z <= top_z; ++z) {
        LaurentPoly row = z_coeff(z);
        if (b.zdeg > 0) {
            LaurentPoly r = row;
            if (z >= b.zdeg) r += quot.z_coeff(z - b.zdeg).shifted(b.q) * LaurentPoly::constant(b.c);
            for (const auto& [e, c] : r.terms()) quot.add_term(z, e, c);
        } else {
            std::map<std::int64_t, BigInt> q_row;
            for (std::int64_t e = min_q(); e <= top_q; ++e) {
                BigInt v = row.coeff(e);
                auto it = q_row.find(e - b.q);
                if (it != q_row.end()) v += b.c * it->second;
                if (v != 0) q_row[e] = v;
            }
            for (const auto& [e, c] : q_row) quot.add_term(z, e, c);
        }
    }
    if (quot * binomial(b) != *this) return std::nullopt;
    return quot;
}

BiPoly BiPoly::shifted_q(std::int64_t e) const {
    BiPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second + e, c);
    return out;
}

TruncatedSeries BiPoly::to_series(const Window& w, std::int64_t stretch) const {
    TruncatedSeries s(w);
    for (const auto& [k, c] : terms_) {
        std::int64_t e = k.second * stretch;
        if (k.first > w.z_order || e >= w.q_limit) continue;
        if (e < 0) throw Error("polynomial prefactor has a negative q-exponent");
        s.add_term(k.first, e, c);
    }
    return s;
}

namespace {

std::string q_power(std::int64_t e, int scale) {
    Rational r = make_rational(static_cast<long>(e), scale);
    if (r == 1) return "q";
    std::string t = r.get_str();
    if (r < 0 || r.get_den() != 1) t = "(" + t + ")";
    return "q^" + t;
}

} // namespace

std::string BiPoly::to_string(int scale) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        BigInt mag = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        if (k.first == 1) mono = "z";
        else if (k.first > 1) mono = "z^" + std::to_string(k.first);
        if (k.second != 0) mono += (mono.empty() ? "" : " ") + q_power(k.second, scale);
        if (mono.empty()) os << mag.get_str();
        else if (mag == 1) os << mono;
        else os << mag.get_str() << " " << mono;
    }
    return os.str();
}

std::vector<Binomial> binomial_lcm(const std::vector<Binomial>& a, const std::vector<Binomial>& b) {
    std::vector<Binomial> sa = a, sb = b, out;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::size_t i = 0, j = 0;
    while (i < sa.size() || j < sb.size()) {
        if (j == sb.size() || (i < sa.size() && sa[i] < sb[j])) out.push_back(sa[i++]);
        else if (i == sa.size() || sb[j] < sa[i]) out.push_back(sb[j++]);
        else {
            out.push_back(sa[i++]);
            ++j;
        }
    }
    return out;
}

namespace {

// Multiset difference big \ small (small must be contained in big).
std::vector<Binomial> missing(const std::vector<Binomial>& big, const std::vector<Binomial>& small) {
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

Prefactor& Prefactor::normalize() {
    for (auto& b : den)
        if (b.zdeg == 0 && b.q == 0 && b.c == 1) throw Error("prefactor denominator vanishes identically");
    std::sort(den.begin(), den.end());
    if (num.is_zero()) {
        den.clear();
        return *this;
    }
    std::vector<Binomial> kept;
    for (const auto& b : den) {
        if (auto q = num.divide_exact(b)) num = std::move(*q);
        else kept.push_back(b);
    }
    den = std::move(kept);
    return *this;
}

Prefactor Prefactor::shifted(std::int64_t s) const {
    Prefactor out{num.shifted(s), {}};
    for (const auto& b : den) out.den.push_back({b.c, b.zdeg, b.q + s * b.zdeg});
    std::sort(out.den.begin(), out.den.end());
    return out;
}

TruncatedSeries Prefactor::to_series(const Window& w, std::int64_t stretch) const {
    TruncatedSeries s = num.to_series(w, stretch);
    for (const auto& b : den) {
        if (b.q < 0) throw Error("prefactor denominator has a negative q-exponent");
        if (b.zdeg == 0 && b.q == 0) throw Error("prefactor denominator is not invertible as a power series");
        if (b.zdeg > w.z_order) continue;
        s.div_binomial(b.c, b.zdeg, b.q * stretch);
    }
    return s;
}

Prefactor operator*(const Prefactor& a, const Prefactor& b) {
    Prefactor out{a.num * b.num, a.den};
    out.den.insert(out.den.end(), b.den.begin(), b.den.end());
    out.normalize();
    return out;
}

Prefactor operator+(const Prefactor& a, const Prefactor& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Binomial> sa = a.den, sb = b.den;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::vector<Binomial> l = binomial_lcm(sa, sb);
    Prefactor out{a.num * product_of(missing(l, sa)) + b.num * product_of(missing(l, sb)), l};
    out.normalize();
    return out;
}

Prefactor operator-(const Prefactor& a) { return {-a.num, a.den}; }

std::string Prefactor::to_string(int scale) const {
    std::string n = num.to_string(scale);
    if (den.empty()) return n;
    std::ostringstream os;
    os << (num.terms().size() > 1 ? "(" + n + ")" : n) << " / ";
    for (const auto& b : den) os << "(" << BiPoly::binomial(b).to_string(scale) << ")";
    return os.str();
}

} // namespace cylkit
