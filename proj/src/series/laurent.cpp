#include "cylkit/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cylkit {

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(std::int64_t e, const BigInt& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::binomial(int c, std::int64_t e) {
    LaurentPoly p = constant(1);
    p.add_term(e, -c);
    return p;
}

BigInt LaurentPoly::coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw Error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw Error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t s) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + s, c);
    return out;
}

LaurentPoly LaurentPoly::dilated(std::int64_t k) const {
    if (k <= 0) throw Error("dilation factor must be positive");
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
    return out;
}

TruncatedSeries LaurentPoly::to_series(const Window& w) const {
    TruncatedSeries s(w);
    for (const auto& [e, c] : terms_) {
        if (e < 0) throw Error("Laurent polynomial has a negative exponent where a power series is required");
        if (e * w.q_scale < w.q_limit) s.add_term(0, e * w.q_scale, c);
    }
    return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (!unit) os << mag.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return os.str();
}

ShiftedSeries ShiftedSeries::of(const LaurentPoly& p, const Window& relative) {
    if (p.is_zero()) return {0, TruncatedSeries(relative)};
    std::int64_t m = p.min_exponent();
    return {m * relative.q_scale, p.shifted(-m).to_series(relative)};
}

std::optional<std::int64_t> ShiftedSeries::valuation() const {
    std::optional<std::int64_t> best;
    for (int z = 0; z <= body_.z_order(); ++z) {
        auto row = body_.row(z);
        for (std::size_t q = 0; q < row.size(); ++q) {
            if (row[q] == 0) continue;
            std::int64_t v = offset_ + static_cast<std::int64_t>(q);
            if (!best || v < *best) best = v;
            break;
        }
    }
    return best;
}

namespace {

// Re-express q^from * s as q^to * (result) with the given relative length.
TruncatedSeries realign(const TruncatedSeries& s, std::int64_t from, std::int64_t to, std::int64_t length) {
    TruncatedSeries out(Window{length, s.z_order(), s.q_scale()});
    std::int64_t delta = from - to;  // >= 0
    for (int z = 0; z <= s.z_order(); ++z) {
        auto src = s.row(z);
        auto dst = out.mutable_row(z);
        for (std::int64_t q = 0; q < static_cast<std::int64_t>(src.size()) && q + delta < length; ++q)
            if (src[static_cast<std::size_t>(q)] != 0) dst[static_cast<std::size_t>(q + delta)] = src[static_cast<std::size_t>(q)];
    }
    return out;
}

void check_compatible(const ShiftedSeries& a, const ShiftedSeries& b) {
    if (a.body().q_scale() != b.body().q_scale()) throw Error("shifted series on different q grids");
}

} // namespace

ShiftedSeries& ShiftedSeries::operator+=(const ShiftedSeries& o) {
    check_compatible(*this, o);
    std::int64_t off = std::min(offset_, o.offset_);
    std::int64_t limit = std::min(exact_limit(), o.exact_limit());
    if (limit <= off) throw Error("sum of shifted series has an empty exact window");
    int zo = std::min(body_.z_order(), o.body_.z_order());
    TruncatedSeries a = realign(body_.restricted(Window{body_.q_limit(), zo, body_.q_scale()}), offset_, off, limit - off);
    TruncatedSeries b = realign(o.body_.restricted(Window{o.body_.q_limit(), zo, o.body_.q_scale()}), o.offset_, off, limit - off);
    a += b;
    offset_ = off;
    body_ = std::move(a);
    return *this;
}

ShiftedSeries& ShiftedSeries::operator-=(const ShiftedSeries& o) { return *this += -o; }

ShiftedSeries operator*(const ShiftedSeries& a, const ShiftedSeries& b) {
    check_compatible(a, b);
    return {a.offset_ + b.offset_, a.body_ * b.body_};
}

ShiftedSeries operator*(const ShiftedSeries& a, const LaurentPoly& p) {
    if (p.is_zero()) return {a.offset_, TruncatedSeries(a.body_.window())};
    std::int64_t m = p.min_exponent();
    TruncatedSeries ps = p.shifted(-m).to_series(Window{a.body_.q_limit(), 0, a.body_.q_scale()});
    return {a.offset_ + m * a.body_.q_scale(), a.body_ * ps};
}

ShiftedSeries operator-(const ShiftedSeries& a) { return {a.offset_, -a.body_}; }

TruncatedSeries ShiftedSeries::to_series(const Window& w) const {
    if (w.q_scale != body_.q_scale()) throw Error("shifted series grid mismatch");
    if (w.q_limit > exact_limit()) throw Error("requested window exceeds the exact range of a shifted series");
    if (w.z_order > body_.z_order()) throw Error("requested z-window exceeds the shifted series");
    TruncatedSeries out(w);
    for (int z = 0; z <= w.z_order; ++z) {
        auto src = body_.row(z);
        auto dst = out.mutable_row(z);
        for (std::size_t q = 0; q < src.size(); ++q) {
            if (src[q] == 0) continue;
            std::int64_t e = offset_ + static_cast<std::int64_t>(q);
            if (e < 0) throw Error("negative q-exponent survives in a summand that should be a power series");
            if (e < w.q_limit) dst[static_cast<std::size_t>(e)] = src[q];
        }
    }
    return out;
}

} // namespace cylkit
