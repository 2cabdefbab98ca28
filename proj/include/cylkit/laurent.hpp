#pragma once

#include "cylkit/series.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace cylkit {

// Finite sum of c q^e with integer (possibly negative) exponents.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const BigInt& c);
    static LaurentPoly monomial(std::int64_t e, const BigInt& c = 1);
    // 1 - c q^e
    static LaurentPoly binomial(int c, std::int64_t e);

    const std::map<std::int64_t, BigInt>& terms() const { return terms_; }
    BigInt coeff(std::int64_t e) const;
    void add_term(std::int64_t e, const BigInt& c);

    bool is_zero() const { return terms_.empty(); }
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly shifted(std::int64_t e) const;
    // q -> q^k
    LaurentPoly dilated(std::int64_t k) const;

    // Exponents are integer powers of q; w must not see negative exponents.
    TruncatedSeries to_series(const Window& w) const;

    std::string to_string(const std::string& var = "q") const;

private:
    std::map<std::int64_t, BigInt> terms_;
};

// q^offset * body. The offset is in grid units of the body's scale and may be
// negative; the value is exact for q-grid exponents below offset + body.q_limit().
class ShiftedSeries {
public:
    ShiftedSeries() = default;
    ShiftedSeries(std::int64_t offset, TruncatedSeries body) : offset_(offset), body_(std::move(body)) {}

    // q^e * s
    static ShiftedSeries of(const TruncatedSeries& s, std::int64_t offset = 0) { return {offset, s}; }
    // p with body window of the given relative length.
    static ShiftedSeries of(const LaurentPoly& p, const Window& relative);

    std::int64_t offset() const { return offset_; }
    const TruncatedSeries& body() const { return body_; }
    std::int64_t exact_limit() const { return offset_ + body_.q_limit(); }
    // Lowest grid exponent with nonzero coefficient, if any.
    std::optional<std::int64_t> valuation() const;

    bool is_zero() const { return body_.is_zero(); }

    ShiftedSeries& operator+=(const ShiftedSeries& o);
    ShiftedSeries& operator-=(const ShiftedSeries& o);
    friend ShiftedSeries operator+(ShiftedSeries a, const ShiftedSeries& b) { return a += b; }
    friend ShiftedSeries operator-(ShiftedSeries a, const ShiftedSeries& b) { return a -= b; }
    friend ShiftedSeries operator*(const ShiftedSeries& a, const ShiftedSeries& b);
    friend ShiftedSeries operator*(const ShiftedSeries& a, const LaurentPoly& p);
    friend ShiftedSeries operator-(const ShiftedSeries& a);

    ShiftedSeries times_q(std::int64_t e) const { return {offset_ + e, body_}; }

    // Power series in window w; throws if a negative exponent carries a nonzero coefficient
    // or if w asks for more than is exact.
    TruncatedSeries to_series(const Window& w) const;

private:
    std::int64_t offset_ = 0;
    TruncatedSeries body_;
};

} // namespace cylkit
