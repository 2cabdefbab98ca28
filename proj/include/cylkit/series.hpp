#pragma once

#include "cylkit/bigint.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cylkit {

// Truncation window. Coefficients are exact for z-degree <= z_order and for
// q-exponents strictly below q_limit / q_scale; exponents live on the grid of
// powers of q^(1/q_scale).
struct Window {
    std::int64_t q_limit = 1;
    int z_order = 0;
    int q_scale = 1;

    static Window make(std::int64_t N, int D = 0, int scale = 1);

    Rational q_order() const { return make_rational(static_cast<long>(q_limit), q_scale); }
    Window rescaled(int scale) const;
    void validate() const;

    friend bool operator==(const Window&, const Window&) = default;
};

// Common window of two operands, on the lcm of their grids.
Window intersect(const Window& a, const Window& b);

struct Term {
    int z = 0;
    std::int64_t q = 0;  // grid units
    BigInt coeff;
};

struct Mismatch {
    int z = 0;
    Rational q;
    BigInt left;
    BigInt right;
};

class TruncatedSeries {
public:
    TruncatedSeries();
    explicit TruncatedSeries(const Window& w);

    static TruncatedSeries one(const Window& w);
    static TruncatedSeries monomial(const Window& w, int z, std::int64_t q_grid, const BigInt& c = 1);
    static TruncatedSeries monomial(const Window& w, int z, const Rational& q_exp, const BigInt& c = 1);

    const Window& window() const { return window_; }
    int z_order() const { return window_.z_order; }
    std::int64_t q_limit() const { return window_.q_limit; }
    int q_scale() const { return window_.q_scale; }

    const BigInt& at(int z, std::int64_t q_grid) const;
    BigInt coeff(int z, const Rational& q_exp) const;
    BigInt& mutable_at(int z, std::int64_t q_grid);
    // Terms falling outside the window are dropped.
    void add_term(int z, std::int64_t q_grid, const BigInt& c);

    std::span<const BigInt> row(int z) const;
    std::span<BigInt> mutable_row(int z);

    std::vector<Term> terms() const;
    bool is_zero() const;
    std::int64_t nonzero_count() const;

    TruncatedSeries rescaled(int scale) const;
    TruncatedSeries restricted(const Window& w) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const BigInt& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& c) { return a *= c; }
    friend TruncatedSeries operator-(TruncatedSeries a);
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

    // Same window and same coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    // Requires constant term +1 or -1.
    TruncatedSeries inverse() const;

    // z^k q^m -> c^k z^k q^(m + k e)
    TruncatedSeries substitute_z(const Rational& e, int c = 1) const;
    // z -> c q^e; the result is univariate with window min(N, (D+1) e).
    TruncatedSeries collapse_z(const Rational& e, int c = 1) const;
    // q -> q^r for rational r > 0; window scales by r.
    TruncatedSeries substitute_q_power(const Rational& r) const;
    // Sum over z-degree (z = 1). Caller guarantees D covers the q-window.
    TruncatedSeries z_marginal() const;
    TruncatedSeries z_column(int n) const;
    // Multiply by q^g (grid units). Negative g divides: the low coefficients must
    // vanish and the window shrinks by |g|.
    TruncatedSeries shift_q(std::int64_t g) const;
    // Multiply by z^k (k >= 0).
    TruncatedSeries shift_z(int k) const;

    // Exact in-place multiplication by (1 - c z^i q^e) and its inverse.
    void mul_binomial(int c, int i, std::int64_t e);
    void div_binomial(int c, int i, std::int64_t e);

    std::size_t row_length() const { return static_cast<std::size_t>(window_.q_limit); }

private:
    Window window_;
    std::vector<BigInt> data_;  // row-major (z_order+1) x q_limit
};

// First differing coefficient within the common window (grid-aligned).
std::optional<Mismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);
bool agree(const TruncatedSeries& a, const TruncatedSeries& b);

// Pochhammer factor family (sign z^i q^b; q^m): the product of (1 - sign z^i q^(b + j m)).
struct PochFactor {
    int z_degree = 0;
    Rational q_exponent = 0;
    int sign = 1;
    Rational modulus = 1;

    static PochFactor q(const Rational& b, const Rational& m, int sign = 1) { return {0, b, sign, m}; }
    static PochFactor zq(const Rational& b, const Rational& m, int sign = 1) { return {1, b, sign, m}; }
};

// prod_{j=0}^{n-1}; for n < 0 the reciprocal of prod_{j=1}^{-n} (1 - sign z^i q^(b - j m)).
TruncatedSeries poch_finite(const PochFactor& f, long n, const Window& w);
// 1 / poch_finite; a zero factor for n < 0 yields the zero series.
TruncatedSeries poch_reciprocal(const PochFactor& f, long n, const Window& w);
TruncatedSeries poch_infinite(const PochFactor& f, const Window& w);
TruncatedSeries poch_infinite_reciprocal(const PochFactor& f, const Window& w);

TruncatedSeries gauss_binomial(long n, long m, const Window& w);
// Sum over all integers n of (-1)^n q^(b1 C(n+1,2) + b2 C(n,2)).
TruncatedSeries theta_sum(const Rational& b1, const Rational& b2, const Window& w);

// Window on the lcm grid of the given exponents.
Window window_for(std::int64_t N, int D, const std::vector<Rational>& exponents);

} // namespace cylkit
