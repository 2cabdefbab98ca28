#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cylkit {

using BigInt = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "3", "-2", "3/2".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);

// Exponent e on the q^(1/scale) grid; throws when e*scale is not integral.
std::int64_t to_grid(const Rational& e, int scale);

long lcm_of_denominators(const std::vector<Rational>& values);
long lcm(long a, long b);

} // namespace cylkit
