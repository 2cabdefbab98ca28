#include "cylkit/bigint.hpp"

#include <numeric>

namespace cylkit {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("malformed rational: " + s);
    if (r.get_den() == 0) throw Error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& v) { return v.get_str(); }

bool fits_int64(const BigInt& v) {
    static const BigInt lo("-9223372036854775808");
    static const BigInt hi("9223372036854775807");
    return v >= lo && v <= hi;
}

std::int64_t to_int64(const BigInt& v) {
    if (!fits_int64(v)) throw Error("integer out of 64-bit range: " + v.get_str());
    if (v.fits_slong_p()) return v.get_si();
    // long is 32-bit on some platforms
    return std::stoll(v.get_str());
}

std::int64_t to_grid(const Rational& e, int scale) {
    Rational g = e * scale;
    g.canonicalize();
    if (g.get_den() != 1) throw Error("exponent " + e.get_str() + " is off the q^(1/" + std::to_string(scale) + ") grid");
    return to_int64(g.get_num());
}

long lcm(long a, long b) { return std::lcm(a, b); }

long lcm_of_denominators(const std::vector<Rational>& values) {
    long l = 1;
    for (const auto& v : values) {
        Rational c = v;
        c.canonicalize();
        l = std::lcm(l, static_cast<long>(to_int64(c.get_den())));
    }
    return l;
}

} // namespace cylkit
