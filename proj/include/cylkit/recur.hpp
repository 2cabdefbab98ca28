#pragma once

#include "cylkit/lattice.hpp"
#include "cylkit/laurent.hpp"
#include "cylkit/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cylkit {

// 1 - c z^zdeg q^q  (q in grid units)
struct Binomial {
    int c = 1;
    int zdeg = 0;
    std::int64_t q = 0;

    friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

// Polynomial in z and q with integer coefficients; q-exponents in grid units.
class BiPoly {
public:
    using Key = std::pair<int, std::int64_t>;

    BiPoly() = default;
    static BiPoly constant(const BigInt& c);
    static BiPoly monomial(int z, std::int64_t q, const BigInt& c = 1);
    static BiPoly binomial(const Binomial& b);

    const std::map<Key, BigInt>& terms() const { return terms_; }
    void add_term(int z, std::int64_t q, const BigInt& c);
    BigInt coeff(int z, std::int64_t q) const;
    bool is_zero() const { return terms_.empty(); }
    int max_z() const;
    std::int64_t max_q() const;
    std::int64_t min_q() const;
    // Coefficient of z^k as a Laurent polynomial in q.
    LaurentPoly z_coeff(int k) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    // z -> z q^s
    BiPoly shifted(std::int64_t s) const;
    // times q^e
    BiPoly shifted_q(std::int64_t e) const;
    // Quotient by (1 - c z^i q^e) when the division is exact.
    std::optional<BiPoly> divide_exact(const Binomial& b) const;
    // Grid exponents are multiplied by `stretch` to land on the window grid.
    TruncatedSeries to_series(const Window& w, std::int64_t stretch = 1) const;

    std::string to_string(int scale = 1) const;

private:
    std::map<Key, BigInt> terms_;
};

// Rational prefactor num / prod(den).
struct Prefactor {
    BiPoly num;
    std::vector<Binomial> den;  // sorted multiset

    static Prefactor constant(const BigInt& c) { return {BiPoly::constant(c), {}}; }
    static Prefactor poly(BiPoly p) { return {std::move(p), {}}; }
    Prefactor& normalize();  // sorts, cancels exact factors
    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.empty(); }
    Prefactor shifted(std::int64_t s) const;
    TruncatedSeries to_series(const Window& w, std::int64_t stretch = 1) const;

    friend Prefactor operator*(const Prefactor& a, const Prefactor& b);
    friend Prefactor operator+(const Prefactor& a, const Prefactor& b);
    friend Prefactor operator-(const Prefactor& a);
    friend Prefactor operator-(const Prefactor& a, const Prefactor& b) { return a + (-b); }
    friend bool operator==(const Prefactor& a, const Prefactor& b) { return a.num == b.num && a.den == b.den; }

    std::string to_string(int scale = 1) const;
};

// Least common multiple of two binomial multisets.
std::vector<Binomial> binomial_lcm(const std::vector<Binomial>& a, const std::vector<Binomial>& b);

// coeff * F_target(z q^shift), or an inhomogeneous coeff when target is empty.
struct FunctionalTerm {
    Prefactor coeff;
    std::int64_t shift = 0;  // grid units
    std::optional<Profile> target;
};

struct Equation {
    std::vector<FunctionalTerm> terms;

    // Merges terms with equal (target, shift) and drops zeros; deterministic order.
    Equation& normalize();
    bool is_inhomogeneous() const;
};

struct SystemOptions {
    // Multiply by (zq;q)_inf when every weight is a positive integer.
    bool normalized = false;
    // Identify delta with -rev(delta) when the weights allow it (DSPP and SCP only).
    bool reversal_quotient = true;
};

struct FunctionalSystem {
    Kind kind = Kind::CP;  // SCP systems are stored as DSPP systems with weights (1,2,...,2,1)
    WeightVector weights;
    int scale = 1;
    bool normalized = false;
    bool reversal_quotient = false;
    std::map<Profile, Equation> equations;

    // Representative of the class of p under the quotient in force.
    Profile canonical(const Profile& p) const;
    bool has_inhomogeneous() const;
};

// Indices j with (delta_j, delta_{j+1}) = (1,-1), with the boundary conventions of the kind.
std::vector<int> corner_set(Kind kind, const Profile& p);

FunctionalSystem build_system(Kind kind, const Profile& seed, const WeightVector& weights, const SystemOptions& opt = {});

// The unknown functions of the system (normalized ones when the system is normalized).
std::map<Profile, TruncatedSeries> solve_fixed_point(const FunctionalSystem& sys, const Window& w);

// Divides a normalized solution by (zq;q)_inf.
TruncatedSeries denormalize(const TruncatedSeries& g);

struct Elimination {
    bool ok = false;
    Equation equation;    // F_keep in terms of shifted F_keep
    std::string failure;  // why substitution could not close
};

Elimination eliminate(const FunctionalSystem& sys, const Profile& keep);

// A one-profile system around an eliminated equation.
FunctionalSystem single_equation_system(const FunctionalSystem& sys, const Profile& keep, const Equation& eq);

std::string function_name(const FunctionalSystem& sys);
std::string to_string(const FunctionalSystem& sys);
std::string to_string(const Equation& eq, const std::string& fname, int scale);

// sum c q^a Q^b with Q = q^n; exponents in grid units.
class ShiftPoly {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;

    ShiftPoly() = default;
    static ShiftPoly monomial(std::int64_t a, std::int64_t b = 0, const BigInt& c = 1);
    static ShiftPoly constant(const BigInt& c) { return monomial(0, 0, c); }

    const std::map<Key, BigInt>& terms() const { return terms_; }
    void add_term(std::int64_t a, std::int64_t b, const BigInt& c);
    bool is_zero() const { return terms_.empty(); }

    ShiftPoly& operator+=(const ShiftPoly& o);
    ShiftPoly& operator-=(const ShiftPoly& o);
    friend ShiftPoly operator+(ShiftPoly a, const ShiftPoly& b) { return a += b; }
    friend ShiftPoly operator-(ShiftPoly a, const ShiftPoly& b) { return a -= b; }
    friend ShiftPoly operator*(const ShiftPoly& a, const ShiftPoly& b);
    friend ShiftPoly operator-(const ShiftPoly& a);
    friend bool operator==(const ShiftPoly& a, const ShiftPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly at(long n) const;
    // n -> n + k
    ShiftPoly shift_n(long k) const;
    std::string to_string(int scale = 1) const;

private:
    std::map<Key, BigInt> terms_;
};

// sum_e coeff_e(n) h_{target_e}(n + offset_e) = [z^n] rhs, for every n >= 0 (h(m) = 0 for m < 0).
struct CoefficientRelation {
    struct Entry {
        std::optional<Profile> target;  // empty: the relation's own sequence
        int offset = 0;
        ShiftPoly coeff;
    };
    std::vector<Entry> entries;
    BiPoly rhs;
    int scale = 1;

    int max_offset() const;
    int min_offset() const;
    std::string to_string(const std::string& seq = "h") const;
};

// Clears denominators in F_self(z) = sum terms and reads off the z^n coefficient.
CoefficientRelation to_coefficient_relation(const Equation& eq, const Profile& self, int scale);
std::map<Profile, CoefficientRelation> to_coefficient_relations(const FunctionalSystem& sys);

// Closed-form sequence values as q-series with their own offset and relative precision.
using SequenceFormula = std::function<ShiftedSeries(long n)>;

struct ClosedFormReport {
    bool initial_ok = false;
    bool recurrence_ok = false;
    long checked_up_to = -1;
    std::optional<long> failing_n;
    std::string detail;
    bool ok() const { return initial_ok && recurrence_ok; }
};

// Checks h(0) = 1 and the relation (entries without a target refer to the formula) for
// 0 <= n + max_offset <= n_max, exactly within each term's precision.
ClosedFormReport check_closed_form(const SequenceFormula& f, const CoefficientRelation& rel, long n_max);

} // namespace cylkit
