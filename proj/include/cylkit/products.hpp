#pragma once

#include "cylkit/lattice.hpp"
#include "cylkit/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cylkit {

// Exponents k of the factors 1/(q^k; q^modulus)_inf, kept sorted.
struct WMultiset {
    std::vector<Rational> entries;
    Rational modulus = 1;

    WMultiset() = default;
    WMultiset(std::vector<Rational> e, Rational m);

    std::size_t size() const { return entries.size(); }
    long multiplicity(const Rational& k) const;
    // Every entry scaled by c (modulus included).
    WMultiset scaled(const Rational& c) const;

    friend bool operator==(const WMultiset&, const WMultiset&) = default;
};

std::string to_string(const WMultiset& w);

// Multiset union; moduli must agree.
WMultiset disjoint_union(const WMultiset& a, const WMultiset& b);

// Orientation of the pair terms in the weighted cylindric product. `mirrored` places
// A_j - A_i under delta_i > delta_j (the standard-weight form); `as_printed` places it
// under delta_i < delta_j.
enum class W3Orientation { mirrored, as_printed };
std::string_view orientation_name(W3Orientation o);

WMultiset w3_standard(const Profile& p);
WMultiset w3_weighted(const Profile& p, const WeightVector& a, W3Orientation o = W3Orientation::mirrored);
std::pair<WMultiset, WMultiset> w1_w2(const Profile& p, const WeightVector& a);

// prod num / prod den of Pochhammer factors (sign z^i q^b; q^m)_inf.
struct ProductSpec {
    std::vector<PochFactor> num;
    std::vector<PochFactor> den;

    static ProductSpec from_multiset(const WMultiset& w);
    ProductSpec& operator*=(const ProductSpec& o);
    friend ProductSpec operator*(ProductSpec a, const ProductSpec& b) { return a *= b; }
    // Exponents and moduli, for choosing a grid.
    std::vector<Rational> exponents() const;
};

std::string to_string(const ProductSpec& p);

// Cylindric product for a profile and weights, with the given orientation.
ProductSpec cp_product(const Profile& p, const WeightVector& a, W3Orientation o = W3Orientation::mirrored);
ProductSpec dspp_product(const Profile& p, const WeightVector& a);

TruncatedSeries expand_product(const ProductSpec& spec, const Window& w);
TruncatedSeries expand_product(const WMultiset& m, const Window& w);
TruncatedSeries expand_product(const std::vector<WMultiset>& ms, const Window& w);

// k and modulus - k appear equally often for every entry k below the modulus.
bool is_balanced(const WMultiset& w);
bool is_balanced(const Profile& p);

struct BalanceReport {
    int max_width = 0;
    long profiles = 0;
    std::vector<Profile> unbalanced;
    bool ok() const { return unbalanced.empty(); }
};

BalanceReport balance_report(int max_width);

// Generating function of cylindric partitions of profile (-rev d, d) that are not symmetric.
TruncatedSeries scp_nonsymmetric_product(const Profile& p, const Window& w);

} // namespace cylkit
