#include "cylkit/products.hpp"

#include <sstream>

namespace cylkit {

ProductSpec ProductSpec::from_multiset(const WMultiset& w) {
    ProductSpec s;
    for (const auto& k : w.entries) s.den.push_back(PochFactor::q(k, w.modulus));
    return s;
}

ProductSpec& ProductSpec::operator*=(const ProductSpec& o) {
    num.insert(num.end(), o.num.begin(), o.num.end());
    den.insert(den.end(), o.den.begin(), o.den.end());
    return *this;
}

std::vector<Rational> ProductSpec::exponents() const {
    std::vector<Rational> out;
    for (const auto* side : {&num, &den})
        for (const auto& f : *side) {
            out.push_back(f.q_exponent);
            out.push_back(f.modulus);
        }
    return out;
}

namespace {

void write_factor(std::ostringstream& os, const PochFactor& f) {
    os << "(" << (f.sign == -1 ? "-" : "");
    if (f.z_degree == 1) os << "z";
    else if (f.z_degree > 1) os << "z^" << f.z_degree;
    if (f.q_exponent != 0 || f.z_degree == 0) os << "q^" << f.q_exponent.get_str();
    os << ";q^" << f.modulus.get_str() << ")";
}

} // namespace

std::string to_string(const ProductSpec& p) {
    std::ostringstream os;
    if (p.num.empty()) os << "1";
    for (const auto& f : p.num) write_factor(os, f);
    if (!p.den.empty()) {
        os << " / ";
        for (const auto& f : p.den) write_factor(os, f);
    }
    return os.str();
}

ProductSpec cp_product(const Profile& p, const WeightVector& a, W3Orientation o) {
    return ProductSpec::from_multiset(w3_weighted(p, a, o));
}

ProductSpec dspp_product(const Profile& p, const WeightVector& a) {
    auto [w1, w2] = w1_w2(p, a);
    return ProductSpec::from_multiset(w1) * ProductSpec::from_multiset(w2);
}

TruncatedSeries expand_product(const ProductSpec& spec, const Window& w) {
    w.validate();
    TruncatedSeries s = TruncatedSeries::one(w);
    auto apply = [&](const PochFactor& f, bool divide) {
        if (f.sign != 1 && f.sign != -1) throw Error("Pochhammer sign must be +1 or -1");
        const std::int64_t b = to_grid(f.q_exponent, w.q_scale), m = to_grid(f.modulus, w.q_scale);
        if (m <= 0) throw Error("infinite Pochhammer product needs a positive modulus");
        if (b < 0 || (f.z_degree == 0 && b == 0)) throw Error("divergent-at-origin factor");
        if (f.z_degree > w.z_order) return;
        for (std::int64_t e = b; e < w.q_limit; e += m) {
            if (divide) s.div_binomial(f.sign, f.z_degree, e);
            else s.mul_binomial(f.sign, f.z_degree, e);
        }
    };
    for (const auto& f : spec.den) apply(f, true);
    for (const auto& f : spec.num) apply(f, false);
    return s;
}

TruncatedSeries expand_product(const WMultiset& m, const Window& w) { return expand_product(ProductSpec::from_multiset(m), w); }

TruncatedSeries expand_product(const std::vector<WMultiset>& ms, const Window& w) {
    ProductSpec spec;
    for (const auto& m : ms) spec *= ProductSpec::from_multiset(m);
    return expand_product(spec, w);
}

TruncatedSeries scp_nonsymmetric_product(const Profile& p, const Window& w) {
    const int h = p.width();
    auto [w1, w2] = w1_w2(p, WeightVector::symmetric(h + 1));
    ProductSpec base = ProductSpec::from_multiset(w1) * ProductSpec::from_multiset(w2);
    ProductSpec ratio;
    for (const auto& l : w2.entries) {
        ratio.num.push_back(PochFactor::q(l / 2, w1.modulus, -1));
        ratio.den.push_back(PochFactor::q(l / 2, w1.modulus));
    }
    TruncatedSeries r = expand_product(ratio, w) - TruncatedSeries::one(w);
    return expand_product(base, w) * r;
}

} // namespace cylkit
