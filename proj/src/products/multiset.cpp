#include "cylkit/products.hpp"

#include <algorithm>
#include <sstream>

namespace cylkit {

WMultiset::WMultiset(std::vector<Rational> e, Rational m) : entries(std::move(e)), modulus(std::move(m)) {
    modulus.canonicalize();
    if (modulus <= 0) throw Error("multiset modulus must be positive");
    for (auto& x : entries) {
        x.canonicalize();
        if (x == 0) throw Error("degenerate weight/profile pair: 0 in the multiset");
        if (x < 0) throw Error("multiset entries must be positive");
    }
    std::sort(entries.begin(), entries.end());
}

long WMultiset::multiplicity(const Rational& k) const {
    auto [lo, hi] = std::equal_range(entries.begin(), entries.end(), k);
    return static_cast<long>(hi - lo);
}

WMultiset WMultiset::scaled(const Rational& c) const {
    std::vector<Rational> e;
    for (const auto& x : entries) e.push_back(x * c);
    return WMultiset(std::move(e), modulus * c);
}

std::string to_string(const WMultiset& w) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < w.entries.size(); ++i) os << (i ? "," : "") << w.entries[i].get_str();
    os << "} mod " << w.modulus.get_str();
    return os.str();
}

WMultiset disjoint_union(const WMultiset& a, const WMultiset& b) {
    if (a.modulus != b.modulus) throw Error("cannot join multisets with moduli " + a.modulus.get_str() + " and " + b.modulus.get_str());
    std::vector<Rational> e = a.entries;
    e.insert(e.end(), b.entries.begin(), b.entries.end());
    return WMultiset(std::move(e), a.modulus);
}

std::string_view orientation_name(W3Orientation o) { return o == W3Orientation::mirrored ? "mirrored" : "as-printed"; }

WMultiset w3_standard(const Profile& p) {
    const int h = p.width();
    std::vector<Rational> e{Rational(h)};
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j) {
            if (p.at(i) > p.at(j)) e.emplace_back(j - i);
            else if (p.at(i) < p.at(j)) e.emplace_back(h - (j - i));
        }
    return WMultiset(std::move(e), Rational(h));
}

WMultiset w3_weighted(const Profile& p, const WeightVector& a, W3Orientation o) {
    const int h = p.width();
    if (a.size() != h) throw Error("cylindric weights need length " + std::to_string(h));
    const Rational Ah = a.partial(h);
    std::vector<Rational> e{Ah};
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j) {
            if (p.at(i) == p.at(j)) continue;
            Rational gap = a.partial(j) - a.partial(i);
            bool direct = o == W3Orientation::mirrored ? p.at(i) > p.at(j) : p.at(i) < p.at(j);
            e.push_back(direct ? gap : Rational(Ah - gap));
        }
    return WMultiset(std::move(e), Ah);
}

std::pair<WMultiset, WMultiset> w1_w2(const Profile& p, const WeightVector& a) {
    const int h = p.width();
    if (a.size() != h + 1) throw Error("DSPP weights need length " + std::to_string(h + 1));
    const Rational T = a.partial(h + 1);
    std::vector<Rational> w1{T}, w2;
    for (int i = 1; i <= h; ++i) w1.push_back(p.at(i) == -1 ? a.partial(i) : Rational(T - a.partial(i)));
    for (int i = 1; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j) {
            const Rational Ai = a.partial(i), Aj = a.partial(j);
            if (p.at(i) == -1 && p.at(j) == -1) w2.push_back(Ai + Aj);
            else if (p.at(i) == 1 && p.at(j) == 1) w2.push_back(2 * T - Ai - Aj);
            else if (p.at(i) < p.at(j)) w2.push_back(2 * T - (Aj - Ai));
            else w2.push_back(Aj - Ai);
        }
    return {WMultiset(std::move(w1), T), WMultiset(std::move(w2), 2 * T)};
}

bool is_balanced(const WMultiset& w) {
    for (const auto& k : w.entries)
        if (k < w.modulus && w.multiplicity(k) != w.multiplicity(w.modulus - k)) return false;
    return true;
}

bool is_balanced(const Profile& p) { return is_balanced(w3_standard(p)); }

BalanceReport balance_report(int max_width) {
    BalanceReport r;
    r.max_width = max_width;
    for (int h = 1; h <= max_width; ++h)
        for (const Profile& p : all_profiles(h)) {
            ++r.profiles;
            if (!is_balanced(p)) r.unbalanced.push_back(p);
        }
    return r;
}

} // namespace cylkit
