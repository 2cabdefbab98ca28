#include "cylkit/recur.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace cylkit {

Equation& Equation::normalize() {
    std::map<std::pair<std::optional<Profile>, std::int64_t>, Prefactor> merged;
    for (auto& t : terms) {
        auto key = std::make_pair(t.target, t.target ? t.shift : 0);
        auto it = merged.find(key);
        if (it == merged.end()) merged.emplace(key, t.coeff);
        else it->second = it->second + t.coeff;
    }
    terms.clear();
    for (auto& [k, c] : merged) {
        if (c.is_zero()) continue;
        c.normalize();
        terms.push_back({c, k.second, k.first});
    }
    return *this;
}

bool Equation::is_inhomogeneous() const {
    return std::any_of(terms.begin(), terms.end(), [](const FunctionalTerm& t) { return !t.target; });
}

Profile FunctionalSystem::canonical(const Profile& p) const {
    if (!reversal_quotient) return p;
    return std::max(p, p.negated_reverse());
}

bool FunctionalSystem::has_inhomogeneous() const {
    return std::any_of(equations.begin(), equations.end(), [](const auto& kv) { return kv.second.is_inhomogeneous(); });
}

std::vector<int> corner_set(Kind kind, const Profile& p) {
    const int h = p.width();
    std::vector<int> out;
    if (wraps(kind)) {
        for (int j = 0; j < h; ++j) {
            int left = j == 0 ? p.at(h) : p.at(j);
            int right = p.at(j + 1);
            if (left == 1 && right == -1) out.push_back(j);
        }
    } else {
        for (int j = 0; j <= h; ++j) {
            int left = j == 0 ? -p.at(1) : p.at(j);
            int right = j == h ? -p.at(h) : p.at(j + 1);
            if (left == 1 && right == -1) out.push_back(j);
        }
    }
    return out;
}

namespace {

Profile swap_corners(Kind kind, const Profile& p, const std::vector<int>& J) {
    const int h = p.width();
    std::vector<int> d = p.delta;
    for (int j : J) {
        if (wraps(kind)) {
            int l = j == 0 ? h - 1 : j - 1, r = j;  // 0-based positions of delta_j (delta_0 = delta_h) and delta_{j+1}
            std::swap(d[static_cast<std::size_t>(l)], d[static_cast<std::size_t>(r)]);
        } else {
            if (j > 0) d[static_cast<std::size_t>(j - 1)] = -1;
            if (j < h) d[static_cast<std::size_t>(j)] = 1;
        }
    }
    return Profile(std::move(d));
}

std::int64_t grid_weight(const Rational& a, int scale) { return to_grid(a, scale); }

// (zq;q)_{s-1} on a unit grid.
BiPoly finite_zq(std::int64_t s) {
    BiPoly p = BiPoly::constant(1);
    for (std::int64_t j = 1; j < s; ++j) p = p * BiPoly::binomial({1, 1, j});
    return p;
}

} // namespace

FunctionalSystem build_system(Kind kind, const Profile& seed, const WeightVector& weights, const SystemOptions& opt) {
    const int h = seed.width();
    if (h == 0) throw Error("profile must be nonempty");
    FunctionalSystem sys;
    sys.kind = kind;
    WeightVector a = weights;
    if (kind == Kind::SCP) {
        if (a.size() == 0) a = WeightVector::symmetric(h + 1);
        if (a != WeightVector::symmetric(h + 1)) throw Error("symmetric cylindric systems use the weights (1,2,...,2,1)");
    }
    if (a.size() != weight_count(kind == Kind::SCP ? Kind::DSPP : kind, h))
        throw Error("weights for this kind and width need length " + std::to_string(weight_count(kind == Kind::SCP ? Kind::DSPP : kind, h)));
    for (const auto& x : a.a)
        if (x < 0) throw Error("weights must be nonnegative");
    if (a.total() <= 0) throw Error("weights must have a positive total");
    sys.weights = a;
    sys.scale = a.grid_scale();
    sys.normalized = opt.normalized;
    if (opt.normalized) {
        if (!a.all_positive_integers()) throw Error("normalized systems need positive integer weights");
        if (kind == Kind::DCP) throw Error("normalized systems are not defined for distinct cylindric partitions");
    }
    sys.reversal_quotient = opt.reversal_quotient && !wraps(kind) && a.is_reversal_symmetric();
    const Kind rule = kind == Kind::SCP ? Kind::DSPP : kind;

    auto term_for = [&](const Profile& target, std::int64_t s, int sign) {
        FunctionalTerm t;
        t.target = sys.canonical(target);
        t.shift = s;
        if (sys.normalized) {
            t.coeff = Prefactor::poly(finite_zq(s) * BiPoly::constant(sign));
        } else {
            BiPoly num = rule == Kind::DCP ? BiPoly::monomial(1, s, sign) : BiPoly::constant(sign);
            t.coeff = Prefactor{num, {Binomial{1, 1, s}}};
        }
        return t;
    };

    std::deque<Profile> todo{sys.canonical(seed)};
    std::set<Profile> seen{todo.front()};
    while (!todo.empty()) {
        Profile p = todo.front();
        todo.pop_front();
        Equation eq;
        if (rule == Kind::DCP) eq.terms.push_back({Prefactor::constant(1), 0, std::nullopt});
        if (wraps(rule) && p.is_constant()) {
            if (rule == Kind::CP) eq.terms.push_back(term_for(p, grid_weight(a.total(), sys.scale), 1));
        } else {
            std::vector<int> I = corner_set(rule, p);
            const std::size_t m = I.size();
            for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
                std::vector<int> J;
                Rational s = 0;
                for (std::size_t b = 0; b < m; ++b)
                    if (mask >> b & 1) {
                        J.push_back(I[b]);
                        s += a.a[static_cast<std::size_t>(I[b])];
                    }
                int sign = J.size() % 2 == 1 ? 1 : -1;
                eq.terms.push_back(term_for(swap_corners(rule, p, J), grid_weight(s, sys.scale), sign));
            }
        }
        eq.normalize();
        for (const auto& t : eq.terms)
            if (t.target && seen.insert(*t.target).second) todo.push_back(*t.target);
        sys.equations.emplace(p, std::move(eq));
    }
    return sys;
}

std::string function_name(const FunctionalSystem& sys) {
    if (!sys.normalized) return "F";
    return sys.kind == Kind::CP ? "G" : "H";
}

namespace {

std::string argument(std::int64_t s, int scale) {
    if (s == 0) return "z";
    Rational r = make_rational(static_cast<long>(s), scale);
    if (r == 1) return "z q";
    std::string t = r.get_str();
    if (r < 0 || r.get_den() != 1) t = "(" + t + ")";
    return "z q^" + t;
}

} // namespace

namespace {

// Pulls factors (1 -+ z q^j) out of p; returns the cofactor.
BiPoly split_binomials(BiPoly p, std::vector<Binomial>& factors) {
    if (p.max_z() <= 0) return p;
    for (bool progress = true; progress && p.max_z() > 0;) {
        progress = false;
        for (std::int64_t j = 0; j <= p.max_q() && !progress; ++j)
            for (int c : {1, -1}) {
                if (auto d = p.divide_exact({c, 1, j})) {
                    factors.push_back({c, 1, j});
                    p = std::move(*d);
                    progress = true;
                    break;
                }
            }
    }
    return p;
}

// Display of a coefficient; sets negative when a leading minus sign was pulled out.
std::string coefficient_display(const Prefactor& c, int scale, bool& negative) {
    negative = false;
    if (!c.den.empty()) return c.to_string(scale);
    std::vector<Binomial> factors;
    BiPoly rest = split_binomials(c.num, factors);
    if (!rest.is_zero() && rest.terms().begin()->second < 0) {
        negative = true;
        rest = -rest;
    }
    std::string out;
    if (rest != BiPoly::constant(1)) {
        std::string r = rest.to_string(scale);
        out = factors.empty() || rest.terms().size() == 1 ? r : "(" + r + ")";
        if (!factors.empty()) out += " ";
    }
    for (const auto& b : factors) out += "(" + BiPoly::binomial(b).to_string(scale) + ")";
    if (out.empty()) out = "1";
    return out;
}

} // namespace

std::string to_string(const Equation& eq, const std::string& fname, int scale) {
    std::vector<const FunctionalTerm*> order;
    for (const auto& t : eq.terms) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const FunctionalTerm* x, const FunctionalTerm* y) {
        if (x->target.has_value() != y->target.has_value()) return !x->target.has_value();
        if (x->shift != y->shift) return x->shift < y->shift;
        return x->target < y->target;
    });
    std::ostringstream os;
    bool first = true;
    for (const FunctionalTerm* t : order) {
        bool negative = false;
        std::string c = coefficient_display(t->coeff, scale, negative);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (!t->target) {
            os << c;
            continue;
        }
        if (c != "1") os << c << " ";
        os << fname << "_" << to_string(*t->target) << "(" << argument(t->shift, scale) << ")";
    }
    if (first) os << "0";
    return os.str();
}

std::string to_string(const FunctionalSystem& sys) {
    std::ostringstream os;
    const std::string f = function_name(sys);
    for (const auto& [p, eq] : sys.equations) os << f << "_" << to_string(p) << "(z) = " << to_string(eq, f, sys.scale) << "\n";
    return os.str();
}

FunctionalSystem single_equation_system(const FunctionalSystem& sys, const Profile& keep, const Equation& eq) {
    FunctionalSystem out = sys;
    out.equations.clear();
    out.equations.emplace(sys.canonical(keep), eq);
    return out;
}

} // namespace cylkit
