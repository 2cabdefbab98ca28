#include "cylkit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cylkit {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool Partition::is_distinct() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
    os << ")";
    return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        cur.push_back(x);
        partitions_rec(remaining - x, x, cur, out);
        cur.pop_back();
    }
}

std::vector<std::string> split_list(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') s.push_back(c);
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Profile::Profile(std::vector<int> d) : delta(std::move(d)) {
    if (delta.empty()) throw Error("profile width must be at least 1");
    for (int x : delta)
        if (x != 1 && x != -1) throw Error("profile entries must be +1 or -1");
}

int Profile::rank() const { return static_cast<int>(std::count(delta.begin(), delta.end(), -1)); }

Profile Profile::negated_reverse() const {
    std::vector<int> d(delta.rbegin(), delta.rend());
    for (int& x : d) x = -x;
    return Profile(std::move(d));
}

bool Profile::is_constant() const {
    return std::all_of(delta.begin(), delta.end(), [&](int x) { return x == delta.front(); });
}

std::string to_string(const Profile& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.delta.size(); ++i) os << (i ? "," : "") << p.delta[i];
    os << ")";
    return os.str();
}

Profile parse_profile(std::string_view text) {
    std::vector<int> d;
    std::string compact(text);
    if (!compact.empty() && compact.find_first_not_of("+-") == std::string::npos) {
        for (char c : compact) d.push_back(c == '+' ? 1 : -1);
        return Profile(std::move(d));
    }
    for (const auto& item : split_list(text)) {
        if (item == "1" || item == "+1") d.push_back(1);
        else if (item == "-1") d.push_back(-1);
        else throw Error("malformed profile entry: " + item);
    }
    return Profile(std::move(d));
}

std::vector<Profile> all_profiles(int width) {
    std::vector<Profile> out;
    if (width < 1) return out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
        std::vector<int> d(static_cast<std::size_t>(width));
        for (int i = 0; i < width; ++i) d[static_cast<std::size_t>(i)] = (mask >> (width - 1 - i)) & 1 ? 1 : -1;
        out.emplace_back(std::move(d));
    }
    return out;
}

WeightVector::WeightVector(std::vector<Rational> w) : a(std::move(w)) {
    if (a.empty()) throw Error("weight vector must be nonempty");
    for (auto& x : a) {
        x.canonicalize();
        if (x < 0) throw Error("weights must be nonnegative");
    }
    if (total() <= 0) throw Error("total weight must be positive");
}

WeightVector WeightVector::standard(int length) { return WeightVector(std::vector<Rational>(static_cast<std::size_t>(length), Rational(1))); }

WeightVector WeightVector::symmetric(int length) {
    if (length < 2) throw Error("symmetric weights need length at least 2");
    std::vector<Rational> w(static_cast<std::size_t>(length), Rational(2));
    w.front() = 1;
    w.back() = 1;
    return WeightVector(std::move(w));
}

WeightVector WeightVector::of(std::initializer_list<long> w) {
    std::vector<Rational> v;
    for (long x : w) v.emplace_back(x);
    return WeightVector(std::move(v));
}

Rational WeightVector::partial(int k) const {
    if (k < 0 || k > size()) throw Error("partial weight index out of range");
    Rational s = 0;
    for (int j = 0; j < k; ++j) s += a[static_cast<std::size_t>(j)];
    return s;
}

bool WeightVector::all_positive_integers() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.get_den() == 1 && x >= 1; });
}

bool WeightVector::is_reversal_symmetric() const { return std::equal(a.begin(), a.end(), a.rbegin()); }

int WeightVector::grid_scale() const { return static_cast<int>(lcm_of_denominators(a)); }

std::string to_string(const WeightVector& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.a.size(); ++i) os << (i ? "," : "") << w.a[i].get_str();
    os << ")";
    return os.str();
}

WeightVector parse_weights(std::string_view text) {
    std::vector<Rational> w;
    for (const auto& item : split_list(text)) w.push_back(parse_rational(item));
    return WeightVector(std::move(w));
}

std::string_view kind_name(Kind k) {
    switch (k) {
    case Kind::CP: return "CP";
    case Kind::SCP: return "SCP";
    case Kind::DSPP: return "DSPP";
    case Kind::DCP: return "DCP";
    }
    return "CP";
}

std::optional<Kind> parse_kind(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (s == "CP") return Kind::CP;
    if (s == "SCP") return Kind::SCP;
    if (s == "DSPP") return Kind::DSPP;
    if (s == "DCP") return Kind::DCP;
    return std::nullopt;
}

int weight_count(Kind k, int width) { return wraps(k) ? width : width + 1; }

bool wraps(Kind k) { return k == Kind::CP || k == Kind::DCP; }

bool interlaces(const Partition& lam, const Partition& mu, bool strict) {
    const std::size_t n = std::max(lam.parts().size(), mu.parts().size()) + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        int l = lam.part(i), m = mu.part(i), ln = lam.part(i + 1);
        if (l < m || m < ln) return false;
        if (strict) {
            if (m > 0 && l == m) return false;
            if (ln > 0 && m == ln) return false;
        }
    }
    return true;
}

} // namespace cylkit
