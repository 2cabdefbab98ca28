#include "cylkit/lattice.hpp"

#include <sstream>

namespace cylkit {

long GridPartition::size() const {
    const int h = profile.width();
    long s = 0;
    if (kind == Kind::SCP) {
        for (int j = 0; j <= h; ++j) s += (j == 0 || j == h ? 1 : 2) * diagonals[static_cast<std::size_t>(j)].size();
        return s;
    }
    const int n = wraps(kind) ? h : h + 1;
    for (int j = 0; j < n; ++j) s += diagonals[static_cast<std::size_t>(j)].size();
    return s;
}

Rational GridPartition::weighted_size() const {
    Rational s = 0;
    for (std::size_t j = 0; j < weights.a.size() && j < diagonals.size(); ++j) s += weights.a[j] * diagonals[j].size();
    return s;
}

int GridPartition::max_part() const {
    int m = 0;
    for (const auto& d : diagonals) m = std::max(m, d.largest());
    return m;
}

std::optional<std::string> GridPartition::violation() const {
    const int h = profile.width();
    if (static_cast<int>(diagonals.size()) != h + 1) return "expected " + std::to_string(h + 1) + " diagonals";
    if (weights.size() != weight_count(kind, h)) return "expected " + std::to_string(weight_count(kind, h)) + " weights";
    if (kind == Kind::SCP && !(weights == WeightVector::symmetric(h + 1))) return "symmetric objects carry weights (1,2,...,2,1)";
    if (wraps(kind) && diagonals.front() != diagonals.back()) return "first and last diagonals differ";
    const bool strict = kind == Kind::DCP;
    for (int j = 1; j <= h; ++j) {
        const Partition& l = diagonals[static_cast<std::size_t>(j - 1)];
        const Partition& r = diagonals[static_cast<std::size_t>(j)];
        bool ok = profile.at(j) == -1 ? interlaces(l, r, strict) : interlaces(r, l, strict);
        if (!ok) return "diagonals " + std::to_string(j - 1) + " and " + std::to_string(j) + " do not interlace";
    }
    return std::nullopt;
}

std::string canonical_key(const GridPartition& g) {
    std::ostringstream os;
    os << kind_name(g.kind) << to_string(g.profile) << to_string(g.weights);
    for (const auto& d : g.diagonals) os << to_string(d);
    return os.str();
}

} // namespace cylkit
