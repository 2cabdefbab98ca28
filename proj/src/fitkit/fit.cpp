#include "cylkit/fitkit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cylkit {

namespace {

using Row = std::vector<Rational>;  // unknown coefficients, then the constant

// sum_{k < n} a_k as a row over u unknowns
Row partial(int n, int u) {
    Row r(static_cast<std::size_t>(u + 1), 0);
    for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] = 1;
    return r;
}

Row lin(std::initializer_list<std::pair<Rational, Row>> parts, int u) {
    Row r(static_cast<std::size_t>(u + 1), 0);
    for (const auto& [c, row] : parts)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * row[i];
    return r;
}

// Incremental row echelon system; rows are reduced against earlier pivots.
class Echelon {
public:
    explicit Echelon(int unknowns) : u_(unknowns) {}

    // Adds row = 0; false when inconsistent.
    bool add(Row row) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& c = row[pivots_[k]];
            if (c == 0) continue;
            Rational f = c;
            for (std::size_t i = 0; i < row.size(); ++i) row[i] -= f * rows_[k][i];
        }
        std::size_t p = 0;
        while (p < static_cast<std::size_t>(u_) && row[p] == 0) ++p;
        if (p == static_cast<std::size_t>(u_)) return row[static_cast<std::size_t>(u_)] == 0;
        Rational inv = 1 / row[p];
        for (auto& x : row) x *= inv;
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }

    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < static_cast<std::size_t>(u_); ++c)
            if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) out.push_back(c);
        return out;
    }

    // Unique completion for the given free values.
    std::vector<Rational> solve(const std::map<std::size_t, Rational>& free) const {
        std::vector<Rational> x(static_cast<std::size_t>(u_), 0);
        for (const auto& [c, v] : free) x[c] = v;
        for (std::size_t k = rows_.size(); k-- > 0;) {
            Rational v = -rows_[k][static_cast<std::size_t>(u_)];
            for (std::size_t c = 0; c < static_cast<std::size_t>(u_); ++c)
                if (c != pivots_[k]) v -= rows_[k][c] * x[c];
            x[pivots_[k]] = v;
        }
        return x;
    }

private:
    int u_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

int unknown_count(const Row& r) {
    int n = 0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) n += r[i] != 0;
    return n;
}

bool forward_check(const FitProblem& pb, const WeightVector& a) {
    try {
        if (pb.kind == Kind::CP) return w3_weighted(pb.profile, a) == pb.target.at(0);
        auto [w1, w2] = w1_w2(pb.profile, a);
        if (pb.target.size() == 1) return w1 == pb.target[0] && w2.size() == 0;
        return w1 == pb.target[0] && w2 == pb.target[1];
    } catch (const Error&) {
        return false;
    }
}

bool has_zero_entry(const FitProblem& pb, const WeightVector& a) {
    try {
        std::vector<WMultiset> ms;
        if (pb.kind == Kind::CP) ms.push_back(w3_weighted(pb.profile, a));
        else {
            auto [w1, w2] = w1_w2(pb.profile, a);
            ms = {w1, w2};
        }
        for (const auto& m : ms)
            for (const auto& e : m.entries)
                if (e <= 0) return true;
        return false;
    } catch (const Error&) {
        return true;
    }
}

} // namespace

std::vector<std::vector<Row>> symbolic_entries(Kind kind, const Profile& p) {
    const int h = p.width();
    if (kind == Kind::CP) {
        const int u = h;
        std::vector<Row> w{partial(h, u)};
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j) {
                if (p.at(i) == p.at(j)) continue;
                Row gap = lin({{1, partial(j, u)}, {-1, partial(i, u)}}, u);
                w.push_back(p.at(i) > p.at(j) ? gap : lin({{1, partial(h, u)}, {-1, gap}}, u));
            }
        return {w};
    }
    if (kind == Kind::DSPP) {
        const int u = h + 1;
        const Row T = partial(h + 1, u);
        std::vector<Row> w1{T}, w2;
        for (int i = 1; i <= h; ++i) w1.push_back(p.at(i) == -1 ? partial(i, u) : lin({{1, T}, {-1, partial(i, u)}}, u));
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j) {
                const Row Ai = partial(i, u), Aj = partial(j, u);
                if (p.at(i) == -1 && p.at(j) == -1) w2.push_back(lin({{1, Ai}, {1, Aj}}, u));
                else if (p.at(i) == 1 && p.at(j) == 1) w2.push_back(lin({{2, T}, {-1, Ai}, {-1, Aj}}, u));
                else if (p.at(i) < p.at(j)) w2.push_back(lin({{2, T}, {-1, Aj}, {1, Ai}}, u));
                else w2.push_back(lin({{1, Aj}, {-1, Ai}}, u));
            }
        return {w1, w2};
    }
    throw Error("weights can be fitted for CP and DSPP only");
}

FitResult fit_weights(const FitProblem& pb) {
    FitResult res;
    const int h = pb.profile.width();
    if (h == 0) throw Error("empty profile");
    const int u = pb.kind == Kind::CP ? h : h + 1;
    auto sym = symbolic_entries(pb.kind, pb.profile);
    const std::size_t groups = sym.size();

    std::vector<WMultiset> target = pb.target;
    if (pb.kind == Kind::DSPP && target.size() == 1 && sym[1].empty()) target.push_back(WMultiset({}, 2 * target[0].modulus));
    if (target.size() != groups) {
        res.infeasible = "expected " + std::to_string(groups) + " target multiset" + (groups == 1 ? "" : "s") + ", got " +
                         std::to_string(pb.target.size());
        return res;
    }
    for (std::size_t g = 0; g < groups; ++g) {
        if (target[g].size() != sym[g].size()) {
            res.infeasible = "target W" + (groups > 1 ? std::to_string(g + 1) : std::string()) + " has " +
                             std::to_string(target[g].size()) + " entries but the profile " + to_string(pb.profile) +
                             " produces " + std::to_string(sym[g].size());
            return res;
        }
        for (const auto& e : target[g].entries)
            if (e <= 0) {
                res.infeasible = "target entries must be positive";
                return res;
            }
        if (target[g].modulus <= 0) {
            res.infeasible = "target modulus must be positive";
            return res;
        }
    }

    // Flattened matching problem, entries with fewer unknowns first.
    struct Slot {
        std::size_t group;
        Row form;
    };
    std::vector<Slot> slots;
    for (std::size_t g = 0; g < groups; ++g)
        for (const auto& r : sym[g]) slots.push_back({g, r});
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return unknown_count(a.form) < unknown_count(b.form); });

    std::vector<std::map<Rational, int>> remaining(groups);
    for (std::size_t g = 0; g < groups; ++g)
        for (const auto& e : target[g].entries) ++remaining[g][e];

    // the moduli: A_h for CP; T and 2T for DSPP
    Echelon base(u);
    {
        Row total = partial(u, u);
        total[static_cast<std::size_t>(u)] = -target[0].modulus;
        if (!base.add(total)) return res;
        if (groups == 2) {
            Row twice = partial(u, u);
            for (auto& x : twice) x *= 2;
            twice[static_cast<std::size_t>(u)] = -target[1].modulus;
            if (!base.add(twice)) {
                res.infeasible = "W2 modulus must be twice the W1 modulus";
                return res;
            }
        }
    }

    long bound = pb.max_free.value_or(0);
    if (!pb.max_free)
        for (const auto& t : target) bound = std::max<long>(bound, mpz_class(t.modulus.get_num() / t.modulus.get_den()).get_si());

    std::set<std::vector<Rational>> found;
    std::function<void(std::size_t, const Echelon&)> dfs = [&](std::size_t k, const Echelon& sys) {
        if (k == slots.size()) {
            ++res.assignments;
            const auto free = sys.free_columns();
            std::vector<long> vals(free.size(), 0);
            for (;;) {
                std::map<std::size_t, Rational> fv;
                for (std::size_t i = 0; i < free.size(); ++i) fv[free[i]] = vals[i];
                auto x = sys.solve(fv);
                bool good = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; });
                if (good && pb.integral) good = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.get_den() == 1; });
                if (good) found.insert(x);
                std::size_t i = 0;
                while (i < vals.size() && vals[i] == bound) vals[i++] = 0;
                if (i == vals.size()) break;
                ++vals[i];
            }
            return;
        }
        const Slot& s = slots[k];
        for (auto& [value, count] : remaining[s.group]) {
            if (count == 0) continue;
            Row eq = s.form;
            eq[static_cast<std::size_t>(u)] -= value;
            Echelon next = sys;
            if (!next.add(eq)) continue;
            --count;
            dfs(k + 1, next);
            ++count;
        }
    };
    dfs(0, base);

    for (const auto& x : found) {
        WeightVector a{std::vector<Rational>(x)};
        if (has_zero_entry(pb, a)) continue;
        res.solutions.push_back({a, forward_check(pb, a)});
    }
    return res;
}

} // namespace cylkit
