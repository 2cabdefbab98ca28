#include "cylkit/lattice.hpp"

#include <algorithm>
#include <limits>

namespace cylkit {

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

enum class Rel { below, above };

struct Step {
    int node;
    int parent;
    Rel rel;  // position of the new diagonal relative to its parent
};

struct Edge {
    int left;
    int right;
    int sign;  // -1: left >= right, +1: left <= right
};

struct Plan {
    int nodes = 0;
    std::vector<Edge> edges;
    std::vector<Step> steps;
    std::optional<Edge> closing;
    std::vector<std::int64_t> weight;  // per node, grid units
    std::vector<std::int64_t> part_cap;
    std::vector<std::int64_t> row_cap;
    bool strict = false;
    bool wrap = false;
};

Rel child_relation(const Edge& e, bool child_is_right) {
    if (e.sign == -1) return child_is_right ? Rel::below : Rel::above;
    return child_is_right ? Rel::above : Rel::below;
}

WeightVector effective_weights(Kind kind, const Profile& profile, const WeightVector& weights) {
    const int h = profile.width();
    if (kind == Kind::SCP) {
        WeightVector sym = WeightVector::symmetric(h + 1);
        if (!weights.a.empty() && !(weights == sym)) throw Error("symmetric objects carry weights (1,2,...,2,1)");
        return sym;
    }
    if (weights.size() != weight_count(kind, h))
        throw Error("weight vector length " + std::to_string(weights.size()) + " does not match " + std::string(kind_name(kind)) +
                    " of width " + std::to_string(h));
    return weights;
}

Plan make_plan(Kind kind, const Profile& profile, const WeightVector& weights, int scale, std::int64_t budget,
               const EnumCaps& caps) {
    Plan p;
    const int h = profile.width();
    p.wrap = wraps(kind);
    p.strict = kind == Kind::DCP;
    p.nodes = p.wrap ? h : h + 1;
    for (int j = 1; j <= h; ++j) p.edges.push_back({j - 1, p.wrap ? j % h : j, profile.at(j)});

    p.weight.resize(static_cast<std::size_t>(p.nodes));
    for (int j = 0; j < p.nodes; ++j) p.weight[static_cast<std::size_t>(j)] = to_grid(weights.a[static_cast<std::size_t>(j)], scale);

    // Part and row bounds: own weight, then propagate along interlacing edges.
    p.part_cap.assign(static_cast<std::size_t>(p.nodes), kUnbounded);
    p.row_cap.assign(static_cast<std::size_t>(p.nodes), kUnbounded);
    for (int j = 0; j < p.nodes; ++j) {
        auto sj = static_cast<std::size_t>(j);
        if (p.weight[sj] > 0) p.part_cap[sj] = p.row_cap[sj] = budget / p.weight[sj];
        if (caps.max_part) p.part_cap[sj] = std::min<std::int64_t>(p.part_cap[sj], *caps.max_part);
        if (caps.max_rows) p.row_cap[sj] = std::min<std::int64_t>(p.row_cap[sj], *caps.max_rows);
    }
    for (int round = 0; round < 2 * p.nodes + 2; ++round) {
        bool changed = false;
        auto relax = [&](std::int64_t& target, std::int64_t bound) {
            if (bound < target) {
                target = bound;
                changed = true;
            }
        };
        for (const Edge& e : p.edges) {
            auto l = static_cast<std::size_t>(e.left), r = static_cast<std::size_t>(e.right);
            std::size_t hi = e.sign == -1 ? l : r;  // the larger diagonal
            std::size_t lo = e.sign == -1 ? r : l;
            relax(p.part_cap[lo], p.part_cap[hi]);
            relax(p.row_cap[lo], p.row_cap[hi]);
            if (p.row_cap[lo] < kUnbounded) relax(p.row_cap[hi], p.row_cap[lo] + 1);
        }
        if (!changed) break;
    }
    for (int j = 0; j < p.nodes; ++j) {
        auto sj = static_cast<std::size_t>(j);
        if (p.part_cap[sj] >= kUnbounded || p.row_cap[sj] >= kUnbounded)
            throw Error("unbounded enumeration: diagonal " + std::to_string(j) + " needs a max_part / max_rows cap");
    }

    int start = 0;
    for (int j = 1; j < p.nodes; ++j)
        if (p.weight[static_cast<std::size_t>(j)] > p.weight[static_cast<std::size_t>(start)]) start = j;
    p.steps.push_back({start, -1, Rel::below});
    if (p.wrap) {
        for (int k = 1; k < h; ++k) {
            int node = (start + k) % h, parent = (start + k - 1) % h;
            const Edge& e = p.edges[static_cast<std::size_t>(parent)];
            p.steps.push_back({node, parent, child_relation(e, true)});
        }
        p.closing = p.edges[static_cast<std::size_t>((start + h - 1) % h)];
    } else {
        for (int node = start + 1; node <= h; ++node)
            p.steps.push_back({node, node - 1, child_relation(p.edges[static_cast<std::size_t>(node - 1)], true)});
        for (int node = start - 1; node >= 0; --node)
            p.steps.push_back({node, node + 1, child_relation(p.edges[static_cast<std::size_t>(node)], false)});
    }
    return p;
}

class Walker {
public:
    Walker(const Plan& plan, std::int64_t budget, const ObjectVisitor& visit)
        : plan_(plan), budget_(budget), visit_(visit), cur_(static_cast<std::size_t>(plan.wrap ? plan.nodes + 1 : plan.nodes)) {}

    void run() { step(0, 0); }

private:
    const Plan& plan_;
    std::int64_t budget_;
    const ObjectVisitor& visit_;
    std::vector<std::vector<int>> cur_;
    std::vector<int> lo_, hi_;

    void step(std::size_t k, std::int64_t used) {
        if (k == plan_.steps.size()) {
            finish(used);
            return;
        }
        const Step& s = plan_.steps[k];
        auto node = static_cast<std::size_t>(s.node);
        std::vector<int>& out = cur_[node];
        const std::int64_t w = plan_.weight[node];
        const std::int64_t pcap = plan_.part_cap[node];
        const std::int64_t rcap = plan_.row_cap[node];
        if (s.parent < 0) {
            out.clear();
            free_parts(k, used, w, static_cast<int>(pcap), rcap);
            return;
        }
        const std::vector<int>& nb = cur_[static_cast<std::size_t>(s.parent)];
        auto part = [&](std::size_t i) { return i >= 1 && i <= nb.size() ? nb[i - 1] : 0; };
        const int st = plan_.strict ? 1 : 0;
        std::vector<int> lo, hi;
        if (s.rel == Rel::below) {
            for (std::size_t i = 1; i <= nb.size(); ++i) {
                int l = part(i + 1) > 0 ? part(i + 1) + st : 0;
                int u = part(i) - st;
                lo.push_back(l);
                hi.push_back(u);
            }
        } else {
            for (std::size_t i = 1; i <= nb.size() + 1; ++i) {
                int l = part(i) > 0 ? part(i) + st : 0;
                int u = i == 1 ? static_cast<int>(pcap) : part(i - 1) - st;
                lo.push_back(l);
                hi.push_back(u);
            }
        }
        for (std::size_t i = 0; i < lo.size(); ++i) {
            hi[i] = static_cast<int>(std::min<std::int64_t>(hi[i], pcap));
            if (static_cast<std::int64_t>(i) >= rcap) hi[i] = std::min(hi[i], 0);
            if (lo[i] > hi[i]) return;
        }
        // suffix sums of lower bounds for budget pruning
        std::vector<std::int64_t> tail(lo.size() + 1, 0);
        for (std::size_t i = lo.size(); i-- > 0;) tail[i] = tail[i + 1] + lo[i];
        if (used + w * tail[0] > budget_) return;
        out.assign(lo.size(), 0);
        interval_parts(k, used, w, lo, hi, tail, 0);
    }

    void interval_parts(std::size_t k, std::int64_t used, std::int64_t w, const std::vector<int>& lo, const std::vector<int>& hi,
                        const std::vector<std::int64_t>& tail, std::size_t i) {
        std::vector<int>& out = cur_[static_cast<std::size_t>(plan_.steps[k].node)];
        if (i == lo.size()) {
            std::vector<int> saved = out;
            while (!out.empty() && out.back() == 0) out.pop_back();
            step(k + 1, used);
            out = std::move(saved);
            return;
        }
        std::int64_t room = budget_ - used - w * tail[i + 1];
        int top = hi[i];
        if (w > 0) top = static_cast<int>(std::min<std::int64_t>(top, room / w));
        for (int x = lo[i]; x <= top; ++x) {
            out[i] = x;
            interval_parts(k, used + w * x, w, lo, hi, tail, i + 1);
        }
        out[i] = 0;
    }

    void free_parts(std::size_t k, std::int64_t used, std::int64_t w, int max_allowed, std::int64_t rcap) {
        std::vector<int>& out = cur_[static_cast<std::size_t>(plan_.steps[k].node)];
        step(k + 1, used);
        if (static_cast<std::int64_t>(out.size()) >= rcap) return;
        int top = max_allowed;
        if (w > 0) top = static_cast<int>(std::min<std::int64_t>(top, (budget_ - used) / w));
        for (int x = 1; x <= top; ++x) {
            out.push_back(x);
            free_parts(k, used + w * x, w, x, rcap);
            out.pop_back();
        }
    }

    void finish(std::int64_t used) {
        if (plan_.wrap) {
            cur_.back() = cur_.front();
            if (plan_.closing) {
                const Edge& e = *plan_.closing;
                Partition l(cur_[static_cast<std::size_t>(e.left)]), r(cur_[static_cast<std::size_t>(e.right)]);
                bool ok = e.sign == -1 ? interlaces(l, r, plan_.strict) : interlaces(r, l, plan_.strict);
                if (!ok) return;
            }
        }
        int mx = 0;
        for (const auto& d : cur_)
            if (!d.empty()) mx = std::max(mx, d.front());
        visit_(cur_, ObjectStats{used, mx});
    }
};

} // namespace

void for_each_object(Kind kind, const Profile& profile, const WeightVector& weights0, const EnumCaps& caps, int scale,
                     const ObjectVisitor& visit) {
    WeightVector weights = effective_weights(kind, profile, weights0);
    if (!caps.max_weighted_size) throw Error("unbounded enumeration: max_weighted_size is required");
    Rational cap = *caps.max_weighted_size * scale;
    if (cap < 0) return;
    std::int64_t budget = to_int64(BigInt(cap.get_num() / cap.get_den()));
    Plan plan = make_plan(kind, profile, weights, scale, budget, caps);
    Walker(plan, budget, visit).run();
}

std::vector<GridPartition> enumerate(Kind kind, const Profile& profile, const WeightVector& weights0, const EnumCaps& caps) {
    WeightVector weights = effective_weights(kind, profile, weights0);
    int scale = weights.grid_scale();
    if (caps.max_weighted_size) scale = static_cast<int>(lcm(scale, static_cast<long>(to_int64(caps.max_weighted_size->get_den()))));
    std::vector<std::pair<std::int64_t, GridPartition>> found;
    for_each_object(kind, profile, weights, caps, scale, [&](const std::vector<std::vector<int>>& diags, const ObjectStats& st) {
        GridPartition g{kind, profile, weights, {}};
        for (const auto& d : diags) g.diagonals.emplace_back(d);
        found.emplace_back(st.weighted_grid, std::move(g));
    });
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second.diagonals < y.second.diagonals;
    });
    std::vector<GridPartition> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

TruncatedSeries genfun_by_enumeration(Kind kind, const Profile& profile, const WeightVector& weights0, const Window& w,
                                      std::optional<int> max_rows) {
    w.validate();
    WeightVector weights = effective_weights(kind, profile, weights0);
    for (const auto& a : weights.a) to_grid(a, w.q_scale);  // weights must sit on the window grid
    EnumCaps caps;
    caps.max_weighted_size = Rational(static_cast<long>(w.q_limit - 1), w.q_scale);
    caps.max_weighted_size->canonicalize();
    caps.max_part = w.z_order;
    caps.max_rows = max_rows;
    const std::size_t L = static_cast<std::size_t>(w.q_limit);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(w.z_order + 1) * L, 0);
    for_each_object(kind, profile, weights, caps, w.q_scale, [&](const std::vector<std::vector<int>>&, const ObjectStats& st) {
        ++counts[static_cast<std::size_t>(st.max_part) * L + static_cast<std::size_t>(st.weighted_grid)];
    });
    TruncatedSeries s(w);
    for (int z = 0; z <= w.z_order; ++z)
        for (std::size_t q = 0; q < L; ++q) {
            std::int64_t c = counts[static_cast<std::size_t>(z) * L + q];
            if (c) s.add_term(z, static_cast<std::int64_t>(q), BigInt(static_cast<long>(c)));
        }
    return s;
}

} // namespace cylkit
