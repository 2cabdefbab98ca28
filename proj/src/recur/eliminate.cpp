#include "cylkit/recur.hpp"

#include <algorithm>
#include <set>

namespace cylkit {

namespace {

// A cycle among the profiles other than `keep`, if any.
std::optional<std::vector<Profile>> find_cycle(const FunctionalSystem& sys, const Profile& keep) {
    std::map<Profile, int> state;  // 0 unvisited, 1 on stack, 2 done
    std::vector<Profile> stack;
    std::optional<std::vector<Profile>> found;

    std::function<void(const Profile&)> visit = [&](const Profile& p) {
        state[p] = 1;
        stack.push_back(p);
        for (const auto& t : sys.equations.at(p).terms) {
            if (found) return;
            if (!t.target || *t.target == keep) continue;
            int s = state[*t.target];
            if (s == 1) {
                auto it = std::find(stack.begin(), stack.end(), *t.target);
                found = std::vector<Profile>(it, stack.end());
                found->push_back(*t.target);
                return;
            }
            if (s == 0) visit(*t.target);
        }
        stack.pop_back();
        state[p] = 2;
    };
    for (const auto& [p, eq] : sys.equations) {
        if (p == keep || state[p] != 0) continue;
        visit(p);
        if (found) break;
    }
    return found;
}

} // namespace

Elimination eliminate(const FunctionalSystem& sys, const Profile& keep_in) {
    Elimination r;
    const Profile keep = sys.canonical(keep_in);
    auto it = sys.equations.find(keep);
    if (it == sys.equations.end()) {
        r.failure = "profile " + to_string(keep_in) + " is not part of the system";
        return r;
    }
    if (auto cyc = find_cycle(sys, keep)) {
        std::string path;
        for (std::size_t i = 0; i < cyc->size(); ++i) path += (i ? " -> " : "") + to_string((*cyc)[i]);
        r.failure = "substitution cycle avoiding " + to_string(keep) + ": " + path;
        return r;
    }
    Equation eq = it->second;
    const std::size_t cap = 100000;
    std::size_t steps = 0;
    for (;;) {
        auto pos = std::find_if(eq.terms.begin(), eq.terms.end(), [&](const FunctionalTerm& t) { return t.target && *t.target != keep; });
        if (pos == eq.terms.end()) break;
        if (++steps > cap) {
            r.failure = "substitution did not close within " + std::to_string(cap) + " steps";
            return r;
        }
        FunctionalTerm t = *pos;
        eq.terms.erase(pos);
        for (const auto& u : sys.equations.at(*t.target).terms) {
            FunctionalTerm n;
            n.coeff = t.coeff * u.coeff.shifted(t.shift);
            n.target = u.target;
            n.shift = u.target ? t.shift + u.shift : 0;
            eq.terms.push_back(std::move(n));
        }
        eq.normalize();
    }
    r.ok = true;
    r.equation = std::move(eq);
    return r;
}

} // namespace cylkit
