#include "cylkit/lattice.hpp"

#include <algorithm>

namespace cylkit {

Diamond::Diamond(std::vector<int> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    if (!valid()) throw Error("sequence violates the diamond order");
}

long Diamond::weight() const {
    long s = 0;
    for (std::size_t i = 0; i < entries_.size(); i += 3) s += entries_[i];
    return s;
}

// Blocks: apex lambda_{3k+1} >= lambda_{3k+2}, lambda_{3k+3} >= lambda_{3k+4}.
bool Diamond::valid() const {
    for (int x : entries_)
        if (x < 0) return false;
    const std::size_t n = entries_.size() + 3;
    for (std::size_t apex = 1; apex <= n; apex += 3) {
        int a = entry(apex), b = entry(apex + 1), c = entry(apex + 2), next = entry(apex + 3);
        if (a < b || a < c || b < next || c < next) return false;
    }
    return true;
}

namespace {

struct Accumulator {
    std::int64_t L;
    int D;
    std::vector<std::int64_t> counts;
    Accumulator(const Window& w) : L(w.q_limit), D(w.z_order), counts(static_cast<std::size_t>((w.z_order + 1) * w.q_limit), 0) {}
    void add(int z, std::int64_t q, std::int64_t c = 1) { counts[static_cast<std::size_t>(z * L + q)] += c; }
    TruncatedSeries series(const Window& w) const {
        TruncatedSeries s(w);
        for (int z = 0; z <= D; ++z)
            for (std::int64_t q = 0; q < L; ++q)
                if (auto c = counts[static_cast<std::size_t>(z * L + q)]) s.add_term(z, q, BigInt(static_cast<long>(c)));
        return s;
    }
};

// Partitions with lambda_1 <= D, accumulating z^{lambda_1} q^{sum over selected indices}.
void partition_walk(int index, int prev, int first, std::int64_t weight, bool distinct, Parity parity, Accumulator& acc) {
    acc.add(first, weight);
    const bool selected = parity == Parity::odd_indexed ? index % 2 == 1 : index % 2 == 0;
    int top = index == 1 ? acc.D : (distinct ? prev - 1 : prev);
    for (int x = 1; x <= top; ++x) {
        std::int64_t nw = weight + (selected ? x : 0);
        if (nw >= acc.L) break;
        partition_walk(index + 1, x, index == 1 ? x : first, nw, distinct, parity, acc);
    }
}

// Diamonds block by block: apex a, then a pair (b, c) under a, then the next apex under min(b, c).
void diamond_walk(int apex, int first, std::int64_t weight, Accumulator& acc) {
    // pairs (b, c) followed by a zero apex end the diamond
    for (int b = 0; b <= apex; ++b)
        for (int c = 0; c <= apex; ++c) {
            acc.add(first, weight);
            int cap = std::min(b, c);
            for (int next = 1; next <= cap && weight + next < acc.L; ++next) diamond_walk(next, first, weight + next, acc);
        }
}

void distinct_signed_walk(int prev, std::int64_t size, int sign, Accumulator& acc) {
    acc.add(0, size, sign);
    for (int x = prev + 1; size + x < acc.L; ++x) distinct_signed_walk(x, size + x, x % 2 ? -sign : sign, acc);
}

// Distinct partitions with largest part m whose statistic (sum over parts at indices
// flagged by `counts`) equals n; the statistic only grows, so it prunes the walk.
template <class Pred>
long distinct_with_statistic(int n, int m, Pred counts) {
    if (n < 0 || m < 0) return 0;
    if (m == 0) return n == 0 ? 1 : 0;
    long found = 0;
    auto walk = [&](auto&& self, int index, int prev, long stat) -> void {
        if (stat == n) ++found;
        for (int x = prev - 1; x >= 1; --x) {
            long next = stat + (counts(index) ? x : 0);
            if (next > n) continue;
            self(self, index + 1, x, next);
        }
    };
    long start = counts(1) ? m : 0;
    if (start <= n) walk(walk, 2, m, start);
    return found;
}

} // namespace

TruncatedSeries schmidt_genfun(SchmidtClass cls, Parity parity, const Window& w) {
    w.validate();
    if (w.q_scale != 1) throw Error("partition statistics live on the integer grid");
    Accumulator acc(w);
    switch (cls) {
    case SchmidtClass::distinct:
    case SchmidtClass::unrestricted:
        partition_walk(1, 0, 0, 0, cls == SchmidtClass::distinct, parity, acc);
        break;
    case SchmidtClass::diamond:
        acc.add(0, 0);
        for (int a = 1; a <= w.z_order && a < w.q_limit; ++a) diamond_walk(a, a, a, acc);
        break;
    }
    return acc.series(w);
}

long count_by_hook(int n, int m) {
    long c = 0;
    for (const Partition& p : partitions_of(n))
        if (p.largest_hook() == m) ++c;
    return c;
}

long count_distinct_by_altsum(int n, int m) {
    return distinct_with_statistic(n, m, [](int i) { return i % 2 == 1; });
}

long count_by_hook_parts_above_one(int n, int m) {
    long c = 0;
    for (const Partition& p : partitions_of(n))
        if ((p.length() == 0 || p.parts().back() > 1) && p.largest_hook() == m) ++c;
    return c;
}

long count_distinct_by_first_plus_even(int n, int m) {
    return distinct_with_statistic(n, m, [](int i) { return i == 1 || i % 2 == 0; });
}

TruncatedSeries weighted_distinct_signed_genfun(const Window& w) {
    w.validate();
    if (w.q_scale != 1) throw Error("partition statistics live on the integer grid");
    Window flat = Window::make(w.q_limit);
    Accumulator acc(flat);
    distinct_signed_walk(0, 0, 1, acc);
    return acc.series(flat);
}

} // namespace cylkit
