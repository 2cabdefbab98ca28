#include "cylkit/recur.hpp"

#include <sstream>

namespace cylkit {

namespace {

struct ExpandedTerm {
    std::optional<std::size_t> target;
    std::int64_t shift = 0;                // window grid units
    std::vector<TruncatedSeries> columns;  // z^k coefficient, univariate
    std::vector<bool> nonzero;
};

// Inverse of (I - M) over the rationals; empty when singular.
std::optional<std::vector<std::vector<Rational>>> invert_identity_minus(const std::vector<std::vector<BigInt>>& M) {
    const std::size_t P = M.size();
    std::vector<std::vector<Rational>> a(P, std::vector<Rational>(2 * P));
    for (std::size_t i = 0; i < P; ++i) {
        for (std::size_t j = 0; j < P; ++j) a[i][j] = Rational((i == j ? 1 : 0) - M[i][j]);
        a[i][P + i] = 1;
    }
    for (std::size_t c = 0; c < P; ++c) {
        std::size_t piv = c;
        while (piv < P && a[piv][c] == 0) ++piv;
        if (piv == P) return std::nullopt;
        std::swap(a[piv], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t r = 0; r < P; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k < 2 * P; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<Rational>> out(P, std::vector<Rational>(P));
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j) out[i][j] = a[i][P + j];
    return out;
}

std::string coupled_names(const std::vector<Profile>& names, const std::vector<std::vector<BigInt>>& M) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < M.size(); ++i) {
        bool involved = false;
        for (std::size_t j = 0; j < M.size(); ++j) involved = involved || M[i][j] != 0 || M[j][i] != 0;
        if (!involved) continue;
        os << (first ? "" : ", ") << to_string(names[i]);
        first = false;
    }
    return os.str();
}

} // namespace

std::map<Profile, TruncatedSeries> solve_fixed_point(const FunctionalSystem& sys, const Window& w) {
    w.validate();
    if (w.q_scale % sys.scale != 0) throw Error("solver window grid must refine the weight grid");
    const std::int64_t stretch = w.q_scale / sys.scale;
    const int D = w.z_order;
    const std::int64_t L = w.q_limit;
    const Window col_window{L, 0, w.q_scale};

    std::vector<Profile> names;
    std::map<Profile, std::size_t> index;
    for (const auto& [p, eq] : sys.equations) {
        index.emplace(p, names.size());
        names.push_back(p);
    }
    const std::size_t P = names.size();

    std::vector<std::vector<ExpandedTerm>> eqs(P);
    for (const auto& [p, eq] : sys.equations) {
        auto& out = eqs[index.at(p)];
        for (const auto& t : eq.terms) {
            ExpandedTerm e;
            if (t.target) {
                auto it = index.find(*t.target);
                if (it == index.end()) throw Error("system refers to " + to_string(*t.target) + " without an equation for it");
                e.target = it->second;
            }
            e.shift = t.shift * stretch;
            if (e.shift < 0) throw Error("negative shift in a functional equation");
            TruncatedSeries full = t.coeff.to_series(w, stretch);
            for (int k = 0; k <= D; ++k) {
                e.columns.push_back(full.z_column(k).restricted(col_window));
                e.nonzero.push_back(!e.columns.back().is_zero());
            }
            out.push_back(std::move(e));
        }
    }

    const bool homogeneous = !sys.has_inhomogeneous();
    std::vector<std::vector<TruncatedSeries>> X(P, std::vector<TruncatedSeries>(static_cast<std::size_t>(D + 1), TruncatedSeries(col_window)));

    std::optional<std::vector<std::vector<Rational>>> inv_cache[2];
    std::vector<std::vector<BigInt>> M_cache[2];
    bool have[2] = {false, false};

    for (int n = 0; n <= D; ++n) {
        const std::size_t nn = static_cast<std::size_t>(n);
        if (n == 0 && homogeneous) {
            for (std::size_t i = 0; i < P; ++i) X[i][0] = TruncatedSeries::one(col_window);
            continue;
        }
        // Contributions of lower columns.
        std::vector<TruncatedSeries> known(P, TruncatedSeries(col_window));
        for (std::size_t i = 0; i < P; ++i)
            for (const auto& t : eqs[i]) {
                if (!t.target) {
                    if (t.nonzero[nn]) known[i] += t.columns[nn];
                    continue;
                }
                for (int k = 1; k <= n; ++k) {
                    if (!t.nonzero[static_cast<std::size_t>(k)]) continue;
                    const std::int64_t sh = t.shift * (n - k);
                    if (sh >= L) continue;
                    const auto& prev = X[*t.target][static_cast<std::size_t>(n - k)];
                    known[i] += t.columns[static_cast<std::size_t>(k)] * prev.shift_q(sh);
                }
            }

        const int slot = n == 0 ? 0 : 1;
        if (!have[slot]) {
            std::vector<std::vector<BigInt>> M(P, std::vector<BigInt>(P, 0));
            bool any = false;
            for (std::size_t i = 0; i < P; ++i)
                for (const auto& t : eqs[i]) {
                    if (!t.target || t.shift * n != 0 || !t.nonzero[0]) continue;
                    const BigInt& c = t.columns[0].at(0, 0);
                    if (c == 0) continue;
                    M[i][*t.target] += c;
                    any = true;
                }
            M_cache[slot] = M;
            if (any) {
                inv_cache[slot] = invert_identity_minus(M);
                if (!inv_cache[slot])
                    throw Error("singular zero-shift coupling among " + coupled_names(names, M) + "; the system does not determine its solution");
            }
            have[slot] = true;
        }
        const auto& M = M_cache[slot];
        const auto& inv = inv_cache[slot];

        for (std::int64_t g = 0; g < L; ++g) {
            std::vector<BigInt> rhs(P);
            for (std::size_t i = 0; i < P; ++i) {
                BigInt v = known[i].at(0, g);
                for (const auto& t : eqs[i]) {
                    if (!t.target || !t.nonzero[0]) continue;
                    const std::int64_t sh = t.shift * n;
                    const auto& c0 = t.columns[0];
                    const auto& x = X[*t.target][nn];
                    for (std::int64_t e = 0; e + sh <= g; ++e) {
                        if (e == 0 && sh == 0) continue;
                        const BigInt& c = c0.at(0, e);
                        if (c != 0) v += c * x.at(0, g - e - sh);
                    }
                }
                rhs[i] = std::move(v);
            }
            if (!inv) {
                for (std::size_t i = 0; i < P; ++i) X[i][nn].mutable_at(0, g) = rhs[i];
                continue;
            }
            for (std::size_t i = 0; i < P; ++i) {
                Rational acc = 0;
                for (std::size_t j = 0; j < P; ++j)
                    if ((*inv)[i][j] != 0 && rhs[j] != 0) acc += (*inv)[i][j] * Rational(rhs[j]);
                if (acc.get_den() != 1)
                    throw Error("zero-shift coupling among " + coupled_names(names, M) + " forces a non-integral coefficient");
                X[i][nn].mutable_at(0, g) = acc.get_num();
            }
        }
    }

    std::map<Profile, TruncatedSeries> out;
    for (std::size_t i = 0; i < P; ++i) {
        TruncatedSeries s(w);
        for (int n = 0; n <= D; ++n) {
            auto src = X[i][static_cast<std::size_t>(n)].row(0);
            auto dst = s.mutable_row(n);
            for (std::size_t q = 0; q < src.size(); ++q) dst[q] = src[q];
        }
        out.emplace(names[i], std::move(s));
    }
    return out;
}

TruncatedSeries denormalize(const TruncatedSeries& g) {
    return g * poch_infinite_reciprocal(PochFactor::zq(1, 1), g.window());
}

} // namespace cylkit
