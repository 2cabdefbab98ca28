#include "cylkit/series.hpp"

#include "cylkit/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace cylkit {

Window Window::make(std::int64_t N, int D, int scale) {
    Window w{N * scale, D, scale};
    w.validate();
    return w;
}

Window Window::rescaled(int scale) const {
    if (scale % q_scale != 0) throw Error("rescale target is not a multiple of the current grid");
    return Window{q_limit * (scale / q_scale), z_order, scale};
}

void Window::validate() const {
    if (q_limit <= 0) throw Error("q-window must be positive");
    if (z_order < 0) throw Error("z-window must be nonnegative");
    if (q_scale <= 0) throw Error("q-scale must be positive");
}

Window intersect(const Window& a, const Window& b) {
    int s = static_cast<int>(std::lcm(a.q_scale, b.q_scale));
    Window ra = a.rescaled(s), rb = b.rescaled(s);
    return Window{std::min(ra.q_limit, rb.q_limit), std::min(a.z_order, b.z_order), s};
}

TruncatedSeries::TruncatedSeries() : TruncatedSeries(Window{}) {}

TruncatedSeries::TruncatedSeries(const Window& w) : window_(w) {
    window_.validate();
    data_.resize(static_cast<std::size_t>(w.z_order + 1) * static_cast<std::size_t>(w.q_limit));
}

TruncatedSeries TruncatedSeries::one(const Window& w) {
    TruncatedSeries s(w);
    s.data_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Window& w, int z, std::int64_t q_grid, const BigInt& c) {
    TruncatedSeries s(w);
    s.add_term(z, q_grid, c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Window& w, int z, const Rational& q_exp, const BigInt& c) {
    return monomial(w, z, to_grid(q_exp, w.q_scale), c);
}

const BigInt& TruncatedSeries::at(int z, std::int64_t q) const {
    if (z < 0 || z > window_.z_order || q < 0 || q >= window_.q_limit)
        throw Error("coefficient requested outside the truncation window");
    return data_[static_cast<std::size_t>(z) * row_length() + static_cast<std::size_t>(q)];
}

BigInt TruncatedSeries::coeff(int z, const Rational& q_exp) const { return at(z, to_grid(q_exp, window_.q_scale)); }

BigInt& TruncatedSeries::mutable_at(int z, std::int64_t q) {
    if (z < 0 || z > window_.z_order || q < 0 || q >= window_.q_limit)
        throw Error("coefficient requested outside the truncation window");
    return data_[static_cast<std::size_t>(z) * row_length() + static_cast<std::size_t>(q)];
}

void TruncatedSeries::add_term(int z, std::int64_t q, const BigInt& c) {
    if (z < 0 || q < 0) throw Error("negative exponent in power series");
    if (z > window_.z_order || q >= window_.q_limit) return;
    data_[static_cast<std::size_t>(z) * row_length() + static_cast<std::size_t>(q)] += c;
}

std::span<const BigInt> TruncatedSeries::row(int z) const {
    return {data_.data() + static_cast<std::size_t>(z) * row_length(), row_length()};
}

std::span<BigInt> TruncatedSeries::mutable_row(int z) {
    return {data_.data() + static_cast<std::size_t>(z) * row_length(), row_length()};
}

std::vector<Term> TruncatedSeries::terms() const {
    std::vector<Term> out;
    for (int z = 0; z <= window_.z_order; ++z) {
        auto r = row(z);
        for (std::size_t q = 0; q < r.size(); ++q)
            if (r[q] != 0) out.push_back({z, static_cast<std::int64_t>(q), r[q]});
    }
    return out;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

std::int64_t TruncatedSeries::nonzero_count() const {
    return std::count_if(data_.begin(), data_.end(), [](const BigInt& v) { return v != 0; });
}

TruncatedSeries TruncatedSeries::rescaled(int scale) const {
    if (scale == window_.q_scale) return *this;
    Window w = window_.rescaled(scale);
    std::int64_t f = scale / window_.q_scale;
    TruncatedSeries out(w);
    for (int z = 0; z <= window_.z_order; ++z) {
        auto src = row(z);
        auto dst = out.mutable_row(z);
        for (std::size_t q = 0; q < src.size(); ++q)
            if (src[q] != 0) dst[q * f] = src[q];
    }
    return out;
}

TruncatedSeries TruncatedSeries::restricted(const Window& w) const {
    if (w == window_) return *this;
    TruncatedSeries base = rescaled(w.q_scale);
    if (w.q_limit > base.q_limit() || w.z_order > base.z_order())
        throw Error("cannot restrict a series to a larger window");
    TruncatedSeries out(w);
    for (int z = 0; z <= w.z_order; ++z) {
        auto src = base.row(z);
        auto dst = out.mutable_row(z);
        std::copy(src.begin(), src.begin() + w.q_limit, dst.begin());
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    Window w = intersect(window_, o.window_);
    if (w != window_) *this = restricted(w);
    const TruncatedSeries& rhs = o.window_ == w ? o : o.restricted(w);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (rhs.data_[k] != 0) data_[k] += rhs.data_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    Window w = intersect(window_, o.window_);
    if (w != window_) *this = restricted(w);
    const TruncatedSeries& rhs = o.window_ == w ? o : o.restricted(w);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (rhs.data_[k] != 0) data_[k] -= rhs.data_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    *this = *this * o;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& c) {
    for (auto& v : data_)
        if (v != 0) v *= c;
    return *this;
}

TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& v : a.data_) v = -v;
    return a;
}

namespace {

struct IntRows {
    std::vector<std::vector<std::int64_t>> rows;  // trimmed to last nonzero
    std::uint64_t max_abs = 0;
};

bool to_int_rows(const TruncatedSeries& s, IntRows& out) {
    out.rows.assign(static_cast<std::size_t>(s.z_order() + 1), {});
    for (int z = 0; z <= s.z_order(); ++z) {
        auto r = s.row(z);
        std::size_t last = r.size();
        while (last > 0 && r[last - 1] == 0) --last;
        auto& dst = out.rows[static_cast<std::size_t>(z)];
        dst.resize(last);
        for (std::size_t q = 0; q < last; ++q) {
            if (!r[q].fits_sint_p()) return false;
            long v = r[q].get_si();
            dst[q] = v;
            out.max_abs = std::max<std::uint64_t>(out.max_abs, static_cast<std::uint64_t>(std::llabs(v)));
        }
    }
    return true;
}

} // namespace

TruncatedSeries operator*(const TruncatedSeries& a0, const TruncatedSeries& b0) {
    Window w = intersect(a0.window_, b0.window_);
    const TruncatedSeries& a = a0.window_ == w ? a0 : a0.restricted(w);
    const TruncatedSeries& b = b0.window_ == w ? b0 : b0.restricted(w);
    TruncatedSeries out(w);
    const int D = w.z_order;
    const std::size_t L = out.row_length();

    IntRows ia, ib;
    if (to_int_rows(a, ia) && to_int_rows(b, ib)) {
        std::uint64_t bound = 0;
        bool ok = !__builtin_mul_overflow(ia.max_abs, ib.max_abs, &bound) &&
                  !__builtin_mul_overflow(bound, static_cast<std::uint64_t>(L), &bound) &&
                  !__builtin_mul_overflow(bound, static_cast<std::uint64_t>(D + 1), &bound);
        if (ok && bound < (std::uint64_t{1} << 62)) {
            std::vector<std::int64_t> acc(L);
            for (int k = 0; k <= D; ++k) {
                std::fill(acc.begin(), acc.end(), 0);
                bool touched = false;
                for (int i = 0; i <= k; ++i) {
                    const auto& ra = ia.rows[static_cast<std::size_t>(i)];
                    const auto& rb = ib.rows[static_cast<std::size_t>(k - i)];
                    if (ra.empty() || rb.empty()) continue;
                    kernels::conv(ra, rb, acc);
                    touched = true;
                }
                if (!touched) continue;
                auto dst = out.mutable_row(k);
                for (std::size_t q = 0; q < L; ++q)
                    if (acc[q] != 0) dst[q] = static_cast<long>(acc[q]);
            }
            return out;
        }
    }

    for (int i = 0; i <= D; ++i) {
        auto ra = a.row(i);
        for (std::size_t x = 0; x < L; ++x) {
            if (ra[x] == 0) continue;
            for (int j = 0; i + j <= D; ++j) {
                auto rb = b.row(j);
                auto dst = out.mutable_row(i + j);
                for (std::size_t y = 0; x + y < L; ++y)
                    if (rb[y] != 0) mpz_addmul(dst[x + y].get_mpz_t(), ra[x].get_mpz_t(), rb[y].get_mpz_t());
            }
        }
    }
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.window_ == b.window_ && a.data_ == b.data_;
}

namespace {

TruncatedSeries univariate_inverse(std::span<const BigInt> s, const Window& w) {
    const BigInt c0 = s[0];
    if (c0 != 1 && c0 != -1) throw Error("inverse requires constant term +1 or -1");
    TruncatedSeries t(w);
    auto tr = t.mutable_row(0);
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j] != 0) nz.push_back(j);
    tr[0] = c0;
    BigInt acc;
    for (std::size_t k = 1; k < tr.size(); ++k) {
        acc = 0;
        for (std::size_t j : nz) {
            if (j > k) break;
            if (tr[k - j] != 0) mpz_addmul(acc.get_mpz_t(), s[j].get_mpz_t(), tr[k - j].get_mpz_t());
        }
        tr[k] = c0 == 1 ? BigInt(-acc) : acc;
    }
    return t;
}

TruncatedSeries row_series(const TruncatedSeries& s, int z) {
    Window w{s.q_limit(), 0, s.q_scale()};
    TruncatedSeries out(w);
    auto src = s.row(z);
    std::copy(src.begin(), src.end(), out.mutable_row(0).begin());
    return out;
}

} // namespace

TruncatedSeries TruncatedSeries::inverse() const {
    const int D = window_.z_order;
    Window uw{window_.q_limit, 0, window_.q_scale};
    TruncatedSeries t0 = univariate_inverse(row(0), uw);
    TruncatedSeries out(window_);
    std::vector<TruncatedSeries> s(static_cast<std::size_t>(D + 1)), t(static_cast<std::size_t>(D + 1));
    for (int k = 0; k <= D; ++k) s[static_cast<std::size_t>(k)] = row_series(*this, k);
    t[0] = t0;
    for (int k = 1; k <= D; ++k) {
        TruncatedSeries acc(uw);
        for (int j = 1; j <= k; ++j) {
            if (s[static_cast<std::size_t>(j)].is_zero() || t[static_cast<std::size_t>(k - j)].is_zero()) continue;
            acc += s[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(k - j)];
        }
        t[static_cast<std::size_t>(k)] = -(t0 * acc);
    }
    for (int k = 0; k <= D; ++k) {
        auto src = t[static_cast<std::size_t>(k)].row(0);
        std::copy(src.begin(), src.end(), out.mutable_row(k).begin());
    }
    return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    Window w = intersect(a.window(), b.window());
    return a.restricted(w) * b.restricted(w).inverse();
}

TruncatedSeries TruncatedSeries::substitute_z(const Rational& e, int c) const {
    if (e < 0) throw Error("substitute_z requires a nonnegative exponent");
    if (c != 1 && c != -1) throw Error("substitute_z requires c = +1 or -1");
    std::int64_t g = to_grid(e, window_.q_scale);
    TruncatedSeries out(window_);
    for (int z = 0; z <= window_.z_order; ++z) {
        auto src = row(z);
        auto dst = out.mutable_row(z);
        std::int64_t off = g * z;
        bool neg = (c == -1) && (z % 2 == 1);
        for (std::int64_t q = 0; q + off < window_.q_limit; ++q) {
            const BigInt& v = src[static_cast<std::size_t>(q)];
            if (v != 0) dst[static_cast<std::size_t>(q + off)] = neg ? BigInt(-v) : v;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::collapse_z(const Rational& e, int c) const {
    if (e <= 0) throw Error("collapse_z requires a positive exponent");
    if (c != 1 && c != -1) throw Error("collapse_z requires c = +1 or -1");
    std::int64_t g = to_grid(e, window_.q_scale);
    std::int64_t limit = std::min<std::int64_t>(window_.q_limit, g * (window_.z_order + 1));
    TruncatedSeries out(Window{limit, 0, window_.q_scale});
    auto dst = out.mutable_row(0);
    for (int z = 0; z <= window_.z_order; ++z) {
        auto src = row(z);
        std::int64_t off = g * z;
        bool neg = (c == -1) && (z % 2 == 1);
        for (std::int64_t q = 0; q + off < limit; ++q) {
            const BigInt& v = src[static_cast<std::size_t>(q)];
            if (v == 0) continue;
            if (neg) dst[static_cast<std::size_t>(q + off)] -= v;
            else dst[static_cast<std::size_t>(q + off)] += v;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::substitute_q_power(const Rational& r0) const {
    Rational r = r0;
    r.canonicalize();
    if (r <= 0) throw Error("substitute_q_power requires a positive power");
    std::int64_t p = to_int64(r.get_num());
    std::int64_t d = to_int64(r.get_den());
    int scale = static_cast<int>(window_.q_scale * d);
    TruncatedSeries out(Window{window_.q_limit * p, window_.z_order, scale});
    for (int z = 0; z <= window_.z_order; ++z) {
        auto src = row(z);
        auto dst = out.mutable_row(z);
        for (std::size_t q = 0; q < src.size(); ++q)
            if (src[q] != 0) dst[q * static_cast<std::size_t>(p)] = src[q];
    }
    return out;
}

TruncatedSeries TruncatedSeries::z_marginal() const {
    TruncatedSeries out(Window{window_.q_limit, 0, window_.q_scale});
    auto dst = out.mutable_row(0);
    for (int z = 0; z <= window_.z_order; ++z) {
        auto src = row(z);
        for (std::size_t q = 0; q < src.size(); ++q)
            if (src[q] != 0) dst[q] += src[q];
    }
    return out;
}

TruncatedSeries TruncatedSeries::z_column(int n) const {
    if (n < 0 || n > window_.z_order) throw Error("z-column outside the truncation window");
    return row_series(*this, n);
}

TruncatedSeries TruncatedSeries::shift_q(std::int64_t g) const {
    if (g >= 0) {
        TruncatedSeries out(window_);
        for (int z = 0; z <= window_.z_order; ++z) {
            auto src = row(z);
            auto dst = out.mutable_row(z);
            for (std::int64_t q = 0; q + g < window_.q_limit; ++q)
                dst[static_cast<std::size_t>(q + g)] = src[static_cast<std::size_t>(q)];
        }
        return out;
    }
    std::int64_t k = -g;
    if (k >= window_.q_limit) throw Error("downward shift consumes the whole window");
    TruncatedSeries out(Window{window_.q_limit - k, window_.z_order, window_.q_scale});
    for (int z = 0; z <= window_.z_order; ++z) {
        auto src = row(z);
        for (std::int64_t q = 0; q < k; ++q)
            if (src[static_cast<std::size_t>(q)] != 0) throw Error("downward shift would produce a negative exponent");
        auto dst = out.mutable_row(z);
        std::copy(src.begin() + k, src.end(), dst.begin());
    }
    return out;
}

TruncatedSeries TruncatedSeries::shift_z(int k) const {
    if (k < 0) throw Error("shift_z requires k >= 0");
    TruncatedSeries out(window_);
    for (int z = 0; z + k <= window_.z_order; ++z) {
        auto src = row(z);
        std::copy(src.begin(), src.end(), out.mutable_row(z + k).begin());
    }
    return out;
}

void TruncatedSeries::mul_binomial(int c, int i, std::int64_t e) {
    if (i < 0 || e < 0) throw Error("binomial factor with negative exponent");
    if (i == 0 && e == 0) {
        *this *= BigInt(1 - c);
        return;
    }
    if (i > window_.z_order || e >= window_.q_limit) return;
    const BigInt cc(c);
    for (int z = window_.z_order; z >= i; --z) {
        auto dst = mutable_row(z);
        auto src = row(z - i);
        for (std::int64_t q = window_.q_limit - 1; q >= e; --q) {
            const BigInt& v = src[static_cast<std::size_t>(q - e)];
            if (v == 0) continue;
            if (c == 1) dst[static_cast<std::size_t>(q)] -= v;
            else if (c == -1) dst[static_cast<std::size_t>(q)] += v;
            else mpz_submul(dst[static_cast<std::size_t>(q)].get_mpz_t(), cc.get_mpz_t(), v.get_mpz_t());
        }
    }
}

void TruncatedSeries::div_binomial(int c, int i, std::int64_t e) {
    if (i < 0 || e < 0) throw Error("binomial factor with negative exponent");
    if (i == 0 && e == 0) {
        if (c == 0) return;
        throw Error("division by a non-unit constant factor");
    }
    if (i > window_.z_order || e >= window_.q_limit) return;
    const BigInt cc(c);
    for (int z = i; z <= window_.z_order; ++z) {
        auto dst = mutable_row(z);
        for (std::int64_t q = e; q < window_.q_limit; ++q) {
            const BigInt& v = data_[static_cast<std::size_t>(z - i) * row_length() + static_cast<std::size_t>(q - e)];
            if (v == 0) continue;
            if (c == 1) dst[static_cast<std::size_t>(q)] += v;
            else if (c == -1) dst[static_cast<std::size_t>(q)] -= v;
            else mpz_addmul(dst[static_cast<std::size_t>(q)].get_mpz_t(), cc.get_mpz_t(), v.get_mpz_t());
        }
    }
}

std::optional<Mismatch> first_mismatch(const TruncatedSeries& a0, const TruncatedSeries& b0) {
    Window w = intersect(a0.window(), b0.window());
    TruncatedSeries a = a0.restricted(w), b = b0.restricted(w);
    std::optional<Mismatch> best;
    for (int z = 0; z <= w.z_order; ++z) {
        auto ra = a.row(z), rb = b.row(z);
        for (std::size_t q = 0; q < ra.size(); ++q) {
            if (ra[q] == rb[q]) continue;
            Rational qe = make_rational(static_cast<long>(q), w.q_scale);
            qe.canonicalize();
            if (!best || qe < best->q || (qe == best->q && z < best->z)) best = Mismatch{z, qe, ra[q], rb[q]};
            break;
        }
    }
    return best;
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) { return !first_mismatch(a, b).has_value(); }

namespace {

struct GridFactor {
    int sign;
    int zdeg;
    std::int64_t b;
    std::int64_t m;
};

GridFactor on_grid(const PochFactor& f, const Window& w) {
    if (f.sign != 1 && f.sign != -1) throw Error("Pochhammer sign must be +1 or -1");
    if (f.z_degree < 0) throw Error("Pochhammer z-degree must be nonnegative");
    return {f.sign, f.z_degree, to_grid(f.q_exponent, w.q_scale), to_grid(f.modulus, w.q_scale)};
}

bool is_zero_factor(const GridFactor& g, std::int64_t e) { return g.zdeg == 0 && e == 0 && g.sign == 1; }

} // namespace

TruncatedSeries poch_finite(const PochFactor& f, long n, const Window& w) {
    w.validate();
    GridFactor g = on_grid(f, w);
    TruncatedSeries s = TruncatedSeries::one(w);
    if (n >= 0) {
        for (long j = 0; j < n; ++j) {
            std::int64_t e = g.b + j * g.m;
            if (e < 0) throw Error("Pochhammer factor with negative exponent");
            if (g.zdeg > w.z_order) break;
            if (e >= w.q_limit && g.m >= 0) break;
            s.mul_binomial(g.sign, g.zdeg, e);
        }
        return s;
    }
    for (long j = 1; j <= -n; ++j) {
        std::int64_t e = g.b - j * g.m;
        if (e < 0) throw Error("Pochhammer factor with negative exponent");
        if (is_zero_factor(g, e)) throw Error("reciprocal of a vanishing Pochhammer factor");
        s.div_binomial(g.sign, g.zdeg, e);
    }
    return s;
}

TruncatedSeries poch_reciprocal(const PochFactor& f, long n, const Window& w) {
    w.validate();
    GridFactor g = on_grid(f, w);
    TruncatedSeries s = TruncatedSeries::one(w);
    if (n >= 0) {
        for (long j = 0; j < n; ++j) {
            std::int64_t e = g.b + j * g.m;
            if (e < 0) throw Error("Pochhammer factor with negative exponent");
            if (is_zero_factor(g, e)) throw Error("non-invertible Pochhammer factor (constant term 0)");
            if (g.zdeg > w.z_order) break;
            if (e >= w.q_limit && g.m >= 0) break;
            s.div_binomial(g.sign, g.zdeg, e);
        }
        return s;
    }
    for (long j = 1; j <= -n; ++j) {
        std::int64_t e = g.b - j * g.m;
        if (is_zero_factor(g, e)) return TruncatedSeries(w);
    }
    for (long j = 1; j <= -n; ++j) {
        std::int64_t e = g.b - j * g.m;
        if (e < 0) throw Error("Pochhammer factor with negative exponent");
        s.mul_binomial(g.sign, g.zdeg, e);
    }
    return s;
}

namespace {

GridFactor checked_infinite(const PochFactor& f, const Window& w) {
    w.validate();
    GridFactor g = on_grid(f, w);
    if (g.m <= 0) throw Error("infinite Pochhammer product needs a positive modulus");
    if (g.b < 0 || (g.zdeg == 0 && g.b == 0)) throw Error("divergent-at-origin factor");
    return g;
}

} // namespace

TruncatedSeries poch_infinite(const PochFactor& f, const Window& w) {
    GridFactor g = checked_infinite(f, w);
    TruncatedSeries s = TruncatedSeries::one(w);
    if (g.zdeg > w.z_order) return s;
    for (std::int64_t e = g.b; e < w.q_limit; e += g.m) s.mul_binomial(g.sign, g.zdeg, e);
    return s;
}

TruncatedSeries poch_infinite_reciprocal(const PochFactor& f, const Window& w) {
    GridFactor g = checked_infinite(f, w);
    TruncatedSeries s = TruncatedSeries::one(w);
    if (g.zdeg > w.z_order) return s;
    for (std::int64_t e = g.b; e < w.q_limit; e += g.m) s.div_binomial(g.sign, g.zdeg, e);
    return s;
}

TruncatedSeries gauss_binomial(long n, long m, const Window& w) {
    w.validate();
    if (m < 0 || n < m) return TruncatedSeries(w);
    TruncatedSeries s = TruncatedSeries::one(w);
    const std::int64_t d = w.q_scale;
    for (long j = 1; j <= m; ++j) s.mul_binomial(1, 0, (n - m + j) * d);
    for (long j = 1; j <= m; ++j) s.div_binomial(1, 0, j * d);
    return s;
}

TruncatedSeries theta_sum(const Rational& b1, const Rational& b2, const Window& w) {
    w.validate();
    if (b1 <= 0 || b2 <= 0) throw Error("theta_sum requires positive parameters");
    TruncatedSeries s(w);
    auto exponent = [&](long n) {
        Rational e = b1 * make_rational(n * (n + 1), 2) + b2 * make_rational(n * (n - 1), 2);
        return to_grid(e, w.q_scale);
    };
    for (long n = 0;; ++n) {
        std::int64_t e = exponent(n);
        if (e >= w.q_limit) break;
        s.add_term(0, e, n % 2 == 0 ? 1 : -1);
    }
    for (long n = -1;; --n) {
        std::int64_t e = exponent(n);
        if (e >= w.q_limit) break;
        s.add_term(0, e, n % 2 == 0 ? 1 : -1);
    }
    return s;
}

Window window_for(std::int64_t N, int D, const std::vector<Rational>& exponents) {
    return Window::make(N, D, static_cast<int>(lcm_of_denominators(exponents)));
}

} // namespace cylkit
