#include "cylkit/identities.hpp"

namespace cylkit {

namespace {

Window univariate(const Window& w) { return Window{w.q_limit, 0, w.q_scale}; }

void require_integral_grid(const Window& w, const char* what) {
    w.validate();
    if (w.q_scale != 1) throw Error(std::string(what) + " is evaluated on the integer q grid");
}

// dst row z += q^shift * src row 0
void add_row(TruncatedSeries& dst, int z, const TruncatedSeries& src, std::int64_t shift) {
    if (z > dst.z_order()) return;
    auto s = src.row(0);
    auto d = dst.mutable_row(z);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::int64_t e = static_cast<std::int64_t>(i) + shift;
        if (e >= static_cast<std::int64_t>(d.size())) break;
        if (s[i] != 0) d[static_cast<std::size_t>(e)] += s[i];
    }
}

} // namespace

TruncatedSeries sum_rr(int eps, const Window& w) {
    require_integral_grid(w, "the Rogers-Ramanujan sum");
    if (eps != 0 && eps != 1) throw Error("eps must be 0 or 1");
    TruncatedSeries out(w);
    const std::int64_t N = w.q_limit;
    for (long n = 0; n * n + eps * n < N; ++n) {
        const std::int64_t e = n * n + eps * n;
        add_row(out, 0, poch_reciprocal(PochFactor::q(1, 1), n, Window{N - e, 0, 1}), e);
    }
    return out;
}

TruncatedSeries sum_cw_width7(const Window& w) {
    require_integral_grid(w, "the width-seven sum");
    TruncatedSeries out(w);
    const std::int64_t N = w.q_limit;
    for (long n1 = 0;; ++n1) {
        // n2^2 - (n1 - 1) n2 is smallest at n2 = (n1 - 1) / 2
        std::int64_t lowest = -1;
        for (long n2 = 0; n2 <= 2 * n1; ++n2) {
            std::int64_t e = n1 * n1 + n2 * n2 - n1 * n2 + n1 + n2;
            if (lowest < 0 || e < lowest) lowest = e;
        }
        if (lowest >= N) break;
        for (long n2 = 0; n2 <= 2 * n1; ++n2) {
            const std::int64_t e = n1 * n1 + n2 * n2 - n1 * n2 + n1 + n2;
            if (e >= N) continue;
            const Window tw{N - e, 0, 1};
            add_row(out, 0, poch_reciprocal(PochFactor::q(1, 1), n1, tw) * gauss_binomial(2 * n1, n2, tw), e);
        }
    }
    return out;
}

TruncatedSeries sum_thm12(const Window& w) {
    require_integral_grid(w, "the width-four bivariate sum");
    TruncatedSeries out(w);
    const std::int64_t N = w.q_limit;
    for (long n = 0; 2 * n <= w.z_order && 4 * n * n < N; ++n) {
        const std::int64_t e = 4 * n * n;
        const Window tw{N - e, 0, 1};
        TruncatedSeries base = poch_finite(PochFactor::q(2, 4), n, tw);
        base *= poch_finite(PochFactor::q(4, 4, -1), n, tw);
        base *= poch_reciprocal(PochFactor::q(4, 4), 2 * n, tw);
        if (n % 2) base = -base;
        add_row(out, static_cast<int>(2 * n), base, e);
        // - z q^{4n+1} / (1 + q^{4n+2})
        TruncatedSeries odd = -base;
        odd.div_binomial(-1, 0, 4 * n + 2);
        add_row(out, static_cast<int>(2 * n + 1), odd, e + 4 * n + 1);
    }
    return out;
}

TruncatedSeries sum_thm13(WidthSixCase c, const Window& w, FormVariant v) {
    require_integral_grid(w, "the width-six double sum");
    TruncatedSeries out(univariate(w));
    const std::int64_t N = w.q_limit;
    // Every (n, m) summand of the four kernels has valuation at least (3n^2 - 20n - 20) / 4.
    for (long n = 0; 3 * n * n - 20 * n - 20 < 4 * N; ++n) {
        if (h_width6_floor(c, n, v) >= N) continue;
        ShiftedSeries h = h_width6(c, n, N, v);
        try {
            out += h.to_series(univariate(w));
        } catch (const Error& e) {
            throw Error("width-six case " + std::string(width_six_name(c)) + ", n = " + std::to_string(n) + ": " + e.what());
        }
    }
    return out.restricted(w);
}

ProductSpec product_thm13(WidthSixCase c) {
    ProductSpec p;
    switch (c) {
    case WidthSixCase::C:
        p.num = {PochFactor::q(4, 12), PochFactor::q(8, 12)};
        p.den = {PochFactor::q(6, 12)};
        break;
    case WidthSixCase::B:
        p.num = {PochFactor::q(1, 6), PochFactor::q(10, 12)};
        p.den = {PochFactor::q(5, 6)};
        break;
    case WidthSixCase::A:
        p.num = {PochFactor::q(2, 12), PochFactor::q(10, 12)};
        p.den = {PochFactor::q(6, 12)};
        break;
    case WidthSixCase::G:
        p.num = {PochFactor::q(2, 12), PochFactor::q(5, 12), PochFactor::q(11, 12)};
        p.den = {PochFactor::q(1, 6)};
        break;
    }
    return p;
}

TruncatedSeries sum_gollnitz(int c, const Window& w) {
    require_integral_grid(w, "the Göllnitz-type sum");
    if (c < 1 || c > 4) throw Error("Göllnitz-type sums are numbered 1..4");
    TruncatedSeries out(univariate(w));
    const std::int64_t N = w.q_limit;
    const long linear = c == 1 ? 2 : c == 3 ? 0 : 1;
    for (long n = 0;; ++n) {
        const std::int64_t e = n * n + linear * n;
        // (-q^{-1};q^2)_n lowers the valuation by one for n >= 1
        const std::int64_t low = c == 4 && n > 0 ? e - 1 : e;
        if (low >= N) break;
        if (c != 4 || n == 0) {
            const Window tw{N - e, 0, 1};
            add_row(out, 0, poch_finite(PochFactor::q(1, 2, -1), n, tw) * poch_reciprocal(PochFactor::q(2, 2), n, tw), e);
            continue;
        }
        // (-q^{-1};q^2)_n = (1 + q^{-1}) (-q;q^2)_{n-1}, assembled as a Laurent product
        const Window tw{N - low, 0, 1};
        TruncatedSeries body = poch_finite(PochFactor::q(1, 2, -1), n - 1, tw) * poch_reciprocal(PochFactor::q(2, 2), n, tw);
        LaurentPoly head = LaurentPoly::constant(1) + LaurentPoly::monomial(-1);
        ShiftedSeries term = ShiftedSeries(e, std::move(body)) * head;
        try {
            out += term.to_series(univariate(w));
        } catch (const Error& ex) {
            throw Error("Göllnitz-type sum 4, n = " + std::to_string(n) + ": " + ex.what());
        }
    }
    return out;
}

ProductSpec product_gollnitz(int c) {
    ProductSpec p;
    switch (c) {
    case 1: p.den = {PochFactor::q(3, 8), PochFactor::q(4, 8), PochFactor::q(5, 8)}; break;
    case 2: p.den = {PochFactor::q(3, 4), PochFactor::q(2, 8)}; break;
    case 3: p.den = {PochFactor::q(1, 8), PochFactor::q(4, 8), PochFactor::q(7, 8)}; break;
    case 4: p.den = {PochFactor::q(1, 4), PochFactor::q(6, 8)}; break;
    default: throw Error("Göllnitz-type products are numbered 1..4");
    }
    return p;
}

TruncatedSeries sum_schmidt(int c, const Window& w) {
    require_integral_grid(w, "the Schmidt-type closed form");
    const std::int64_t N = w.q_limit;
    const PochFactor zq = PochFactor::zq(1, 1);
    switch (c) {
    case 1: {
        TruncatedSeries out(w);
        for (long n = 0; 2 * n <= w.z_order && n * (n + 1) < N; ++n) {
            TruncatedSeries t = poch_reciprocal(zq, n, w) * poch_reciprocal(zq, n + 1, w);
            out += t.shift_z(static_cast<int>(2 * n)).shift_q(n * (n + 1));
        }
        return out;
    }
    case 2: {
        TruncatedSeries out = TruncatedSeries::one(w);
        const PochFactor z = PochFactor::zq(0, 1);
        for (long n = 1; 2 * n - 1 <= w.z_order && n * (n - 1) < N; ++n) {
            TruncatedSeries t = poch_reciprocal(z, n, w) * poch_reciprocal(zq, n, w);
            out += t.shift_z(static_cast<int>(2 * n - 1)).shift_q(n * (n - 1));
        }
        return out;
    }
    case 3: {
        TruncatedSeries r = poch_infinite_reciprocal(zq, w);
        return r * r;
    }
    case 4: {
        TruncatedSeries r = poch_infinite_reciprocal(zq, w);
        TruncatedSeries out = r * r;
        out.div_binomial(1, 1, 0);
        return out;
    }
    case 5: {
        TruncatedSeries r = poch_infinite_reciprocal(zq, w);
        return poch_infinite(PochFactor::zq(1, 1, -1), w) * r * r * r;
    }
    default: throw Error("Schmidt-type closed forms are numbered 1..5");
    }
}

TruncatedSeries sum_signed_distinct(const Window& w) {
    require_integral_grid(w, "the signed distinct-part sum");
    TruncatedSeries out(univariate(w));
    const std::int64_t N = w.q_limit;
    for (long n = 0; 2 * n * n + n < N; ++n) {
        const std::int64_t e = 2 * n * n + n;
        const Window tw{N - e, 0, 1};
        TruncatedSeries t = poch_finite(PochFactor::q(1, 2), n + 1, tw);
        t *= poch_finite(PochFactor::q(2, 2, -1), n, tw);
        t *= poch_reciprocal(PochFactor::q(2, 2), 2 * n + 1, tw);
        if (n % 2) t = -t;
        add_row(out, 0, t, e);
    }
    return out;
}

} // namespace cylkit
