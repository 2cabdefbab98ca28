#include <doctest.h>

#include "cylkit/kernels.hpp"
#include "cylkit/series.hpp"

#include <random>
#include <vector>

using namespace cylkit;

namespace {

std::vector<std::int64_t> random_ints(std::mt19937_64& rng, std::size_t n, std::int64_t range, double zero_rate) {
    std::uniform_int_distribution<std::int64_t> d(-range, range);
    std::bernoulli_distribution z(zero_rate);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = z(rng) ? 0 : d(rng);
    return v;
}

std::vector<std::int64_t> naive_conv(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::size_t n) {
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (i + j < n) out[i + j] += a[i] * b[j];
    return out;
}

struct IsaGuard {
    ~IsaGuard() { kernels::force_isa(std::nullopt); }
};

} // namespace

TEST_CASE("scalar convolution matches the schoolbook product") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 3u, 7u, 16u, 33u, 100u}) {
        auto a = random_ints(rng, n, 1000, 0.3);
        auto b = random_ints(rng, n + 2, 1000, 0.3);
        std::vector<std::int64_t> out(n, 0);
        kernels::conv_scalar(a, b, out);
        CHECK(out == naive_conv(a, b, n));
    }
}

#if defined(CYLKIT_HAVE_AVX2)
TEST_CASE("AVX2 kernels agree with the scalar reference") {
    if (kernels::detected_isa() != kernels::Isa::avx2) {
        MESSAGE("AVX2 not available on this CPU; equivalence check skipped");
        return;
    }
    std::mt19937_64 rng(12);
    const std::int64_t big = (std::int64_t{1} << 31) - 1;
    for (std::size_t n = 0; n < 70; ++n) {
        for (std::int64_t range : {std::int64_t{3}, std::int64_t{100000}, big}) {
            auto x = random_ints(rng, n, range, 0.1);
            auto y0 = random_ints(rng, n, 1 << 20, 0.0);
            std::int64_t alpha = std::uniform_int_distribution<std::int64_t>(-range, range)(rng);
            auto ys = y0, yv = y0;
            kernels::axpy_scalar(alpha, x, ys);
            kernels::axpy_avx2(alpha, x, yv);
            CHECK(ys == yv);

            auto a = random_ints(rng, n, std::min<std::int64_t>(range, 1 << 15), 0.2);
            auto b = random_ints(rng, n + 5, std::min<std::int64_t>(range, 1 << 15), 0.2);
            std::vector<std::int64_t> cs(n, 0), cv(n, 0);
            kernels::conv_scalar(a, b, cs);
            kernels::conv_avx2(a, b, cv);
            CHECK(cs == cv);
        }
    }
    // extreme operands: -2^31 * -2^31 fits in 63 bits
    std::vector<std::int64_t> x{-(std::int64_t{1} << 31), big, -big, 1, 0};
    std::vector<std::int64_t> ys(5, 0), yv(5, 0);
    kernels::axpy_scalar(-(std::int64_t{1} << 31), x, ys);
    kernels::axpy_avx2(-(std::int64_t{1} << 31), x, yv);
    CHECK(ys == yv);
}
#endif

TEST_CASE("series products are identical under every kernel") {
    IsaGuard guard;
    Window w = Window::make(120, 6);
    TruncatedSeries a = poch_infinite(PochFactor::zq(1, 1), w).inverse();
    TruncatedSeries b = poch_infinite(PochFactor::zq(2, 3, -1), w) * poch_infinite(PochFactor::q(1, 2), w);
    kernels::force_isa(kernels::Isa::scalar);
    CHECK(kernels::active_isa() == kernels::Isa::scalar);
    TruncatedSeries ref = a * b;
    kernels::force_isa(kernels::Isa::avx2);
    TruncatedSeries fast = a * b;
    CHECK(ref == fast);
    kernels::force_isa(std::nullopt);
    CHECK(kernels::active_isa() == kernels::detected_isa());
}

TEST_CASE("ISA names round-trip") {
    CHECK(kernels::parse_isa("scalar") == kernels::Isa::scalar);
    CHECK(kernels::parse_isa("avx2") == kernels::Isa::avx2);
    CHECK_FALSE(kernels::parse_isa("neon").has_value());
    CHECK(kernels::isa_name(kernels::Isa::avx2) == "avx2");
}
