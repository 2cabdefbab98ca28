#include "cylkit/kernels.hpp"

#include <atomic>

namespace cylkit::kernels {

namespace {

constexpr int kUnforced = -1;
std::atomic<int> forced{kUnforced};

bool cpu_has_avx2() {
#if defined(CYLKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

} // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "scalar";
}

std::optional<Isa> parse_isa(std::string_view name) {
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2") return Isa::avx2;
    return std::nullopt;
}

Isa detected_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() {
    int f = forced.load(std::memory_order_relaxed);
    if (f == kUnforced) return detected_isa();
    Isa want = static_cast<Isa>(f);
    if (want == Isa::avx2 && !cpu_has_avx2()) return Isa::scalar;
    return want;
}

void force_isa(std::optional<Isa> isa) {
    forced.store(isa ? static_cast<int>(*isa) : kUnforced, std::memory_order_relaxed);
}

void axpy(std::int64_t alpha, std::span<const std::int64_t> x, std::span<std::int64_t> y) {
#if defined(CYLKIT_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return axpy_avx2(alpha, x, y);
#endif
    axpy_scalar(alpha, x, y);
}

void conv(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out) {
#if defined(CYLKIT_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return conv_avx2(a, b, out);
#endif
    conv_scalar(a, b, out);
}

} // namespace cylkit::kernels
