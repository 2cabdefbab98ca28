#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

// Integer convolution kernels used on the fast path of series multiplication.
// Inputs must lie in the signed 32-bit range and the caller must guarantee that
// no partial sum leaves the signed 64-bit range.

namespace cylkit::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

// Best instruction set available on this machine.
Isa detected_isa();
// What dispatch currently uses (detected unless forced).
Isa active_isa();
// Pin dispatch to a given ISA (falls back to scalar if unsupported); nullopt restores detection.
void force_isa(std::optional<Isa> isa);

// y[k] += alpha * x[k] for k < min(|x|, |y|)
void axpy_scalar(std::int64_t alpha, std::span<const std::int64_t> x, std::span<std::int64_t> y);
// out[i+j] += a[i]*b[j] for i+j < |out|
void conv_scalar(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);

#if defined(CYLKIT_HAVE_AVX2)
void axpy_avx2(std::int64_t alpha, std::span<const std::int64_t> x, std::span<std::int64_t> y);
void conv_avx2(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);
#endif

void axpy(std::int64_t alpha, std::span<const std::int64_t> x, std::span<std::int64_t> y);
void conv(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out);

} // namespace cylkit::kernels
