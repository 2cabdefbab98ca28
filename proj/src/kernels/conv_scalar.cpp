#include "cylkit/kernels.hpp"

#include <algorithm>

namespace cylkit::kernels {

void axpy_scalar(std::int64_t alpha, std::span<const std::int64_t> x, std::span<std::int64_t> y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

void conv_scalar(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        axpy_scalar(a[i], b, out.subspan(i));
    }
}

} // namespace cylkit::kernels
