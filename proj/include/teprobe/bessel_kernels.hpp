#pragma once

#include <cstddef>
#include <string_view>

namespace teprobe::kernels {

// Batch kernels for the assembly inner loops. All pointers address arrays of
// length n; arguments must be positive and finite. The j0y0j1y1 kernel fills
// the four cylinder-function values at each x; k0k1 fills the two modified
// Bessel values.
using JyBatchFn = void (*)(const double* x, std::size_t n,
                           double* j0, double* y0, double* j1, double* y1);
using KBatchFn = void (*)(const double* x, std::size_t n,
                          double* k0, double* k1);

struct Backend {
    JyBatchFn j0y0j1y1;
    KBatchFn k0k1;
    const char* name;
};

// Scalar reference implementation (always available).
const Backend& scalar_backend();

// AVX2 implementation, or nullptr when the build or the CPU lacks support.
const Backend* avx2_backend();

// Runtime-selected backend. Defaults to the widest supported instruction
// set; the TEPROBE_KERNELS environment variable ("scalar", "avx2", "auto")
// or select_backend() overrides.
const Backend& active_backend();

// name: "auto", "scalar" or "avx2"; throws std::invalid_argument for an
// unknown name and std::runtime_error if the requested backend is
// unavailable on this machine.
void select_backend(std::string_view name);

}  // namespace teprobe::kernels
