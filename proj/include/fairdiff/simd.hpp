#pragma once

// Dense float kernels behind a runtime-selected dispatch table.
//
// Every kernel has a scalar reference implementation. The AVX2 variants are
// compiled in a separate translation unit with -mavx2 -mfma and are only
// selected when the CPU reports both features. Within one level, the value
// of each output element depends only on its own row of inputs, so results
// do not change with batch blocking or thread partitioning.

#include <cstddef>
#include <string_view>

namespace fairdiff::simd {

enum class Level { scalar, avx2 };

struct KernelTable {
  Level level;
  const char* name;
  // c[n x m] (+)= a[n x k] * b[k x m]
  void (*gemm_nn)(const float* a, const float* b, float* c, size_t n, size_t k, size_t m, bool accumulate);
  // c[n x m] (+)= a[n x k] * b[m x k]^T
  void (*gemm_nt)(const float* a, const float* b, float* c, size_t n, size_t k, size_t m, bool accumulate);
  // c[k x m] += a[n x k]^T * b[n x m]
  void (*gemm_tn)(const float* a, const float* b, float* c, size_t n, size_t k, size_t m);
  // y += alpha * x
  void (*axpy)(float alpha, const float* x, float* y, size_t n);
  float (*dot)(const float* x, const float* y, size_t n);
};

const KernelTable& scalar_kernels();
/// Null when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();
/// Best level supported by this binary and CPU, honouring FAIRDIFF_SIMD=scalar|avx2.
Level detect_level();

/// Currently active table. Defaults to detect_level() on first use.
const KernelTable& active();
/// Force a level; falls back to scalar if unsupported. Returns the level in effect.
Level set_level(Level level);
std::string_view level_name(Level level);

}  // namespace fairdiff::simd
