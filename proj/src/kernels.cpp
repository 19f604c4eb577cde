#include "wring/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace wring::kernels {

namespace scalar {

void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void zscal(std::size_t n, cplx a, cplx* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void diag_mac(std::size_t n, const double* d, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += d[i] * x[i];
}

cplx zdotc(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double nrm2sq(std::size_t n, const cplx* x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void site_flip_mac(std::size_t n, std::size_t s, cplx w, const cplx* x,
                   cplx* y) {
  const cplx wc = std::conj(w);
  for (std::size_t base = 0; base < n; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) {
      y[i] += w * x[i + s];
      y[i + s] += wc * x[i];
    }
  }
}

void site_map2(std::size_t n, std::size_t s, cplx u00, cplx u01, cplx u10,
               cplx u11, cplx* x) {
  for (std::size_t base = 0; base < n; base += 2 * s) {
    for (std::size_t i = base; i < base + s; ++i) {
      const cplx a = x[i];
      const cplx b = x[i + s];
      x[i] = u00 * a + u01 * b;
      x[i + s] = u10 * a + u11 * b;
    }
  }
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define WRING_HAVE_AVX2_BUILD 1
namespace avx2 {
void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
void zscal(std::size_t n, cplx a, cplx* x);
void diag_mac(std::size_t n, const double* d, const cplx* x, cplx* y);
cplx zdotc(std::size_t n, const cplx* x, const cplx* y);
double nrm2sq(std::size_t n, const cplx* x);
void site_flip_mac(std::size_t n, std::size_t s, cplx w, const cplx* x,
                   cplx* y);
void site_map2(std::size_t n, std::size_t s, cplx u00, cplx u01, cplx u10,
               cplx u11, cplx* x);
}  // namespace avx2
#else
#define WRING_HAVE_AVX2_BUILD 0
#endif

namespace {

bool cpu_has_avx2() {
#if WRING_HAVE_AVX2_BUILD
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_initial_backend() {
  if (const char* env = std::getenv("WRING_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::Avx2;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend g_backend = detect_initial_backend();

}  // namespace

Backend active_backend() { return g_backend; }

Backend best_backend() {
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

bool set_backend(Backend b) {
  if (b == Backend::Avx2 && !cpu_has_avx2()) return false;
  g_backend = b;
  return true;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

#if WRING_HAVE_AVX2_BUILD
#define WRING_DISPATCH(fn, ...)                                  \
  do {                                                           \
    if (g_backend == Backend::Avx2) return avx2::fn(__VA_ARGS__); \
    return scalar::fn(__VA_ARGS__);                              \
  } while (0)
#else
#define WRING_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  WRING_DISPATCH(zaxpy, n, a, x, y);
}

void zscal(std::size_t n, cplx a, cplx* x) { WRING_DISPATCH(zscal, n, a, x); }

void diag_mac(std::size_t n, const double* d, const cplx* x, cplx* y) {
  WRING_DISPATCH(diag_mac, n, d, x, y);
}

cplx zdotc(std::size_t n, const cplx* x, const cplx* y) {
  WRING_DISPATCH(zdotc, n, x, y);
}

double nrm2sq(std::size_t n, const cplx* x) { WRING_DISPATCH(nrm2sq, n, x); }

void site_flip_mac(std::size_t n, std::size_t s, cplx w, const cplx* x,
                   cplx* y) {
  WRING_DISPATCH(site_flip_mac, n, s, w, x, y);
}

void site_map2(std::size_t n, std::size_t s, cplx u00, cplx u01, cplx u10,
               cplx u11, cplx* x) {
  WRING_DISPATCH(site_map2, n, s, u00, u01, u10, u11, x);
}

#undef WRING_DISPATCH

}  // namespace wring::kernels
