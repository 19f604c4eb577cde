// AVX2 variants of the complex inner loops. Compiled with -mavx2 -mfma and
// selected at runtime; kept in exact functional correspondence with the
// scalar reference in kernels.cpp (summation order may differ).
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "wring/kernels.hpp"

namespace wring::kernels::avx2 {

namespace {

// Complex multiply of packed [re, im] pairs by the scalar (ar + i*ai):
// lanes [x0r*ar - x0i*ai, x0i*ar + x0r*ai, ...]
inline __m256d cmul(__m256d x, __m256d ar, __m256d ai) {
  __m256d xs = _mm256_permute_pd(x, 0x5);  // swap re/im in each pair
  return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(xs, ai));
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  auto* yd = reinterpret_cast<double*>(y);
  const auto* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(xv, ar, ai)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void zscal(std::size_t n, cplx a, cplx* x) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  auto* xd = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    _mm256_storeu_pd(xd + 2 * i, cmul(xv, ar, ai));
  }
  for (; i < n; ++i) x[i] *= a;
}

void diag_mac(std::size_t n, const double* d, const cplx* x, cplx* y) {
  auto* yd = reinterpret_cast<double*>(y);
  const auto* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m128d dp = _mm_loadu_pd(d + i);
    __m256d dd = _mm256_permute4x64_pd(_mm256_castpd128_pd256(dp), 0x50);
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_fmadd_pd(dd, xv, yv));
  }
  for (; i < n; ++i) y[i] += d[i] * x[i];
}

cplx zdotc(std::size_t n, const cplx* x, const cplx* y) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  __m256d acc_a = _mm256_setzero_pd();
  __m256d acc_b = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_a = _mm256_fmadd_pd(xv, yv, acc_a);
    acc_b = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc_b);
  }
  const __m256d sign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(acc_a);
  double im = hsum(_mm256_mul_pd(acc_b, sign));
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double nrm2sq(std::size_t n, const cplx* x) {
  const auto* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void site_flip_mac(std::size_t n, std::size_t s, cplx w, const cplx* x,
                   cplx* y) {
  const cplx wc = std::conj(w);
  if (s == 1) {
    // Interleaved pairs: y[2k] += w*x[2k+1], y[2k+1] += conj(w)*x[2k].
    const __m256d ar = _mm256_set1_pd(w.real());
    const __m256d ai = _mm256_set_pd(-w.imag(), -w.imag(), w.imag(), w.imag());
    auto* yd = reinterpret_cast<double*>(y);
    const auto* xd = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      __m256d xv = _mm256_loadu_pd(xd + 2 * i);
      __m256d partner = _mm256_permute2f128_pd(xv, xv, 0x01);
      __m256d yv = _mm256_loadu_pd(yd + 2 * i);
      _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(partner, ar, ai)));
    }
    for (; i + 1 < n; i += 2) {
      y[i] += w * x[i + 1];
      y[i + 1] += wc * x[i];
    }
    return;
  }
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_set1_pd(w.imag());
  const __m256d wci = _mm256_set1_pd(-w.imag());
  auto* yd = reinterpret_cast<double*>(y);
  const auto* xd = reinterpret_cast<const double*>(x);
  for (std::size_t base = 0; base < n; base += 2 * s) {
    for (std::size_t i = base; i < base + s; i += 2) {
      __m256d xlo = _mm256_loadu_pd(xd + 2 * i);
      __m256d xhi = _mm256_loadu_pd(xd + 2 * (i + s));
      __m256d ylo = _mm256_loadu_pd(yd + 2 * i);
      __m256d yhi = _mm256_loadu_pd(yd + 2 * (i + s));
      _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(ylo, cmul(xhi, wr, wi)));
      _mm256_storeu_pd(yd + 2 * (i + s),
                       _mm256_add_pd(yhi, cmul(xlo, wr, wci)));
    }
  }
}

void site_map2(std::size_t n, std::size_t s, cplx u00, cplx u01, cplx u10,
               cplx u11, cplx* x) {
  if (s == 1) {
    for (std::size_t i = 0; i + 1 < n; i += 2) {
      const cplx a = x[i];
      const cplx b = x[i + 1];
      x[i] = u00 * a + u01 * b;
      x[i + 1] = u10 * a + u11 * b;
    }
    return;
  }
  const __m256d u00r = _mm256_set1_pd(u00.real());
  const __m256d u00i = _mm256_set1_pd(u00.imag());
  const __m256d u01r = _mm256_set1_pd(u01.real());
  const __m256d u01i = _mm256_set1_pd(u01.imag());
  const __m256d u10r = _mm256_set1_pd(u10.real());
  const __m256d u10i = _mm256_set1_pd(u10.imag());
  const __m256d u11r = _mm256_set1_pd(u11.real());
  const __m256d u11i = _mm256_set1_pd(u11.imag());
  auto* xd = reinterpret_cast<double*>(x);
  for (std::size_t base = 0; base < n; base += 2 * s) {
    for (std::size_t i = base; i < base + s; i += 2) {
      __m256d a = _mm256_loadu_pd(xd + 2 * i);
      __m256d b = _mm256_loadu_pd(xd + 2 * (i + s));
      __m256d top = _mm256_add_pd(cmul(a, u00r, u00i), cmul(b, u01r, u01i));
      __m256d bot = _mm256_add_pd(cmul(a, u10r, u10i), cmul(b, u11r, u11i));
      _mm256_storeu_pd(xd + 2 * i, top);
      _mm256_storeu_pd(xd + 2 * (i + s), bot);
    }
  }
}

}  // namespace wring::kernels::avx2

#endif  // x86_64
