#pragma once

#include <cstddef>

#include "wring/common.hpp"

namespace wring::kernels {

// Complex arithmetic inner loops used by the propagators and samplers.
// A scalar reference implementation always exists; an AVX2 variant is
// selected at runtime when the CPU supports it. The two are required to
// agree to roundoff and are equivalence-tested against each other.
enum class Backend { Scalar, Avx2 };

Backend active_backend();
Backend best_backend();
// Returns false (and leaves the backend unchanged) if unsupported.
bool set_backend(Backend b);
const char* backend_name(Backend b);

// y += a * x
void zaxpy(std::size_t n, cplx a, const cplx* x, cplx* y);

// x *= a
void zscal(std::size_t n, cplx a, cplx* x);

// y[i] += d[i] * x[i], real diagonal
void diag_mac(std::size_t n, const double* d, const cplx* x, cplx* y);

// sum_i conj(x[i]) * y[i]
cplx zdotc(std::size_t n, const cplx* x, const cplx* y);

// sum_i |x[i]|^2
double nrm2sq(std::size_t n, const cplx* x);

// Hermitian bit-flip accumulation for one site. s is the site stride in
// complex elements (a power of two), n the vector length. For every index i
// with the s-bit clear:
//   y[i]   += w       * x[i+s]
//   y[i+s] += conj(w) * x[i]
void site_flip_mac(std::size_t n, std::size_t s, cplx w, const cplx* x,
                   cplx* y);

// In-place 2x2 map on every (i, i+s) pair:
//   x[i]   <- u00*x[i] + u01*x[i+s]
//   x[i+s] <- u10*x[i] + u11*x[i+s]
void site_map2(std::size_t n, std::size_t s, cplx u00, cplx u01, cplx u10,
               cplx u11, cplx* x);

}  // namespace wring::kernels
