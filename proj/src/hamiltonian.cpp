#include "wring/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "wring/kernels.hpp"

namespace wring {

void FrozenHamiltonian::apply(const cplx* x, cplx* y) const {
  std::memset(y, 0, dim * sizeof(cplx));
  kernels::diag_mac(dim, diag.data(), x, y);
  for (int l = 0; l < L; ++l) {
    if (site_w[l] == cplx(0.0, 0.0)) continue;
    kernels::site_flip_mac(dim, std::size_t(1) << l, site_w[l], x, y);
  }
}

void FrozenHamiltonian::apply(const Eigen::VectorXcd& x,
                              Eigen::VectorXcd& y) const {
  y.resize(x.size());
  apply(x.data(), y.data());
}

double FrozenHamiltonian::spectral_range_bound() const {
  const auto [mn, mx] = std::minmax_element(diag.begin(), diag.end());
  double off = 0.0;
  for (const auto& w : site_w) off += std::abs(w);
  return (*mx - *mn) + 4.0 * off;
}

HamiltonianOperator::HamiltonianOperator(Eigen::MatrixXd interactions,
                                         DriveTerms drive)
    : L_(static_cast<int>(interactions.rows())),
      U_(std::move(interactions)),
      drive_(std::move(drive)) {
  if (U_.rows() != U_.cols() || L_ < 1) {
    throw ValidationError("interaction matrix must be square and non-empty");
  }
  if (L_ > 13) {
    throw CapacityError("site count " + std::to_string(L_) +
                        " exceeds the desk-scale cap L=13");
  }
  if ((U_ - U_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("interaction matrix must be symmetric");
  }
  for (std::size_t s : {drive_.omega.size(), drive_.delta.size()}) {
    if (s != 1 && s != std::size_t(L_)) {
      throw ValidationError("drive vectors must have size 1 or L");
    }
  }
  for (double w : drive_.omega) {
    if (w < 0.0) throw ValidationError("omega must be >= 0");
  }
  dim_ = std::size_t(1) << L_;
  int_diag_.assign(dim_, 0.0);
  for (std::uint32_t idx = 0; idx < dim_; ++idx) {
    double e = 0.0;
    for (int l = 0; l < L_; ++l) {
      if (!(idx >> l & 1u)) continue;
      for (int j = l + 1; j < L_; ++j) {
        if (idx >> j & 1u) e += U_(l, j);
      }
    }
    int_diag_[idx] = e;
  }
}

void HamiltonianOperator::set_site_inhomogeneity(
    std::vector<double> omega_scale, std::vector<double> delta_offset) {
  if ((!omega_scale.empty() && omega_scale.size() != std::size_t(L_)) ||
      (!delta_offset.empty() && delta_offset.size() != std::size_t(L_))) {
    throw ValidationError("inhomogeneity vectors must have size L");
  }
  omega_scale_ = std::move(omega_scale);
  delta_offset_ = std::move(delta_offset);
}

void HamiltonianOperator::resolve(const DriveTerms& d,
                                  std::vector<double>& omega_site,
                                  std::vector<double>& delta_site) const {
  omega_site.resize(L_);
  delta_site.resize(L_);
  for (int l = 0; l < L_; ++l) {
    double om = d.omega_at(l);
    double de = d.delta_at(l);
    if (!omega_scale_.empty()) om *= omega_scale_[l];
    if (!delta_offset_.empty()) de += delta_offset_[l];
    omega_site[l] = om;
    delta_site[l] = de;
  }
}

FrozenHamiltonian HamiltonianOperator::freeze(const DriveTerms& d) const {
  return freeze_combo(1.0, d, 0.0, DriveTerms{});
}

FrozenHamiltonian HamiltonianOperator::freeze_at(double omega, double delta,
                                                 double phi) const {
  return freeze(DriveTerms::uniform(omega, delta, phi));
}

FrozenHamiltonian HamiltonianOperator::freeze_combo(double c1,
                                                    const DriveTerms& d1,
                                                    double c2,
                                                    const DriveTerms& d2) const {
  std::vector<double> om1, de1, om2, de2;
  resolve(d1, om1, de1);
  resolve(d2, om2, de2);

  FrozenHamiltonian f;
  f.L = L_;
  f.dim = dim_;
  f.site_w.resize(L_);
  const cplx e1 = std::polar(1.0, d1.phi);
  const cplx e2 = std::polar(1.0, d2.phi);
  for (int l = 0; l < L_; ++l) {
    f.site_w[l] = 0.5 * (c1 * om1[l] * e1 + c2 * om2[l] * e2);
  }

  // diag = (c1+c2) * interactions - sum_l (c1*delta1_l + c2*delta2_l) n_l
  std::vector<double> dsum(L_);
  for (int l = 0; l < L_; ++l) dsum[l] = c1 * de1[l] + c2 * de2[l];
  const double cint = c1 + c2;
  f.diag.resize(dim_);
  for (std::uint32_t idx = 0; idx < dim_; ++idx) {
    double e = cint * int_diag_[idx];
    std::uint32_t bits = idx;
    while (bits) {
      const int l = __builtin_ctz(bits);
      e -= dsum[l];
      bits &= bits - 1;
    }
    f.diag[idx] = e;
  }
  return f;
}

Eigen::MatrixXcd HamiltonianOperator::dense(const DriveTerms& d) const {
  if (dim_ > (std::size_t(1) << 13)) {
    throw CapacityError("dense Hamiltonian capped at 2^13");
  }
  const FrozenHamiltonian f = freeze(d);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) H(i, i) = f.diag[i];
  for (int l = 0; l < L_; ++l) {
    const std::size_t s = std::size_t(1) << l;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i & s) continue;
      H(i, i + s) += f.site_w[l];
      H(i + s, i) += std::conj(f.site_w[l]);
    }
  }
  return H;
}

HamiltonianOperator build_hamiltonian(const Eigen::MatrixXd& interactions,
                                      const DriveTerms& drive) {
  return HamiltonianOperator(interactions, drive);
}

}  // namespace wring
