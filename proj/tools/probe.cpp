#include <chrono>
#include <cmath>
#include <cstdio>
#include "wring/geometry.hpp"
#include "wring/observables.hpp"
#include "wring/propagator.hpp"
#include "wring/spectrum.hpp"

using namespace wring;

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "gap";
  if (mode == "gap") {
    double lx = 0, ly = 0, lxx = 0, lxy = 0;
    int n = 0;
    for (int L : {5, 7, 9, 11, 13}) {
      auto g = ring_positions(L, 6.0);
      auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
      HamiltonianOperator H(U, DriveTerms::uniform(15.0, 29.0));
      auto t0 = std::chrono::steady_clock::now();
      auto r = spectral_gap(H);
      auto dtm = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      printf("odd L=%2d gap=%.6f band=%.6f deg=%d evals=[%.4f %.4f %.4f %.4f] (%.2fs)\n",
             L, r.gap, r.band_gap, r.ground_degeneracy, r.evals[0], r.evals[1], r.evals[2], r.evals[3], dtm);
      double x = std::log(L), y = std::log(r.gap);
      lx += x; ly += y; lxx += x * x; lxy += x * y; ++n;
    }
    double slope = (n * lxy - lx * ly) / (n * lxx - lx * lx);
    printf("odd slope = %.3f\n", slope);
    for (int L : {4, 6, 8, 10, 12}) {
      auto g = ring_positions(L, 6.0);
      auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
      HamiltonianOperator H(U, DriveTerms::uniform(15.0, 29.0));
      auto r = spectral_gap(H);
      printf("even L=%2d gap=%.6g band=%.6f deg=%d evals=[%.4f %.4f %.4f %.4f]\n",
             L, r.gap, r.band_gap, r.ground_degeneracy, r.evals[0], r.evals[1], r.evals[2], r.evals[3]);
    }
  } else if (mode == "fid") {
    for (int L : {5, 7, 9}) {
      auto g = ring_positions(L, 6.0);
      auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
      HamiltonianOperator H(U, DriveTerms::uniform(0, 0));
      Eigen::VectorXcd psi0v = Eigen::VectorXcd::Zero(1 << L);
      psi0v[0] = 1.0;
      auto psi0 = QuantumState::pure(psi0v, L);
      for (double tf : {1.0, 2.0, 4.0}) {
        double best = 0, bestD = 0;
        for (double D = 10; D <= 50; D += 2) {
          PrepParams p; p.omega = 15.0; p.delta_final = D; p.t_final = tf; p.tau_omega_ramp = 0.25;
          EvolveOptions o; o.method = EvolveOptions::Method::CommutatorFree4; o.dt = 2e-3;
          double f = preparation_fidelity(evolve_closed(H, build_prep_schedule(p), psi0, o).final_state, L);
          if (f > best) { best = f; bestD = D; }
        }
        printf("L=%d tF=%.0f bestD=%.0f F=%.6f infid=%.2e\n", L, tf, bestD, best, 1 - best);
      }
    }
  } else if (mode == "time13") {
    int L = 13;
    double tf = argc > 2 ? atof(argv[2]) : 8.0;
    auto g = ring_positions(L, 6.0);
    auto U = interaction_matrix(g, kDefaultC6, Truncation::Full);
    HamiltonianOperator H(U, DriveTerms::uniform(0, 0));
    Eigen::VectorXcd psi0v = Eigen::VectorXcd::Zero(1 << L);
    psi0v[0] = 1.0;
    auto psi0 = QuantumState::pure(psi0v, L);
    PrepParams p; p.omega = 15.0; p.delta_final = 29.0; p.t_final = tf; p.tau_omega_ramp = 0.25;
    EvolveOptions o; o.method = EvolveOptions::Method::CommutatorFree4; o.dt = 2e-3;
    auto t0 = std::chrono::steady_clock::now();
    auto res = evolve_closed(H, build_prep_schedule(p), psi0, o);
    auto dtm = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    printf("L=13 tf=%.1f F=%.6f infid=%.3e matvecs=%ld elapsed=%.2fs\n", tf,
           preparation_fidelity(res.final_state, L), 1 - preparation_fidelity(res.final_state, L),
           res.diagnostics.matvecs, dtm);
  }
  return 0;
}
