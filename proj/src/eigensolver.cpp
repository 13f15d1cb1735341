#include "emedge/eigensolver.hpp"

#include <cmath>
#include <string>

#include <lapacke.h>

namespace emedge {

std::vector<double> Spectrum::nonzero(int how_many) const {
  std::vector<double> out;
  for (int i = zero_count; i < eigenvalues.size(); ++i) {
    if (how_many >= 0 && static_cast<int>(out.size()) >= how_many) break;
    out.push_back(eigenvalues(i));
  }
  return out;
}

int count_zeros(const Eigen::VectorXd& sorted_eigenvalues, double tau) {
  if (sorted_eigenvalues.size() == 0) return 0;
  const double cutoff = tau * std::abs(sorted_eigenvalues(sorted_eigenvalues.size() - 1));
  int count = 0;
  while (count < sorted_eigenvalues.size() && sorted_eigenvalues(count) < cutoff) ++count;
  return count;
}

std::vector<Cluster> cluster_multiplicities(const std::vector<double>& sorted_values,
                                            double rel_gap) {
  std::vector<Cluster> clusters;
  for (double v : sorted_values) {
    if (!clusters.empty() &&
        std::abs(v - clusters.back().representative) <=
            rel_gap * std::abs(clusters.back().representative)) {
      ++clusters.back().multiplicity;
    } else {
      clusters.push_back({v, 1});
    }
  }
  return clusters;
}

Spectrum solve_gevp(const AssembledSystem& system, double zero_tau, double cluster_rel_gap) {
  const int n = system.n_free;
  if (n > 8000)
    throw Error(ErrorCode::TooLarge,
                "system has " + std::to_string(n) +
                    " free DOFs (> 8000); reduce the mesh resolution");

  Eigen::MatrixXd A = Eigen::MatrixXd(system.K);
  Eigen::MatrixXd B = Eigen::MatrixXd(system.M);
  Eigen::VectorXd w(n);

  // itype=1: K x = lambda M x, with M = L L^T factored inside dsygvd.
  lapack_int info = LAPACKE_dsygvd(LAPACK_COL_MAJOR, 1, 'V', 'L', n, A.data(), n, B.data(), n,
                                   w.data());
  if (info > n)
    throw Error(ErrorCode::MassNotPD, "mass matrix is not positive definite (Cholesky failed at "
                                          "minor " +
                                          std::to_string(info - n) + ")");
  if (info != 0)
    throw Error(ErrorCode::MassNotPD, "dsygvd failed with info=" + std::to_string(info));

  Spectrum spectrum;
  spectrum.eigenvalues = std::move(w);
  spectrum.eigenvectors = std::move(A);
  spectrum.zero_threshold = zero_tau;
  spectrum.zero_count = count_zeros(spectrum.eigenvalues, zero_tau);
  spectrum.clusters = cluster_multiplicities(spectrum.nonzero(), cluster_rel_gap);
  return spectrum;
}

}  // namespace emedge
