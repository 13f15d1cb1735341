#pragma once

#include <Eigen/Dense>
#include <vector>

#include "emedge/assembly.hpp"

namespace emedge {

struct Cluster {
  double representative = 0.0;  // first value of the cluster
  int multiplicity = 0;
};

struct Spectrum {
  Eigen::VectorXd eigenvalues;   // ascending k0^2
  Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues[i]
  int zero_count = 0;
  double zero_threshold = 1e-8;  // relative to the largest eigenvalue
  std::vector<Cluster> clusters;

  // Nonzero eigenvalues in ascending order.
  std::vector<double> nonzero(int how_many = -1) const;
};

// Number of leading eigenvalues below tau * max(eigenvalue) in a sorted
// ascending spectrum.
int count_zeros(const Eigen::VectorXd& sorted_eigenvalues, double tau);

// Greedy clustering of sorted values: a value joins the current cluster when
// it is within rel_gap (relative) of the cluster's first member.
std::vector<Cluster> cluster_multiplicities(const std::vector<double>& sorted_values,
                                            double rel_gap = 1e-3);

// Full spectrum of K x = k0^2 M x via Cholesky reduction of M and a dense
// symmetric solve (LAPACK dsygvd). Guarded at 8000 DOFs.
Spectrum solve_gevp(const AssembledSystem& system, double zero_tau = 1e-8,
                    double cluster_rel_gap = 1e-3);

}  // namespace emedge
