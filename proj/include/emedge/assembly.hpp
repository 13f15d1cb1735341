#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "emedge/edge_mesh.hpp"
#include "emedge/elements.hpp"

namespace emedge {

struct MaterialParams {
  double eps_r = 1.0;
  double mu_r = 1.0;
};

using SparseMat = Eigen::SparseMatrix<double>;

// Curl-curl stiffness and mass on free (non-boundary) edge DOFs.
struct AssembledSystem {
  SparseMat K;
  SparseMat M;
  std::vector<int> free_dof_map;   // global edge -> free index (-1 if eliminated)
  std::vector<int> free_to_edge;   // free index -> global edge
  int n_free = 0;
};

// Element stiffness/mass with orientation signs from edgecon applied:
//   Ke(i,j) = sum_q w_q (1/mu_r) B_i B_j detJ,  Me(i,j) = sum_q w_q eps_r v_i.v_j detJ
void element_matrices(int element_index, const EdgeMesh& edge_mesh,
                      const MaterialParams& materials, Eigen::MatrixXd& Ke,
                      Eigen::MatrixXd& Me);

AssembledSystem assemble(const EdgeMesh& edge_mesh, const MaterialParams& materials,
                         const BoundaryInfo& boundary);

// Discrete gradient map: column per interior node, entries +-1/l_e on its
// free incident edges (+ at the edge start). Columns span the kernel of K
// on first-order meshes.
Eigen::SparseMatrix<double> discrete_gradient(const EdgeMesh& edge_mesh,
                                              const BoundaryInfo& boundary,
                                              const AssembledSystem& system);

}  // namespace emedge
