#include "emedge/assembly.hpp"

#include <cmath>
#include <string>

namespace emedge {

void element_matrices(int element_index, const EdgeMesh& edge_mesh,
                      const MaterialParams& materials, Eigen::MatrixXd& Ke,
                      Eigen::MatrixXd& Me) {
  const NodalMesh& mesh = *edge_mesh.source;
  const Element& el = mesh.elements[static_cast<size_t>(element_index)];
  const auto& edges = edge_mesh.edgecon[static_cast<size_t>(element_index)];
  const int n = edges_per_element(el.kind);

  std::vector<Node> geometry;
  geometry.reserve(el.connectivity.size());
  for (int nd : el.connectivity) geometry.push_back(mesh.node(nd));

  std::vector<double> lengths(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    lengths[static_cast<size_t>(i)] =
        edge_mesh.edge_length[static_cast<size_t>(std::abs(edges[static_cast<size_t>(i)])) - 1];

  Ke.setZero(n, n);
  Me.setZero(n, n);
  QuadratureRule rule = quadrature_for(el.kind, is_curved_element(el.kind, geometry));
  for (size_t q = 0; q < rule.points.size(); ++q) {
    JacobianData jd = jacobian_at(el.kind, geometry, rule.points[q]);
    ShapeEval shapes = eval_shapes(el.kind, geometry, lengths, rule.points[q]);
    const double wdet = rule.weights[q] * jd.det_j;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Ke(i, j) += wdet / materials.mu_r * shapes.curls[static_cast<size_t>(i)] *
                    shapes.curls[static_cast<size_t>(j)];
        Me(i, j) += wdet * materials.eps_r *
                    shapes.values[static_cast<size_t>(i)].dot(shapes.values[static_cast<size_t>(j)]);
      }
  }

  // Orientation: a local edge running against the stored global direction
  // flips the sign of its DOF.
  for (int i = 0; i < n; ++i) {
    if (edges[static_cast<size_t>(i)] > 0) continue;
    Ke.row(i) *= -1.0;
    Ke.col(i) *= -1.0;
    Me.row(i) *= -1.0;
    Me.col(i) *= -1.0;
  }
}

AssembledSystem assemble(const EdgeMesh& edge_mesh, const MaterialParams& materials,
                         const BoundaryInfo& boundary) {
  const int n_edges = edge_mesh.edge_count();
  AssembledSystem sys;
  sys.free_dof_map.assign(static_cast<size_t>(n_edges), -1);
  for (int e = 0; e < n_edges; ++e) {
    if (boundary.boundary_edge[static_cast<size_t>(e)]) continue;
    sys.free_dof_map[static_cast<size_t>(e)] = sys.n_free++;
    sys.free_to_edge.push_back(e + 1);
  }
  if (sys.n_free == 0)
    throw Error(ErrorCode::EmptySystem, "no free edge DOFs after boundary elimination");

  std::vector<Eigen::Triplet<double>> tk, tm;
  Eigen::MatrixXd Ke, Me;
  for (int el = 0; el < edge_mesh.source->element_count(); ++el) {
    element_matrices(el, edge_mesh, materials, Ke, Me);
    const auto& edges = edge_mesh.edgecon[static_cast<size_t>(el)];
    const int n = static_cast<int>(edges.size());
    for (int i = 0; i < n; ++i) {
      int gi = sys.free_dof_map[static_cast<size_t>(std::abs(edges[static_cast<size_t>(i)])) - 1];
      if (gi < 0) continue;
      for (int j = 0; j < n; ++j) {
        int gj = sys.free_dof_map[static_cast<size_t>(std::abs(edges[static_cast<size_t>(j)])) - 1];
        if (gj < 0) continue;
        tk.emplace_back(gi, gj, Ke(i, j));
        tm.emplace_back(gi, gj, Me(i, j));
      }
    }
  }
  sys.K.resize(sys.n_free, sys.n_free);
  sys.M.resize(sys.n_free, sys.n_free);
  sys.K.setFromTriplets(tk.begin(), tk.end());
  sys.M.setFromTriplets(tm.begin(), tm.end());
  return sys;
}

Eigen::SparseMatrix<double> discrete_gradient(const EdgeMesh& edge_mesh,
                                              const BoundaryInfo& boundary,
                                              const AssembledSystem& system) {
  for (const Element& el : edge_mesh.source->elements)
    if (is_second_order(el.kind))
      throw Error(ErrorCode::WrongOrder, "discrete gradient requires a first-order mesh");

  std::vector<int> interior_col(static_cast<size_t>(edge_mesh.source->node_count()), -1);
  int n_interior = 0;
  for (int nd = 0; nd < edge_mesh.source->node_count(); ++nd)
    if (!boundary.boundary_node[static_cast<size_t>(nd)]) interior_col[static_cast<size_t>(nd)] = n_interior++;

  std::vector<Eigen::Triplet<double>> trip;
  for (int e = 1; e <= edge_mesh.edge_count(); ++e) {
    int row = system.free_dof_map[static_cast<size_t>(e) - 1];
    if (row < 0) continue;
    auto [a, b] = edge_mesh.edge_nodes(e);
    double inv_l = 1.0 / edge_mesh.edge_length[static_cast<size_t>(e) - 1];
    int ca = interior_col[static_cast<size_t>(a) - 1];
    int cb = interior_col[static_cast<size_t>(b) - 1];
    if (ca >= 0) trip.emplace_back(row, ca, +inv_l);
    if (cb >= 0) trip.emplace_back(row, cb, -inv_l);
  }
  Eigen::SparseMatrix<double> G(system.n_free, n_interior);
  G.setFromTriplets(trip.begin(), trip.end());
  return G;
}

}  // namespace emedge
