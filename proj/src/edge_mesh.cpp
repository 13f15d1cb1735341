#include "emedge/edge_mesh.hpp"

#include <cmath>
#include <string>

namespace emedge {

const std::vector<std::pair<int, int>>& local_edge_table(ElementKind kind) {
  static const std::vector<std::pair<int, int>> tri3 = {{1, 2}, {2, 3}, {3, 1}};
  static const std::vector<std::pair<int, int>> quad4 = {{1, 2}, {4, 3}, {1, 4}, {2, 3}};
  static const std::vector<std::pair<int, int>> tri6 = {
      {1, 4}, {4, 2}, {2, 5}, {5, 3}, {3, 6}, {6, 1}, {6, 5}, {5, 4}};
  static const std::vector<std::pair<int, int>> quad9 = {
      {1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9},
      {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}, {6, 9}};
  switch (kind) {
    case ElementKind::Tri3: return tri3;
    case ElementKind::Quad4: return quad4;
    case ElementKind::Tri6: return tri6;
    case ElementKind::Quad9: return quad9;
  }
  return tri3;
}

bool is_perimeter_edge(ElementKind kind, int local_edge_index) {
  switch (kind) {
    case ElementKind::Tri3:
    case ElementKind::Quad4:
      return true;
    case ElementKind::Tri6:
      // e7 = (6,5) and e8 = (5,4) cross the element face.
      return local_edge_index <= 6;
    case ElementKind::Quad9: {
      // e3, e4 run along the eta = 0 row; e8, e11 along the xi = 0 column.
      return local_edge_index != 3 && local_edge_index != 4 && local_edge_index != 8 &&
             local_edge_index != 11;
    }
  }
  return true;
}

std::pair<int, int> edgend(int local_edge_index, const std::vector<int>& nodarr,
                           ElementKind kind) {
  const auto& table = local_edge_table(kind);
  if (local_edge_index < 1 || local_edge_index > static_cast<int>(table.size()))
    throw Error(ErrorCode::IndexOutOfRange,
                "local edge index " + std::to_string(local_edge_index) + " out of range for " +
                    kind_name(kind));
  if (static_cast<int>(nodarr.size()) != nodes_per_element(kind))
    throw Error(ErrorCode::IndexOutOfRange, "connectivity length does not match kind");
  auto [a, b] = table[static_cast<size_t>(local_edge_index) - 1];
  return {nodarr[static_cast<size_t>(a) - 1], nodarr[static_cast<size_t>(b) - 1]};
}

EdgeRegistry::EdgeRegistry(int node_count)
    : node_edge_count_(static_cast<size_t>(node_count), 0),
      primary_(static_cast<size_t>(node_count)),
      overflow_row_of_node_(static_cast<size_t>(node_count), 0) {}

EdgeSlot EdgeRegistry::slot(int node, int k) const {
  if (k < kPrimarySlots) return primary_[static_cast<size_t>(node) - 1][static_cast<size_t>(k)];
  int row = overflow_row_of_node_[static_cast<size_t>(node) - 1];
  return overflow_[static_cast<size_t>(row) - 1][static_cast<size_t>(k - kPrimarySlots)];
}

std::optional<int> EdgeRegistry::lookup_edge(int nd1, int nd2) const {
  int count = node_edge_count_[static_cast<size_t>(nd1) - 1];
  for (int k = 0; k < count; ++k) {
    EdgeSlot s = slot(nd1, k);
    if (s.other_node == nd2) return s.signed_edge > 0 ? std::abs(s.signed_edge)
                                                      : -std::abs(s.signed_edge);
  }
  return std::nullopt;
}

void EdgeRegistry::append_slot(int node, int signed_edge, int other_node) {
  int& count = node_edge_count_[static_cast<size_t>(node) - 1];
  if (count < kPrimarySlots) {
    primary_[static_cast<size_t>(node) - 1][static_cast<size_t>(count)] = {signed_edge,
                                                                           other_node};
  } else {
    int& row = overflow_row_of_node_[static_cast<size_t>(node) - 1];
    if (row == 0) {
      overflow_nodes_.push_back(node);
      overflow_.emplace_back();
      row = static_cast<int>(overflow_nodes_.size());
    }
    int k = count - kPrimarySlots;
    auto& slots = overflow_[static_cast<size_t>(row) - 1];
    if (k >= static_cast<int>(slots.size())) slots.resize(static_cast<size_t>(k) + 1);
    slots[static_cast<size_t>(k)] = {signed_edge, other_node};
  }
  ++count;
}

int EdgeRegistry::register_edge(int nd1, int nd2) {
  if (nd1 == nd2)
    throw Error(ErrorCode::SelfLoop, "degenerate edge at node " + std::to_string(nd1));
  if (auto found = lookup_edge(nd1, nd2)) return *found;
  edge_nodes_.emplace_back(nd1, nd2);
  int e = static_cast<int>(edge_nodes_.size());
  append_slot(nd1, +e, nd2);
  append_slot(nd2, -e, nd1);
  return e;
}

EdgeConverter::EdgeConverter(const NodalMesh& mesh)
    : mesh_(&mesh), result_{&mesh, {}, {}, EdgeRegistry(mesh.node_count())} {
  mesh.validate();
  bool has_first = false, has_second = false;
  for (const Element& el : mesh.elements)
    (is_second_order(el.kind) ? has_second : has_first) = true;
  if (has_first && has_second)
    throw Error(ErrorCode::MixedOrderMismatch,
                "mesh mixes first-order and second-order element kinds");
  result_.edgecon.reserve(static_cast<size_t>(mesh.element_count()));
}

void EdgeConverter::process_next_element() {
  const Element& el = mesh_->elements[static_cast<size_t>(next_element_)];
  int nedge = edges_per_element(el.kind);
  std::vector<int> edgearr(static_cast<size_t>(nedge));
  for (int i = 1; i <= nedge; ++i) {
    auto [nd1, nd2] = edgend(i, el.connectivity, el.kind);
    edgearr[static_cast<size_t>(i) - 1] = result_.registry.register_edge(nd1, nd2);
  }
  result_.edgecon.push_back(std::move(edgearr));
  ++next_element_;
}

EdgeMesh EdgeConverter::finish() && {
  while (!done()) process_next_element();
  result_.edge_length.resize(static_cast<size_t>(result_.registry.edge_count()));
  for (int e = 1; e <= result_.registry.edge_count(); ++e) {
    auto [a, b] = result_.registry.edge_nodes(e);
    const Node& na = mesh_->node(a);
    const Node& nb = mesh_->node(b);
    result_.edge_length[static_cast<size_t>(e) - 1] = std::hypot(nb.x - na.x, nb.y - na.y);
  }
  return std::move(result_);
}

EdgeMesh node_to_edge(const NodalMesh& mesh) {
  return EdgeConverter(mesh).finish();
}

int BoundaryInfo::boundary_edge_count() const {
  int n = 0;
  for (bool b : boundary_edge) n += b ? 1 : 0;
  return n;
}

BoundaryInfo detect_boundary(const EdgeMesh& edge_mesh) {
  const NodalMesh& mesh = *edge_mesh.source;
  std::vector<int> incidence(static_cast<size_t>(edge_mesh.edge_count()), 0);
  for (int e = 0; e < mesh.element_count(); ++e) {
    ElementKind kind = mesh.elements[static_cast<size_t>(e)].kind;
    const auto& row = edge_mesh.edgecon[static_cast<size_t>(e)];
    for (int i = 1; i <= static_cast<int>(row.size()); ++i) {
      if (!is_perimeter_edge(kind, i)) continue;
      int edge = std::abs(row[static_cast<size_t>(i) - 1]);
      if (++incidence[static_cast<size_t>(edge) - 1] > 2)
        throw Error(ErrorCode::NonManifold,
                    "edge " + std::to_string(edge) + " is shared by more than two elements");
    }
  }
  BoundaryInfo info;
  info.boundary_edge.resize(incidence.size(), false);
  info.boundary_node.resize(static_cast<size_t>(mesh.node_count()), false);
  for (size_t e = 0; e < incidence.size(); ++e) {
    if (incidence[e] != 1) continue;
    info.boundary_edge[e] = true;
    auto [a, b] = edge_mesh.edge_nodes(static_cast<int>(e) + 1);
    info.boundary_node[static_cast<size_t>(a) - 1] = true;
    info.boundary_node[static_cast<size_t>(b) - 1] = true;
  }
  return info;
}

}  // namespace emedge
