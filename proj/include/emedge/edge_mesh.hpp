#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "emedge/mesh.hpp"

namespace emedge {

// Local edge table: per element kind, the ordered (a,b) local-node pairs
// defining local edges e1..en, each directed a -> b.
const std::vector<std::pair<int, int>>& local_edge_table(ElementKind kind);

// True if local edge i (1-based) lies on the geometric perimeter of the
// element. Tri6 face edges e7/e8 and Quad9 mid-row/mid-column edges are
// interior to a single element and never part of the domain boundary.
bool is_perimeter_edge(ElementKind kind, int local_edge_index);

// End nodes of local edge `local_edge_index` (1-based) of an element with
// connectivity `nodarr`, directed first -> second.
std::pair<int, int> edgend(int local_edge_index, const std::vector<int>& nodarr,
                           ElementKind kind);

struct EdgeSlot {
  int signed_edge = 0;  // positive: directed away from the owning node
  int other_node = 0;
};

// Node-incidence registry built during conversion. A node holds up to 4
// primary slots; nodes with more incident edges spill into a compact
// overflow table sized to the mesh (at least 8 further slots, growing for
// high-valence nodes such as a dense fan hub).
class EdgeRegistry {
public:
  static constexpr int kPrimarySlots = 4;
  static constexpr int kOverflowSlots = 8;  // baseline overflow row width

  explicit EdgeRegistry(int node_count);

  int node_count() const { return static_cast<int>(node_edge_count_.size()); }
  int edge_count() const { return static_cast<int>(edge_nodes_.size()); }

  // Number of edges incident to `node`.
  int incident_count(int node) const { return node_edge_count_[node - 1]; }

  // k-th incident slot of `node`, k in [0, incident_count).
  EdgeSlot slot(int node, int k) const;

  // (start, end) nodes of a global edge.
  std::pair<int, int> edge_nodes(int edge) const { return edge_nodes_[edge - 1]; }

  // Nodes with more than 4 incident edges, in order of first spill.
  const std::vector<int>& overflow_nodes() const { return overflow_nodes_; }

  // Signed global edge between nd1 and nd2 if one exists: +e when the
  // stored direction is nd1 -> nd2, -e when nd2 -> nd1.
  std::optional<int> lookup_edge(int nd1, int nd2) const;

  // Registers the edge nd1 -> nd2 (reusing an existing one if present) and
  // returns its signed global number relative to that direction.
  int register_edge(int nd1, int nd2);

private:
  void append_slot(int node, int signed_edge, int other_node);

  std::vector<int> node_edge_count_;
  std::vector<std::array<EdgeSlot, kPrimarySlots>> primary_;
  std::vector<int> overflow_nodes_;                          // ndexn
  std::vector<int> overflow_row_of_node_;                    // node -> row+1, 0 if none
  std::vector<std::vector<EdgeSlot>> overflow_;               // nodeedgeexn
  std::vector<std::pair<int, int>> edge_nodes_;              // edgenode
};

// Conversion output: signed per-element edge connectivity plus the final
// registry. edgecon entry sign is -1 when the element's local direction
// opposes the stored global direction.
struct EdgeMesh {
  const NodalMesh* source = nullptr;
  std::vector<std::vector<int>> edgecon;  // per element, signed global edges
  std::vector<double> edge_length;        // per edge, physical chord length
  EdgeRegistry registry;

  int edge_count() const { return registry.edge_count(); }
  std::pair<int, int> edge_nodes(int edge) const { return registry.edge_nodes(edge); }
};

// Stepwise converter; node_to_edge() runs it to completion. Exposed so the
// registry can be inspected between element iterations.
class EdgeConverter {
public:
  explicit EdgeConverter(const NodalMesh& mesh);

  bool done() const { return next_element_ >= mesh_->element_count(); }
  void process_next_element();
  const EdgeRegistry& registry() const { return result_.registry; }
  EdgeMesh finish() &&;

private:
  const NodalMesh* mesh_;
  EdgeMesh result_;
  int next_element_ = 0;
};

EdgeMesh node_to_edge(const NodalMesh& mesh);

// PEC boundary classification by edge incidence: a perimeter edge used by
// exactly one element is a boundary edge.
struct BoundaryInfo {
  std::vector<bool> boundary_edge;  // per edge (index = id-1)
  std::vector<bool> boundary_node;  // per node

  int boundary_edge_count() const;
};

BoundaryInfo detect_boundary(const EdgeMesh& edge_mesh);

}  // namespace emedge
