#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "emedge/error.hpp"

namespace emedge {

enum class ElementKind { Tri3, Quad4, Tri6, Quad9 };

int nodes_per_element(ElementKind kind);
int edges_per_element(ElementKind kind);
bool is_second_order(ElementKind kind);
const char* kind_name(ElementKind kind);
ElementKind kind_from_name(const std::string& name);

struct Node {
  double x = 0.0;
  double y = 0.0;
};

struct Element {
  ElementKind kind = ElementKind::Quad4;
  std::vector<int> connectivity;  // compacted node ids, 1-based
};

// 2-D nodal mesh. Node ids are compacted to 1..N; element order is
// semantically significant (it fixes global edge numbering downstream).
struct NodalMesh {
  std::vector<Node> nodes;        // index i holds node id i+1
  std::vector<Element> elements;  // index e holds element id e+1

  int node_count() const { return static_cast<int>(nodes.size()); }
  int element_count() const { return static_cast<int>(elements.size()); }
  const Node& node(int id) const { return nodes[static_cast<size_t>(id) - 1]; }

  void validate() const;
};

// Parses the mesh2d v1 interchange format. Arbitrary positive node ids in
// the file are compacted to 1..N (stable order of appearance in the node
// block); connectivity is rewritten accordingly.
NodalMesh parse_mesh(std::istream& in);
NodalMesh parse_mesh_text(const std::string& text);
NodalMesh load_mesh_file(const std::string& path);

void write_mesh(const NodalMesh& mesh, std::ostream& out);
std::string write_mesh_text(const NodalMesh& mesh);
void save_mesh_file(const NodalMesh& mesh, const std::string& path);

}  // namespace emedge
