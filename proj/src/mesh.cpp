#include "emedge/mesh.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace emedge {

int nodes_per_element(ElementKind kind) {
  switch (kind) {
    case ElementKind::Tri3: return 3;
    case ElementKind::Quad4: return 4;
    case ElementKind::Tri6: return 6;
    case ElementKind::Quad9: return 9;
  }
  return 0;
}

int edges_per_element(ElementKind kind) {
  switch (kind) {
    case ElementKind::Tri3: return 3;
    case ElementKind::Quad4: return 4;
    case ElementKind::Tri6: return 8;
    case ElementKind::Quad9: return 12;
  }
  return 0;
}

bool is_second_order(ElementKind kind) {
  return kind == ElementKind::Tri6 || kind == ElementKind::Quad9;
}

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::Tri3: return "tri3";
    case ElementKind::Quad4: return "quad4";
    case ElementKind::Tri6: return "tri6";
    case ElementKind::Quad9: return "quad9";
  }
  return "?";
}

ElementKind kind_from_name(const std::string& name) {
  if (name == "tri3") return ElementKind::Tri3;
  if (name == "quad4") return ElementKind::Quad4;
  if (name == "tri6") return ElementKind::Tri6;
  if (name == "quad9") return ElementKind::Quad9;
  throw Error(ErrorCode::UnsupportedKind, "unsupported element kind '" + name + "'");
}

void NodalMesh::validate() const {
  for (size_t e = 0; e < elements.size(); ++e) {
    const Element& el = elements[e];
    if (static_cast<int>(el.connectivity.size()) != nodes_per_element(el.kind))
      throw Error(ErrorCode::Syntax,
                  "element " + std::to_string(e + 1) + ": connectivity length " +
                      std::to_string(el.connectivity.size()) + " does not match kind " +
                      kind_name(el.kind));
    for (int nd : el.connectivity)
      if (nd < 1 || nd > node_count())
        throw Error(ErrorCode::DanglingNodeRef,
                    "element " + std::to_string(e + 1) + " references node " +
                        std::to_string(nd) + " among " + std::to_string(node_count()) +
                        " nodes");
  }
}

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-empty line with comments stripped, or false at EOF.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      size_t a = raw.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      size_t b = raw.find_last_not_of(" \t\r");
      out = raw.substr(a, b - a + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": " + msg);
  }
};

}  // namespace

NodalMesh parse_mesh(std::istream& in) {
  LineReader rd{in};
  std::string line;

  if (!rd.next(line) || line != "mesh2d v1") rd.fail("expected header 'mesh2d v1'");

  if (!rd.next(line)) rd.fail("expected 'nodes <N>'");
  long n_nodes = -1;
  {
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw >> n_nodes) || kw != "nodes" || n_nodes < 0)
      rd.fail("expected 'nodes <N>'");
  }

  NodalMesh mesh;
  mesh.nodes.reserve(static_cast<size_t>(n_nodes));
  std::unordered_map<long, int> id_map;  // file node id -> compacted id
  id_map.reserve(static_cast<size_t>(n_nodes));
  for (long i = 0; i < n_nodes; ++i) {
    if (!rd.next(line)) rd.fail("unexpected end of file in node block");
    std::istringstream ss(line);
    long id;
    double x, y;
    if (!(ss >> id >> x >> y) || id < 1) rd.fail("malformed node line '" + line + "'");
    if (!id_map.emplace(id, static_cast<int>(mesh.nodes.size()) + 1).second)
      throw Error(ErrorCode::DuplicateId, "line " + std::to_string(rd.line_no) +
                                              ": duplicate node id " + std::to_string(id));
    mesh.nodes.push_back({x, y});
  }

  if (!rd.next(line)) rd.fail("expected 'elements <M>'");
  long n_elems = -1;
  {
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw >> n_elems) || kw != "elements" || n_elems < 0)
      rd.fail("expected 'elements <M>'");
  }

  std::unordered_set<long> elem_ids;
  mesh.elements.reserve(static_cast<size_t>(n_elems));
  for (long i = 0; i < n_elems; ++i) {
    if (!rd.next(line)) rd.fail("unexpected end of file in element block");
    std::istringstream ss(line);
    long id;
    std::string kind_tag;
    if (!(ss >> id >> kind_tag) || id < 1) rd.fail("malformed element line '" + line + "'");
    if (!elem_ids.insert(id).second)
      throw Error(ErrorCode::DuplicateId, "line " + std::to_string(rd.line_no) +
                                              ": duplicate element id " + std::to_string(id));
    if (id != i + 1)
      rd.fail("element ids must be contiguous from 1 in input order (got " +
              std::to_string(id) + ", expected " + std::to_string(i + 1) + ")");
    Element el;
    try {
      el.kind = kind_from_name(kind_tag);
    } catch (const Error&) {
      throw Error(ErrorCode::UnsupportedKind, "line " + std::to_string(rd.line_no) +
                                                  ": unsupported element kind '" +
                                                  kind_tag + "'");
    }
    int npe = nodes_per_element(el.kind);
    el.connectivity.reserve(static_cast<size_t>(npe));
    for (int k = 0; k < npe; ++k) {
      long nd;
      if (!(ss >> nd)) rd.fail("element line has too few node ids");
      auto it = id_map.find(nd);
      if (it == id_map.end())
        throw Error(ErrorCode::DanglingNodeRef,
                    "line " + std::to_string(rd.line_no) + ": element " + std::to_string(id) +
                        " references unknown node " + std::to_string(nd));
      el.connectivity.push_back(it->second);
    }
    long extra;
    if (ss >> extra) rd.fail("element line has too many node ids");
    mesh.elements.push_back(std::move(el));
  }

  if (!rd.next(line) || line != "end") rd.fail("expected 'end'");
  mesh.validate();
  return mesh;
}

NodalMesh parse_mesh_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_mesh(ss);
}

NodalMesh load_mesh_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Syntax, "cannot open mesh file '" + path + "'");
  return parse_mesh(f);
}

namespace {

// Shortest decimal string that round-trips the double exactly.
std::string fmt_coord(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace

void write_mesh(const NodalMesh& mesh, std::ostream& out) {
  out << "mesh2d v1\n";
  out << "nodes " << mesh.node_count() << "\n";
  for (int i = 0; i < mesh.node_count(); ++i)
    out << (i + 1) << ' ' << fmt_coord(mesh.nodes[i].x) << ' ' << fmt_coord(mesh.nodes[i].y)
        << "\n";
  out << "elements " << mesh.element_count() << "\n";
  for (int e = 0; e < mesh.element_count(); ++e) {
    const Element& el = mesh.elements[e];
    out << (e + 1) << ' ' << kind_name(el.kind);
    for (int nd : el.connectivity) out << ' ' << nd;
    out << "\n";
  }
  out << "end\n";
}

std::string write_mesh_text(const NodalMesh& mesh) {
  std::ostringstream ss;
  write_mesh(mesh, ss);
  return ss.str();
}

void save_mesh_file(const NodalMesh& mesh, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::Syntax, "cannot open '" + path + "' for writing");
  write_mesh(mesh, f);
}

}  // namespace emedge
