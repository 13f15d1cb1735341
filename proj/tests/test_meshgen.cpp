#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "emedge/assembly.hpp"
#include "emedge/elements.hpp"
#include "emedge/meshgen.hpp"

using namespace emedge;

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_positive_jacobians(const NodalMesh& mesh) {
  mesh.validate();
  for (const Element& el : mesh.elements) {
    std::vector<Node> geom;
    for (int id : el.connectivity) geom.push_back(mesh.node(id));
    QuadratureRule rule = quadrature_for(el.kind, is_curved_element(el.kind, geom));
    for (const RefPoint& p : rule.points) CHECK(jacobian_at(el.kind, geom, p).det_j > 0.0);
  }
}

double radius(const Node& nd) { return std::hypot(nd.x, nd.y); }

}  // namespace

TEST_CASE("family name round trip") {
  for (ElementFamily f : {ElementFamily::T3, ElementFamily::Q4, ElementFamily::T8,
                          ElementFamily::Q12, ElementFamily::Mixed1, ElementFamily::Mixed2})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("hex20"), Error);
}

TEST_CASE("square generator: node and element counts") {
  for (int n : {2, 5}) {
    CHECK(gen_square(n, ElementFamily::Q4).node_count() == (n + 1) * (n + 1));
    CHECK(gen_square(n, ElementFamily::Q4).element_count() == n * n);
    CHECK(gen_square(n, ElementFamily::T3).element_count() == 2 * n * n);
    CHECK(gen_square(n, ElementFamily::Q12).node_count() == (2 * n + 1) * (2 * n + 1));
    CHECK(gen_square(n, ElementFamily::Q12).element_count() == n * n);
    CHECK(gen_square(n, ElementFamily::T8).node_count() == (2 * n + 1) * (2 * n + 1));
    CHECK(gen_square(n, ElementFamily::T8).element_count() == 2 * n * n);
  }
}

TEST_CASE("square generator: geometry spans the side-pi square") {
  NodalMesh mesh = gen_square(4, ElementFamily::Q4);
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  for (const Node& nd : mesh.nodes) {
    xmin = std::min(xmin, nd.x);
    xmax = std::max(xmax, nd.x);
    ymin = std::min(ymin, nd.y);
    ymax = std::max(ymax, nd.y);
  }
  CHECK(xmin == doctest::Approx(0.0));
  CHECK(ymin == doctest::Approx(0.0));
  CHECK(xmax == doctest::Approx(kPi));
  CHECK(ymax == doctest::Approx(kPi));
}

TEST_CASE("square generator: positive jacobians") {
  for (ElementFamily f :
       {ElementFamily::T3, ElementFamily::Q4, ElementFamily::T8, ElementFamily::Q12})
    check_positive_jacobians(gen_square(3, f));
}

TEST_CASE("generators are deterministic") {
  CHECK(write_mesh_text(gen_square(4, ElementFamily::T8)) ==
        write_mesh_text(gen_square(4, ElementFamily::T8)));
  CHECK(write_mesh_text(gen_curved_l(4, 8, ElementFamily::Q12)) ==
        write_mesh_text(gen_curved_l(4, 8, ElementFamily::Q12)));
  CHECK(write_mesh_text(gen_disk(12, 6, ElementFamily::Mixed1)) ==
        write_mesh_text(gen_disk(12, 6, ElementFamily::Mixed1)));
  CHECK(write_mesh_text(gen_cracked_disk(12, 6, ElementFamily::Mixed2)) ==
        write_mesh_text(gen_cracked_disk(12, 6, ElementFamily::Mixed2)));
}

TEST_CASE("generated meshes survive a text round trip") {
  NodalMesh mesh = gen_curved_l(4, 8, ElementFamily::T8);
  NodalMesh back = parse_mesh_text(write_mesh_text(mesh));
  REQUIRE(back.node_count() == mesh.node_count());
  for (int i = 1; i <= mesh.node_count(); ++i) {
    CHECK(back.node(i).x == mesh.node(i).x);
    CHECK(back.node(i).y == mesh.node(i).y);
  }
}

TEST_CASE("curved-L generator: counts, radii, boundary classification") {
  const int nr = 4, nt = 8;
  for (ElementFamily f :
       {ElementFamily::Q4, ElementFamily::T3, ElementFamily::Q12, ElementFamily::T8}) {
    NodalMesh mesh = gen_curved_l(nr, nt, f);
    int cells = nr * nt + (nr / 2) * nt;
    int per_cell = (f == ElementFamily::T3 || f == ElementFamily::T8) ? 2 : 1;
    CHECK(mesh.element_count() == cells * per_cell);
    check_positive_jacobians(mesh);

    for (const Node& nd : mesh.nodes) {
      double r = radius(nd);
      CHECK(r >= 1.0 - 1e-12);
      CHECK(r <= 3.0 + 1e-12);
    }

    // grid-circle nodes sit exactly on their circles
    int on_inner = 0, on_outer = 0;
    for (const Node& nd : mesh.nodes) {
      double r = radius(nd);
      if (std::abs(r - 1.0) <= 1e-12) ++on_inner;
      if (std::abs(r - 3.0) <= 1e-12) ++on_outer;
    }
    CHECK(on_inner > 0);
    CHECK(on_outer > 0);

    EdgeMesh em = node_to_edge(mesh);
    BoundaryInfo bi = detect_boundary(em);
    for (int n = 1; n <= mesh.node_count(); ++n) {
      if (!bi.boundary_node[static_cast<size_t>(n) - 1]) continue;
      const Node& nd = mesh.node(n);
      double r = radius(nd);
      double theta = std::atan2(nd.y, nd.x);
      const double kA = kPi / 8.0;  // block angle
      bool outer = std::abs(r - 3.0) <= 1e-9;
      bool inner = std::abs(r - 1.0) <= 1e-9 && theta >= -1e-9 && theta <= kA + 1e-9;
      bool mid = std::abs(r - 2.0) <= 1e-9 && theta >= kA - 1e-9 && theta <= 2 * kA + 1e-9;
      bool side0 = std::abs(theta) <= 1e-9;                         // y = 0, r in [1,3]
      bool side2 = std::abs(theta - 2 * kA) <= 1e-9 && r >= 2.0 - 1e-9;  // theta = pi/4
      bool riser = std::abs(theta - kA) <= 1e-9 && r <= 2.0 + 1e-9;      // theta = pi/8
      CHECK((outer || inner || mid || side0 || side2 || riser));
    }
  }
}

TEST_CASE("curved-L generator rejects odd radial divisions") {
  CHECK_THROWS_AS(gen_curved_l(3, 8, ElementFamily::Q4), Error);
}

TEST_CASE("disk generator: counts, rim placement, boundary is the rim") {
  for (ElementFamily f : {ElementFamily::Mixed1, ElementFamily::Mixed2}) {
    const int m = 12, rings = 5;
    NodalMesh mesh = gen_disk(m, rings, f);
    CHECK(mesh.element_count() == m + m * rings);
    check_positive_jacobians(mesh);

    for (const Node& nd : mesh.nodes) CHECK(radius(nd) <= 1.0 + 1e-12);

    EdgeMesh em = node_to_edge(mesh);
    BoundaryInfo bi = detect_boundary(em);
    int boundary_nodes = 0;
    for (int n = 1; n <= mesh.node_count(); ++n)
      if (bi.boundary_node[static_cast<size_t>(n) - 1]) {
        ++boundary_nodes;
        CHECK(radius(mesh.node(n)) == doctest::Approx(1.0).epsilon(1e-12));
      }
    CHECK(boundary_nodes == (f == ElementFamily::Mixed2 ? 2 * m : m));
  }
}

TEST_CASE("disk generator: quad rings split into consistent orders") {
  NodalMesh m1 = gen_disk(8, 3, ElementFamily::Mixed1);
  for (const Element& el : m1.elements)
    CHECK((el.kind == ElementKind::Tri3 || el.kind == ElementKind::Quad4));
  NodalMesh m2 = gen_disk(8, 3, ElementFamily::Mixed2);
  for (const Element& el : m2.elements)
    CHECK((el.kind == ElementKind::Tri6 || el.kind == ElementKind::Quad9));
}

TEST_CASE("cracked disk: doubled crack nodes expose the crack as boundary") {
  const int m = 12, rings = 5;
  for (ElementFamily f : {ElementFamily::Mixed1, ElementFamily::Mixed2}) {
    NodalMesh whole = gen_disk(m, rings, f);
    NodalMesh cracked = gen_cracked_disk(m, rings, f);
    CHECK(cracked.node_count() > whole.node_count());
    CHECK(cracked.element_count() == whole.element_count());
    check_positive_jacobians(cracked);

    // crack faces are boundary: every edge with both ends on the positive
    // x axis must have element incidence one
    EdgeMesh em = node_to_edge(cracked);
    BoundaryInfo bi = detect_boundary(em);
    int crack_edges = 0;
    for (int e = 1; e <= em.edge_count(); ++e) {
      auto [a, b] = em.edge_nodes(e);
      const Node& na = cracked.node(a);
      const Node& nb = cracked.node(b);
      if (std::abs(na.y) <= 1e-12 && std::abs(nb.y) <= 1e-12 && na.x >= -1e-12 &&
          nb.x >= -1e-12) {
        ++crack_edges;
        CHECK(bi.boundary_edge[static_cast<size_t>(e) - 1]);
      }
    }
    CHECK(crack_edges > 0);

    // crack-face elimination removes the former interior crack-line edges
    EdgeMesh em_whole = node_to_edge(whole);
    AssembledSystem sys_whole = assemble(em_whole, {}, detect_boundary(em_whole));
    AssembledSystem sys_crack = assemble(em, {}, bi);
    CHECK(sys_crack.n_free > 0);
    CHECK(sys_crack.n_free < sys_whole.n_free);
  }
}
