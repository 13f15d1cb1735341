#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "emedge/edge_mesh.hpp"
#include "emedge/elements.hpp"

using namespace emedge;

namespace {

const std::vector<ElementKind> kAllKinds = {ElementKind::Tri3, ElementKind::Quad4,
                                            ElementKind::Tri6, ElementKind::Quad9};

std::vector<Node> reference_geometry(ElementKind kind) {
  std::vector<Node> g;
  for (int a = 1; a <= nodes_per_element(kind); ++a) {
    RefPoint r = reference_node(kind, a);
    g.push_back({r.xi, r.eta});
  }
  return g;
}

std::vector<double> chord_lengths(ElementKind kind, const std::vector<Node>& geometry) {
  std::vector<double> l;
  for (const auto& [a, b] : local_edge_table(kind)) {
    const Node& na = geometry[static_cast<size_t>(a) - 1];
    const Node& nb = geometry[static_cast<size_t>(b) - 1];
    l.push_back(std::hypot(nb.x - na.x, nb.y - na.y));
  }
  return l;
}

RefPoint random_interior_point(ElementKind kind, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  if (kind == ElementKind::Quad4 || kind == ElementKind::Quad9)
    return {2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0};
  double a = u(rng), b = u(rng);
  if (a + b > 1.0) {
    a = 1.0 - a;
    b = 1.0 - b;
  }
  return {a, b};
}

Vec2 map_point(ElementKind kind, const std::vector<Node>& geometry, RefPoint p) {
  std::vector<double> values;
  std::vector<Vec2> derivs;
  geometry_shapes(kind, p, values, derivs);
  Vec2 x = Vec2::Zero();
  for (size_t a = 0; a < values.size(); ++a)
    x += values[a] * Vec2(geometry[a].x, geometry[a].y);
  return x;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

bool is_quad(ElementKind kind) {
  return kind == ElementKind::Quad4 || kind == ElementKind::Quad9;
}

// exact integral of xi^a eta^b over the reference domain
double monomial_integral(ElementKind kind, int a, int b) {
  if (is_quad(kind)) {
    auto seg = [](int p) { return p % 2 ? 0.0 : 2.0 / (p + 1); };
    return seg(a) * seg(b);
  }
  return factorial(a) * factorial(b) / factorial(a + b + 2);
}

}  // namespace

TEST_CASE("reference node coordinates") {
  CHECK(reference_node(ElementKind::Quad4, 1).xi == -1.0);
  CHECK(reference_node(ElementKind::Quad4, 3).eta == 1.0);
  CHECK(reference_node(ElementKind::Quad9, 5).xi == 0.0);
  CHECK(reference_node(ElementKind::Quad9, 8).eta == 1.0);
  CHECK(reference_node(ElementKind::Tri3, 1).xi == 1.0);
  CHECK(reference_node(ElementKind::Tri3, 3).eta == 0.0);
  CHECK(reference_node(ElementKind::Tri6, 4).xi == 0.5);
  CHECK(reference_node(ElementKind::Tri6, 5).eta == 0.5);
}

TEST_CASE("geometry shapes: Kronecker property and partition of unity") {
  std::mt19937 rng(7);
  std::vector<double> values;
  std::vector<Vec2> derivs;
  for (ElementKind kind : kAllKinds) {
    int n = nodes_per_element(kind);
    for (int a = 1; a <= n; ++a) {
      geometry_shapes(kind, reference_node(kind, a), values, derivs);
      for (int j = 1; j <= n; ++j)
        CHECK(values[static_cast<size_t>(j) - 1] ==
              doctest::Approx(j == a ? 1.0 : 0.0).epsilon(1e-13));
    }
    for (int trial = 0; trial < 5; ++trial) {
      geometry_shapes(kind, random_interior_point(kind, rng), values, derivs);
      double sum = 0.0;
      Vec2 dsum = Vec2::Zero();
      for (int j = 0; j < n; ++j) {
        sum += values[static_cast<size_t>(j)];
        dsum += derivs[static_cast<size_t>(j)];
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(dsum.norm() == doctest::Approx(0.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("jacobian: identity and affine scaling") {
  for (ElementKind kind : kAllKinds) {
    std::vector<Node> geom = reference_geometry(kind);
    JacobianData jd = jacobian_at(kind, geom, {0.2, 0.3});
    CHECK((jd.J - Mat2::Identity()).norm() == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(jd.det_j == doctest::Approx(1.0));

    for (Node& nd : geom) {
      nd.x = 2.0 * nd.x + 5.0;
      nd.y = 3.0 * nd.y - 1.0;
    }
    jd = jacobian_at(kind, geom, {0.2, 0.3});
    CHECK(jd.J(0, 0) == doctest::Approx(2.0));
    CHECK(jd.J(1, 1) == doctest::Approx(3.0));
    CHECK(jd.det_j == doctest::Approx(6.0));
  }
}

TEST_CASE("jacobian matches finite differences of the geometry map") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> jitter(-0.08, 0.08);
  const double h = 1e-6;
  for (ElementKind kind : kAllKinds) {
    std::vector<Node> geom = reference_geometry(kind);
    for (Node& nd : geom) {
      nd.x += jitter(rng);
      nd.y += jitter(rng);
    }
    for (int trial = 0; trial < 4; ++trial) {
      RefPoint p = random_interior_point(kind, rng);
      JacobianData jd = jacobian_at(kind, geom, p);
      Vec2 dxi =
          (map_point(kind, geom, {p.xi + h, p.eta}) - map_point(kind, geom, {p.xi - h, p.eta})) /
          (2 * h);
      Vec2 deta =
          (map_point(kind, geom, {p.xi, p.eta + h}) - map_point(kind, geom, {p.xi, p.eta - h})) /
          (2 * h);
      CHECK(jd.J(0, 0) == doctest::Approx(dxi.x()).epsilon(1e-6));
      CHECK(jd.J(0, 1) == doctest::Approx(dxi.y()).epsilon(1e-6));
      CHECK(jd.J(1, 0) == doctest::Approx(deta.x()).epsilon(1e-6));
      CHECK(jd.J(1, 1) == doctest::Approx(deta.y()).epsilon(1e-6));
      CHECK((jd.J * jd.gamma - Mat2::Identity()).norm() == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(jd.det_j == doctest::Approx(jd.J.determinant()));
    }
  }
}

TEST_CASE("degenerate geometry raises a singular-jacobian error") {
  std::vector<Node> flat = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  CHECK_THROWS_AS(jacobian_at(ElementKind::Quad4, flat, {0.0, 0.0}), Error);
}

TEST_CASE("quadrature rules integrate monomials exactly up to their degree") {
  for (ElementKind kind : kAllKinds) {
    for (bool curved : {false, true}) {
      QuadratureRule rule = quadrature_for(kind, curved);
      for (int a = 0; a + 0 <= rule.degree; ++a)
        for (int b = 0; a + b <= rule.degree; ++b) {
          double sum = 0.0;
          for (size_t q = 0; q < rule.points.size(); ++q)
            sum += rule.weights[q] * std::pow(rule.points[q].xi, a) *
                   std::pow(rule.points[q].eta, b);
          CHECK(sum == doctest::Approx(monomial_integral(kind, a, b)).epsilon(1e-13));
        }
    }
  }
}

TEST_CASE("quadrature weights sum to the reference area") {
  for (ElementKind kind : kAllKinds)
    for (bool curved : {false, true}) {
      QuadratureRule rule = quadrature_for(kind, curved);
      double sum = 0.0;
      for (double w : rule.weights) sum += w;
      CHECK(sum == doctest::Approx(is_quad(kind) ? 4.0 : 0.5));
    }
}

TEST_CASE("reference quad: constant curls +1/2, -1/2, -1/2, +1/2") {
  std::mt19937 rng(3);
  std::vector<Node> geom = reference_geometry(ElementKind::Quad4);
  std::vector<double> lengths = chord_lengths(ElementKind::Quad4, geom);
  const double expected[4] = {0.5, -0.5, -0.5, 0.5};
  for (int trial = 0; trial < 4; ++trial) {
    ShapeEval ev = eval_shapes(ElementKind::Quad4, geom, lengths,
                               random_interior_point(ElementKind::Quad4, rng));
    for (int i = 0; i < 4; ++i)
      CHECK(ev.curls[static_cast<size_t>(i)] == doctest::Approx(expected[i]).epsilon(1e-13));
  }
}

TEST_CASE("reference quad: first edge function vanishes on the opposite side") {
  std::vector<Node> geom = reference_geometry(ElementKind::Quad4);
  std::vector<double> lengths = chord_lengths(ElementKind::Quad4, geom);
  for (double xi : {-0.7, 0.0, 0.4}) {
    ShapeEval ev = eval_shapes(ElementKind::Quad4, geom, lengths, {xi, 1.0});
    CHECK(ev.values[0].norm() == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("reference triangle: constant curls 2*l_i") {
  std::vector<Node> geom = reference_geometry(ElementKind::Tri3);
  std::vector<double> lengths = chord_lengths(ElementKind::Tri3, geom);
  ShapeEval ev = eval_shapes(ElementKind::Tri3, geom, lengths, {0.25, 0.25});
  CHECK(ev.curls[0] == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(ev.curls[1] == doctest::Approx(2.0));
  CHECK(ev.curls[2] == doctest::Approx(2.0));
}

TEST_CASE("tangential integral over perimeter edge i picks out function i") {
  // On an affine element, the line integral of v_j . t along local edge i
  // equals l_i when j == i and vanishes otherwise.
  const int kGauss = 8;
  // 1-D Gauss-Legendre nodes/weights on [0,1], 8 points
  static const double gx[kGauss] = {0.019855071751232, 0.101666761293187, 0.237233795041836,
                                    0.408282678752175, 0.591717321247825, 0.762766204958164,
                                    0.898333238706813, 0.980144928248768};
  static const double gw[kGauss] = {0.050614268145188, 0.111190517226687, 0.156853322938944,
                                    0.181341891689181, 0.181341891689181, 0.156853322938944,
                                    0.111190517226687, 0.050614268145188};
  for (ElementKind kind : kAllKinds) {
    // affine image of the reference element
    std::vector<Node> geom = reference_geometry(kind);
    for (Node& nd : geom) {
      double x = 1.3 * nd.x + 0.4 * nd.y + 2.0;
      double y = -0.2 * nd.x + 1.1 * nd.y - 1.0;
      nd.x = x;
      nd.y = y;
    }
    std::vector<double> lengths = chord_lengths(kind, geom);
    const auto& table = local_edge_table(kind);
    int nedge = static_cast<int>(table.size());
    for (int i = 1; i <= nedge; ++i) {
      if (!is_perimeter_edge(kind, i)) continue;
      RefPoint ra = reference_node(kind, table[static_cast<size_t>(i) - 1].first);
      RefPoint rb = reference_node(kind, table[static_cast<size_t>(i) - 1].second);
      std::vector<double> integral(static_cast<size_t>(nedge), 0.0);
      for (int q = 0; q < kGauss; ++q) {
        double s = gx[q];
        RefPoint p = {ra.xi + s * (rb.xi - ra.xi), ra.eta + s * (rb.eta - ra.eta)};
        JacobianData jd = jacobian_at(kind, geom, p);
        // dx/ds = J^T * (dref/ds)
        Vec2 dref(rb.xi - ra.xi, rb.eta - ra.eta);
        Vec2 tangent = jd.J.transpose() * dref;
        ShapeEval ev = eval_shapes(kind, geom, lengths, p);
        for (int j = 0; j < nedge; ++j)
          integral[static_cast<size_t>(j)] += gw[q] * ev.values[static_cast<size_t>(j)].dot(tangent);
      }
      for (int j = 1; j <= nedge; ++j) {
        double expected = (j == i) ? lengths[static_cast<size_t>(i) - 1] : 0.0;
        INFO("kind ", kind_name(kind), " edge ", i, " function ", j);
        CHECK(integral[static_cast<size_t>(j) - 1] == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("first-order elements reproduce constant fields under affine maps") {
  std::mt19937 rng(19);
  const Vec2 e0(0.7, -0.4);
  for (ElementKind kind : {ElementKind::Tri3, ElementKind::Quad4}) {
    std::vector<Node> geom = reference_geometry(kind);
    for (Node& nd : geom) {
      double x = 1.2 * nd.x - 0.3 * nd.y + 1.0;
      double y = 0.5 * nd.x + 0.9 * nd.y;
      nd.x = x;
      nd.y = y;
    }
    std::vector<double> lengths = chord_lengths(kind, geom);
    const auto& table = local_edge_table(kind);
    // interpolation coefficients: mean tangential component along each edge
    std::vector<double> coeff;
    for (size_t i = 0; i < table.size(); ++i) {
      const Node& na = geom[static_cast<size_t>(table[i].first) - 1];
      const Node& nb = geom[static_cast<size_t>(table[i].second) - 1];
      coeff.push_back(e0.dot(Vec2(nb.x - na.x, nb.y - na.y)) / lengths[i]);
    }
    for (int trial = 0; trial < 5; ++trial) {
      ShapeEval ev = eval_shapes(kind, geom, lengths, random_interior_point(kind, rng));
      Vec2 field = Vec2::Zero();
      double curl = 0.0;
      for (size_t j = 0; j < coeff.size(); ++j) {
        field += coeff[j] * ev.values[j];
        curl += coeff[j] * ev.curls[j];
      }
      CHECK((field - e0).norm() == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(curl == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("analytic curls match finite differences on curved geometry") {
  std::mt19937 rng(23);
  const double h = 1e-6;

  auto fd_check = [&](ElementKind kind, const std::vector<Node>& geom) {
    std::vector<double> lengths = chord_lengths(kind, geom);
    int nedge = static_cast<int>(local_edge_table(kind).size());
    for (int trial = 0; trial < 4; ++trial) {
      RefPoint p = random_interior_point(kind, rng);
      JacobianData jd = jacobian_at(kind, geom, p);
      ShapeEval ev = eval_shapes(kind, geom, lengths, p);
      ShapeEval exp_xi = eval_shapes(kind, geom, lengths, {p.xi + h, p.eta});
      ShapeEval exm_xi = eval_shapes(kind, geom, lengths, {p.xi - h, p.eta});
      ShapeEval exp_eta = eval_shapes(kind, geom, lengths, {p.xi, p.eta + h});
      ShapeEval exm_eta = eval_shapes(kind, geom, lengths, {p.xi, p.eta - h});
      for (int j = 0; j < nedge; ++j) {
        Vec2 d_xi = (exp_xi.values[static_cast<size_t>(j)] - exm_xi.values[static_cast<size_t>(j)]) / (2 * h);
        Vec2 d_eta =
            (exp_eta.values[static_cast<size_t>(j)] - exm_eta.values[static_cast<size_t>(j)]) / (2 * h);
        // d/dx = G11 d/dxi + G12 d/deta ; d/dy = G21 d/dxi + G22 d/deta
        double dvy_dx = jd.gamma(0, 0) * d_xi.y() + jd.gamma(0, 1) * d_eta.y();
        double dvx_dy = jd.gamma(1, 0) * d_xi.x() + jd.gamma(1, 1) * d_eta.x();
        double fd_curl = dvy_dx - dvx_dy;
        CHECK(ev.curls[static_cast<size_t>(j)] ==
              doctest::Approx(fd_curl).epsilon(1e-6).scale(1.0));
      }
    }
  };

  std::vector<Node> tri6 = reference_geometry(ElementKind::Tri6);
  tri6[3] = {0.56, 0.56};  // bow the hypotenuse midnode outward
  fd_check(ElementKind::Tri6, tri6);

  std::vector<Node> quad9 = reference_geometry(ElementKind::Quad9);
  quad9[1] = {0.05, -1.15};  // bow the bottom edge
  quad9[4] = {0.08, 0.06};   // shift the centre node
  fd_check(ElementKind::Quad9, quad9);
}

TEST_CASE("curved-element detection") {
  std::vector<Node> tri6 = reference_geometry(ElementKind::Tri6);
  CHECK_FALSE(is_curved_element(ElementKind::Tri6, tri6));
  tri6[3] = {0.56, 0.56};
  CHECK(is_curved_element(ElementKind::Tri6, tri6));

  std::vector<Node> quad9 = reference_geometry(ElementKind::Quad9);
  CHECK_FALSE(is_curved_element(ElementKind::Quad9, quad9));
  quad9[7] = {0.0, 1.1};
  CHECK(is_curved_element(ElementKind::Quad9, quad9));

  CHECK_FALSE(is_curved_element(ElementKind::Tri3, reference_geometry(ElementKind::Tri3)));
}

TEST_CASE("curl row agrees with shape evaluation") {
  std::mt19937 rng(31);
  for (ElementKind kind : kAllKinds) {
    std::vector<Node> geom = reference_geometry(kind);
    std::vector<double> lengths = chord_lengths(kind, geom);
    RefPoint p = random_interior_point(kind, rng);
    std::vector<double> row = curl_row(kind, geom, lengths, p);
    ShapeEval ev = eval_shapes(kind, geom, lengths, p);
    REQUIRE(row.size() == ev.curls.size());
    for (size_t j = 0; j < row.size(); ++j) CHECK(row[j] == doctest::Approx(ev.curls[j]));
  }
}
