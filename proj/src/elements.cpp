#include "emedge/elements.hpp"

#include <cmath>
#include <string>

namespace emedge {

RefPoint reference_node(ElementKind kind, int local_node) {
  switch (kind) {
    case ElementKind::Tri3: {
      static const RefPoint n[3] = {{1, 0}, {0, 1}, {0, 0}};
      return n[local_node - 1];
    }
    case ElementKind::Tri6: {
      static const RefPoint n[6] = {{1, 0}, {0, 1}, {0, 0}, {0.5, 0.5}, {0, 0.5}, {0.5, 0}};
      return n[local_node - 1];
    }
    case ElementKind::Quad4: {
      static const RefPoint n[4] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
      return n[local_node - 1];
    }
    case ElementKind::Quad9: {
      int i = (local_node - 1) % 3;  // xi index
      int j = (local_node - 1) / 3;  // eta index
      return {static_cast<double>(i - 1), static_cast<double>(j - 1)};
    }
  }
  return {};
}

namespace {

// 1-D quadratic Lagrange basis on {-1, 0, +1}.
inline double lag3(int i, double t) {
  switch (i) {
    case 0: return 0.5 * t * (t - 1.0);
    case 1: return 1.0 - t * t;
    default: return 0.5 * t * (t + 1.0);
  }
}
inline double dlag3(int i, double t) {
  switch (i) {
    case 0: return t - 0.5;
    case 1: return -2.0 * t;
    default: return t + 0.5;
  }
}

}  // namespace

void geometry_shapes(ElementKind kind, RefPoint p, std::vector<double>& values,
                     std::vector<Vec2>& derivs) {
  const double xi = p.xi, eta = p.eta;
  int n = nodes_per_element(kind);
  values.assign(static_cast<size_t>(n), 0.0);
  derivs.assign(static_cast<size_t>(n), Vec2::Zero());
  switch (kind) {
    case ElementKind::Tri3: {
      values = {xi, eta, 1.0 - xi - eta};
      derivs = {Vec2(1, 0), Vec2(0, 1), Vec2(-1, -1)};
      break;
    }
    case ElementKind::Tri6: {
      const double alpha = 1.0 - xi - eta;
      values = {xi * (2 * xi - 1), eta * (2 * eta - 1), alpha * (2 * alpha - 1),
                4 * xi * eta,      4 * eta * alpha,     4 * xi * alpha};
      derivs = {Vec2(4 * xi - 1, 0),
                Vec2(0, 4 * eta - 1),
                Vec2(1 - 4 * alpha, 1 - 4 * alpha),
                Vec2(4 * eta, 4 * xi),
                Vec2(-4 * eta, 4 * (alpha - eta)),
                Vec2(4 * (alpha - xi), -4 * xi)};
      break;
    }
    case ElementKind::Quad4: {
      for (int a = 0; a < 4; ++a) {
        RefPoint c = reference_node(kind, a + 1);
        values[static_cast<size_t>(a)] = 0.25 * (1 + c.xi * xi) * (1 + c.eta * eta);
        derivs[static_cast<size_t>(a)] =
            Vec2(0.25 * c.xi * (1 + c.eta * eta), 0.25 * c.eta * (1 + c.xi * xi));
      }
      break;
    }
    case ElementKind::Quad9: {
      for (int a = 0; a < 9; ++a) {
        int i = a % 3, j = a / 3;
        values[static_cast<size_t>(a)] = lag3(i, xi) * lag3(j, eta);
        derivs[static_cast<size_t>(a)] =
            Vec2(dlag3(i, xi) * lag3(j, eta), lag3(i, xi) * dlag3(j, eta));
      }
      break;
    }
  }
}

double element_diameter(const std::vector<Node>& geometry) {
  double d = 0.0;
  for (size_t a = 0; a < geometry.size(); ++a)
    for (size_t b = a + 1; b < geometry.size(); ++b)
      d = std::max(d, std::hypot(geometry[a].x - geometry[b].x, geometry[a].y - geometry[b].y));
  return d;
}

JacobianData jacobian_at(ElementKind kind, const std::vector<Node>& geometry, RefPoint p) {
  if (static_cast<int>(geometry.size()) != nodes_per_element(kind))
    throw Error(ErrorCode::LengthMismatch, "geometry node count does not match element kind");
  std::vector<double> values;
  std::vector<Vec2> derivs;
  geometry_shapes(kind, p, values, derivs);
  JacobianData jd;
  jd.J.setZero();
  for (size_t a = 0; a < geometry.size(); ++a) {
    jd.J(0, 0) += derivs[a](0) * geometry[a].x;  // dx/dxi
    jd.J(0, 1) += derivs[a](0) * geometry[a].y;  // dy/dxi
    jd.J(1, 0) += derivs[a](1) * geometry[a].x;  // dx/deta
    jd.J(1, 1) += derivs[a](1) * geometry[a].y;  // dy/deta
  }
  jd.det_j = jd.J.determinant();
  double diam = element_diameter(geometry);
  if (std::abs(jd.det_j) < 1e-14 * diam * diam)
    throw Error(ErrorCode::SingularJacobian, "singular element mapping (detJ ~ 0)");
  jd.gamma = jd.J.inverse();
  return jd;
}

namespace {

// An edge function in reference form p(xi,eta) grad xi + q(xi,eta) grad eta,
// without the edge-length factor. Curl follows from d(q)/dxi - d(p)/deta
// scaled by det(Gamma) = 1/detJ, exact also on curved mappings.
struct RefShape {
  double p = 0, q = 0;
  double p_xi = 0, p_eta = 0;
  double q_xi = 0, q_eta = 0;
};

// product of a scalar factor (f, f_xi, f_eta) and a base vector shape
RefShape scaled(double f, double f_xi, double f_eta, const RefShape& w) {
  RefShape r;
  r.p = f * w.p;
  r.q = f * w.q;
  r.p_xi = f_xi * w.p + f * w.p_xi;
  r.p_eta = f_eta * w.p + f * w.p_eta;
  r.q_xi = f_xi * w.q + f * w.q_xi;
  r.q_eta = f_eta * w.q + f * w.q_eta;
  return r;
}

void ref_shapes(ElementKind kind, double xi, double eta, std::vector<RefShape>& out) {
  out.clear();
  switch (kind) {
    case ElementKind::Quad4: {
      out.resize(4);
      out[0] = {0.25 * (1 - eta), 0, 0, -0.25, 0, 0};
      out[1] = {0.25 * (1 + eta), 0, 0, +0.25, 0, 0};
      out[2] = {0, 0.25 * (1 - xi), 0, 0, -0.25, 0};
      out[3] = {0, 0.25 * (1 + xi), 0, 0, +0.25, 0};
      break;
    }
    case ElementKind::Tri3:
    case ElementKind::Tri6: {
      // Whitney vectors of the three triangle sides, with grad alpha expanded
      // as -(grad xi + grad eta):
      //   w12 = xi grad eta - eta grad xi
      //   w23 = eta grad alpha - alpha grad eta
      //   w31 = alpha grad xi - xi grad alpha
      const RefShape w12 = {-eta, xi, 0, -1, 1, 0};
      const RefShape w23 = {-eta, -(1 - xi), 0, -1, 1, 0};
      const RefShape w31 = {1 - eta, xi, 0, -1, 1, 0};
      if (kind == ElementKind::Tri3) {
        out = {w12, w23, w31};
      } else {
        const double alpha = 1 - xi - eta;
        out.resize(8);
        out[0] = scaled(4 * xi - 1, 4, 0, w12);
        out[1] = scaled(4 * eta - 1, 0, 4, w12);
        out[2] = scaled(4 * eta - 1, 0, 4, w23);
        out[3] = scaled(4 * alpha - 1, -4, -4, w23);
        out[4] = scaled(4 * alpha - 1, -4, -4, w31);
        out[5] = scaled(4 * xi - 1, 4, 0, w31);
        out[6] = scaled(4 * eta, 0, 4, w31);
        out[7] = scaled(4 * xi, 4, 0, w23);
      }
      break;
    }
    case ElementKind::Quad9: {
      out.resize(12);
      // grad-xi family: p = A(eta) * B(xi)
      auto gx = [&](double A, double dA, double B, double dB) {
        return RefShape{A * B, 0, A * dB, dA * B, 0, 0};
      };
      // grad-eta family: q = A(xi) * B(eta)
      auto ge = [&](double A, double dA, double B, double dB) {
        return RefShape{0, A * B, 0, 0, dA * B, A * dB};
      };
      const double em = 0.5 * eta * (eta - 1), dem = eta - 0.5;
      const double e0 = eta * eta - 1, de0 = 2 * eta;
      const double ep = 0.5 * eta * (eta + 1), dep = eta + 0.5;
      const double xm = 0.5 * xi * (xi - 1), dxm = xi - 0.5;
      const double x0 = xi * xi - 1, dx0 = 2 * xi;
      const double xp = 0.5 * xi * (xi + 1), dxp = xi + 0.5;
      out[0] = gx(-em, -dem, xi - 0.5, 1);
      out[1] = gx(em, dem, xi + 0.5, 1);
      out[2] = gx(e0, de0, xi - 0.5, 1);
      out[3] = gx(-e0, -de0, xi + 0.5, 1);
      out[4] = gx(-ep, -dep, xi - 0.5, 1);
      out[5] = gx(ep, dep, xi + 0.5, 1);
      out[6] = ge(-xm, -dxm, eta - 0.5, 1);
      out[7] = ge(x0, dx0, eta - 0.5, 1);
      out[8] = ge(-xp, -dxp, eta - 0.5, 1);
      out[9] = ge(xm, dxm, eta + 0.5, 1);
      out[10] = ge(-x0, -dx0, eta + 0.5, 1);
      out[11] = ge(xp, dxp, eta + 0.5, 1);
      break;
    }
  }
}

}  // namespace

ShapeEval eval_shapes(ElementKind kind, const std::vector<Node>& geometry,
                      const std::vector<double>& lengths, RefPoint p) {
  int nedge = edges_per_element(kind);
  if (static_cast<int>(lengths.size()) != nedge)
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(nedge) + " edge lengths, got " +
                    std::to_string(lengths.size()));
  JacobianData jd = jacobian_at(kind, geometry, p);
  const Vec2 grad_xi(jd.gamma(0, 0), jd.gamma(1, 0));
  const Vec2 grad_eta(jd.gamma(0, 1), jd.gamma(1, 1));

  std::vector<RefShape> ref;
  ref_shapes(kind, p.xi, p.eta, ref);

  ShapeEval eval;
  eval.at_point = p;
  eval.values.resize(static_cast<size_t>(nedge));
  eval.curls.resize(static_cast<size_t>(nedge));
  for (int i = 0; i < nedge; ++i) {
    const RefShape& s = ref[static_cast<size_t>(i)];
    double li = lengths[static_cast<size_t>(i)];
    eval.values[static_cast<size_t>(i)] = li * (s.p * grad_xi + s.q * grad_eta);
    eval.curls[static_cast<size_t>(i)] = li * (s.q_xi - s.p_eta) / jd.det_j;
  }
  return eval;
}

std::vector<double> curl_row(ElementKind kind, const std::vector<Node>& geometry,
                             const std::vector<double>& lengths, RefPoint p) {
  return eval_shapes(kind, geometry, lengths, p).curls;
}

namespace {

void gauss_1d(int n, std::vector<double>& x, std::vector<double>& w) {
  switch (n) {
    case 2:
      x = {-1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
      w = {1.0, 1.0};
      break;
    case 4:
      x = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
      w = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
      break;
    case 5:
      x = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
           0.9061798459386640};
      w = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
           0.2369268850561891};
      break;
    default:
      throw Error(ErrorCode::IndexOutOfRange, "unsupported 1-D Gauss order");
  }
}

QuadratureRule tensor_gauss(int n, int degree) {
  std::vector<double> x, w;
  gauss_1d(n, x, w);
  QuadratureRule rule;
  rule.degree = degree;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      rule.points.push_back({x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]});
      rule.weights.push_back(w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)]);
    }
  return rule;
}

QuadratureRule tri_midpoint3() {
  QuadratureRule rule;
  rule.degree = 2;
  rule.points = {{0.5, 0.5}, {0.0, 0.5}, {0.5, 0.0}};
  rule.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
  return rule;
}

QuadratureRule tri_7point() {
  QuadratureRule rule;
  rule.degree = 5;
  const double s15 = std::sqrt(15.0);
  const double a1 = (6.0 + s15) / 21.0, w1 = (155.0 + s15) / 2400.0;
  const double a2 = (6.0 - s15) / 21.0, w2 = (155.0 - s15) / 2400.0;
  rule.points = {{1.0 / 3.0, 1.0 / 3.0}};
  rule.weights = {9.0 / 80.0};
  for (double a : {a1, a2}) {
    double w = (a == a1) ? w1 : w2;
    double b = 1.0 - 2.0 * a;
    rule.points.push_back({a, a});
    rule.points.push_back({b, a});
    rule.points.push_back({a, b});
    rule.weights.insert(rule.weights.end(), {w, w, w});
  }
  return rule;
}

QuadratureRule tri_12point() {
  QuadratureRule rule;
  rule.degree = 6;
  const double a1 = 0.501426509658179, b1 = 0.249286745170910, w1 = 0.116786275726379;
  const double a2 = 0.873821971016996, b2 = 0.063089014491502, w2 = 0.050844906370207;
  const double a3 = 0.053145049844816, b3 = 0.310352451033785, w3 = 0.082851075618374;
  auto push3 = [&](double a, double b, double w) {
    rule.points.push_back({a, b});
    rule.points.push_back({b, 1.0 - a - b});
    rule.points.push_back({1.0 - a - b, a});
    rule.weights.insert(rule.weights.end(), {0.5 * w, 0.5 * w, 0.5 * w});
  };
  push3(a1, b1, w1);
  push3(a2, b2, w2);
  push3(a3, b3, w3);
  push3(b3, a3, w3);
  return rule;
}

}  // namespace

QuadratureRule quadrature_for(ElementKind kind, bool curved) {
  switch (kind) {
    case ElementKind::Quad4: return tensor_gauss(2, 3);
    case ElementKind::Tri3: return tri_midpoint3();
    case ElementKind::Quad9: return curved ? tensor_gauss(5, 9) : tensor_gauss(4, 7);
    case ElementKind::Tri6: return curved ? tri_12point() : tri_7point();
  }
  return {};
}

bool is_curved_element(ElementKind kind, const std::vector<Node>& geometry) {
  if (!is_second_order(kind)) return false;
  const double tol = 1e-12 * element_diameter(geometry);
  auto off_mid = [&](int mid, int a, int b) {
    double mx = 0.5 * (geometry[static_cast<size_t>(a) - 1].x + geometry[static_cast<size_t>(b) - 1].x);
    double my = 0.5 * (geometry[static_cast<size_t>(a) - 1].y + geometry[static_cast<size_t>(b) - 1].y);
    return std::hypot(geometry[static_cast<size_t>(mid) - 1].x - mx,
                      geometry[static_cast<size_t>(mid) - 1].y - my) > tol;
  };
  if (kind == ElementKind::Tri6)
    return off_mid(4, 1, 2) || off_mid(5, 2, 3) || off_mid(6, 3, 1);
  // Quad9: side midnodes vs corner chords, centre vs mean of side midpoints.
  if (off_mid(2, 1, 3) || off_mid(8, 7, 9) || off_mid(4, 1, 7) || off_mid(6, 3, 9)) return true;
  return off_mid(5, 4, 6) || off_mid(5, 2, 8);
}

}  // namespace emedge
