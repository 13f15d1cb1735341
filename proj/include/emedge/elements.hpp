#pragma once

#include <Eigen/Dense>
#include <vector>

#include "emedge/mesh.hpp"

namespace emedge {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

struct RefPoint {
  double xi = 0.0;
  double eta = 0.0;
};

// Reference layouts:
//   Quad4  corners 1=(-1,-1), 2=(1,-1), 3=(1,1), 4=(-1,1)
//   Quad9  lexicographic rows: 1..3 at eta=-1, 4..6 at eta=0, 7..9 at eta=+1
//   Tri3   node1=(1,0), node2=(0,1), node3=(0,0); alpha = 1 - xi - eta
//   Tri6   corner layout as Tri3, midnodes 4,5,6 on sides (1,2),(2,3),(3,1)
RefPoint reference_node(ElementKind kind, int local_node);

struct JacobianData {
  Mat2 J;      // rows (dx/dxi, dy/dxi), (dx/deta, dy/deta)
  Mat2 gamma;  // J^-1; gradients: grad xi = (G11, G21), grad eta = (G12, G22)
  double det_j = 0.0;
};

// Geometric shape function values and (d/dxi, d/deta) derivatives.
void geometry_shapes(ElementKind kind, RefPoint p, std::vector<double>& values,
                     std::vector<Vec2>& derivs);

JacobianData jacobian_at(ElementKind kind, const std::vector<Node>& geometry, RefPoint p);

struct ShapeEval {
  std::vector<Vec2> values;   // physical components of each edge function
  std::vector<double> curls;  // scalar z-curl of each edge function
  RefPoint at_point;
};

// Edge shape functions of the element in physical components, with analytic
// curls. `lengths` are the physical chord lengths l_1..l_n of the local edges.
ShapeEval eval_shapes(ElementKind kind, const std::vector<Node>& geometry,
                      const std::vector<double>& lengths, RefPoint p);

// The 1 x n curl row (B-matrix row) used in stiffness integration.
std::vector<double> curl_row(ElementKind kind, const std::vector<Node>& geometry,
                             const std::vector<double>& lengths, RefPoint p);

struct QuadratureRule {
  std::vector<RefPoint> points;
  std::vector<double> weights;
  int degree = 0;  // exact for polynomials up to this total degree
};

// Quad4: 2x2 Gauss. Tri3: 3-point midpoint rule. Quad9: 4x4 Gauss (5x5 when
// curved). Tri6: 7-point degree 5 (12-point degree 6 when curved).
QuadratureRule quadrature_for(ElementKind kind, bool curved);

// True when the element's quadratic geometry deviates from the linear one
// (midside nodes off chord midpoints, Quad9 centre off the bilinear point).
bool is_curved_element(ElementKind kind, const std::vector<Node>& geometry);

// Longest node-pair distance, used to scale the singular-Jacobian cutoff.
double element_diameter(const std::vector<Node>& geometry);

}  // namespace emedge
