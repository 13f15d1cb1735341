#pragma once

#include <string>

#include "emedge/mesh.hpp"

namespace emedge {

enum class ElementFamily { T3, Q4, T8, Q12, Mixed1, Mixed2 };

ElementFamily family_from_name(const std::string& name);
const char* family_name(ElementFamily family);
bool family_is_second_order(ElementFamily family);

// Uniform n x n mesh of the side-pi square. T3 splits every cell along the
// lower-left to upper-right diagonal. Nodes are numbered row-major bottom to
// top; elements row-major.
NodalMesh gen_square(int n, ElementFamily family, double side = /* pi */ 3.14159265358979323846);

// Curved L: the region (r in [1,3]) x (theta in [0,pi]) minus the inner
// corner block (r in [1,2]) x (theta in [pi/2,pi]). `nr` radial divisions
// span r in [1,3] (must be even so r=2 is a grid line), `ntheta` angular
// divisions per quadrant. All arc nodes are placed on the exact circles.
NodalMesh gen_curved_l(int nr, int ntheta, ElementFamily family);

// Unit disk: a fan of `core_triangles` triangles around the origin, then
// `rings` structured quadrilateral layers out to r=1. Mixed1 is T3+Q4,
// Mixed2 is Tri6+Quad9 with midnodes on the exact circles.
NodalMesh gen_disk(int core_triangles, int rings, ElementFamily family);

// Disk with a crack along the positive x axis, modeled by double noding:
// every node on the crack line (centre included) is duplicated and elements
// below the axis are rebound to the duplicates.
NodalMesh gen_cracked_disk(int core_triangles, int rings, ElementFamily family);

}  // namespace emedge
