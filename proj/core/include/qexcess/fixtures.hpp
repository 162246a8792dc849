#pragma once

#include <string>
#include <vector>

#include "qexcess/graphdual.hpp"
#include "qexcess/linalg.hpp"

namespace qexcess::fixtures {

// Point sets are returned on the sphere of squared radius m.

/// Regular simplex with m + 1 vertices in R^m.
Matrix simplex(int m);
/// ±sqrt(m) e_i; m = 3 is the octahedron.
Matrix cross_polytope(int m);
/// {±1}^m; m = 3 is the cube.
Matrix hypercube(int m);
Matrix cube();
Matrix octahedron();
/// (0, ±1, ±phi) and cyclic shifts, rescaled.
Matrix icosahedron();
/// (±a, ±b, ±c) with a^2 = 2.16 and b = c; centered but not a 2-design.
Matrix cuboid();
/// Roots ±e_i ± e_j of D_m, rescaled. For m = 5 a 2-design with S = s whose
/// mean excess stays strictly below the bound.
Matrix d_roots(int m);

Graph petersen();
Graph cycle(int n);
Graph complete(int n);
Graph hypercube_graph(int m);

struct NamedPointSet {
  std::string name;
  Matrix coords;
};

/// Canonical design fixtures: simplices and cross-polytopes for m = 2..6,
/// the cube and the icosahedron.
std::vector<NamedPointSet> design_fixtures();

}  // namespace qexcess::fixtures
