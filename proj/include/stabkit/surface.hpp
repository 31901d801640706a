#ifndef STABKIT_SURFACE_HPP
#define STABKIT_SURFACE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/qp.hpp"

namespace stabkit::surface {

// Bookkeeping for a weighted decorated marked surface: genus, marked points
// per boundary component, decoration weights.
struct MarkedSurfaceData {
  int genus = 0;
  std::vector<int> boundary_marked;  // M_j >= 1, one entry per component
  std::vector<int> weights;          // w_i >= 1

  void validate() const;
};

// sum w_i - sum (M_j + 2) = 4g - 4
bool check_compatibility(const MarkedSurfaceData& d);

using Arc = std::pair<int, int>;

// Triangulation of a disc with m boundary marked points labeled 0..m-1
// clockwise: a maximal set of pairwise non-crossing diagonals.
class DiscTriangulation {
 public:
  DiscTriangulation(int m, std::vector<Arc> arcs);

  int m() const { return m_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(const Arc& a) const;

 private:
  int m_ = 3;
  std::vector<Arc> arcs_;  // normalized (i < j) and sorted
};

bool arcs_cross(const Arc& a, const Arc& b);

// Triangles as sorted vertex triples; the cyclic order u -> v -> w is the
// clockwise orientation inherited from the boundary labels.
std::vector<std::array<int, 3>> faces(const DiscTriangulation& t);

// All triangulations of the convex m-gon (3 <= m <= 12), deterministic
// order; the count is the Catalan number C_{m-2}.
std::vector<DiscTriangulation> enumerate_triangulations(int m);

// Replace the arc by the other diagonal of its surrounding quadrilateral.
DiscTriangulation flip(const DiscTriangulation& t, const Arc& arc);

// One quiver vertex per arc (in sorted arc order, ids 1..k); one arrow per
// clockwise-oriented shared endpoint of two arcs inside a face; the potential
// is the sum of the 3-cycles of internal triangles.
qp::QuiverWithPotential quiver_from_angulation(const DiscTriangulation& t);

// Vertex id (in quiver_from_angulation's labeling) of an arc.
int vertex_of_arc(const DiscTriangulation& t, const Arc& arc);

struct FlipGraph {
  std::vector<DiscTriangulation> vertices;
  std::vector<std::pair<int, int>> edges;  // undirected, src < tgt
};

FlipGraph flip_graph(int m);

// quiver_from_angulation(flip(t, arc)) is isomorphic to the mutation of
// quiver_from_angulation(t) at the arc's vertex.
bool flip_mutation_square(const DiscTriangulation& t, const Arc& arc);

struct CompareReport {
  bool isomorphic = false;
  std::string detail;
  size_t flip_vertices = 0;
  size_t heart_vertices = 0;
};

// Compare flip_graph(m) with the intermediate-filtered heart exchange graph
// seeded at the standard heart of the first triangulation's quiver, both as
// unoriented graphs.
CompareReport compare_exchange_graphs(int m);

std::string to_dot(const FlipGraph& g);
std::string to_json(const DiscTriangulation& t);
DiscTriangulation triangulation_from_json(const std::string& text);

}  // namespace stabkit::surface

#endif  // STABKIT_SURFACE_HPP
