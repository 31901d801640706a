#ifndef STABKIT_QP_HPP
#define STABKIT_QP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabkit/rational.hpp"

namespace stabkit::qp {

struct Arrow {
  std::string id;
  int src = 0;
  int tgt = 0;
};

// Finite quiver without loops or 2-cycles, both checked on construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<int> vertices, std::vector<Arrow> arrows);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool has_vertex(int v) const;
  int vertex_index(int v) const;  // position in the declared order
  const Arrow& arrow(const std::string& id) const;
  bool has_arrow(const std::string& id) const;
  // number of arrows i -> j (vertex ids)
  int arrow_count(int i, int j) const;

 private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
};

// A path is a left-to-right composable word of arrow ids: in "ab", a is
// traversed first and t(a) = s(b).
using Path = std::vector<std::string>;

struct PathTerm {
  Rat coeff;
  Path path;
};

// Formal k-linear combination of paths, kept in canonical form (paths sorted,
// like terms merged, zero coefficients dropped).
class FormalPathSum {
 public:
  FormalPathSum() = default;
  explicit FormalPathSum(std::vector<PathTerm> terms);

  const std::vector<PathTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FormalPathSum operator+(const FormalPathSum& o) const;
  FormalPathSum operator*(const Rat& s) const;
  bool operator==(const FormalPathSum& o) const;
  std::string to_string() const;

 private:
  std::vector<PathTerm> terms_;
};

struct CycleTerm {
  Rat coeff;
  Path cycle;  // stored in the lexicographically minimal rotation
};

// Formal sum of cycles up to cyclic equivalence. Terms are stored rotated to
// canonical form, merged, and must have length >= 3.
class Potential {
 public:
  Potential() = default;
  explicit Potential(std::vector<CycleTerm> terms);

  const std::vector<CycleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Potential& o) const;
  std::string to_string() const;

 private:
  std::vector<CycleTerm> terms_;
};

class QuiverWithPotential {
 public:
  QuiverWithPotential() = default;
  QuiverWithPotential(Quiver q, Potential w);

  const Quiver& quiver() const { return quiver_; }
  const Potential& potential() const { return potential_; }

 private:
  Quiver quiver_;
  Potential potential_;
};

struct GradedArrow {
  std::string id;
  int src = 0;
  int tgt = 0;
  int degree = 0;
};

// Underlying graded quiver of the Calabi-Yau-N dg algebra of a quiver with
// potential, with the differential recorded on generators.
struct GradedQuiver {
  int n = 3;
  std::vector<int> vertices;
  std::vector<GradedArrow> arrows;
  std::map<std::string, FormalPathSum> differential;

  const GradedArrow& arrow(const std::string& id) const;
};

// --- cycle helpers -----------------------------------------------------

// Lexicographically minimal rotation of a cyclic word.
Path canonical_rotation(const Path& cycle);

// Merge like cycles (up to rotation), drop zeros, sort.
std::vector<CycleTerm> merge_cycle_terms(std::vector<CycleTerm> terms);

// --- operations --------------------------------------------------------

// d/da of the potential: each cycle uav contributes coeff * vu per occurrence
// of a.
FormalPathSum cyclic_derivative(const QuiverWithPotential& qp, const std::string& arrow_id);

// {d_a W : a in Q1}, zero sums dropped, ordered by the quiver's arrow order.
std::vector<FormalPathSum> jacobian_relations(const QuiverWithPotential& qp);

// DWZ-style mutation at a vertex. Throws domain_error("non-reducible ...")
// when a 2-cycle created by premutation has no matching quadratic term.
QuiverWithPotential mutate(const QuiverWithPotential& qp, int vertex);

// Bounded certificate: every mutation word of length <= depth succeeds and
// produces no loops or 2-cycles.
bool is_nondegenerate_to_depth(const QuiverWithPotential& qp, int depth);

// Ginzburg graded quiver for CY dimension N >= 3 (N > 3 requires acyclic Q).
GradedQuiver ginzburg_graded_quiver(const QuiverWithPotential& qp, int n);

// chi(S_i, S_j) = q_ji - q_ij for the CY3 category; antisymmetric.
long long euler_form_cy3(const QuiverWithPotential& qp, int vi, int vj);

// Matrix of euler_form_cy3 in the order of quiver().vertices().
std::vector<std::vector<long long>> euler_matrix(const QuiverWithPotential& qp);

// Extend the differential to arbitrary formal sums by the graded Leibniz
// rule; used to check d(d x) = 0 on generators.
FormalPathSum apply_differential(const GradedQuiver& gq, const FormalPathSum& x);

// True if the quiver has a directed cycle.
bool has_directed_cycle(const Quiver& q);

// Vertex relabelings preserving (indegree, outdegree); perm[i] is the new
// label of vertices()[i].
std::vector<std::vector<int>> relabelings(const Quiver& q);

// Serialization of the QP under one relabeling, minimized over matchings of
// parallel arrows.
std::string serialize_relabeled(const QuiverWithPotential& qp, const std::vector<int>& perm);

// Isomorphism-invariant key: minimal serialization over vertex relabelings
// (and matchings of parallel arrows). Equal keys <=> isomorphic QPs with
// equal reduced potentials.
std::string canonical_key(const QuiverWithPotential& qp);

bool is_isomorphic(const QuiverWithPotential& a, const QuiverWithPotential& b);

// --- JSON --------------------------------------------------------------

std::string to_json(const QuiverWithPotential& qp);
QuiverWithPotential qp_from_json(const std::string& text);

std::string to_json(const GradedQuiver& gq);

}  // namespace stabkit::qp

#endif  // STABKIT_QP_HPP
