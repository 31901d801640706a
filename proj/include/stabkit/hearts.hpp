#ifndef STABKIT_HEARTS_HPP
#define STABKIT_HEARTS_HPP

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stabkit/qp.hpp"
#include "stabkit/rep.hpp"

namespace stabkit::hearts {

using Class = rep::Class;

// Finite heart encoded by the Ext-quiver of its simples plus the integer
// matrix of their classes in K(D), rows [S_i] in the standard-heart basis.
// The rows always form a Z-basis (determinant +-1).
class Heart {
 public:
  Heart(std::shared_ptr<const qp::QuiverWithPotential> qp, std::vector<Class> classes);

  const qp::QuiverWithPotential& qp() const { return *qp_; }
  std::shared_ptr<const qp::QuiverWithPotential> qp_ptr() const { return qp_; }
  const std::vector<Class>& classes() const { return classes_; }
  const Class& row(int i) const { return classes_.at(i); }
  int rank() const { return static_cast<int>(classes_.size()); }

  // iso-invariant key: quiver relabeling with the class rows permuted along
  // (columns stay in the standard basis)
  std::string canonical_key() const;
  bool same_as(const Heart& o) const { return canonical_key() == o.canonical_key(); }

 private:
  std::shared_ptr<const qp::QuiverWithPotential> qp_;
  std::vector<Class> classes_;
};

Heart standard_heart(std::shared_ptr<const qp::QuiverWithPotential> qp);

long long det(const std::vector<Class>& m);

enum class Direction { forward, backward };

// Simple tilt: the quiver mutates at the vertex of S_i; class rows update by
// the signed rule (forward: [S_i] -> -[S_i], [S_j] -> [S_j] + q_ij [S_i]).
// Forward and backward are mutually inverse. Index is 0-based.
Heart simple_tilt(const Heart& h, int index, Direction dir);

// Classes scale by (-1)^n; the quiver is unchanged.
Heart shift_heart(const Heart& h, int n);

// Row-sign proxy for the simples lying in H0 or H0[1]: every class row is
// componentwise >= 0 or componentwise <= 0.
bool is_intermediate(const Heart& h);

// K-theory shadow of the spherical twist at S_i: cls -> cls - chi(S_i, cls) [S_i].
Class sph_twist_class_action(const Heart& h, int index, const Class& cls);

// chi on K(D) extended bilinearly from the heart's Ext-quiver.
long long euler_pairing(const Heart& h, const Class& a, const Class& b);

struct Edge {
  int src = 0;
  int tgt = 0;
  int simple = 0;
  Direction dir = Direction::forward;
};

struct FailedTilt {
  int src = 0;
  int simple = 0;
  Direction dir = Direction::forward;
  std::string message;
};

struct ExchangeGraphSlice {
  std::vector<Heart> vertices;
  std::vector<Edge> edges;
  std::vector<FailedTilt> failures;
  std::vector<bool> boundary;  // vertex had a failing tilt

  int forward_edge_count() const;
};

using HeartFilter = std::function<bool(const Heart&)>;

// Breadth-first closure of the seed under simple tilts, deduplicated by
// canonical form. Tilts are taken in the window [seed, seed[1]]: forward at
// simples with non-negative rows, backward at simples with non-positive rows
// (tilting the other way exits the window and, composed with the twist
// translates, never terminates). max_depth < 0 means unbounded; a filter
// drops hearts from the slice without expanding them.
ExchangeGraphSlice exchange_graph(const Heart& seed, int max_depth,
                                  const HeartFilter& filter = nullptr);

std::string to_dot(const ExchangeGraphSlice& g);

// The five hearts of the rank-2 fundamental domain, in the order
// H0, H1, H2, H3, H4 used by chamber labels.
std::vector<Heart> a2_pentagon();

// Chamber of the rank-2 stability space by the signs of Im Z(S1), Im Z(S2)
// and Im Z(E); walls are labeled by their vanishing class.
std::string chamber_of(const RatComplex& z1, const RatComplex& z2);
std::string chamber_of(std::complex<double> z1, std::complex<double> z2, double tol = 1e-12);

// Heart across the wall where S_i reaches phase 1, normalized to the
// fundamental domain: the backward tilt composed with the spherical twist at
// S_i, which at class level is the forward tilt when [S_i] >= 0.
Heart cross_wall(const Heart& h, int index);

struct StabilityCondition {
  StabilityCondition(Heart heart, rep::CentralCharge z);
  Heart heart;
  rep::CentralCharge z;
};

// "interior", "wall:S<k>", or "higher-codimension wall (...)" when k >= 2
// simples sit at phase 1.
std::string wall_profile(const StabilityCondition& sigma);

struct CActionResult {
  Heart heart;
  std::vector<std::complex<double>> z_values;   // charges of the heart's simples
  std::optional<rep::CentralCharge> charge;     // set when the pair is a stability condition
  bool heart_updated = true;

  StabilityCondition sigma() const;  // throws when the charge is not valid
};

// lambda.(H, Z) = (tilted/shifted heart, e^{-i pi lambda} Z). Integer lambda
// shifts exactly; real parts act by successive forward tilts at the simples
// whose phases drop out of (0, 1]. Non-integer real part combined with a
// nonzero imaginary part returns the rotated charge values only, flagged
// heart_updated = false (the heart update needs slicing data beyond the
// finite heart).
CActionResult c_action(const StabilityCondition& sigma, std::complex<double> lambda);

struct ProbePoint {
  double phi_plus = 0;
  double phi_minus = 0;
  double mass = 0;
};

struct ProbeEntry {
  Class cls;
  ProbePoint s1;
  ProbePoint s2;
};

// sup over the probe of {|d phi-|, |d phi+|, |log m2/m1|}
double stab_metric(const StabilityCondition& s1, const StabilityCondition& s2,
                   const std::vector<ProbeEntry>& probe);
double metric_from_probe(const std::vector<ProbeEntry>& probe);

// HN data of a representation under a charge, as one side of a probe entry.
ProbePoint hn_probe_point(const rep::Representation& v, const rep::CentralCharge& z);

// Analytic transform of probe data under the C-action.
ProbePoint c_action_transform(const ProbePoint& p, std::complex<double> lambda);

enum class Norm { euclidean, sup };

struct SupportRow {
  Class cls;
  double abs_z = 0;
  double norm = 0;
  double ratio = 0;
  double q_diagnostic = 0;  // |Z(cls)| - c * ||cls||, >= 0 with equality at the argmin
};

struct SupportReport {
  double constant = 0;
  std::optional<Rat> constant_sq;  // exact squared value on the exact backend
  std::vector<SupportRow> rows;
};

SupportReport support_constant(const StabilityCondition& sigma,
                               const std::vector<Class>& semistable_classes, Norm norm);

// Z(alpha)/Z(beta) real, for nonzero non-proportional classes.
bool marginal_wall_check(const rep::CentralCharge& z, const Class& alpha, const Class& beta);

// --- JSON ------------------------------------------------------------------

std::string to_json(const Heart& h);
Heart heart_from_json(const std::string& text);

}  // namespace stabkit::hearts

#endif  // STABKIT_HEARTS_HPP
