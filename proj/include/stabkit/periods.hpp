#ifndef STABKIT_PERIODS_HPP
#define STABKIT_PERIODS_HPP

#include <complex>
#include <string>
#include <vector>

#include "stabkit/rational.hpp"

namespace stabkit::periods {

using cplx = std::complex<double>;

// Polynomial quadratic differential p(z) dz (x) dz on the sphere, with p
// monic and centered (sum of roots 0) up to a declared scalar factor; the
// factor carries rotations and rescalings of the differential.
class QuadDifferential {
 public:
  // lower coefficients c_0 .. c_{n-1} of z^n + c_{n-1} z^{n-1} + ... + c_0;
  // c_{n-1} must vanish (centered normalization)
  explicit QuadDifferential(std::vector<cplx> lower_coeffs, cplx scale = 1.0);

  // (z^3 + a z + b) dz (x) dz; throws "degenerate differential" when
  // 4a^3 + 27b^2 = 0
  static QuadDifferential a2(cplx a, cplx b);

  int degree() const { return static_cast<int>(lower_.size()); }
  cplx scale() const { return scale_; }
  const std::vector<cplx>& lower_coeffs() const { return lower_; }
  cplx eval(cplx z) const;

  QuadDifferential scaled(cplx factor) const;  // factor * p

 private:
  std::vector<cplx> lower_;
  cplx scale_{1.0, 0.0};
};

// 4a^3 + 27b^2
cplx a2_discriminant(cplx a, cplx b);

// All roots to ~1e-12 relative accuracy, sorted by (Re, Im); throws
// "degenerate differential" when roots collide.
std::vector<cplx> zeroes(const QuadDifferential& p);

struct PeriodOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-11;
  int initial_nodes = 15;
  int max_nodes = 1 << 19;
};

// integral of sqrt(p) dz over the straight segment between zeroes i and j
// (indices into zeroes(p)). The square-root branch is fixed by continuity
// from the principal value at the segment midpoint; the endpoint half-order
// vanishing is absorbed into the (1-t)^(1/2) (1+t)^(1/2) quadrature weight.
// Throws when a third zero lies on the segment or the node budget runs out.
cplx period(const QuadDifferential& p, int i, int j, const PeriodOptions& opt = {});

// Single quadrature pass with a fixed node count (no convergence loop);
// used to check node-doubling stability.
cplx period_with_nodes(const QuadDifferential& p, int i, int j, int nodes);

struct PeriodEntry {
  int i = 0;
  int j = 0;
  bool blocked = false;   // a third zero sits on the straight segment
  cplx value{0, 0};
  int midpoint_sign = 1;  // branch datum: sign relative to the principal root
  std::string note;
};

struct PeriodTable {
  std::vector<cplx> zero_list;
  std::vector<PeriodEntry> entries;  // one per unordered pair, i < j
};

PeriodTable period_table(const QuadDifferential& p, const PeriodOptions& opt = {});

// True when no straight-segment period is real (|Im| > 1e-9 |period|).
// Straight segments stand in for saddle connections; pairs blocked by a
// collinear zero are tested through their two legs instead. A proxy, not a
// horizontal-trajectory computation.
bool genericity_proxy(const QuadDifferential& p, const PeriodOptions& opt = {});

// --- chamber scan -------------------------------------------------------

struct GridSpec {
  Rat lo{0};
  Rat hi{0};
  int count = 1;
};

GridSpec parse_grid_spec(const std::string& text);  // "lo:hi:count"

struct ScanCell {
  int row = 0;
  int col = 0;
  bool have_ab = false;
  cplx a{0, 0};
  cplx b{0, 0};
  cplx discriminant{0, 0};
  bool have_z = false;
  cplx z1{0, 0};
  cplx z2{0, 0};
  std::string label;
  std::string generic_flag;
};

// Grid over the imaginary parts of (Z(S1), Z(S2)) directly; real parts are
// pinned to -1 so wall cells sit at phase one. Labels are exact.
std::vector<ScanCell> scan_impair(const GridSpec& g1, const GridSpec& g2);

// Grid over real (a, b): periods of the adjacent zero pairs are read as
// (Z(S1), Z(S2)), normalized per cell to Im >= 0 (the relabeling-symmetry
// representative). Cells on the discriminant locus are marked and skipped.
std::vector<ScanCell> scan_ab(const GridSpec& ga, const GridSpec& gb, int threads = 1,
                              const PeriodOptions& opt = {});

std::string scan_to_csv(const std::vector<ScanCell>& cells);

// "z^3 - z", "z^2+0.5*z-1", coefficients real
QuadDifferential parse_polynomial(const std::string& text);

}  // namespace stabkit::periods

#endif  // STABKIT_PERIODS_HPP
