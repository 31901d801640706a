#ifndef STABKIT_REP_HPP
#define STABKIT_REP_HPP

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stabkit/fp.hpp"
#include "stabkit/qp.hpp"

namespace stabkit::rep {

using Class = std::vector<long long>;

// Finite-dimensional module over the Jacobian algebra of a QP, over F_p.
// Matrices are target-dim x source-dim and act on column vectors; every
// jacobian relation must evaluate to the zero matrix.
class Representation {
 public:
  Representation(std::shared_ptr<const qp::QuiverWithPotential> qp, int p, std::vector<int> dim,
                 std::map<std::string, fp::Mat> mats);

  const qp::QuiverWithPotential& qp() const { return *qp_; }
  std::shared_ptr<const qp::QuiverWithPotential> qp_ptr() const { return qp_; }
  int p() const { return p_; }
  const std::vector<int>& dim() const { return dim_; }
  const fp::Mat& mat(const std::string& arrow_id) const;
  long long total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  Class cls() const { return Class(dim_.begin(), dim_.end()); }

  // Matrix of a path (left-to-right composition of arrows).
  fp::Mat eval_path(const qp::Path& path) const;

 private:
  std::shared_ptr<const qp::QuiverWithPotential> qp_;
  int p_ = 2;
  std::vector<int> dim_;
  std::map<std::string, fp::Mat> mats_;
};

struct Subrep {
  std::vector<fp::Mat> bases;  // RREF basis rows per vertex; the inclusion data
  std::vector<int> dim;
  long long total = 0;
};

constexpr long long kDefaultEnumBound = 8;

// All subspace tuples closed under the arrow maps, in a deterministic order.
// Throws "too large" past the bound; requires p <= 3.
std::vector<Subrep> subrepresentations(const Representation& v, bool proper_nonzero,
                                       long long bound = kDefaultEnumBound);

// The subrep as a standalone representation in its basis coordinates.
Representation restrict_to(const Representation& v, const Subrep& w);

// Quotient of v by the subrep with the given bases.
Representation quotient(const Representation& v, const std::vector<fp::Mat>& bases);

// Dimension of the space of module homomorphisms (matrix intertwiners).
int hom_dim(const Representation& a, const Representation& b);

Rat slope(const Representation& v, const Class& a);

enum class KingVerdict { stable, semistable, unstable };

struct KingResult {
  KingVerdict verdict;
  // set when sum a_i dim_i != 0, which is unstable by convention
  bool by_convention = false;
};

KingResult king_classify(const Representation& v, const Class& a,
                         long long bound = kDefaultEnumBound);

// Central charge on the simples, with an exact rational backend
// (authoritative) and a floating backend with tolerance for phase ties.
// Every value must lie in the closed upper half-plane: Im > 0, or Im = 0 and
// Re < 0.
class CentralCharge {
 public:
  static CentralCharge exact(std::vector<RatComplex> z);
  static CentralCharge floating(std::vector<std::complex<double>> z, double tol = 1e-12);

  int rank() const;
  bool is_exact() const { return exact_; }
  double tolerance() const { return tol_; }
  const std::vector<RatComplex>& exact_values() const;
  std::vector<std::complex<double>> values() const;

  std::complex<double> value(const Class& cls) const;
  RatComplex value_exact(const Class& cls) const;

  // sign of phase(c1) - phase(c2), for classes of heart objects
  int compare_phase(const Class& c1, const Class& c2) const;

  CentralCharge scaled_by_minus_one() const;  // charge of the shifted heart

 private:
  CentralCharge() = default;
  bool exact_ = true;
  double tol_ = 1e-12;
  std::vector<RatComplex> zexact_;
  std::vector<std::complex<double>> zfloat_;
};

// (1/pi) arg Z(cls) in (0, 1]; cls must be non-negative and nonzero.
double phase(const CentralCharge& z, const Class& cls);

// Z(S_i) = -c_i + i r_i from a slope datum; r must be strictly positive.
CentralCharge z_from_slope(const Class& c, const Class& r);

bool is_semistable(const Representation& v, const CentralCharge& z,
                   long long bound = kDefaultEnumBound);

struct HNFactor {
  Class cls;
  double phase = 0;
};

// Harder-Narasimhan factors, top phase first, by the inductive maximally
// destabilizing quotient procedure.
std::vector<HNFactor> hn_filtration(const Representation& v, const CentralCharge& z,
                                    long long bound = kDefaultEnumBound);

// Independent oracle: exhaustively enumerates all chains of subrepresentations
// with semistable quotients of strictly decreasing phase, and asserts there is
// exactly one.
std::vector<HNFactor> hn_oracle(const Representation& v, const CentralCharge& z,
                                long long bound = kDefaultEnumBound);

// --- JSON ----------------------------------------------------------------

std::string to_json(const Representation& v);
Representation rep_from_json(const std::string& text);

std::string to_json(const CentralCharge& z);
CentralCharge charge_from_json(const std::string& text);

}  // namespace stabkit::rep

#endif  // STABKIT_REP_HPP
