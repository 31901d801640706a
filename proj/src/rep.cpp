#include "stabkit/rep.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace stabkit::rep {

using nlohmann::json;

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int rat_mod_p(const Rat& r, int p) {
  long long num = r.numerator() % p;
  if (num < 0) num += p;
  long long den = r.denominator() % p;
  if (den == 0) throw domain_error("potential coefficient has denominator divisible by p");
  return static_cast<int>(num) * fp::inverse_mod(static_cast<int>(den), p) % p;
}

}  // namespace

Representation::Representation(std::shared_ptr<const qp::QuiverWithPotential> qp, int p,
                               std::vector<int> dim, std::map<std::string, fp::Mat> mats)
    : qp_(std::move(qp)), p_(p), dim_(std::move(dim)), mats_(std::move(mats)) {
  if (!is_prime(p_)) throw domain_error("field characteristic must be prime");
  const qp::Quiver& q = qp_->quiver();
  if (dim_.size() != q.vertices().size())
    throw domain_error("dimension vector length does not match the quiver");
  for (int d : dim_)
    if (d < 0) throw domain_error("negative dimension");

  for (const qp::Arrow& a : q.arrows()) {
    auto it = mats_.find(a.id);
    int rows = dim_[q.vertex_index(a.tgt)];
    int cols = dim_[q.vertex_index(a.src)];
    if (it == mats_.end()) {
      mats_.emplace(a.id, fp::Mat(p_, rows, cols));
      continue;
    }
    if (it->second.p() != p_ || it->second.rows() != rows || it->second.cols() != cols)
      throw domain_error("matrix shape mismatch for arrow " + a.id);
  }
  for (const auto& [id, m] : mats_)
    if (!q.has_arrow(id)) throw domain_error("matrix for unknown arrow " + id);

  // relations of the Jacobian algebra must act by zero
  for (const qp::FormalPathSum& rel : qp::jacobian_relations(*qp_)) {
    const qp::Path& first = rel.terms().front().path;
    int src = q.vertex_index(q.arrow(first.front()).src);
    int tgt = q.vertex_index(q.arrow(first.back()).tgt);
    fp::Mat acc(p_, dim_[tgt], dim_[src]);
    for (const qp::PathTerm& t : rel.terms())
      acc = acc + eval_path(t.path).scaled(rat_mod_p(t.coeff, p_));
    if (!acc.is_zero())
      throw domain_error("matrices violate the jacobian relation " + rel.to_string());
  }
}

const fp::Mat& Representation::mat(const std::string& arrow_id) const {
  auto it = mats_.find(arrow_id);
  if (it == mats_.end()) throw domain_error("unknown arrow id: " + arrow_id);
  return it->second;
}

long long Representation::total_dim() const {
  long long t = 0;
  for (int d : dim_) t += d;
  return t;
}

fp::Mat Representation::eval_path(const qp::Path& path) const {
  if (path.empty()) throw domain_error("cannot evaluate an empty path");
  fp::Mat acc = mat(path.front());
  for (size_t i = 1; i < path.size(); ++i) acc = mat(path[i]) * acc;
  return acc;
}

// --- subrepresentations ----------------------------------------------------

std::vector<Subrep> subrepresentations(const Representation& v, bool proper_nonzero,
                                       long long bound) {
  if (v.p() > 3) throw domain_error("subobject enumeration supports p <= 3");
  if (v.total_dim() > bound)
    throw domain_error("too large: total dimension " + std::to_string(v.total_dim()) +
                       " exceeds the enumeration bound " + std::to_string(bound));

  const qp::Quiver& q = v.qp().quiver();
  size_t n = v.dim().size();
  std::vector<std::vector<fp::Mat>> choices(n);
  for (size_t i = 0; i < n; ++i) choices[i] = fp::all_subspaces(v.p(), v.dim()[i]);

  std::vector<Subrep> out;
  std::vector<size_t> idx(n, 0);
  while (true) {
    std::vector<fp::Mat> bases;
    for (size_t i = 0; i < n; ++i) bases.push_back(choices[i][idx[i]]);

    bool closed = true;
    for (const qp::Arrow& a : q.arrows()) {
      int si = q.vertex_index(a.src), ti = q.vertex_index(a.tgt);
      const fp::Mat& f = v.mat(a.id);
      for (int r = 0; r < bases[si].rows() && closed; ++r) {
        std::vector<uint8_t> img(static_cast<size_t>(f.rows()), 0);
        for (int rr = 0; rr < f.rows(); ++rr) {
          int acc = 0;
          for (int cc = 0; cc < f.cols(); ++cc) acc += f.at(rr, cc) * bases[si].at(r, cc);
          img[rr] = static_cast<uint8_t>(acc % v.p());
        }
        if (!fp::in_span(bases[ti], img)) closed = false;
      }
      if (!closed) break;
    }

    if (closed) {
      Subrep s;
      s.bases = std::move(bases);
      s.dim.resize(n);
      for (size_t i = 0; i < n; ++i) {
        s.dim[i] = s.bases[i].rows();
        s.total += s.bases[i].rows();
      }
      bool is_zero = s.total == 0;
      bool is_all = s.total == v.total_dim();
      if (!proper_nonzero || (!is_zero && !is_all)) out.push_back(std::move(s));
    }

    size_t k = 0;
    for (; k < n; ++k) {
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
    }
    if (k == n) break;
  }
  return out;
}

Representation restrict_to(const Representation& v, const Subrep& w) {
  const qp::Quiver& q = v.qp().quiver();
  std::map<std::string, fp::Mat> mats;
  for (const qp::Arrow& a : q.arrows()) {
    int si = q.vertex_index(a.src), ti = q.vertex_index(a.tgt);
    const fp::Mat& f = v.mat(a.id);
    fp::Mat sub(v.p(), w.dim[ti], w.dim[si]);
    for (int k = 0; k < w.bases[si].rows(); ++k) {
      std::vector<uint8_t> img(static_cast<size_t>(f.rows()), 0);
      for (int rr = 0; rr < f.rows(); ++rr) {
        int acc = 0;
        for (int cc = 0; cc < f.cols(); ++cc) acc += f.at(rr, cc) * w.bases[si].at(k, cc);
        img[rr] = static_cast<uint8_t>(acc % v.p());
      }
      std::vector<uint8_t> coords = fp::coords_in_span(w.bases[ti], img);
      for (int rr = 0; rr < sub.rows(); ++rr) sub.set(rr, k, coords[rr]);
    }
    mats.emplace(a.id, std::move(sub));
  }
  return Representation(v.qp_ptr(), v.p(), w.dim, std::move(mats));
}

Representation quotient(const Representation& v, const std::vector<fp::Mat>& bases) {
  const qp::Quiver& q = v.qp().quiver();
  size_t n = v.dim().size();

  // quotient coordinates = non-pivot columns of the RREF bases
  std::vector<std::vector<int>> qcols(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> is_pivot(v.dim()[i], false);
    for (int r = 0; r < bases[i].rows(); ++r)
      for (int c = 0; c < bases[i].cols(); ++c)
        if (bases[i].at(r, c)) {
          is_pivot[c] = true;
          break;
        }
    for (int c = 0; c < v.dim()[i]; ++c)
      if (!is_pivot[c]) qcols[i].push_back(c);
  }

  std::vector<int> qdim(n);
  for (size_t i = 0; i < n; ++i) qdim[i] = static_cast<int>(qcols[i].size());

  std::map<std::string, fp::Mat> mats;
  for (const qp::Arrow& a : q.arrows()) {
    int si = q.vertex_index(a.src), ti = q.vertex_index(a.tgt);
    const fp::Mat& f = v.mat(a.id);
    fp::Mat qa(v.p(), qdim[ti], qdim[si]);
    for (int k = 0; k < qdim[si]; ++k) {
      // image of the section of the k-th quotient coordinate
      std::vector<uint8_t> img(static_cast<size_t>(f.rows()), 0);
      for (int rr = 0; rr < f.rows(); ++rr) img[rr] = f.at(rr, qcols[si][k]);
      std::vector<uint8_t> red = fp::reduce_against(bases[ti], img);
      for (int rr = 0; rr < qdim[ti]; ++rr) qa.set(rr, k, red[qcols[ti][rr]]);
    }
    mats.emplace(a.id, std::move(qa));
  }
  return Representation(v.qp_ptr(), v.p(), qdim, std::move(mats));
}

int hom_dim(const Representation& a, const Representation& b) {
  if (a.p() != b.p()) throw domain_error("hom over different fields");
  const qp::Quiver& q = a.qp().quiver();
  size_t n = a.dim().size();

  std::vector<int> offset(n + 1, 0);
  for (size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + b.dim()[i] * a.dim()[i];
  int unknowns = offset[n];
  if (unknowns == 0) return 0;

  std::vector<std::vector<uint8_t>> eqs;
  for (const qp::Arrow& ar : q.arrows()) {
    int i = q.vertex_index(ar.src), j = q.vertex_index(ar.tgt);
    const fp::Mat& fa = a.mat(ar.id);
    const fp::Mat& fb = b.mat(ar.id);
    // h_j f^a - f^b h_i = 0
    for (int r = 0; r < b.dim()[j]; ++r)
      for (int c = 0; c < a.dim()[i]; ++c) {
        std::vector<uint8_t> eq(static_cast<size_t>(unknowns), 0);
        for (int k = 0; k < a.dim()[j]; ++k)
          eq[offset[j] + r * a.dim()[j] + k] =
              static_cast<uint8_t>((eq[offset[j] + r * a.dim()[j] + k] + fa.at(k, c)) % a.p());
        for (int k = 0; k < b.dim()[i]; ++k)
          eq[offset[i] + k * a.dim()[i] + c] = static_cast<uint8_t>(
              (eq[offset[i] + k * a.dim()[i] + c] + (a.p() - fb.at(r, k))) % a.p());
        eqs.push_back(std::move(eq));
      }
  }

  fp::Mat sys(a.p(), static_cast<int>(eqs.size()), unknowns);
  for (size_t r = 0; r < eqs.size(); ++r) sys.set_row(static_cast<int>(r), eqs[r]);
  return unknowns - sys.rank();
}

// --- stability --------------------------------------------------------------

Rat slope(const Representation& v, const Class& a) {
  if (v.is_zero()) throw domain_error("slope of the zero representation");
  if (a.size() != v.dim().size()) throw domain_error("slope datum has wrong length");
  Rat num(0), den(0);
  for (size_t i = 0; i < a.size(); ++i) {
    num += Rat(a[i]) * Rat(v.dim()[i]);
    den += Rat(v.dim()[i]);
  }
  return num / den;
}

KingResult king_classify(const Representation& v, const Class& a, long long bound) {
  if (a.size() != v.dim().size()) throw domain_error("slope datum has wrong length");
  long long pairing = 0;
  for (size_t i = 0; i < a.size(); ++i) pairing += a[i] * v.dim()[i];
  if (pairing != 0) return {KingVerdict::unstable, true};

  bool stable = true;
  for (const Subrep& w : subrepresentations(v, true, bound)) {
    long long pw = 0;
    for (size_t i = 0; i < a.size(); ++i) pw += a[i] * w.dim[i];
    if (pw < 0) return {KingVerdict::unstable, false};
    if (pw == 0) stable = false;
  }
  return {stable ? KingVerdict::stable : KingVerdict::semistable, false};
}

// --- central charges --------------------------------------------------------

CentralCharge CentralCharge::exact(std::vector<RatComplex> z) {
  for (const RatComplex& c : z)
    if (!(c.im > Rat(0) || (c.im == Rat(0) && c.re < Rat(0))))
      throw domain_error("central charge value outside the closed upper half-plane");
  CentralCharge out;
  out.exact_ = true;
  out.zexact_ = std::move(z);
  return out;
}

CentralCharge CentralCharge::floating(std::vector<std::complex<double>> z, double tol) {
  for (const auto& c : z)
    if (!(c.imag() > tol || (std::abs(c.imag()) <= tol && c.real() < -tol)))
      throw domain_error("central charge value outside the closed upper half-plane");
  CentralCharge out;
  out.exact_ = false;
  out.tol_ = tol;
  out.zfloat_ = std::move(z);
  return out;
}

int CentralCharge::rank() const {
  return static_cast<int>(exact_ ? zexact_.size() : zfloat_.size());
}

const std::vector<RatComplex>& CentralCharge::exact_values() const {
  if (!exact_) throw domain_error("floating charge has no exact values");
  return zexact_;
}

std::vector<std::complex<double>> CentralCharge::values() const {
  if (!exact_) return zfloat_;
  std::vector<std::complex<double>> out;
  out.reserve(zexact_.size());
  for (const RatComplex& c : zexact_) out.push_back(c.to_complex());
  return out;
}

std::complex<double> CentralCharge::value(const Class& cls) const {
  if (static_cast<int>(cls.size()) != rank()) throw domain_error("class has wrong length");
  if (exact_) return value_exact(cls).to_complex();
  std::complex<double> acc{0, 0};
  for (size_t i = 0; i < cls.size(); ++i) acc += static_cast<double>(cls[i]) * zfloat_[i];
  return acc;
}

RatComplex CentralCharge::value_exact(const Class& cls) const {
  if (!exact_) throw domain_error("floating charge has no exact values");
  if (cls.size() != zexact_.size()) throw domain_error("class has wrong length");
  RatComplex acc;
  for (size_t i = 0; i < cls.size(); ++i) acc = acc + zexact_[i] * Rat(cls[i]);
  return acc;
}

int CentralCharge::compare_phase(const Class& c1, const Class& c2) const {
  if (exact_) {
    RatComplex z1 = value_exact(c1), z2 = value_exact(c2);
    if (z1.is_zero() || z2.is_zero()) throw domain_error("zero central charge in phase comparison");
    // both in the closed UHP: cross(z1, z2) > 0 iff phase(z2) > phase(z1)
    return -sign(cross(z1, z2));
  }
  std::complex<double> z1 = value(c1), z2 = value(c2);
  double n = std::abs(z1) * std::abs(z2);
  if (n == 0) throw domain_error("zero central charge in phase comparison");
  double cr = (z1.real() * z2.imag() - z1.imag() * z2.real()) / n;
  if (std::abs(cr) <= tol_) return 0;
  return cr > 0 ? -1 : 1;
}

CentralCharge CentralCharge::scaled_by_minus_one() const {
  if (exact_) {
    std::vector<RatComplex> z;
    for (const RatComplex& c : zexact_) z.push_back(-c);
    return exact(std::move(z));
  }
  std::vector<std::complex<double>> z;
  for (const auto& c : zfloat_) z.push_back(-c);
  return floating(std::move(z), tol_);
}

double phase(const CentralCharge& z, const Class& cls) {
  bool all_zero = true, has_pos = false, has_neg = false;
  for (long long c : cls) {
    if (c != 0) all_zero = false;
    if (c > 0) has_pos = true;
    if (c < 0) has_neg = true;
  }
  if (all_zero) throw domain_error("zero class");
  if (has_pos && has_neg) throw domain_error("class with mixed signs");
  if (has_neg) throw domain_error("class is not the class of a heart object");

  std::complex<double> val = z.value(cls);
  if (z.is_exact()) {
    RatComplex e = z.value_exact(cls);
    if (e.im == Rat(0)) return 1.0;  // negative real axis, the boundary of Hbar
  } else if (std::abs(val.imag()) <= z.tolerance() && val.real() < 0) {
    return 1.0;
  }
  double ph = std::atan2(val.imag(), val.real()) / std::acos(-1.0);
  return ph;
}

CentralCharge z_from_slope(const Class& c, const Class& r) {
  if (c.size() != r.size()) throw domain_error("slope data have different lengths");
  std::vector<RatComplex> z;
  for (size_t i = 0; i < c.size(); ++i) {
    if (r[i] <= 0) throw domain_error("r must be strictly positive on each simple");
    z.emplace_back(Rat(-c[i]), Rat(r[i]));
  }
  return CentralCharge::exact(std::move(z));
}

bool is_semistable(const Representation& v, const CentralCharge& z, long long bound) {
  if (v.is_zero()) throw domain_error("zero representation");
  Class cv = v.cls();
  for (const Subrep& w : subrepresentations(v, true, bound)) {
    Class cw(w.dim.begin(), w.dim.end());
    if (z.compare_phase(cw, cv) > 0) return false;
  }
  return true;
}

// --- Harder-Narasimhan -------------------------------------------------------

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<HNFactor> hn_filtration(const Representation& v, const CentralCharge& z,
                                    long long bound) {
  if (v.is_zero()) throw domain_error("zero representation");
  if (is_semistable(v, z, bound)) return {{v.cls(), phase(z, v.cls())}};

  // maximally destabilizing quotient: minimal phase among semistable
  // quotients; ties resolved by largest total dimension, then lexicographically
  // smallest dimension vector
  bool have = false;
  Subrep best_kernel;
  Class best_cls;
  std::vector<int> best_dim;
  long long best_total = -1;

  for (const Subrep& a : subrepresentations(v, false, bound)) {
    if (a.total == v.total_dim()) continue;  // quotient would be zero
    Representation b = quotient(v, a.bases);
    if (!is_semistable(b, z, bound)) continue;
    Class cb = b.cls();
    if (have) {
      int cmp = z.compare_phase(cb, best_cls);
      if (cmp > 0) continue;
      if (cmp == 0) {
        long long t = b.total_dim();
        if (t < best_total) continue;
        if (t == best_total && !lex_less(b.dim(), best_dim)) continue;
      }
    }
    have = true;
    best_kernel = a;
    best_cls = cb;
    best_dim = b.dim();
    best_total = b.total_dim();
  }
  if (!have) throw domain_error("internal: no semistable quotient found");

  Representation kernel = restrict_to(v, best_kernel);
  std::vector<HNFactor> factors = hn_filtration(kernel, z, bound);
  factors.push_back({best_cls, phase(z, best_cls)});
  return factors;
}

namespace {

struct OracleState {
  const Representation* v;
  const CentralCharge* z;
  long long bound;
  std::vector<Subrep> all;  // all subreps of v, including 0 and v
  std::vector<std::vector<HNFactor>> found;
};

// quotient top/cur computed inside v
std::vector<long long> quot_class(const Subrep& top, const Subrep& cur) {
  std::vector<long long> c(top.dim.size());
  for (size_t i = 0; i < top.dim.size(); ++i) c[i] = top.dim[i] - cur.dim[i];
  return c;
}

Representation quotient_inside(const Representation& v, const Subrep& top, const Subrep& cur) {
  Representation t = restrict_to(v, top);
  std::vector<fp::Mat> cur_in_t;
  for (size_t i = 0; i < top.bases.size(); ++i) {
    fp::Mat m(v.p(), cur.bases[i].rows(), top.bases[i].rows());
    for (int r = 0; r < cur.bases[i].rows(); ++r) {
      auto coords = fp::coords_in_span(top.bases[i], cur.bases[i].row(r));
      m.set_row(r, coords);
    }
    m.rref();
    cur_in_t.push_back(std::move(m));
  }
  return quotient(t, cur_in_t);
}

void extend_chain(OracleState& st, size_t cur_idx, std::vector<HNFactor>& factors) {
  const Subrep& cur = st.all[cur_idx];
  if (cur.total == st.v->total_dim()) {
    st.found.push_back(factors);  // already top phase first
    return;
  }
  for (size_t k = 0; k < st.all.size(); ++k) {
    const Subrep& top = st.all[k];
    if (top.total <= cur.total) continue;
    bool contains = true;
    for (size_t i = 0; i < cur.bases.size() && contains; ++i)
      if (!fp::subspace_leq(cur.bases[i], top.bases[i])) contains = false;
    if (!contains) continue;

    Class qc = quot_class(top, cur);
    if (!factors.empty() && st.z->compare_phase(qc, factors.back().cls) >= 0) continue;

    Representation q = quotient_inside(*st.v, top, cur);
    if (!is_semistable(q, *st.z, st.bound)) continue;

    factors.push_back({qc, phase(*st.z, qc)});
    extend_chain(st, k, factors);
    factors.pop_back();
  }
}

}  // namespace

std::vector<HNFactor> hn_oracle(const Representation& v, const CentralCharge& z, long long bound) {
  if (v.is_zero()) throw domain_error("zero representation");
  OracleState st{&v, &z, bound, subrepresentations(v, false, bound), {}};

  size_t zero_idx = 0;
  bool found_zero = false;
  for (size_t i = 0; i < st.all.size(); ++i)
    if (st.all[i].total == 0) {
      zero_idx = i;
      found_zero = true;
      break;
    }
  if (!found_zero) throw domain_error("internal: zero subrep missing");

  std::vector<HNFactor> factors;
  extend_chain(st, zero_idx, factors);
  if (st.found.size() != 1)
    throw domain_error("HN oracle found " + std::to_string(st.found.size()) +
                       " valid filtrations (expected exactly 1)");
  return st.found.front();
}

// --- JSON --------------------------------------------------------------------

std::string to_json(const Representation& v) {
  json j;
  j["format_version"] = "1";
  j["qp"] = json::parse(qp::to_json(v.qp()));
  j["p"] = v.p();
  j["dim"] = v.dim();
  j["mats"] = json::object();
  for (const qp::Arrow& a : v.qp().quiver().arrows()) {
    const fp::Mat& m = v.mat(a.id);
    if (m.rows() == 0 || m.cols() == 0) continue;  // shape forced by dim
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(static_cast<int>(m.at(r, c)));
      rows.push_back(row);
    }
    j["mats"][a.id] = rows;
  }
  return j.dump(2);
}

Representation rep_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad representation JSON: ") + e.what());
  }
  try {
    auto qp_ptr = std::make_shared<const qp::QuiverWithPotential>(
        qp::qp_from_json(j.at("qp").dump()));
    int p = j.at("p").get<int>();
    std::vector<int> dim = j.at("dim").get<std::vector<int>>();
    std::map<std::string, fp::Mat> mats;
    if (j.contains("mats")) {
      for (auto it = j["mats"].begin(); it != j["mats"].end(); ++it) {
        auto rows = it.value().get<std::vector<std::vector<int>>>();
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        fp::Mat m(p, r, c);
        for (int i = 0; i < r; ++i) {
          if (static_cast<int>(rows[i].size()) != c)
            throw domain_error("ragged matrix for arrow " + it.key());
          for (int k = 0; k < c; ++k) m.set(i, k, rows[i][k]);
        }
        mats.emplace(it.key(), std::move(m));
      }
    }
    return Representation(qp_ptr, p, std::move(dim), std::move(mats));
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad representation JSON: ") + e.what());
  }
}

std::string to_json(const CentralCharge& z) {
  json j;
  j["format_version"] = "1";
  if (z.is_exact()) {
    j["backend"] = "exact";
    json vals = json::array();
    for (const RatComplex& c : z.exact_values())
      vals.push_back({{"re", rat_to_string(c.re)}, {"im", rat_to_string(c.im)}});
    j["Z"] = vals;
  } else {
    j["backend"] = "float";
    json vals = json::array();
    for (const auto& c : z.values()) vals.push_back({{"re", c.real()}, {"im", c.imag()}});
    j["Z"] = vals;
  }
  return j.dump(2);
}

CentralCharge charge_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad central charge JSON: ") + e.what());
  }
  try {
    std::string backend = j.value("backend", "exact");
    if (backend == "exact") {
      std::vector<RatComplex> z;
      for (const json& v : j.at("Z")) {
        Rat re = v.at("re").is_string() ? rat_from_string(v.at("re").get<std::string>())
                                        : Rat(v.at("re").get<long long>());
        Rat im = v.at("im").is_string() ? rat_from_string(v.at("im").get<std::string>())
                                        : Rat(v.at("im").get<long long>());
        z.emplace_back(re, im);
      }
      return CentralCharge::exact(std::move(z));
    }
    std::vector<std::complex<double>> z;
    for (const json& v : j.at("Z")) z.emplace_back(v.at("re").get<double>(), v.at("im").get<double>());
    return CentralCharge::floating(std::move(z));
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad central charge JSON: ") + e.what());
  }
}

}  // namespace stabkit::rep
