#include "stabkit/hearts.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stabkit::hearts {

using nlohmann::json;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int row_sign(const Class& r) {
  bool pos = false, neg = false;
  for (long long x : r) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos && neg) return 0;
  return neg ? -1 : 1;
}

// coordinates of cls in the basis given by the rows of m (unimodular)
Class coords_in_rows(const std::vector<Class>& m, const Class& cls) {
  size_t n = m.size();
  if (cls.size() != n) throw domain_error("class has wrong length");
  // solve M^T c = cls
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[j][i]);
    a[i][n] = Rat(cls[i]);
  }
  for (size_t col = 0, row = 0; col < n && row < n; ++col) {
    size_t piv = row;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    Rat inv = Rat(1) / a[row][col];
    for (size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col];
      for (size_t j = col; j <= n; ++j) a[r][j] -= f * a[row][j];
    }
    ++row;
  }
  Class c(n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i][n].denominator() != 1)
      throw domain_error("class is not integral in the heart basis");
    c[i] = a[i][n].numerator();
  }
  return c;
}

}  // namespace

long long det(const std::vector<Class>& m) {
  size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw domain_error("class matrix is not square");
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  }
  Rat d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == Rat(0)) continue;
      Rat f = a[r][col] * inv;
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  if (d.denominator() != 1) throw domain_error("internal: determinant not integral");
  return d.numerator();
}

Heart::Heart(std::shared_ptr<const qp::QuiverWithPotential> qp, std::vector<Class> classes)
    : qp_(std::move(qp)), classes_(std::move(classes)) {
  size_t n = qp_->quiver().vertices().size();
  if (classes_.size() != n) throw domain_error("class matrix size does not match the quiver");
  for (const Class& r : classes_)
    if (r.size() != n) throw domain_error("class matrix is not square");
  long long d = det(classes_);
  if (d != 1 && d != -1)
    throw domain_error("class matrix determinant is " + std::to_string(d) + ", expected +-1");
}

std::string Heart::canonical_key() const {
  std::string best;
  for (const auto& perm : qp::relabelings(qp_->quiver())) {
    std::string s = qp::serialize_relabeled(*qp_, perm);
    // rows permuted along the relabeling; columns stay in the standard basis
    std::vector<const Class*> rows(classes_.size());
    for (size_t i = 0; i < classes_.size(); ++i) rows[perm[i]] = &classes_[i];
    s += "|C";
    for (const Class* r : rows) {
      for (long long x : *r) s += std::to_string(x) + ",";
      s += ";";
    }
    if (best.empty() || s < best) best = s;
  }
  return best;
}

Heart standard_heart(std::shared_ptr<const qp::QuiverWithPotential> qp) {
  size_t n = qp->quiver().vertices().size();
  std::vector<Class> classes(n, Class(n, 0));
  for (size_t i = 0; i < n; ++i) classes[i][i] = 1;
  return Heart(std::move(qp), std::move(classes));
}

Heart simple_tilt(const Heart& h, int index, Direction dir) {
  const qp::Quiver& q = h.qp().quiver();
  int n = h.rank();
  if (index < 0 || index >= n) throw domain_error("simple index out of range");
  int vi = q.vertices()[index];

  auto mutated = std::make_shared<const qp::QuiverWithPotential>(qp::mutate(h.qp(), vi));

  std::vector<Class> classes = h.classes();
  const Class old_i = classes[index];
  for (int j = 0; j < n; ++j) {
    if (j == index) continue;
    int mult = dir == Direction::forward ? q.arrow_count(vi, q.vertices()[j])
                                         : q.arrow_count(q.vertices()[j], vi);
    if (!mult) continue;
    for (int k = 0; k < n; ++k) classes[j][k] += mult * old_i[k];
  }
  for (int k = 0; k < n; ++k) classes[index][k] = -old_i[k];
  return Heart(std::move(mutated), std::move(classes));
}

Heart shift_heart(const Heart& h, int n) {
  if (n % 2 == 0) return h;
  std::vector<Class> classes = h.classes();
  for (Class& r : classes)
    for (long long& x : r) x = -x;
  return Heart(h.qp_ptr(), std::move(classes));
}

bool is_intermediate(const Heart& h) {
  for (const Class& r : h.classes())
    if (row_sign(r) == 0) return false;
  return true;
}

long long euler_pairing(const Heart& h, const Class& a, const Class& b) {
  Class ca = coords_in_rows(h.classes(), a);
  Class cb = coords_in_rows(h.classes(), b);
  const qp::Quiver& q = h.qp().quiver();
  long long acc = 0;
  for (size_t i = 0; i < ca.size(); ++i)
    for (size_t j = 0; j < cb.size(); ++j) {
      if (ca[i] == 0 || cb[j] == 0) continue;
      long long chi =
          q.arrow_count(q.vertices()[j], q.vertices()[i]) -
          q.arrow_count(q.vertices()[i], q.vertices()[j]);
      acc += ca[i] * cb[j] * chi;
    }
  return acc;
}

Class sph_twist_class_action(const Heart& h, int index, const Class& cls) {
  if (index < 0 || index >= h.rank()) throw domain_error("simple index out of range");
  long long chi = euler_pairing(h, h.row(index), cls);
  Class out = cls;
  for (size_t k = 0; k < out.size(); ++k) out[k] -= chi * h.row(index)[k];
  return out;
}

// --- exchange graph ----------------------------------------------------------

int ExchangeGraphSlice::forward_edge_count() const {
  int c = 0;
  for (const Edge& e : edges)
    if (e.dir == Direction::forward) ++c;
  return c;
}

ExchangeGraphSlice exchange_graph(const Heart& seed, int max_depth, const HeartFilter& filter) {
  ExchangeGraphSlice g;
  if (filter && !filter(seed)) return g;

  std::map<std::string, int> index_of;
  std::set<std::tuple<int, int, int, int>> edge_seen;
  std::deque<std::pair<int, int>> queue;  // (vertex, depth)

  g.vertices.push_back(seed);
  g.boundary.push_back(false);
  index_of[seed.canonical_key()] = 0;
  queue.emplace_back(0, 0);

  while (!queue.empty()) {
    auto [vi, depth] = queue.front();
    queue.pop_front();
    if (max_depth >= 0 && depth >= max_depth) continue;

    for (int s = 0; s < g.vertices[vi].rank(); ++s) {
      int rs = row_sign(g.vertices[vi].row(s));
      if (rs == 0) continue;  // mixed-sign simple: outside the tilt window
      Direction dir = rs > 0 ? Direction::forward : Direction::backward;

      Heart next = g.vertices[vi];
      try {
        next = simple_tilt(g.vertices[vi], s, dir);
      } catch (const domain_error& e) {
        g.failures.push_back({vi, s, dir, e.what()});
        g.boundary[vi] = true;
        continue;
      }
      if (filter && !filter(next)) continue;

      std::string key = next.canonical_key();
      auto it = index_of.find(key);
      int ti;
      if (it == index_of.end()) {
        ti = static_cast<int>(g.vertices.size());
        g.vertices.push_back(next);
        g.boundary.push_back(false);
        index_of.emplace(std::move(key), ti);
        queue.emplace_back(ti, depth + 1);
      } else {
        ti = it->second;
      }
      if (edge_seen.insert({vi, ti, s, dir == Direction::forward ? 0 : 1}).second)
        g.edges.push_back({vi, ti, s, dir});
    }
  }
  return g;
}

std::string to_dot(const ExchangeGraphSlice& g) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"";
    const auto& cl = g.vertices[i].classes();
    for (size_t r = 0; r < cl.size(); ++r) {
      os << "(";
      for (size_t c = 0; c < cl[r].size(); ++c) os << cl[r][c] << (c + 1 < cl[r].size() ? "," : "");
      os << ")";
    }
    os << "\"";
    if (g.boundary[i]) os << " shape=box";
    os << "];\n";
  }
  for (const Edge& e : g.edges)
    os << "  v" << e.src << " -> v" << e.tgt << " [label=\"S" << e.simple + 1
       << (e.dir == Direction::forward ? " fwd" : " bwd") << "\"];\n";
  os << "}\n";
  return os.str();
}

// --- rank-2 chambers -----------------------------------------------------------

std::vector<Heart> a2_pentagon() {
  auto a2 = std::make_shared<const qp::QuiverWithPotential>(
      qp::Quiver({1, 2}, {{"a", 1, 2}}), qp::Potential());
  Heart h0 = standard_heart(a2);
  Heart h1 = simple_tilt(h0, 0, Direction::forward);
  Heart h2 = simple_tilt(h1, 1, Direction::forward);
  Heart h3 = simple_tilt(h0, 1, Direction::forward);
  Heart h4 = simple_tilt(h3, 0, Direction::forward);
  return {h0, h1, h2, h3, h4};
}

namespace {

std::string chamber_from_signs(int s1, int s2, int se) {
  if (s1 == 0 || s2 == 0 || se == 0) {
    std::string w = "wall:";
    bool first = true;
    if (s1 == 0) {
      w += "S1";
      first = false;
    }
    if (s2 == 0) {
      w += (first ? "" : ",");
      w += "S2";
      first = false;
    }
    if (se == 0) {
      w += (first ? "" : ",");
      w += "E";
    }
    return w;
  }
  if (s1 > 0 && s2 > 0) return "H0";
  if (s1 > 0 && s2 < 0) return "H3";
  if (s1 < 0 && s2 < 0) return "H4";
  return se > 0 ? "H1" : "H2";
}

}  // namespace

std::string chamber_of(const RatComplex& z1, const RatComplex& z2) {
  if (z1.is_zero() || z2.is_zero()) throw domain_error("zero central charge value");
  return chamber_from_signs(sign(z1.im), sign(z2.im), sign(z1.im + z2.im));
}

std::string chamber_of(std::complex<double> z1, std::complex<double> z2, double tol) {
  if (std::abs(z1) == 0 || std::abs(z2) == 0) throw domain_error("zero central charge value");
  auto s = [tol](double x) { return std::abs(x) <= tol ? 0 : (x > 0 ? 1 : -1); };
  return chamber_from_signs(s(z1.imag()), s(z2.imag()), s(z1.imag() + z2.imag()));
}

Heart cross_wall(const Heart& h, int index) {
  if (index < 0 || index >= h.rank()) throw domain_error("simple index out of range");
  int rs = row_sign(h.row(index));
  if (rs == 0) throw domain_error("cross_wall at a simple with mixed-sign class");
  // The chamber across W_{S_i} is the backward tilt normalized into the
  // fundamental domain by the spherical twist at S_i; at class level that
  // composition is the forward tilt when [S_i] >= 0.
  return simple_tilt(h, index, rs > 0 ? Direction::forward : Direction::backward);
}

// --- stability conditions ------------------------------------------------------

StabilityCondition::StabilityCondition(Heart heart_, rep::CentralCharge z_)
    : heart(std::move(heart_)), z(std::move(z_)) {
  if (z.rank() != heart.rank())
    throw domain_error("central charge rank does not match the heart");
}

std::string wall_profile(const StabilityCondition& sigma) {
  std::vector<int> at_one;
  if (sigma.z.is_exact()) {
    const auto& vals = sigma.z.exact_values();
    for (size_t i = 0; i < vals.size(); ++i)
      if (vals[i].im == Rat(0)) at_one.push_back(static_cast<int>(i));
  } else {
    auto vals = sigma.z.values();
    for (size_t i = 0; i < vals.size(); ++i)
      if (std::abs(vals[i].imag()) <= sigma.z.tolerance() && vals[i].real() < 0)
        at_one.push_back(static_cast<int>(i));
  }
  if (at_one.empty()) return "interior";
  if (at_one.size() == 1) return "wall:S" + std::to_string(at_one[0] + 1);
  std::string s = "higher-codimension wall (";
  for (size_t k = 0; k < at_one.size(); ++k)
    s += "S" + std::to_string(at_one[k] + 1) + (k + 1 < at_one.size() ? "," : "");
  return s + ")";
}

// --- C-action ------------------------------------------------------------------

namespace {

bool in_upper_closed(std::complex<double> z, double tol) {
  return z.imag() > tol || (std::abs(z.imag()) <= tol && z.real() < -tol);
}

// forward tilt applied to the charge vector alongside the class rule
void tilt_charges(const qp::Quiver& q, int index, std::vector<std::complex<double>>& vals) {
  int vi = q.vertices()[index];
  for (size_t j = 0; j < vals.size(); ++j) {
    if (static_cast<int>(j) == index) continue;
    int mult = q.arrow_count(vi, q.vertices()[static_cast<int>(j)]);
    if (mult) vals[j] += static_cast<double>(mult) * vals[index];
  }
  vals[index] = -vals[index];
}

}  // namespace

StabilityCondition CActionResult::sigma() const {
  if (!charge) throw domain_error("C-action result carries no valid stability condition");
  return StabilityCondition(heart, *charge);
}

CActionResult c_action(const StabilityCondition& sigma, std::complex<double> lambda) {
  const double re = lambda.real(), im = lambda.imag();
  bool re_integral = std::rint(re) == re;

  if (im == 0 && re_integral) {
    long long n = static_cast<long long>(std::llrint(re));
    // heart classes scale by (-1)^n while the charges of the simples are
    // unchanged: Z also picks up (-1)^n
    Heart heart = shift_heart(sigma.heart, static_cast<int>(((n % 2) + 2) % 2));
    return {heart, sigma.z.values(), sigma.z, true};
  }

  if (im != 0 && !re_integral) {
    // needs slicing data beyond the finite heart; report the rotated charge only
    std::vector<std::complex<double>> vals = sigma.z.values();
    std::complex<double> rot = std::exp(std::complex<double>(0, -kPi) * lambda);
    for (auto& v : vals) v *= rot;
    return {sigma.heart, std::move(vals), std::nullopt, false};
  }

  // integral shift plus fractional forward tilts
  double fl = std::floor(re);
  double f = re - fl;
  long long n = static_cast<long long>(fl);

  Heart heart = shift_heart(sigma.heart, static_cast<int>(((n % 2) + 2) % 2));
  if (f == 0 && im == 0) return {heart, sigma.z.values(), sigma.z, true};

  std::vector<std::complex<double>> vals = sigma.z.values();
  std::complex<double> rot = std::exp(std::complex<double>(0, -kPi) * std::complex<double>(f, im));
  for (auto& v : vals) v *= rot;
  double tol = sigma.z.is_exact() ? 1e-12 : sigma.z.tolerance();

  if (f > 0) {
    for (int guard = 0;; ++guard) {
      if (guard > 200) throw domain_error("C-action tilt cascade did not terminate");
      int pick = -1;
      for (size_t i = 0; i < vals.size(); ++i)
        if (!in_upper_closed(vals[i], tol)) {
          pick = static_cast<int>(i);
          break;
        }
      if (pick < 0) break;
      const qp::Quiver& q = heart.qp().quiver();
      tilt_charges(q, pick, vals);
      heart = simple_tilt(heart, pick, Direction::forward);
    }
  }
  auto charge = rep::CentralCharge::floating(vals, tol);
  return {std::move(heart), std::move(vals), std::move(charge), true};
}

// --- metric ----------------------------------------------------------------------

double metric_from_probe(const std::vector<ProbeEntry>& probe) {
  if (probe.empty()) throw domain_error("empty probe");
  double d = 0;
  for (const ProbeEntry& e : probe) {
    if (e.s1.mass <= 0 || e.s2.mass <= 0) throw domain_error("probe entry with non-positive mass");
    if (e.s1.phi_plus < e.s1.phi_minus || e.s2.phi_plus < e.s2.phi_minus)
      throw domain_error("probe entry with phi+ < phi-");
    d = std::max(d, std::abs(e.s2.phi_minus - e.s1.phi_minus));
    d = std::max(d, std::abs(e.s2.phi_plus - e.s1.phi_plus));
    d = std::max(d, std::abs(std::log(e.s2.mass / e.s1.mass)));
  }
  return d;
}

double stab_metric(const StabilityCondition& s1, const StabilityCondition& s2,
                   const std::vector<ProbeEntry>& probe) {
  for (const ProbeEntry& e : probe)
    if (static_cast<int>(e.cls.size()) != s1.heart.rank() ||
        static_cast<int>(e.cls.size()) != s2.heart.rank())
      throw domain_error("probe class has wrong length");
  return metric_from_probe(probe);
}

ProbePoint hn_probe_point(const rep::Representation& v, const rep::CentralCharge& z) {
  auto fs = rep::hn_filtration(v, z);
  ProbePoint p;
  p.phi_plus = fs.front().phase;
  p.phi_minus = fs.back().phase;
  p.mass = 0;
  for (const auto& f : fs) p.mass += std::abs(z.value(f.cls));
  return p;
}

ProbePoint c_action_transform(const ProbePoint& p, std::complex<double> lambda) {
  ProbePoint out;
  out.phi_plus = p.phi_plus - lambda.real();
  out.phi_minus = p.phi_minus - lambda.real();
  out.mass = p.mass * std::exp(kPi * lambda.imag());
  return out;
}

// --- support property --------------------------------------------------------------

SupportReport support_constant(const StabilityCondition& sigma,
                               const std::vector<Class>& semistable_classes, Norm norm) {
  if (semistable_classes.empty()) throw domain_error("empty class list");
  SupportReport rep;

  auto norm_sq = [&](const Class& c) -> Rat {
    if (norm == Norm::euclidean) {
      Rat s(0);
      for (long long x : c) s += Rat(x) * Rat(x);
      return s;
    }
    long long m = 0;
    for (long long x : c) m = std::max(m, std::llabs(x));
    return Rat(m) * Rat(m);
  };

  std::optional<Rat> best_sq;
  double best = 0;
  bool have = false;
  std::vector<double> abs_z, norms;
  for (const Class& c : semistable_classes) {
    bool zero = std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
    if (zero) throw domain_error("zero class in the semistable list");
    Rat nsq = norm_sq(c);
    double az;
    if (sigma.z.is_exact()) {
      RatComplex zc = sigma.z.value_exact(c);
      Rat zsq = zc.re * zc.re + zc.im * zc.im;
      Rat ratio_sq = zsq / nsq;
      if (!best_sq || ratio_sq < *best_sq) best_sq = ratio_sq;
      az = std::sqrt(to_double(zsq));
    } else {
      az = std::abs(sigma.z.value(c));
    }
    double ratio = az / std::sqrt(to_double(nsq));
    if (!have || ratio < best) {
      best = ratio;
      have = true;
    }
    abs_z.push_back(az);
    norms.push_back(std::sqrt(to_double(nsq)));
  }

  rep.constant_sq = best_sq;
  rep.constant = best_sq ? std::sqrt(to_double(*best_sq)) : best;
  for (size_t i = 0; i < semistable_classes.size(); ++i) {
    SupportRow row;
    row.cls = semistable_classes[i];
    row.abs_z = abs_z[i];
    row.norm = norms[i];
    row.ratio = row.norm > 0 ? row.abs_z / row.norm : 0;
    row.q_diagnostic = row.abs_z - rep.constant * row.norm;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool marginal_wall_check(const rep::CentralCharge& z, const Class& alpha, const Class& beta) {
  auto zero_class = [](const Class& c) {
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
  };
  if (zero_class(alpha) || zero_class(beta)) throw domain_error("zero class");
  bool proportional = true;
  for (size_t i = 0; i < alpha.size() && proportional; ++i)
    for (size_t j = i + 1; j < alpha.size() && proportional; ++j)
      if (alpha[i] * beta[j] != alpha[j] * beta[i]) proportional = false;
  if (proportional) throw domain_error("classes are proportional");

  if (z.is_exact()) {
    RatComplex za = z.value_exact(alpha), zb = z.value_exact(beta);
    if (zb.is_zero()) throw domain_error("Z(beta) = 0");
    return cross(za, zb) == Rat(0);
  }
  auto za = z.value(alpha), zb = z.value(beta);
  if (std::abs(zb) == 0) throw domain_error("Z(beta) = 0");
  double cr = (za.real() * zb.imag() - za.imag() * zb.real()) / (std::abs(za) * std::abs(zb));
  return std::abs(cr) <= z.tolerance();
}

// --- JSON ------------------------------------------------------------------------

std::string to_json(const Heart& h) {
  json j;
  j["format_version"] = "1";
  j["qp"] = json::parse(qp::to_json(h.qp()));
  j["classes"] = h.classes();
  return j.dump(2);
}

Heart heart_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad heart JSON: ") + e.what());
  }
  try {
    auto qp_ptr =
        std::make_shared<const qp::QuiverWithPotential>(qp::qp_from_json(j.at("qp").dump()));
    auto classes = j.at("classes").get<std::vector<Class>>();
    return Heart(qp_ptr, std::move(classes));
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad heart JSON: ") + e.what());
  }
}

}  // namespace stabkit::hearts
