#include "stabkit/periods.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "stabkit/hearts.hpp"

namespace stabkit::periods {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

QuadDifferential::QuadDifferential(std::vector<cplx> lower_coeffs, cplx scale)
    : lower_(std::move(lower_coeffs)), scale_(scale) {
  if (lower_.size() < 2) throw domain_error("differential degree must be >= 2");
  if (std::abs(scale_) == 0) throw domain_error("zero scale factor");
  if (std::abs(lower_.back()) != 0)
    throw domain_error("centered normalization requires a vanishing subleading coefficient");
}

QuadDifferential QuadDifferential::a2(cplx a, cplx b) {
  if (std::abs(a2_discriminant(a, b)) == 0)
    throw domain_error("degenerate differential: 4a^3 + 27b^2 = 0");
  return QuadDifferential({b, a, cplx{0, 0}});
}

cplx QuadDifferential::eval(cplx z) const {
  cplx acc{1, 0};
  for (auto it = lower_.rbegin(); it != lower_.rend(); ++it) acc = acc * z + *it;
  return scale_ * acc;
}

QuadDifferential QuadDifferential::scaled(cplx factor) const {
  return QuadDifferential(lower_, scale_ * factor);
}

cplx a2_discriminant(cplx a, cplx b) { return 4.0 * a * a * a + 27.0 * b * b; }

// --- roots ------------------------------------------------------------------

namespace {

// Durand-Kerner iteration on the monic part; the scale factor does not move
// the roots.
std::vector<cplx> roots_monic(const std::vector<cplx>& lower) {
  int n = static_cast<int>(lower.size());
  double radius = 1.0;
  for (const cplx& c : lower) radius = std::max(radius, 1.0 + std::abs(c));

  auto eval = [&](cplx z) {
    cplx acc{1, 0};
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) acc = acc * z + *it;
    return acc;
  };

  std::vector<cplx> w(n);
  cplx seed{0.4, 0.9};
  cplx pw{1, 0};
  for (int k = 0; k < n; ++k) {
    pw *= seed;
    w[k] = radius * pw;
  }

  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0;
    for (int k = 0; k < n; ++k) {
      cplx denom{1, 0};
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= w[k] - w[j];
      cplx delta = eval(w[k]) / denom;
      w[k] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * radius) break;
  }
  // Newton polish
  for (int k = 0; k < n; ++k)
    for (int step = 0; step < 3; ++step) {
      cplx h{1e-7, 0};
      cplx d = (eval(w[k] + h) - eval(w[k] - h)) / (2.0 * h);
      if (std::abs(d) > 0) w[k] -= eval(w[k]) / d;
    }
  return w;
}

}  // namespace

std::vector<cplx> zeroes(const QuadDifferential& p) {
  std::vector<cplx> r = roots_monic(p.lower_coeffs());
  double scale = 1.0;
  for (const cplx& z : r) scale = std::max(scale, std::abs(z));
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i + 1; j < r.size(); ++j)
      if (std::abs(r[i] - r[j]) < 1e-8 * scale)
        throw domain_error("degenerate differential: zeroes collide");
  std::sort(r.begin(), r.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return r;
}

// --- periods -----------------------------------------------------------------

namespace {

// synthetic division of a monic polynomial (lower coefficients) by (z - root)
std::vector<cplx> deflate(const std::vector<cplx>& lower, cplx root) {
  int n = static_cast<int>(lower.size());  // degree
  // coefficients high to low: 1, lower[n-1], ..., lower[0]
  std::vector<cplx> qhigh;  // quotient, high to low, degree n-1 (monic)
  cplx carry{1, 0};
  for (int k = n - 1; k >= 0; --k) {
    qhigh.push_back(carry);
    carry = lower[k] + carry * root;
  }
  // carry is the remainder, ~0 at a root
  std::vector<cplx> qlow(qhigh.rbegin(), qhigh.rend() - 1);  // drop the leading 1
  return qlow;
}

struct SegmentIntegrand {
  cplx h;         // (z_j - z_i) / 2
  cplx c;         // midpoint
  cplx scale;     // total scalar on the residual polynomial
  std::vector<cplx> rlow;  // residual monic part after deflating both zeroes

  cplx r_eval(double t) const {
    cplx z = c + h * t;
    cplx acc{1, 0};
    for (auto it = rlow.rbegin(); it != rlow.rend(); ++it) acc = acc * z + *it;
    return scale * acc;
  }
};

// Gauss-Chebyshev (second kind) rule: int_{-1}^{1} f(t) sqrt(1-t^2) dt with
// the continuous branch of sqrt(r) chained outward from the midpoint.
cplx chebyshev_pass(const SegmentIntegrand& seg, int n) {
  std::vector<double> nodes(n);
  std::vector<double> weights(n);
  for (int k = 1; k <= n; ++k) {
    double th = kPi * k / (n + 1);
    nodes[k - 1] = std::cos(th);  // descending in t
    double s = std::sin(th);
    weights[k - 1] = kPi / (n + 1) * s * s;
  }

  std::vector<cplx> sq(n);
  for (int k = 0; k < n; ++k) sq[k] = std::sqrt(seg.r_eval(nodes[k]));
  cplx mid = std::sqrt(seg.r_eval(0.0));

  // walk from the midpoint outward, flipping the principal value whenever the
  // branch crosses the cut
  int lo = 0;
  while (lo < n && nodes[lo] > 0) ++lo;  // first node with t <= 0
  cplx prev = mid;
  for (int k = lo - 1; k >= 0; --k) {  // toward t = +1
    if (std::real(prev * std::conj(sq[k])) < 0) sq[k] = -sq[k];
    prev = sq[k];
  }
  prev = mid;
  for (int k = lo; k < n; ++k) {  // toward t = -1
    if (std::real(prev * std::conj(sq[k])) < 0) sq[k] = -sq[k];
    prev = sq[k];
  }

  cplx acc{0, 0};
  for (int k = 0; k < n; ++k) acc += weights[k] * sq[k];
  return cplx{0, 1} * seg.h * seg.h * acc;
}

SegmentIntegrand make_segment(const QuadDifferential& p, const std::vector<cplx>& zs, int i,
                              int j) {
  int n = static_cast<int>(zs.size());
  if (i < 0 || j < 0 || i >= n || j >= n) throw domain_error("zero index out of range");
  if (i == j) throw domain_error("period needs two distinct zeroes");

  cplx zi = zs[i], zj = zs[j];
  double len = std::abs(zj - zi);
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    // distance from zs[k] to the segment
    cplx d = (zj - zi) / len;
    double t = std::real((zs[k] - zi) * std::conj(d));
    cplx foot = t <= 0 ? zi : (t >= len ? zj : zi + t * d);
    if (std::abs(zs[k] - foot) < 1e-9 * std::max(1.0, len))
      throw domain_error("straight segment between zeroes " + std::to_string(i) + "," +
                         std::to_string(j) + " passes through zero " + std::to_string(k) +
                         "; supply a two-leg detour");
  }

  SegmentIntegrand seg;
  seg.h = (zj - zi) / 2.0;
  seg.c = (zi + zj) / 2.0;
  seg.scale = p.scale();
  seg.rlow = deflate(deflate(p.lower_coeffs(), zi), zj);
  return seg;
}

}  // namespace

cplx period_with_nodes(const QuadDifferential& p, int i, int j, int nodes) {
  auto zs = zeroes(p);
  bool swap = i > j;
  if (swap) std::swap(i, j);
  cplx v = chebyshev_pass(make_segment(p, zs, i, j), nodes);
  return swap ? -v : v;
}

cplx period(const QuadDifferential& p, int i, int j, const PeriodOptions& opt) {
  auto zs = zeroes(p);
  bool swap = i > j;
  if (swap) std::swap(i, j);
  SegmentIntegrand seg = make_segment(p, zs, i, j);

  cplx prev = chebyshev_pass(seg, opt.initial_nodes);
  for (int n = 2 * opt.initial_nodes + 1; n <= opt.max_nodes; n = 2 * n + 1) {
    cplx cur = chebyshev_pass(seg, n);
    double delta = std::abs(cur - prev);
    if (delta <= opt.abs_tol && delta <= std::max(opt.rel_tol, opt.rel_tol * std::abs(cur)))
      return swap ? -cur : cur;
    prev = cur;
  }
  throw domain_error("quadrature did not converge within the node budget");
}

PeriodTable period_table(const QuadDifferential& p, const PeriodOptions& opt) {
  PeriodTable table;
  table.zero_list = zeroes(p);
  int n = static_cast<int>(table.zero_list.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PeriodEntry e;
      e.i = i;
      e.j = j;
      try {
        e.value = period(p, i, j, opt);
        if (std::abs(e.value) == 0) throw domain_error("vanishing period entry");
      } catch (const domain_error& err) {
        e.blocked = true;
        e.note = err.what();
      }
      table.entries.push_back(std::move(e));
    }
  return table;
}

bool genericity_proxy(const QuadDifferential& p, const PeriodOptions& opt) {
  auto zs = zeroes(p);
  int n = static_cast<int>(zs.size());

  std::set<std::pair<int, int>> todo, done;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) todo.insert({i, j});

  int guard = 0;
  while (!todo.empty()) {
    if (++guard > 4 * n * n) throw domain_error("genericity proxy: detour recursion too deep");
    auto [i, j] = *todo.begin();
    todo.erase(todo.begin());
    if (!done.insert({i, j}).second) continue;
    try {
      cplx v = period(p, i, j, opt);
      if (std::abs(v.imag()) <= 1e-9 * std::abs(v)) return false;  // horizontal segment
    } catch (const domain_error&) {
      // blocked by a collinear zero: test the two legs through it instead
      int blocker = -1;
      cplx zi = zs[i], zj = zs[j];
      double len = std::abs(zj - zi);
      cplx d = (zj - zi) / len;
      for (int k = 0; k < n && blocker < 0; ++k) {
        if (k == i || k == j) continue;
        double t = std::real((zs[k] - zi) * std::conj(d));
        if (t <= 0 || t >= len) continue;
        if (std::abs(zs[k] - (zi + t * d)) < 1e-9 * std::max(1.0, len)) blocker = k;
      }
      if (blocker < 0) throw;
      todo.insert({std::min(i, blocker), std::max(i, blocker)});
      todo.insert({std::min(blocker, j), std::max(blocker, j)});
    }
  }
  return true;
}

// --- chamber scan ----------------------------------------------------------------

GridSpec parse_grid_spec(const std::string& text) {
  auto p1 = text.find(':');
  auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw domain_error("grid spec must be lo:hi:count");
  GridSpec g;
  g.lo = rat_from_string(text.substr(0, p1));
  g.hi = rat_from_string(text.substr(p1 + 1, p2 - p1 - 1));
  g.count = static_cast<int>(std::stoll(text.substr(p2 + 1)));
  if (g.count < 1 || g.count > 4096) throw domain_error("grid count out of range");
  if (g.count > 1 && !(g.lo < g.hi)) throw domain_error("grid needs lo < hi");
  return g;
}

namespace {

Rat grid_value(const GridSpec& g, int k) {
  if (g.count == 1) return g.lo;
  return g.lo + (g.hi - g.lo) * Rat(k) / Rat(g.count - 1);
}

}  // namespace

std::vector<ScanCell> scan_impair(const GridSpec& g1, const GridSpec& g2) {
  std::vector<ScanCell> cells;
  for (int r = 0; r < g2.count; ++r)
    for (int c = 0; c < g1.count; ++c) {
      Rat x = grid_value(g1, c), y = grid_value(g2, r);
      ScanCell cell;
      cell.row = r;
      cell.col = c;
      cell.have_z = true;
      cell.z1 = cplx{-1.0, to_double(x)};
      cell.z2 = cplx{-1.0, to_double(y)};
      cell.label = hearts::chamber_of(RatComplex(Rat(-1), x), RatComplex(Rat(-1), y));
      cell.generic_flag = "n/a";
      cells.push_back(std::move(cell));
    }
  return cells;
}

namespace {

void scan_ab_cell(ScanCell& cell, const PeriodOptions& opt) {
  cell.discriminant = a2_discriminant(cell.a, cell.b);
  double scale = std::max({1.0, std::abs(cell.a), std::abs(cell.b)});
  if (std::abs(cell.discriminant) < 1e-12 * scale) {
    cell.label = "degenerate";
    cell.generic_flag = "skip";
    return;
  }
  QuadDifferential p({cell.b, cell.a, cplx{0, 0}});
  try {
    // adjacent pairs of the sorted zero list, normalized to Im >= 0: the
    // relabeling-symmetry representative of (Z(S1), Z(S2))
    cplx z1 = period(p, 0, 1, opt);
    cplx z2 = period(p, 1, 2, opt);
    if (z1.imag() < 0 || (std::abs(z1.imag()) <= 1e-12 && z1.real() > 0)) z1 = -z1;
    if (z2.imag() < 0 || (std::abs(z2.imag()) <= 1e-12 && z2.real() > 0)) z2 = -z2;
    cell.z1 = z1;
    cell.z2 = z2;
    cell.have_z = true;
    cell.label = hearts::chamber_of(z1, z2, 1e-9 * std::max(std::abs(z1), std::abs(z2)));
  } catch (const domain_error& e) {
    cell.label = "blocked";
    cell.generic_flag = "proxy-blocked";
    return;
  }
  try {
    cell.generic_flag = genericity_proxy(p, opt) ? "proxy-generic" : "proxy-nongeneric";
  } catch (const domain_error&) {
    cell.generic_flag = "proxy-error";
  }
}

}  // namespace

std::vector<ScanCell> scan_ab(const GridSpec& ga, const GridSpec& gb, int threads,
                              const PeriodOptions& opt) {
  if (threads < 1) threads = 1;
  std::vector<ScanCell> cells(static_cast<size_t>(ga.count) * gb.count);
  for (int r = 0; r < gb.count; ++r)
    for (int c = 0; c < ga.count; ++c) {
      ScanCell& cell = cells[static_cast<size_t>(r) * ga.count + c];
      cell.row = r;
      cell.col = c;
      cell.have_ab = true;
      cell.a = cplx{to_double(grid_value(ga, c)), 0};
      cell.b = cplx{to_double(grid_value(gb, r)), 0};
    }

  // cells are independent; rows are partitioned over the pool and merged in
  // index order, so the output does not depend on the thread count
  auto work = [&](int tid) {
    for (int r = tid; r < gb.count; r += threads)
      for (int c = 0; c < ga.count; ++c)
        scan_ab_cell(cells[static_cast<size_t>(r) * ga.count + c], opt);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return cells;
}

std::string scan_to_csv(const std::vector<ScanCell>& cells) {
  std::ostringstream os;
  os << "a_re,a_im,b_re,b_im,discriminant,Z1_re,Z1_im,Z2_re,Z2_im,label,generic_flag\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (const ScanCell& c : cells) {
    if (c.have_ab)
      os << num(c.a.real()) << "," << num(c.a.imag()) << "," << num(c.b.real()) << ","
         << num(c.b.imag()) << "," << num(c.discriminant.real()) << ",";
    else
      os << "nan,nan,nan,nan,nan,";
    if (c.have_z)
      os << num(c.z1.real()) << "," << num(c.z1.imag()) << "," << num(c.z2.real()) << ","
         << num(c.z2.imag()) << ",";
    else
      os << "nan,nan,nan,nan,";
    os << c.label << "," << c.generic_flag << "\n";
  }
  return os.str();
}

// --- polynomial parsing --------------------------------------------------------

QuadDifferential parse_polynomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw domain_error("empty polynomial");

  std::map<int, double> coeff;
  size_t pos = 0;
  int max_deg = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= s.size()) throw domain_error("dangling sign in polynomial");
    // optional numeric factor
    double value = 1.0;
    bool have_num = false;
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == 'e' ||
            s[pos] == 'E' ||
            ((s[pos] == '+' || s[pos] == '-') && pos > start && (s[pos - 1] == 'e' || s[pos - 1] == 'E'))))
      ++pos;
    if (pos > start) {
      value = std::stod(s.substr(start, pos - start));
      have_num = true;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    int deg = 0;
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw domain_error("missing exponent in polynomial");
        deg = std::stoi(s.substr(dstart, pos - dstart));
      }
    } else if (!have_num) {
      throw domain_error("could not parse polynomial near position " + std::to_string(start));
    }
    coeff[deg] += sign * value;
    max_deg = std::max(max_deg, deg);
  }
  if (max_deg < 2) throw domain_error("differential degree must be >= 2");
  double lead = coeff.count(max_deg) ? coeff[max_deg] : 0.0;
  if (lead == 0) throw domain_error("zero leading coefficient");

  std::vector<cplx> lower(max_deg, cplx{0, 0});
  for (auto& [d, v] : coeff)
    if (d < max_deg) lower[d] = cplx{v / lead, 0};
  return QuadDifferential(std::move(lower), cplx{lead, 0});
}

}  // namespace stabkit::periods
