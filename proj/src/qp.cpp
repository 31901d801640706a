#include "stabkit/qp.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stabkit::qp {

using nlohmann::json;

// --- Quiver --------------------------------------------------------------

Quiver::Quiver(std::vector<int> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<int> vs(vertices_.begin(), vertices_.end());
  if (vs.size() != vertices_.size()) throw domain_error("duplicate vertex id");
  std::set<std::string> ids;
  for (const Arrow& a : arrows_) {
    if (!ids.insert(a.id).second) throw domain_error("duplicate arrow id: " + a.id);
    if (!vs.count(a.src) || !vs.count(a.tgt))
      throw domain_error("arrow " + a.id + " uses undeclared vertex");
    if (a.src == a.tgt) throw domain_error("loop at vertex " + std::to_string(a.src));
  }
  for (const Arrow& a : arrows_)
    for (const Arrow& b : arrows_)
      if (a.src == b.tgt && a.tgt == b.src)
        throw domain_error("2-cycle between vertices " + std::to_string(a.src) + " and " +
                           std::to_string(a.tgt));
}

bool Quiver::has_vertex(int v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

int Quiver::vertex_index(int v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw domain_error("unknown vertex " + std::to_string(v));
  return static_cast<int>(it - vertices_.begin());
}

const Arrow& Quiver::arrow(const std::string& id) const {
  for (const Arrow& a : arrows_)
    if (a.id == id) return a;
  throw domain_error("unknown arrow id: " + id);
}

bool Quiver::has_arrow(const std::string& id) const {
  for (const Arrow& a : arrows_)
    if (a.id == id) return true;
  return false;
}

int Quiver::arrow_count(int i, int j) const {
  int c = 0;
  for (const Arrow& a : arrows_)
    if (a.src == i && a.tgt == j) ++c;
  return c;
}

// --- FormalPathSum -------------------------------------------------------

FormalPathSum::FormalPathSum(std::vector<PathTerm> terms) {
  std::map<Path, Rat> acc;
  for (PathTerm& t : terms) acc[t.path] += t.coeff;
  for (auto& [p, c] : acc)
    if (c != 0) terms_.push_back({c, p});
}

FormalPathSum FormalPathSum::operator+(const FormalPathSum& o) const {
  std::vector<PathTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return FormalPathSum(std::move(all));
}

FormalPathSum FormalPathSum::operator*(const Rat& s) const {
  std::vector<PathTerm> all = terms_;
  for (PathTerm& t : all) t.coeff *= s;
  return FormalPathSum(std::move(all));
}

bool FormalPathSum::operator==(const FormalPathSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].path != o.terms_[i].path) return false;
  return true;
}

std::string FormalPathSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    if (terms_[i].coeff != 1) s += rat_to_string(terms_[i].coeff) + "*";
    for (size_t k = 0; k < terms_[i].path.size(); ++k) {
      if (k) s += ".";
      s += terms_[i].path[k];
    }
  }
  return s;
}

// --- Potential -----------------------------------------------------------

Path canonical_rotation(const Path& cycle) {
  if (cycle.empty()) return cycle;
  Path best = cycle;
  Path cur = cycle;
  for (size_t r = 1; r < cycle.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<CycleTerm> merge_cycle_terms(std::vector<CycleTerm> terms) {
  std::map<Path, Rat> acc;
  for (CycleTerm& t : terms) acc[canonical_rotation(t.cycle)] += t.coeff;
  std::vector<CycleTerm> out;
  for (auto& [p, c] : acc)
    if (c != 0) out.push_back({c, p});
  return out;
}

Potential::Potential(std::vector<CycleTerm> terms) : terms_(merge_cycle_terms(std::move(terms))) {
  for (const CycleTerm& t : terms_)
    if (t.cycle.size() < 3)
      throw domain_error("potential term of length " + std::to_string(t.cycle.size()) +
                         " (cycles must have length >= 3)");
}

bool Potential::operator==(const Potential& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].cycle != o.terms_[i].cycle) return false;
  return true;
}

std::string Potential::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    if (terms_[i].coeff != 1) s += rat_to_string(terms_[i].coeff) + "*";
    for (size_t k = 0; k < terms_[i].cycle.size(); ++k) {
      if (k) s += ".";
      s += terms_[i].cycle[k];
    }
  }
  return s;
}

// --- QuiverWithPotential -------------------------------------------------

QuiverWithPotential::QuiverWithPotential(Quiver q, Potential w)
    : quiver_(std::move(q)), potential_(std::move(w)) {
  for (const CycleTerm& t : potential_.terms()) {
    for (size_t k = 0; k < t.cycle.size(); ++k) {
      const Arrow& cur = quiver_.arrow(t.cycle[k]);
      const Arrow& nxt = quiver_.arrow(t.cycle[(k + 1) % t.cycle.size()]);
      if (cur.tgt != nxt.src)
        throw domain_error("potential word is not a cycle at arrow " + cur.id);
    }
  }
}

// --- cyclic derivative ---------------------------------------------------

namespace {

// Derivative of a raw term list; shared between the public op and reduction.
FormalPathSum derive(const std::vector<CycleTerm>& terms, const std::string& a) {
  std::vector<PathTerm> out;
  for (const CycleTerm& t : terms) {
    for (size_t k = 0; k < t.cycle.size(); ++k) {
      if (t.cycle[k] != a) continue;
      Path p;
      for (size_t j = 1; j < t.cycle.size(); ++j) p.push_back(t.cycle[(k + j) % t.cycle.size()]);
      out.push_back({t.coeff, std::move(p)});
    }
  }
  return FormalPathSum(std::move(out));
}

}  // namespace

FormalPathSum cyclic_derivative(const QuiverWithPotential& qp, const std::string& arrow_id) {
  if (!qp.quiver().has_arrow(arrow_id)) throw domain_error("unknown arrow id: " + arrow_id);
  return derive(qp.potential().terms(), arrow_id);
}

std::vector<FormalPathSum> jacobian_relations(const QuiverWithPotential& qp) {
  std::vector<FormalPathSum> rels;
  for (const Arrow& a : qp.quiver().arrows()) {
    FormalPathSum d = derive(qp.potential().terms(), a.id);
    if (!d.is_zero()) rels.push_back(std::move(d));
  }
  return rels;
}

// --- mutation ------------------------------------------------------------

namespace {

constexpr int kReductionRounds = 100;

// Simultaneous substitution of arrows by formal path sums inside one cyclic
// term, expanding the product over all occurrences.
std::vector<CycleTerm> substitute_term(const CycleTerm& term,
                                       const std::map<std::string, FormalPathSum>& sub) {
  std::vector<size_t> hits;
  for (size_t i = 0; i < term.cycle.size(); ++i)
    if (sub.count(term.cycle[i])) hits.push_back(i);
  if (hits.empty()) return {term};

  std::vector<CycleTerm> out;
  std::vector<size_t> choice(hits.size(), 0);
  while (true) {
    Rat coeff = term.coeff;
    Path word;
    bool dead = false;
    size_t h = 0;
    for (size_t i = 0; i < term.cycle.size(); ++i) {
      if (h < hits.size() && hits[h] == i) {
        const FormalPathSum& s = sub.at(term.cycle[i]);
        if (s.is_zero()) {
          dead = true;
          break;
        }
        const PathTerm& pick = s.terms()[choice[h]];
        coeff *= pick.coeff;
        word.insert(word.end(), pick.path.begin(), pick.path.end());
        ++h;
      } else {
        word.push_back(term.cycle[i]);
      }
    }
    if (dead) return {};
    out.push_back({coeff, word});

    // advance the multi-index over replacement choices
    size_t k = 0;
    for (; k < hits.size(); ++k) {
      if (++choice[k] < sub.at(term.cycle[hits[k]]).terms().size()) break;
      choice[k] = 0;
    }
    if (k == hits.size()) break;
  }
  return out;
}

bool term_mentions(const CycleTerm& t, const std::string& a, const std::string& b) {
  for (const std::string& x : t.cycle)
    if (x == a || x == b) return true;
  return false;
}

// Remove 2-cycles created by premutation. A pair (c, d) is removable only
// when its quadratic term appears in the potential; occurrences of c and d in
// the remaining terms are eliminated through the partner derivatives, and the
// whole process iterates to a fixed point.
std::pair<std::vector<Arrow>, std::vector<CycleTerm>> reduce(std::vector<Arrow> arrows,
                                                             std::vector<CycleTerm> terms) {
  for (int round = 0; round < kReductionRounds; ++round) {
    terms = merge_cycle_terms(std::move(terms));

    std::vector<std::pair<std::string, std::string>> two_cycles;
    for (const Arrow& c : arrows)
      for (const Arrow& d : arrows)
        if (c.id < d.id && c.src == d.tgt && c.tgt == d.src) two_cycles.emplace_back(c.id, d.id);
    if (two_cycles.empty()) return {std::move(arrows), std::move(terms)};

    bool removed_one = false;
    for (const auto& [cid, did] : two_cycles) {
      Path quad = canonical_rotation({cid, did});
      auto it = std::find_if(terms.begin(), terms.end(),
                             [&](const CycleTerm& t) { return t.cycle == quad; });
      if (it == terms.end()) continue;

      Rat lambda = it->coeff;
      std::vector<CycleTerm> rest;
      for (const CycleTerm& t : terms)
        if (&t != &*it) rest.push_back(t);

      std::map<std::string, FormalPathSum> sub;
      sub[cid] = derive(rest, did) * (Rat(-1) / lambda);
      sub[did] = derive(rest, cid) * (Rat(-1) / lambda);

      for (int inner = 0; inner < kReductionRounds; ++inner) {
        std::vector<CycleTerm> next;
        bool touched = false;
        for (const CycleTerm& t : rest) {
          if (term_mentions(t, cid, did)) {
            touched = true;
            auto expanded = substitute_term(t, sub);
            next.insert(next.end(), expanded.begin(), expanded.end());
          } else {
            next.push_back(t);
          }
        }
        rest = merge_cycle_terms(std::move(next));
        if (!touched) break;
      }
      for (const CycleTerm& t : rest)
        if (term_mentions(t, cid, did))
          throw domain_error("non-reducible: substitution for 2-cycle (" + cid + "," + did +
                             ") did not reach a fixed point");

      arrows.erase(std::remove_if(arrows.begin(), arrows.end(),
                                  [&](const Arrow& a) { return a.id == cid || a.id == did; }),
                   arrows.end());
      terms = std::move(rest);
      removed_one = true;
      break;
    }

    if (!removed_one)
      throw domain_error("non-reducible: 2-cycle (" + two_cycles.front().first + "," +
                         two_cycles.front().second + ") has no quadratic potential term");
  }
  throw domain_error("non-reducible: reduction exceeded " + std::to_string(kReductionRounds) +
                     " rounds");
}

}  // namespace

QuiverWithPotential mutate(const QuiverWithPotential& qp, int vertex) {
  const Quiver& q = qp.quiver();
  if (!q.has_vertex(vertex)) throw domain_error("unknown vertex " + std::to_string(vertex));

  std::vector<Arrow> incoming, outgoing, arrows;
  for (const Arrow& a : q.arrows()) {
    if (a.tgt == vertex) incoming.push_back(a);
    if (a.src == vertex) outgoing.push_back(a);
  }
  for (const Arrow& a : q.arrows()) {
    if (a.tgt == vertex || a.src == vertex)
      arrows.push_back({a.id + "*", a.tgt, a.src});
    else
      arrows.push_back(a);
  }
  auto composite_id = [](const Arrow& a, const Arrow& b) { return "[" + a.id + "." + b.id + "]"; };
  for (const Arrow& a : incoming)
    for (const Arrow& b : outgoing) arrows.push_back({composite_id(a, b), a.src, b.tgt});

  // W': replace each composition through the vertex by the composite arrow.
  std::vector<CycleTerm> terms;
  for (const CycleTerm& t : qp.potential().terms()) {
    Path c = t.cycle;
    size_t cut = c.size();
    for (size_t k = 0; k < c.size(); ++k)
      if (q.arrow(c[k]).tgt != vertex) {
        cut = k + 1;
        break;
      }
    if (cut == c.size() + 1 || cut > c.size())
      throw domain_error("potential cycle visits only vertex " + std::to_string(vertex));
    std::rotate(c.begin(), c.begin() + (cut % c.size()), c.end());

    Path rewritten;
    for (size_t k = 0; k < c.size();) {
      if (q.arrow(c[k]).tgt == vertex) {
        rewritten.push_back(composite_id(q.arrow(c[k]), q.arrow(c[k + 1])));
        k += 2;
      } else {
        rewritten.push_back(c[k]);
        k += 1;
      }
    }
    terms.push_back({t.coeff, rewritten});
  }
  // W'' = sum [ab] b* a*
  for (const Arrow& a : incoming)
    for (const Arrow& b : outgoing)
      terms.push_back({Rat(1), {composite_id(a, b), b.id + "*", a.id + "*"}});

  auto [red_arrows, red_terms] = reduce(std::move(arrows), std::move(terms));
  return QuiverWithPotential(Quiver(q.vertices(), std::move(red_arrows)),
                             Potential(std::move(red_terms)));
}

bool is_nondegenerate_to_depth(const QuiverWithPotential& qp, int depth) {
  if (depth < 0) throw domain_error("depth must be >= 0");
  std::vector<QuiverWithPotential> frontier{qp};
  std::set<std::string> seen{canonical_key(qp)};
  for (int d = 0; d < depth; ++d) {
    std::vector<QuiverWithPotential> next;
    for (const QuiverWithPotential& s : frontier) {
      for (int v : s.quiver().vertices()) {
        QuiverWithPotential m;
        try {
          m = mutate(s, v);
        } catch (const domain_error&) {
          return false;
        }
        std::string k = canonical_key(m);
        if (seen.insert(k).second) next.push_back(std::move(m));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return true;
}

// --- Ginzburg graded quiver ----------------------------------------------

bool has_directed_cycle(const Quiver& q) {
  const auto& vs = q.vertices();
  std::map<int, int> state;  // 0 unseen, 1 open, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (const Arrow& a : q.arrows())
      if (a.src == v) {
        if (state[a.tgt] == 1) return true;
        if (state[a.tgt] == 0 && dfs(a.tgt)) return true;
      }
    state[v] = 2;
    return false;
  };
  for (int v : vs)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

const GradedArrow& GradedQuiver::arrow(const std::string& id) const {
  for (const GradedArrow& a : arrows)
    if (a.id == id) return a;
  throw domain_error("unknown graded arrow: " + id);
}

GradedQuiver ginzburg_graded_quiver(const QuiverWithPotential& qp, int n) {
  if (n < 3) throw domain_error("Calabi-Yau dimension must be >= 3");
  if (n > 3 && has_directed_cycle(qp.quiver()))
    throw domain_error("N > 3 requires an acyclic quiver");

  const Quiver& q = qp.quiver();
  GradedQuiver gq;
  gq.n = n;
  gq.vertices = q.vertices();
  for (const Arrow& a : q.arrows()) gq.arrows.push_back({a.id, a.src, a.tgt, 0});
  for (const Arrow& a : q.arrows()) gq.arrows.push_back({a.id + "*", a.tgt, a.src, -(n - 2)});

  auto loop_id = [&](int v) {
    std::string id = "e" + std::to_string(v);
    while (q.has_arrow(id)) id += "'";
    return id;
  };
  for (int v : q.vertices()) gq.arrows.push_back({loop_id(v), v, v, -(n - 1)});

  for (const Arrow& a : q.arrows()) gq.differential[a.id] = FormalPathSum();
  for (const Arrow& a : q.arrows())
    gq.differential[a.id + "*"] = derive(qp.potential().terms(), a.id);
  // d e_i = sum_a e_i [a, a*] e_i = sum_{s(a)=i} a a*  -  sum_{t(a)=i} a* a
  for (int v : q.vertices()) {
    std::vector<PathTerm> terms;
    for (const Arrow& a : q.arrows()) {
      if (a.src == v) terms.push_back({Rat(1), {a.id, a.id + "*"}});
      if (a.tgt == v) terms.push_back({Rat(-1), {a.id + "*", a.id}});
    }
    gq.differential[loop_id(v)] = FormalPathSum(std::move(terms));
  }
  return gq;
}

FormalPathSum apply_differential(const GradedQuiver& gq, const FormalPathSum& x) {
  std::vector<PathTerm> out;
  for (const PathTerm& t : x.terms()) {
    int sign_exp = 0;
    for (size_t j = 0; j < t.path.size(); ++j) {
      auto dit = gq.differential.find(t.path[j]);
      if (dit == gq.differential.end()) throw domain_error("no differential for " + t.path[j]);
      for (const PathTerm& r : dit->second.terms()) {
        Path p(t.path.begin(), t.path.begin() + j);
        p.insert(p.end(), r.path.begin(), r.path.end());
        p.insert(p.end(), t.path.begin() + j + 1, t.path.end());
        Rat c = t.coeff * r.coeff;
        if (sign_exp % 2 != 0) c = -c;
        out.push_back({c, std::move(p)});
      }
      sign_exp += gq.arrow(t.path[j]).degree;
    }
  }
  return FormalPathSum(std::move(out));
}

// --- Euler form ----------------------------------------------------------

long long euler_form_cy3(const QuiverWithPotential& qp, int vi, int vj) {
  const Quiver& q = qp.quiver();
  if (!q.has_vertex(vi)) throw domain_error("unknown vertex " + std::to_string(vi));
  if (!q.has_vertex(vj)) throw domain_error("unknown vertex " + std::to_string(vj));
  return q.arrow_count(vj, vi) - q.arrow_count(vi, vj);
}

std::vector<std::vector<long long>> euler_matrix(const QuiverWithPotential& qp) {
  const auto& vs = qp.quiver().vertices();
  std::vector<std::vector<long long>> m(vs.size(), std::vector<long long>(vs.size(), 0));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) m[i][j] = euler_form_cy3(qp, vs[i], vs[j]);
  return m;
}

// --- canonical form ------------------------------------------------------

namespace {

constexpr long long kAssignmentCap = 40320;  // 8!

void degree_class_perms_impl(const Quiver& q, std::vector<std::vector<int>>& out) {
  int n = static_cast<int>(q.vertices().size());
  // signature = (indegree, outdegree); canonical labels are blocked by the
  // sorted signature sequence, so vertices permute freely only inside their
  // signature class (consistent across isomorphic quivers)
  std::vector<std::pair<int, int>> sig(n);
  for (int i = 0; i < n; ++i) {
    int vin = 0, vout = 0;
    for (const Arrow& a : q.arrows()) {
      if (a.tgt == q.vertices()[i]) ++vin;
      if (a.src == q.vertices()[i]) ++vout;
    }
    sig[i] = {vin, vout};
  }
  std::vector<std::pair<int, int>> slot_sig = sig;
  std::sort(slot_sig.begin(), slot_sig.end());

  std::vector<int> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int vertex) {
    if (vertex == n) {
      out.push_back(perm);
      return;
    }
    for (int t = 0; t < n; ++t)
      if (!used[t] && sig[vertex] == slot_sig[t]) {
        used[t] = true;
        perm[vertex] = t;
        rec(vertex + 1);
        used[t] = false;
      }
  };
  rec(0);
}

std::string serialize_under(const QuiverWithPotential& qp, const std::vector<int>& perm) {
  const Quiver& q = qp.quiver();
  int n = static_cast<int>(q.vertices().size());

  // relabeled arrow groups: (src', tgt') -> original ids
  std::map<std::pair<int, int>, std::vector<std::string>> groups;
  for (const Arrow& a : q.arrows())
    groups[{perm[q.vertex_index(a.src)], perm[q.vertex_index(a.tgt)]}].push_back(a.id);

  std::ostringstream shape;
  shape << "Q" << n << "{";
  for (const auto& [st, ids] : groups) shape << st.first << ">" << st.second << "x" << ids.size() << ";";
  shape << "}";

  if (qp.potential().is_zero()) return shape.str() + "W{0}";

  // Name assignments inside parallel groups affect the potential string; take
  // the minimum over all of them.
  long long combos = 1;
  for (const auto& [st, ids] : groups) {
    long long f = 1;
    for (size_t k = 2; k <= ids.size(); ++k) f *= static_cast<long long>(k);
    combos *= f;
    if (combos > kAssignmentCap)
      throw domain_error("canonical labeling: too many parallel-arrow matchings");
  }

  std::vector<std::pair<std::pair<int, int>, std::vector<std::string>>> glist(groups.begin(),
                                                                              groups.end());
  for (auto& g : glist) std::sort(g.second.begin(), g.second.end());

  std::string best;
  while (true) {
    std::map<std::string, std::string> rename;
    for (const auto& [st, ids] : glist)
      for (size_t k = 0; k < ids.size(); ++k)
        rename[ids[k]] = "a" + std::to_string(st.first) + "_" + std::to_string(st.second) + "_" +
                         std::to_string(k);

    std::vector<CycleTerm> renamed;
    for (const CycleTerm& t : qp.potential().terms()) {
      Path p;
      for (const std::string& a : t.cycle) p.push_back(rename.at(a));
      renamed.push_back({t.coeff, std::move(p)});
    }
    renamed = merge_cycle_terms(std::move(renamed));
    std::ostringstream w;
    w << "W{";
    for (const CycleTerm& t : renamed) {
      w << rat_to_string(t.coeff) << "*";
      for (const std::string& a : t.cycle) w << a << ".";
      w << ";";
    }
    w << "}";
    std::string cand = shape.str() + w.str();
    if (best.empty() || cand < best) best = cand;

    // next permutation in some group, odometer style
    size_t g = 0;
    for (; g < glist.size(); ++g)
      if (std::next_permutation(glist[g].second.begin(), glist[g].second.end())) break;
    if (g == glist.size()) break;
  }
  return best;
}

}  // namespace

std::vector<std::vector<int>> relabelings(const Quiver& q) {
  std::vector<std::vector<int>> out;
  degree_class_perms_impl(q, out);
  return out;
}

std::string serialize_relabeled(const QuiverWithPotential& qp, const std::vector<int>& perm) {
  return serialize_under(qp, perm);
}

std::string canonical_key(const QuiverWithPotential& qp) {
  std::vector<std::vector<int>> perms = relabelings(qp.quiver());
  std::string best;
  for (const auto& perm : perms) {
    std::string s = serialize_under(qp, perm);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

bool is_isomorphic(const QuiverWithPotential& a, const QuiverWithPotential& b) {
  if (a.quiver().vertices().size() != b.quiver().vertices().size()) return false;
  if (a.quiver().arrows().size() != b.quiver().arrows().size()) return false;
  return canonical_key(a) == canonical_key(b);
}

// --- JSON ----------------------------------------------------------------

std::string to_json(const QuiverWithPotential& qp) {
  json j;
  j["format_version"] = "1";
  j["vertices"] = qp.quiver().vertices();
  j["arrows"] = json::array();
  for (const Arrow& a : qp.quiver().arrows())
    j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  j["potential"] = json::array();
  for (const CycleTerm& t : qp.potential().terms())
    j["potential"].push_back({{"coeff", rat_to_string(t.coeff)}, {"cycle", t.cycle}});
  return j.dump(2);
}

QuiverWithPotential qp_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad quiver JSON: ") + e.what());
  }
  try {
    std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
    std::vector<Arrow> arrows;
    for (const json& a : j.at("arrows"))
      arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<int>(),
                        a.at("tgt").get<int>()});
    std::vector<CycleTerm> terms;
    if (j.contains("potential"))
      for (const json& t : j.at("potential"))
        terms.push_back({rat_from_string(t.at("coeff").get<std::string>()),
                         t.at("cycle").get<Path>()});
    return QuiverWithPotential(Quiver(std::move(vertices), std::move(arrows)),
                               Potential(std::move(terms)));
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad quiver JSON: ") + e.what());
  }
}

std::string to_json(const GradedQuiver& gq) {
  json j;
  j["format_version"] = "1";
  j["cy_dimension"] = gq.n;
  j["vertices"] = gq.vertices;
  j["arrows"] = json::array();
  for (const GradedArrow& a : gq.arrows)
    j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}, {"degree", a.degree}});
  j["differential"] = json::object();
  for (const auto& [id, d] : gq.differential) {
    json terms = json::array();
    for (const PathTerm& t : d.terms())
      terms.push_back({{"coeff", rat_to_string(t.coeff)}, {"path", t.path}});
    j["differential"][id] = terms;
  }
  return j.dump(2);
}

}  // namespace stabkit::qp
