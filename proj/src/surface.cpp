#include "stabkit/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stabkit/hearts.hpp"

namespace stabkit::surface {

using nlohmann::json;

void MarkedSurfaceData::validate() const {
  if (genus < 0) throw domain_error("negative genus");
  if (boundary_marked.empty()) throw domain_error("at least one boundary component required");
  for (int m : boundary_marked)
    if (m < 1) throw domain_error("each boundary component needs a marked point");
  for (int w : weights)
    if (w < 1) throw domain_error("decoration weights must be >= 1");
}

bool check_compatibility(const MarkedSurfaceData& d) {
  d.validate();
  long long lhs = 0;
  for (int w : d.weights) lhs += w;
  for (int m : d.boundary_marked) lhs -= m + 2;
  return lhs == 4LL * d.genus - 4;
}

// --- triangulations ---------------------------------------------------------

namespace {

Arc norm_arc(Arc a) {
  if (a.first > a.second) std::swap(a.first, a.second);
  return a;
}

bool is_diagonal(int m, const Arc& a) {
  if (a.first < 0 || a.second >= m || a.first >= a.second) return false;
  if (a.second - a.first < 2) return false;                  // boundary edge
  if (a.first == 0 && a.second == m - 1) return false;       // boundary edge
  return true;
}

bool edge_present(const DiscTriangulation& t, int i, int j) {
  if (i > j) std::swap(i, j);
  if (j - i == 1 || (i == 0 && j == t.m() - 1)) return true;
  return t.has_arc({i, j});
}

}  // namespace

bool arcs_cross(const Arc& a, const Arc& b) {
  Arc x = norm_arc(a), y = norm_arc(b);
  if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second)
    return false;
  bool c_in = x.first < y.first && y.first < x.second;
  bool d_in = x.first < y.second && y.second < x.second;
  return c_in != d_in;
}

DiscTriangulation::DiscTriangulation(int m, std::vector<Arc> arcs) : m_(m) {
  if (m < 3) throw domain_error("a disc triangulation needs m >= 3");
  for (Arc& a : arcs) a = norm_arc(a);
  std::sort(arcs.begin(), arcs.end());
  for (size_t i = 0; i + 1 < arcs.size(); ++i)
    if (arcs[i] == arcs[i + 1]) throw domain_error("duplicate arc");
  for (const Arc& a : arcs)
    if (!is_diagonal(m, a))
      throw domain_error("not a diagonal: (" + std::to_string(a.first) + "," +
                         std::to_string(a.second) + ")");
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j])) throw domain_error("crossing arcs");
  if (static_cast<int>(arcs.size()) != m - 3)
    throw domain_error("not maximal: " + std::to_string(arcs.size()) + " arcs, expected " +
                       std::to_string(m - 3));
  arcs_ = std::move(arcs);
}

bool DiscTriangulation::has_arc(const Arc& a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), norm_arc(a));
}

std::vector<std::array<int, 3>> faces(const DiscTriangulation& t) {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < t.m(); ++u)
    for (int v = u + 1; v < t.m(); ++v) {
      if (!edge_present(t, u, v)) continue;
      for (int w = v + 1; w < t.m(); ++w)
        if (edge_present(t, v, w) && edge_present(t, u, w)) out.push_back({u, v, w});
    }
  return out;
}

std::vector<DiscTriangulation> enumerate_triangulations(int m) {
  if (m < 3 || m > 12) throw domain_error("triangulation enumeration supports 3 <= m <= 12");
  std::vector<Arc> diagonals;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j)
      if (is_diagonal(m, {i, j})) diagonals.push_back({i, j});

  std::vector<DiscTriangulation> out;
  std::vector<Arc> current;
  size_t need = static_cast<size_t>(m - 3);

  std::function<void(size_t)> rec = [&](size_t start) {
    if (current.size() == need) {
      out.emplace_back(m, current);
      return;
    }
    for (size_t k = start; k < diagonals.size(); ++k) {
      if (diagonals.size() - k < need - current.size()) break;
      bool ok = true;
      for (const Arc& a : current)
        if (arcs_cross(a, diagonals[k])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(diagonals[k]);
      rec(k + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

DiscTriangulation flip(const DiscTriangulation& t, const Arc& arc) {
  Arc a = norm_arc(arc);
  if (!t.has_arc(a)) throw domain_error("arc not in the triangulation");

  std::vector<int> apexes;
  for (const auto& f : faces(t))
    if ((f[0] == a.first && f[1] == a.second) || (f[0] == a.first && f[2] == a.second) ||
        (f[1] == a.first && f[2] == a.second)) {
      for (int x : f)
        if (x != a.first && x != a.second) apexes.push_back(x);
    }
  if (apexes.size() != 2) throw domain_error("internal: arc is not shared by two triangles");

  std::vector<Arc> arcs;
  for (const Arc& x : t.arcs())
    if (x != a) arcs.push_back(x);
  arcs.push_back(norm_arc({apexes[0], apexes[1]}));
  return DiscTriangulation(t.m(), std::move(arcs));
}

// --- quiver extraction --------------------------------------------------------

qp::QuiverWithPotential quiver_from_angulation(const DiscTriangulation& t) {
  const std::vector<Arc>& arcs = t.arcs();
  auto arc_vertex = [&](const Arc& a) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
    return static_cast<int>(it - arcs.begin()) + 1;
  };

  std::vector<int> vertices;
  for (size_t i = 0; i < arcs.size(); ++i) vertices.push_back(static_cast<int>(i) + 1);

  std::vector<qp::Arrow> arrows;
  std::vector<qp::CycleTerm> terms;
  int arrow_seq = 0;
  for (const auto& f : faces(t)) {
    // edges of the face in its clockwise cyclic order
    std::array<Arc, 3> edge = {norm_arc({f[0], f[1]}), norm_arc({f[1], f[2]}),
                               norm_arc({f[0], f[2]})};
    std::array<bool, 3> is_arc;
    for (int k = 0; k < 3; ++k) is_arc[k] = t.has_arc(edge[k]);

    std::array<std::string, 3> arrow_at;  // arrow from edge[k] to edge[(k+1)%3]
    for (int k = 0; k < 3; ++k) {
      if (!is_arc[k] || !is_arc[(k + 1) % 3]) continue;
      std::string id = "a" + std::to_string(++arrow_seq);
      arrow_at[k] = id;
      arrows.push_back({id, arc_vertex(edge[k]), arc_vertex(edge[(k + 1) % 3])});
    }
    if (is_arc[0] && is_arc[1] && is_arc[2])
      terms.push_back({Rat(1), {arrow_at[0], arrow_at[1], arrow_at[2]}});
  }
  return qp::QuiverWithPotential(qp::Quiver(std::move(vertices), std::move(arrows)),
                                 qp::Potential(std::move(terms)));
}

int vertex_of_arc(const DiscTriangulation& t, const Arc& arc) {
  Arc a = norm_arc(arc);
  if (!t.has_arc(a)) throw domain_error("arc not in the triangulation");
  auto it = std::lower_bound(t.arcs().begin(), t.arcs().end(), a);
  return static_cast<int>(it - t.arcs().begin()) + 1;
}

// --- flip graph -----------------------------------------------------------------

FlipGraph flip_graph(int m) {
  if (m < 3 || m > 10) throw domain_error("flip graph supports 3 <= m <= 10");
  FlipGraph g;
  g.vertices = enumerate_triangulations(m);
  std::map<std::vector<Arc>, int> index_of;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    index_of[g.vertices[i].arcs()] = static_cast<int>(i);

  std::set<std::pair<int, int>> edges;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (const Arc& a : g.vertices[i].arcs()) {
      int j = index_of.at(flip(g.vertices[i], a).arcs());
      if (static_cast<int>(i) != j)
        edges.insert({std::min<int>(static_cast<int>(i), j), std::max<int>(static_cast<int>(i), j)});
    }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

bool flip_mutation_square(const DiscTriangulation& t, const Arc& arc) {
  auto before = quiver_from_angulation(t);
  auto mutated = qp::mutate(before, vertex_of_arc(t, arc));
  auto after = quiver_from_angulation(flip(t, arc));
  return qp::is_isomorphic(mutated, after);
}

// --- comparison -----------------------------------------------------------------

namespace {

// undirected simple graph isomorphism by backtracking with degree pruning
bool graphs_isomorphic(size_t n1, const std::set<std::pair<int, int>>& e1, size_t n2,
                       const std::set<std::pair<int, int>>& e2) {
  if (n1 != n2 || e1.size() != e2.size()) return false;
  size_t n = n1;
  std::vector<int> deg1(n, 0), deg2(n, 0);
  for (auto& [a, b] : e1) {
    ++deg1[a];
    ++deg1[b];
  }
  for (auto& [a, b] : e2) {
    ++deg2[a];
    ++deg2[b];
  }
  {
    auto d1 = deg1, d2 = deg2;
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto adj1 = [&](int a, int b) {
    return e1.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  auto adj2 = [&](int a, int b) {
    return e2.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::function<bool(size_t)> rec = [&](size_t v) -> bool {
    if (v == n) return true;
    for (size_t t = 0; t < n; ++t) {
      if (used[t] || deg1[v] != deg2[t]) continue;
      bool ok = true;
      for (size_t u = 0; u < v && ok; ++u)
        if (adj1(static_cast<int>(v), static_cast<int>(u)) !=
            adj2(static_cast<int>(t), map[u]))
          ok = false;
      if (!ok) continue;
      used[t] = true;
      map[v] = static_cast<int>(t);
      if (rec(v + 1)) return true;
      used[t] = false;
      map[v] = -1;
    }
    return false;
  };
  return rec(0);
}

std::string shape_of(size_t n, size_t edges, const std::vector<int>& degrees) {
  if (n == 1 && edges == 0) return "single vertex";
  if (n == 2 && edges == 1) return "single edge";
  bool all2 = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 2; });
  if (all2 && edges == n) return std::to_string(n) + "-cycle";
  return std::to_string(n) + " vertices, " + std::to_string(edges) + " edges";
}

}  // namespace

CompareReport compare_exchange_graphs(int m) {
  if (m < 3 || m > 6) throw domain_error("exchange-graph comparison supports 3 <= m <= 6");
  FlipGraph fg = flip_graph(m);
  std::set<std::pair<int, int>> fe(fg.edges.begin(), fg.edges.end());

  auto seed_qp = std::make_shared<const qp::QuiverWithPotential>(
      quiver_from_angulation(fg.vertices.front()));
  auto slice = hearts::exchange_graph(hearts::standard_heart(seed_qp), -1, hearts::is_intermediate);

  std::set<std::pair<int, int>> he;
  for (const auto& e : slice.edges)
    if (e.src != e.tgt) he.insert({std::min(e.src, e.tgt), std::max(e.src, e.tgt)});

  CompareReport rep;
  rep.flip_vertices = fg.vertices.size();
  rep.heart_vertices = slice.vertices.size();
  rep.isomorphic = graphs_isomorphic(fg.vertices.size(), fe, slice.vertices.size(), he);

  std::vector<int> deg(fg.vertices.size(), 0);
  for (auto& [a, b] : fe) {
    ++deg[a];
    ++deg[b];
  }
  if (rep.isomorphic) {
    rep.detail = "isomorphic: " + shape_of(fg.vertices.size(), fe.size(), deg);
  } else {
    rep.detail = "not isomorphic: flip graph has " + std::to_string(fg.vertices.size()) +
                 " vertices / " + std::to_string(fe.size()) + " edges, heart graph has " +
                 std::to_string(slice.vertices.size()) + " vertices / " +
                 std::to_string(he.size()) + " edges";
  }
  return rep;
}

// --- formats ---------------------------------------------------------------------

std::string to_dot(const FlipGraph& g) {
  std::ostringstream os;
  os << "graph flips {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  t" << i << " [label=\"";
    const auto& arcs = g.vertices[i].arcs();
    for (size_t k = 0; k < arcs.size(); ++k)
      os << arcs[k].first << "-" << arcs[k].second << (k + 1 < arcs.size() ? " " : "");
    os << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) os << "  t" << a << " -- t" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const DiscTriangulation& t) {
  json j;
  j["format_version"] = "1";
  j["m"] = t.m();
  j["arcs"] = json::array();
  for (const Arc& a : t.arcs()) j["arcs"].push_back({a.first, a.second});
  return j.dump(2);
}

DiscTriangulation triangulation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad triangulation JSON: ") + e.what());
  }
  try {
    int m = j.at("m").get<int>();
    std::vector<Arc> arcs;
    for (const json& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    return DiscTriangulation(m, std::move(arcs));
  } catch (const json::exception& e) {
    throw domain_error(std::string("bad triangulation JSON: ") + e.what());
  }
}

}  // namespace stabkit::surface
