#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "stabkit/hearts.hpp"
#include "stabkit/periods.hpp"
#include "stabkit/qp.hpp"
#include "stabkit/rep.hpp"
#include "stabkit/surface.hpp"

namespace py = pybind11;
using namespace stabkit;

namespace {

// Structured data crosses the boundary as the same JSON documents the CLI
// reads and writes; scalars and small lists go native.

hearts::Heart heart(const std::string& text) { return hearts::heart_from_json(text); }

std::vector<std::pair<rep::Class, double>> factors_out(const std::vector<rep::HNFactor>& fs) {
  std::vector<std::pair<rep::Class, double>> out;
  for (const auto& f : fs) out.emplace_back(f.cls, f.phase);
  return out;
}

std::vector<hearts::ProbeEntry> probe_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw domain_error("bad probe JSON");
  std::vector<hearts::ProbeEntry> probe;
  for (const auto& e : j.at("entries")) {
    hearts::ProbeEntry pe;
    pe.cls = e.at("cls").get<rep::Class>();
    pe.s1 = {e.at("s1").at("phi_plus").get<double>(), e.at("s1").at("phi_minus").get<double>(),
             e.at("s1").at("mass").get<double>()};
    pe.s2 = {e.at("s2").at("phi_plus").get<double>(), e.at("s2").at("phi_minus").get<double>(),
             e.at("s2").at("mass").get<double>()};
    probe.push_back(std::move(pe));
  }
  return probe;
}

}  // namespace

PYBIND11_MODULE(_stabkit, m) {
  m.doc() = "Quiver mutation, Harder-Narasimhan filtrations, heart exchange graphs, "
            "disc flips, and quadratic-differential periods";

  py::register_exception<domain_error>(m, "DomainError");

  m.attr("__version__") = "0.1.0";

  // --- quivers with potential ---
  m.def("mutate", [](const std::string& qp, int vertex) {
    return qp::to_json(qp::mutate(qp::qp_from_json(qp), vertex));
  }, py::arg("qp_json"), py::arg("vertex"));

  m.def("jacobian_relations", [](const std::string& qp) {
    std::vector<std::string> out;
    for (const auto& r : qp::jacobian_relations(qp::qp_from_json(qp)))
      out.push_back(r.to_string());
    return out;
  }, py::arg("qp_json"));

  m.def("cyclic_derivative", [](const std::string& qp, const std::string& arrow) {
    return qp::cyclic_derivative(qp::qp_from_json(qp), arrow).to_string();
  }, py::arg("qp_json"), py::arg("arrow_id"));

  m.def("is_nondegenerate_to_depth", [](const std::string& qp, int depth) {
    return qp::is_nondegenerate_to_depth(qp::qp_from_json(qp), depth);
  }, py::arg("qp_json"), py::arg("depth"));

  m.def("euler_form_cy3", [](const std::string& qp, int vi, int vj) {
    return qp::euler_form_cy3(qp::qp_from_json(qp), vi, vj);
  }, py::arg("qp_json"), py::arg("vi"), py::arg("vj"));

  m.def("ginzburg_graded_quiver", [](const std::string& qp, int n) {
    return qp::to_json(qp::ginzburg_graded_quiver(qp::qp_from_json(qp), n));
  }, py::arg("qp_json"), py::arg("n") = 3);

  m.def("qp_canonical_key", [](const std::string& qp) {
    return qp::canonical_key(qp::qp_from_json(qp));
  }, py::arg("qp_json"));

  // --- representations and stability ---
  m.def("hn_filtration", [](const std::string& rep, const std::string& charge) {
    return factors_out(rep::hn_filtration(rep::rep_from_json(rep), rep::charge_from_json(charge)));
  }, py::arg("rep_json"), py::arg("charge_json"));

  m.def("hn_oracle", [](const std::string& rep, const std::string& charge) {
    return factors_out(rep::hn_oracle(rep::rep_from_json(rep), rep::charge_from_json(charge)));
  }, py::arg("rep_json"), py::arg("charge_json"));

  m.def("is_semistable", [](const std::string& rep, const std::string& charge) {
    return rep::is_semistable(rep::rep_from_json(rep), rep::charge_from_json(charge));
  }, py::arg("rep_json"), py::arg("charge_json"));

  m.def("king_classify", [](const std::string& rep, const rep::Class& a) {
    auto r = rep::king_classify(rep::rep_from_json(rep), a);
    if (r.by_convention) return std::string("unstable-by-convention");
    switch (r.verdict) {
      case rep::KingVerdict::stable: return std::string("stable");
      case rep::KingVerdict::semistable: return std::string("semistable");
      default: return std::string("unstable");
    }
  }, py::arg("rep_json"), py::arg("a"));

  m.def("slope", [](const std::string& rep, const rep::Class& a) {
    return rat_to_string(rep::slope(rep::rep_from_json(rep), a));
  }, py::arg("rep_json"), py::arg("a"));

  m.def("subrep_dimensions", [](const std::string& rep) {
    std::vector<std::vector<int>> out;
    for (const auto& w : rep::subrepresentations(rep::rep_from_json(rep), true)) out.push_back(w.dim);
    return out;
  }, py::arg("rep_json"));

  // --- hearts ---
  m.def("simple_tilt", [](const std::string& h, int index, bool forward) {
    return hearts::to_json(hearts::simple_tilt(
        heart(h), index, forward ? hearts::Direction::forward : hearts::Direction::backward));
  }, py::arg("heart_json"), py::arg("index"), py::arg("forward") = true);

  m.def("shift_heart", [](const std::string& h, int n) {
    return hearts::to_json(hearts::shift_heart(heart(h), n));
  }, py::arg("heart_json"), py::arg("n"));

  m.def("is_intermediate", [](const std::string& h) { return hearts::is_intermediate(heart(h)); },
        py::arg("heart_json"));

  m.def("cross_wall", [](const std::string& h, int index) {
    return hearts::to_json(hearts::cross_wall(heart(h), index));
  }, py::arg("heart_json"), py::arg("index"));

  m.def("sph_twist_class_action", [](const std::string& h, int index, const rep::Class& cls) {
    return hearts::sph_twist_class_action(heart(h), index, cls);
  }, py::arg("heart_json"), py::arg("index"), py::arg("cls"));

  m.def("exchange_graph", [](const std::string& seed, int depth, bool intermediate_only) {
    auto g = hearts::exchange_graph(heart(seed), depth,
                                    intermediate_only ? hearts::is_intermediate
                                                      : hearts::HeartFilter());
    py::dict out;
    py::list vertices, edges;
    for (const auto& v : g.vertices) vertices.append(hearts::to_json(v));
    for (const auto& e : g.edges)
      edges.append(py::make_tuple(e.src, e.tgt, e.simple,
                                  e.dir == hearts::Direction::forward ? "fwd" : "bwd"));
    out["vertices"] = vertices;
    out["edges"] = edges;
    out["dot"] = hearts::to_dot(g);
    return out;
  }, py::arg("seed_json"), py::arg("depth") = -1, py::arg("intermediate_only") = true);

  m.def("chamber_of", [](const std::string& im1, const std::string& im2) {
    return hearts::chamber_of(RatComplex(Rat(-1), rat_from_string(im1)),
                              RatComplex(Rat(-1), rat_from_string(im2)));
  }, py::arg("im_z1"), py::arg("im_z2"));

  m.def("stab_metric", [](const std::string& probe_json) {
    return hearts::metric_from_probe(probe_from_json(probe_json));
  }, py::arg("probe_json"));

  m.def("support_constant",
        [](const std::string& h, const std::string& charge, const std::vector<rep::Class>& classes,
           const std::string& norm) {
          hearts::StabilityCondition sigma(heart(h), rep::charge_from_json(charge));
          auto r = hearts::support_constant(
              sigma, classes, norm == "sup" ? hearts::Norm::sup : hearts::Norm::euclidean);
          py::dict out;
          out["constant"] = r.constant;
          out["constant_sq"] =
              r.constant_sq ? py::object(py::str(rat_to_string(*r.constant_sq))) : py::none();
          return out;
        },
        py::arg("heart_json"), py::arg("charge_json"), py::arg("classes"),
        py::arg("norm") = "euclidean");

  m.def("marginal_wall_check",
        [](const std::string& charge, const rep::Class& alpha, const rep::Class& beta) {
          return hearts::marginal_wall_check(rep::charge_from_json(charge), alpha, beta);
        },
        py::arg("charge_json"), py::arg("alpha"), py::arg("beta"));

  m.def("c_action", [](const std::string& h, const std::string& charge, std::complex<double> lam) {
    hearts::StabilityCondition sigma(heart(h), rep::charge_from_json(charge));
    auto r = hearts::c_action(sigma, lam);
    py::dict out;
    out["heart"] = hearts::to_json(r.heart);
    out["z_values"] = r.z_values;
    out["heart_updated"] = r.heart_updated;
    return out;
  }, py::arg("heart_json"), py::arg("charge_json"), py::arg("lam"));

  // --- surfaces ---
  m.def("check_compatibility", [](int genus, const std::vector<int>& marked,
                                  const std::vector<int>& weights) {
    return surface::check_compatibility({genus, marked, weights});
  }, py::arg("genus"), py::arg("boundary_marked"), py::arg("weights"));

  m.def("enumerate_triangulations", [](int m_pts) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& t : surface::enumerate_triangulations(m_pts)) out.push_back(t.arcs());
    return out;
  }, py::arg("m"));

  m.def("flip", [](int m_pts, const std::vector<surface::Arc>& arcs, const surface::Arc& arc) {
    return surface::flip(surface::DiscTriangulation(m_pts, arcs), arc).arcs();
  }, py::arg("m"), py::arg("arcs"), py::arg("arc"));

  m.def("quiver_from_angulation", [](int m_pts, const std::vector<surface::Arc>& arcs) {
    return qp::to_json(surface::quiver_from_angulation(surface::DiscTriangulation(m_pts, arcs)));
  }, py::arg("m"), py::arg("arcs"));

  m.def("flip_mutation_square", [](int m_pts, const std::vector<surface::Arc>& arcs,
                                   const surface::Arc& arc) {
    return surface::flip_mutation_square(surface::DiscTriangulation(m_pts, arcs), arc);
  }, py::arg("m"), py::arg("arcs"), py::arg("arc"));

  m.def("flip_graph", [](int m_pts) {
    auto g = surface::flip_graph(m_pts);
    py::dict out;
    py::list vertices;
    for (const auto& t : g.vertices) vertices.append(t.arcs());
    out["vertices"] = vertices;
    out["edges"] = g.edges;
    out["dot"] = surface::to_dot(g);
    return out;
  }, py::arg("m"));

  m.def("compare_exchange_graphs", [](int m_pts) {
    return surface::compare_exchange_graphs(m_pts).detail;
  }, py::arg("m"));

  // --- periods ---
  m.def("zeroes", [](const std::string& poly) {
    return periods::zeroes(periods::parse_polynomial(poly));
  }, py::arg("poly"));

  m.def("period", [](const std::string& poly, int i, int j) {
    return periods::period(periods::parse_polynomial(poly), i, j);
  }, py::arg("poly"), py::arg("i"), py::arg("j"));

  m.def("genericity_proxy", [](const std::string& poly) {
    return periods::genericity_proxy(periods::parse_polynomial(poly));
  }, py::arg("poly"));

  m.def("chamber_scan_csv",
        [](const std::string& mode, const std::string& grid1, const std::string& grid2,
           int threads) {
          auto g1 = periods::parse_grid_spec(grid1);
          auto g2 = periods::parse_grid_spec(grid2);
          auto cells = mode == "impair" ? periods::scan_impair(g1, g2)
                                        : periods::scan_ab(g1, g2, threads);
          return periods::scan_to_csv(cells);
        },
        py::arg("mode"), py::arg("grid1"), py::arg("grid2"), py::arg("threads") = 1);
}
