#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabkit/hearts.hpp"
#include "stabkit/periods.hpp"
#include "stabkit/qp.hpp"
#include "stabkit/rep.hpp"
#include "stabkit/surface.hpp"

namespace {

using namespace stabkit;

constexpr const char* kVersion = "stabkit 0.1.0 (format version 1)";
constexpr double kMinTolerance = 2.3e-13;  // ~ machine epsilon * 1e3

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw domain_error("cannot write " + out_path);
  out << text;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string cls_str(const rep::Class& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

struct Options {
  std::string in_path, out_path, seed_path, charge_path, probe_path, poly;
  std::string imz1, imz2, mode = "ab", backend = "exact";
  std::vector<std::string> grids;
  int vertex = 0;
  int cy_dim = 3;
  int depth = -1;
  int m = 5;
  int threads = 1;
  double tol = 1e-12;
  bool intermediate_only = false;
};

rep::CentralCharge load_charge(const Options& opt) {
  auto z = rep::charge_from_json(read_file(opt.charge_path));
  if (opt.backend == "float") return rep::CentralCharge::floating(z.values(), opt.tol);
  return z;
}

int run_mutate(const Options& opt) {
  auto qp = qp::qp_from_json(read_file(opt.in_path));
  emit(opt.out_path, qp::to_json(qp::mutate(qp, opt.vertex)));
  return 0;
}

int run_jacobian(const Options& opt) {
  auto qp = qp::qp_from_json(read_file(opt.in_path));
  std::string out;
  for (const auto& rel : qp::jacobian_relations(qp)) out += rel.to_string() + "\n";
  emit(opt.out_path, out);
  return 0;
}

int run_ginzburg(const Options& opt) {
  auto qp = qp::qp_from_json(read_file(opt.in_path));
  emit(opt.out_path, qp::to_json(qp::ginzburg_graded_quiver(qp, opt.cy_dim)));
  return 0;
}

int run_hn(const Options& opt) {
  auto v = rep::rep_from_json(read_file(opt.in_path));
  auto z = load_charge(opt);
  std::string out;
  for (const auto& f : rep::hn_filtration(v, z)) out += cls_str(f.cls) + ";" + fmt(f.phase) + "\n";
  emit(opt.out_path, out);
  return 0;
}

int run_exchange_graph(const Options& opt) {
  if (opt.depth < 0 && !opt.intermediate_only)
    throw CLI::ValidationError("exchange-graph",
                               "provide --depth and/or --intermediate-only (the full graph is infinite)");
  auto seed = hearts::heart_from_json(read_file(opt.seed_path));
  auto slice = hearts::exchange_graph(seed, opt.depth,
                                      opt.intermediate_only ? hearts::is_intermediate
                                                            : hearts::HeartFilter());
  emit(opt.out_path, hearts::to_dot(slice));
  return 0;
}

int run_chamber(const Options& opt) {
  RatComplex z1(Rat(-1), rat_from_string(opt.imz1));
  RatComplex z2(Rat(-1), rat_from_string(opt.imz2));
  emit(opt.out_path, hearts::chamber_of(z1, z2) + "\n");
  return 0;
}

int run_metric(const Options& opt) {
  auto j = nlohmann::json::parse(read_file(opt.probe_path), nullptr, false);
  if (j.is_discarded()) throw domain_error("bad probe JSON");
  std::vector<hearts::ProbeEntry> probe;
  try {
    for (const auto& e : j.at("entries")) {
      hearts::ProbeEntry pe;
      pe.cls = e.at("cls").get<rep::Class>();
      pe.s1 = {e.at("s1").at("phi_plus").get<double>(), e.at("s1").at("phi_minus").get<double>(),
               e.at("s1").at("mass").get<double>()};
      pe.s2 = {e.at("s2").at("phi_plus").get<double>(), e.at("s2").at("phi_minus").get<double>(),
               e.at("s2").at("mass").get<double>()};
      probe.push_back(std::move(pe));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw domain_error(std::string("bad probe JSON: ") + ex.what());
  }
  emit(opt.out_path, fmt(hearts::metric_from_probe(probe)) + "\n");
  return 0;
}

int run_surface_flip_graph(const Options& opt) {
  emit(opt.out_path, surface::to_dot(surface::flip_graph(opt.m)));
  return 0;
}

int run_surface_quiver(const Options& opt) {
  auto t = surface::triangulation_from_json(read_file(opt.in_path));
  emit(opt.out_path, qp::to_json(surface::quiver_from_angulation(t)));
  return 0;
}

int run_surface_compare(const Options& opt) {
  auto report = surface::compare_exchange_graphs(opt.m);
  emit(opt.out_path, report.detail + "\n");
  return 0;
}

int run_periods(const Options& opt) {
  auto p = periods::parse_polynomial(opt.poly);
  auto table = periods::period_table(p);
  std::ostringstream os;
  os << "# zeroes\ni,re,im\n";
  for (size_t i = 0; i < table.zero_list.size(); ++i)
    os << i << "," << fmt(table.zero_list[i].real()) << "," << fmt(table.zero_list[i].imag())
       << "\n";
  os << "# periods (straight-segment proxy)\ni,j,re,im,status\n";
  for (const auto& e : table.entries) {
    if (e.blocked)
      os << e.i << "," << e.j << ",nan,nan,blocked\n";
    else
      os << e.i << "," << e.j << "," << fmt(e.value.real()) << "," << fmt(e.value.imag())
         << ",ok\n";
  }
  os << "# genericity\nproxy,";
  try {
    os << (periods::genericity_proxy(p) ? "generic" : "nongeneric") << "\n";
  } catch (const domain_error&) {
    os << "error\n";
  }
  emit(opt.out_path, os.str());
  return 0;
}

int run_chambers(const Options& opt) {
  if (opt.grids.size() != 2)
    throw CLI::ValidationError("chambers", "exactly two --grid specs are required");
  auto g1 = periods::parse_grid_spec(opt.grids[0]);
  auto g2 = periods::parse_grid_spec(opt.grids[1]);
  std::vector<periods::ScanCell> cells;
  if (opt.mode == "impair")
    cells = periods::scan_impair(g1, g2);
  else if (opt.mode == "ab")
    cells = periods::scan_ab(g1, g2, opt.threads);
  else
    throw domain_error("unknown scan mode: " + opt.mode);
  emit(opt.out_path, periods::scan_to_csv(cells));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of stability conditions on quiver categories"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    cmd->add_option("--tol", opt.tol, "floating tolerance override")
        ->check(CLI::Range(kMinTolerance, 1e-3));
  };

  auto* mutate = app.add_subcommand("mutate", "mutate a quiver with potential at a vertex");
  mutate->add_option("--in", opt.in_path, "quiver JSON")->required();
  mutate->add_option("--vertex", opt.vertex, "vertex id")->required();
  add_common(mutate);

  auto* jacobian = app.add_subcommand("jacobian", "cyclic-derivative relations of the potential");
  jacobian->add_option("--in", opt.in_path, "quiver JSON")->required();
  add_common(jacobian);

  auto* ginzburg = app.add_subcommand("ginzburg", "graded quiver of the CY-N dg algebra");
  ginzburg->add_option("--in", opt.in_path, "quiver JSON")->required();
  ginzburg->add_option("--n", opt.cy_dim, "Calabi-Yau dimension (default 3)");
  add_common(ginzburg);

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan factors of a representation");
  hn->add_option("--in", opt.in_path, "representation JSON")->required();
  hn->add_option("--charge", opt.charge_path, "central charge JSON")->required();
  hn->add_option("--backend", opt.backend, "exact|float (default exact)")
      ->check(CLI::IsMember({"exact", "float"}));
  add_common(hn);

  auto* eg = app.add_subcommand("exchange-graph", "tilt closure of a heart, as DOT");
  eg->add_option("--seed", opt.seed_path, "heart JSON")->required();
  eg->add_option("--depth", opt.depth, "BFS depth bound (-1 = unbounded)");
  eg->add_flag("--intermediate-only", opt.intermediate_only,
               "keep only hearts with sign-pure class rows");
  add_common(eg);

  auto* chamber = app.add_subcommand("chamber", "rank-2 chamber of an Im-pair");
  chamber->add_option("--imz1", opt.imz1, "Im Z(S1), exact rational or decimal")->required();
  chamber->add_option("--imz2", opt.imz2, "Im Z(S2)")->required();
  add_common(chamber);

  auto* metric = app.add_subcommand("metric", "generalized metric from probe HN data");
  metric->add_option("--probe", opt.probe_path, "probe JSON")->required();
  add_common(metric);

  auto* surf = app.add_subcommand("surface", "disc triangulation operations");
  surf->require_subcommand(1);
  auto* sflip = surf->add_subcommand("flip-graph", "flip graph of the m-gon, as DOT");
  sflip->add_option("--m", opt.m, "marked points")->required();
  add_common(sflip);
  auto* squiver = surf->add_subcommand("quiver", "quiver with potential of a triangulation");
  squiver->add_option("--in", opt.in_path, "triangulation JSON")->required();
  add_common(squiver);
  auto* scompare = surf->add_subcommand("compare", "flip graph vs heart exchange graph");
  scompare->add_option("--m", opt.m, "marked points")->required();
  add_common(scompare);

  auto* per = app.add_subcommand("periods", "zeroes and straight-segment periods");
  per->add_option("--poly", opt.poly, "polynomial, e.g. \"z^3-z\"")->required();
  add_common(per);

  auto* chambers = app.add_subcommand("chambers", "chamber scan over a parameter grid");
  chambers->add_option("--grid", opt.grids, "grid spec lo:hi:count (twice)")->required();
  chambers->add_option("--mode", opt.mode, "ab|impair (default ab)")
      ->check(CLI::IsMember({"ab", "impair"}));
  chambers->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 64));
  add_common(chambers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors are exit code 2
  }

  try {
    if (app.got_subcommand(mutate)) return run_mutate(opt);
    if (app.got_subcommand(jacobian)) return run_jacobian(opt);
    if (app.got_subcommand(ginzburg)) return run_ginzburg(opt);
    if (app.got_subcommand(hn)) return run_hn(opt);
    if (app.got_subcommand(eg)) return run_exchange_graph(opt);
    if (app.got_subcommand(chamber)) return run_chamber(opt);
    if (app.got_subcommand(metric)) return run_metric(opt);
    if (app.got_subcommand(surf)) {
      if (surf->got_subcommand(sflip)) return run_surface_flip_graph(opt);
      if (surf->got_subcommand(squiver)) return run_surface_quiver(opt);
      if (surf->got_subcommand(scompare)) return run_surface_compare(opt);
    }
    if (app.got_subcommand(per)) return run_periods(opt);
    if (app.got_subcommand(chambers)) return run_chambers(opt);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const stabkit::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
