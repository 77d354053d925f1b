// confspace: one entry point for every operation in the library.
//
// Each run prints a JSON report on stdout (command, parameters, seed, outputs,
// wall time, pass/fail). Artifacts named with --out are written atomically
// and contain no timing, so reruns with the same arguments are byte-identical.
//
// Exit codes: 0 ok, 1 a checked property failed, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "confspace/acceptance.hpp"
#include "confspace/balance.hpp"
#include "confspace/degree.hpp"
#include "confspace/errors.hpp"
#include "confspace/exact.hpp"
#include "confspace/forests.hpp"
#include "confspace/geometry.hpp"
#include "confspace/io.hpp"
#include "confspace/packing.hpp"
#include "confspace/pairing.hpp"
#include "confspace/search.hpp"
#include "confspace/segments.hpp"
#include "confspace/trap.hpp"

using namespace confspace;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared flags, and what a leaf command hands back.
struct Common {
  std::string out;
  std::string svg;
  std::uint64_t seed = 0;
  double tol = -1;  // < 0: command default
  int trials = -1;
};

struct Outcome {
  json result;
  bool passed = true;
  std::string summary;
  std::string csv;        // written instead of JSON when --out ends in .csv
  std::string svg;        // written when --svg is given
};

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + tok + "'");
    }
  }
  return v;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  for (double d : parse_doubles(s)) {
    if (d != std::floor(d)) throw UsageError("not an integer: " + std::to_string(d));
    v.push_back(static_cast<int>(d));
  }
  return v;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Configuration spaces of disks and segments: forests, pairings, geometry, balance, traps."};
  app.require_subcommand(1);
  Common common;
  json params = json::object();
  std::string command;
  std::function<Outcome()> action;

  // Registers a leaf command with the shared flags.
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->add_option("--out", common.out, "write the result artifact here (.json, or .csv where supported)");
    sub->add_option("--svg", common.svg, "write an SVG figure here, where supported");
    sub->add_option("--seed", common.seed, "64-bit seed for randomized procedures")->capture_default_str();
    sub->add_option("--tol", common.tol, "numeric tolerance (command specific)");
    sub->add_option("--trials", common.trials, "number of randomized trials");
    return sub;
  };
  auto set = [&](CLI::App* sub, const std::string& cmd, std::function<Outcome()> fn) {
    sub->callback([&, cmd, fn] {
      command = cmd;
      action = fn;
    });
  };

  // --- forests -----------------------------------------------------------------
  auto* forests = app.add_subcommand("forests", "ordered forests and the n = 4 kernel ladder");
  forests->require_subcommand(1);
  int f_n = 3, f_j = -1;
  auto* f_enum = leaf(forests, "enumerate", "list ordered forests on n vertices with j edges");
  f_enum->add_option("--n", f_n, "number of vertices")->required();
  f_enum->add_option("--j", f_j, "number of edges (default n-1)");
  set(f_enum, "forests enumerate", [&] {
    const int j = f_j < 0 ? f_n - 1 : f_j;
    params = {{"n", f_n}, {"j", j}};
    Outcome o;
    json list = json::array();
    for (const auto& g : enumerate_forests(f_n, j)) list.push_back(g.to_string());
    o.summary = std::to_string(list.size()) + " forests";
    o.result = {{"n", f_n}, {"j", j}, {"count", list.size()}, {"forests", list}};
    return o;
  });
  double f_r = 0.3;
  auto* f_ladder = leaf(forests, "ladder", "kernel dimensions in degrees 0..3 for n = 4 at radius r");
  f_ladder->add_option("--r", f_r, "disk radius")->required();
  set(f_ladder, "forests ladder", [&] {
    params = {{"r", f_r}};
    const auto k = kernel_ladder_n4(f_r);
    Outcome o;
    o.result = {{"r", f_r}, {"kernel_dims", k}};
    o.summary = "(" + std::to_string(k[0]) + ", " + std::to_string(k[1]) + ", " + std::to_string(k[2]) + ", " +
                std::to_string(k[3]) + ")";
    return o;
  });

  // --- pairing -------------------------------------------------------------------
  auto* pairing = app.add_subcommand("pairing", "forest / permutation pairings and their dual basis");
  pairing->require_subcommand(1);
  int p_n = 3, p_grid = 0;
  std::string p_forest, p_perm;
  auto* p_matrix = leaf(pairing, "matrix", "dual-basis pairing matrix and its exact determinant");
  p_matrix->add_option("--n", p_n, "number of disks")->required();
  set(p_matrix, "pairing matrix", [&] {
    params = {{"n", p_n}};
    const auto m = dual_basis_matrix(p_n);
    const BigInt det = exact_determinant(m.entries);
    Outcome o;
    o.result = to_json(m);
    o.result["determinant"] = det.str();
    o.csv = to_csv(m);
    o.passed = abs(det) == 1;
    o.summary = std::to_string(m.rows.size()) + "x" + std::to_string(m.cols.size()) + ", det = " + det.str();
    return o;
  });
  auto* p_expand = leaf(pairing, "expand", "expand the dual element of a forest over sigma o q_n");
  p_expand->add_option("--n", p_n, "number of vertices")->required();
  p_expand->add_option("--forest", p_forest, "edges such as 1-2,1-3")->required();
  set(p_expand, "pairing expand", [&] {
    params = {{"n", p_n}, {"forest", p_forest}};
    const auto g = parse_forest(p_n, p_forest);
    const auto e = dual_expansion(g);
    // G* = sum a sign(tau) (tau o q_n) pairs to 1 with g and 0 with the other forests.
    bool ok = true;
    for (const auto& h : enumerate_forests(p_n, p_n - 1)) {
      std::int64_t s = 0;
      for (const auto& [sigma, c] : e) s += c * sigma.sign() * pairing_forest_qn(h, sigma);
      ok = ok && s == (h == g ? 1 : 0);
    }
    json terms = json::array();
    for (const auto& [sigma, c] : e) terms.push_back({{"sigma", sigma.images()}, {"coeff", c}});
    Outcome o;
    o.result = {{"forest", to_json(g)}, {"terms", terms}, {"dual_check", ok}};
    o.passed = ok;
    o.summary = std::to_string(e.size()) + " terms, dual check " + (ok ? "ok" : "FAILED");
    return o;
  });
  auto* p_oracle = leaf(pairing, "oracle", "numeric degree of the angle map on sigma o q_n vs the exact pairing");
  p_oracle->add_option("--n", p_n, "number of disks")->required();
  p_oracle->add_option("--forest", p_forest, "edges such as 1-2,1-3 (omit for all forests)");
  p_oracle->add_option("--perm", p_perm, "images of 1..n such as 1,3,2 (omit for all)");
  p_oracle->add_option("--grid", p_grid, "torus grid per axis (default by n)");
  set(p_oracle, "pairing oracle", [&] {
    const int grid = p_grid > 0 ? p_grid : default_qn_grid(p_n);
    params = {{"n", p_n}, {"forest", p_forest}, {"perm", p_perm}, {"grid", grid}};
    std::vector<OrderedForest> gs = p_forest.empty() ? enumerate_forests(p_n, p_n - 1)
                                                     : std::vector<OrderedForest>{parse_forest(p_n, p_forest)};
    std::vector<Permutation> ss = p_perm.empty() ? permutations_fixing_one(p_n)
                                                 : std::vector<Permutation>{Permutation(parse_ints(p_perm))};
    json rows = json::array();
    int bad = 0;
    for (const auto& g : gs) {
      for (const auto& s : ss) {
        const int num = numeric_degree_oracle(g, s, grid);
        const int ex = pairing_forest_qn(g, s);
        bad += num != ex;
        rows.push_back({{"forest", g.to_string()}, {"sigma", s.images()}, {"degree", num}, {"pairing", ex}});
      }
    }
    Outcome o;
    o.result = {{"grid", grid}, {"cases", rows}, {"mismatches", bad}};
    o.passed = bad == 0;
    o.summary = std::to_string(rows.size()) + " cases, " + std::to_string(bad) + " mismatches";
    return o;
  });

  // --- geometry ------------------------------------------------------------------
  auto* geometry = app.add_subcommand("geometry", "explicit configurations and radius bounds");
  geometry->require_subcommand(1);
  int g_n = 3;
  std::string g_angles, g_radii, g_subset, g_x, g_y;
  double g_r = 0.1;
  auto* g_ell = leaf(geometry, "ell", "d_n and the spinning segment length 4/d_n");
  g_ell->add_option("--n", g_n, "number of segments")->required();
  set(g_ell, "geometry ell", [&] {
    params = {{"n", g_n}};
    if (g_n < 1) throw UsageError("--n must be >= 1");
    Outcome o;
    o.result = {{"n", g_n}, {"d", d_of(g_n)}, {"ell", ell(g_n)}};
    o.summary = "d=" + fmt6(d_of(g_n)) + ", ell=" + fmt6(ell(g_n));
    return o;
  });
  auto* g_kn = leaf(geometry, "kn", "n segments of length ell_n at the given angles (turns)");
  g_kn->add_option("--angles", g_angles, "comma-separated angles in turns")->required();
  set(g_kn, "geometry kn", [&] {
    params = {{"angles", g_angles}};
    const auto c = build_kn(parse_doubles(g_angles));
    Outcome o;
    o.result = to_json(c);
    o.passed = c.is_valid();
    o.summary = std::string(o.passed ? "valid" : "INVALID") + ", clearance " + fmt6(c.clearance());
    o.svg = svg_of(c);
    return o;
  });
  auto* g_qn = leaf(geometry, "qn", "n disks of radius 1/n driven by n-1 angles (turns)");
  g_qn->add_option("--angles", g_angles, "comma-separated angles in turns")->required();
  set(g_qn, "geometry qn", [&] {
    params = {{"angles", g_angles}};
    const auto c = build_qn(parse_doubles(g_angles));
    const double t = tau(c.centers);
    Outcome o;
    o.result = to_json(c);
    o.result["tau"] = t;
    o.passed = c.is_valid() && std::abs(t - c.radius) <= 1e-9;
    o.summary = "n=" + std::to_string(c.size()) + ", tau=" + fmt6(t);
    o.svg = svg_of(c);
    return o;
  });
  auto* g_pack = leaf(geometry, "pack", "greedy packing of disks with the given radii");
  g_pack->add_option("--radii", g_radii, "comma-separated radii (sorted descending internally)")->required();
  set(g_pack, "geometry pack", [&] {
    params = {{"radii", g_radii}};
    auto radii = parse_doubles(g_radii);
    std::sort(radii.rbegin(), radii.rend());
    const auto lay = pack_disks(radii);
    json centers = json::array();
    for (const Vec2& c : lay.centers) centers.push_back({c.x, c.y});
    Outcome o;
    o.result = {{"radii", lay.radii}, {"centers", centers}, {"R", lay.R}, {"sum_sq", lay.sum_sq()},
                {"bound_ok", lay.R * lay.R <= 36 * lay.sum_sq()}};
    o.summary = "R=" + fmt6(lay.R) + ", R^2/sum r^2=" + fmt6(lay.R * lay.R / lay.sum_sq());
    // Draw scaled into the unit disk.
    Svg svg;
    svg.circle({0, 0}, 1, kThin);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      svg.circle(lay.centers[i] / lay.R, radii[i] / lay.R, "fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"0.004\"");
    }
    o.svg = svg.str();
    return o;
  });
  auto* g_embed = leaf(geometry, "embed", "half-scaled inclusion: subset into the left half, the rest to the right");
  g_embed->add_option("--n", g_n, "total number of disks")->required();
  g_embed->add_option("--subset", g_subset, "labels sent to the left half, e.g. 1,3")->required();
  g_embed->add_option("--r", g_r, "radius of the result")->required();
  g_embed->add_option("--x", g_x, "disk configuration JSON for the left piece (default q_m at zero angles)");
  g_embed->add_option("--y", g_y, "disk configuration JSON for the right piece (default q_m at zero angles)");
  set(g_embed, "geometry embed", [&] {
    params = {{"n", g_n}, {"subset", g_subset}, {"r", g_r}, {"x", g_x}, {"y", g_y}};
    const auto subset = parse_ints(g_subset);
    const int m = static_cast<int>(subset.size());
    auto piece = [](const std::string& path, int count) {
      if (!path.empty()) return disk_config_from_json(read_json_file(path)).centers;
      if (count == 0) return std::vector<Vec2>{};
      return build_qn(std::vector<double>(static_cast<std::size_t>(count - 1), 0.0)).centers;
    };
    const auto c = half_inclusion(piece(g_x, m), piece(g_y, g_n - m), subset, g_n, g_r);
    Outcome o;
    o.result = to_json(c);
    o.passed = c.is_valid();
    o.summary = std::string(o.passed ? "valid" : "INVALID") + ", clearance " + fmt6(c.clearance());
    o.svg = svg_of(c);
    return o;
  });

  // --- balance -----------------------------------------------------------------
  auto* balance = app.add_subcommand("balance", "stress graphs, balance tests, and searches");
  balance->require_subcommand(1);
  std::string b_config, b_configs;
  int b_n = 3;
  double b_r = 0.3;
  auto* b_check = leaf(balance, "check", "contact graph and balance test of a disk configuration");
  b_check->add_option("--config", b_config, "disk configuration JSON")->required();
  set(b_check, "balance check", [&] {
    const double tol = common.tol > 0 ? common.tol : kContactTol;
    params = {{"config", b_config}, {"tol", tol}};
    const auto c = disk_config_from_json(read_json_file(b_config));
    if (!c.is_valid(tol)) throw UsageError("configuration is not valid (overlaps or leaves the disk)");
    const auto g = contact_graph(c, tol);
    const auto b = is_balanced(g);
    Outcome o;
    o.result = balance_report(c, g, b);
    o.summary = std::string(b.balanced ? "balanced" : "not balanced") + ", " + std::to_string(g.edges.size()) +
                " contacts";
    o.svg = svg_of(g);
    return o;
  });
  auto* b_search = leaf(balance, "search", "multistart search for balanced configurations at radius r");
  b_search->add_option("--n", b_n, "number of disks")->required();
  b_search->add_option("--r", b_r, "radius")->required();
  set(b_search, "balance search", [&] {
    SearchOptions opt;
    opt.seed = common.seed;
    if (common.trials > 0) opt.trials = common.trials;
    if (common.tol > 0) opt.radius_tol = common.tol;
    params = {{"n", b_n}, {"r", b_r}, {"trials", opt.trials}, {"radius_tol", opt.radius_tol}};
    const auto hits = search_balanced(b_n, b_r, opt);
    json list = json::array();
    for (const auto& h : hits) {
      list.push_back({{"trial", h.trial}, {"family", h.family}, {"config", to_json(h.config)},
                      {"weights", h.balance.weights}, {"residual", h.balance.residual}});
    }
    Outcome o;
    o.result = {{"hits", list}, {"note", "an empty result is search evidence, not a proof"}};
    o.summary = std::to_string(hits.size()) + " balanced configurations found";
    if (!hits.empty()) o.svg = svg_of(contact_graph(hits.front().config, opt.contact_tol));
    return o;
  });
  auto* b_classify = leaf(balance, "classify", "label balanced configurations at small radius");
  b_classify->add_option("--n", b_n, "number of disks")->required();
  b_classify->add_option("--configs", b_configs, "JSON array of disk configurations (default: search at --r)");
  b_classify->add_option("--r", b_r, "radius to search when no configurations are given");
  set(b_classify, "balance classify", [&] {
    const double tol = common.tol > 0 ? common.tol : kContactTol;
    std::vector<DiskConfig> configs;
    if (!b_configs.empty()) {
      for (const auto& j : read_json_file(b_configs)) configs.push_back(disk_config_from_json(j));
      params = {{"n", b_n}, {"configs", b_configs}, {"tol", tol}};
    } else {
      SearchOptions opt;
      opt.seed = common.seed;
      if (common.trials > 0) opt.trials = common.trials;
      for (const auto& h : search_balanced(b_n, b_r, opt)) configs.push_back(h.config);
      params = {{"n", b_n}, {"r", b_r}, {"trials", opt.trials}, {"tol", tol}};
    }
    const auto cls = classify_small_radius(b_n, configs, tol);
    json list = json::array();
    int violations = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      violations += cls[i].label == "violation";
      list.push_back({{"config", to_json(configs[i])}, {"label", cls[i].label}, {"detail", cls[i].detail}});
    }
    Outcome o;
    o.result = {{"threshold", 3.0 / (2.0 * b_n + 3.0)}, {"classified", list}};
    o.passed = violations == 0;
    o.summary = std::to_string(cls.size()) + " classified, " + std::to_string(violations) + " violations";
    return o;
  });

  // --- segments ----------------------------------------------------------------
  auto* segments = app.add_subcommand("segments", "segment thresholds and hourglass traps");
  segments->require_subcommand(1);
  double s_r = 1.5, s_delta = 0.2, s_eps = 0.1, s_hx = 0.005, s_htheta = 1.0;
  std::size_t s_states = 2'000'000;
  auto* s_rcrit = leaf(segments, "rcrit2", "largest length of two perpendicular segments in the disk");
  set(s_rcrit, "segments rcrit2", [&] {
    PerpendicularOptions opt;
    opt.seed = common.seed;
    if (common.trials > 0) opt.random_starts = common.trials;
    const double tol = common.tol > 0 ? common.tol : 1e-6;
    params = {{"tol", tol}, {"random_starts", opt.random_starts}};
    const double r = max_perpendicular_length(tol, opt);
    Outcome o;
    o.result = {{"r_crit", r}, {"tol", tol}};
    o.summary = "r_crit=" + fmt6(r);
    return o;
  });
  auto* s_hour = leaf(segments, "hourglass", "hourglass obstacle parameters for the strip |y| < 1");
  s_hour->add_option("--r", s_r, "segment length (> 1)")->required();
  s_hour->add_option("--delta", s_delta, "confinement width")->required();
  set(s_hour, "segments hourglass", [&] {
    params = {{"r", s_r}, {"delta", s_delta}};
    const auto p = hourglass_params(s_r, s_delta);
    Outcome o;
    o.result = to_json(p);
    o.passed = p.valid();
    o.summary = "a=" + fmt6(p.a) + ", b=" + fmt6(p.b) + ", " + std::to_string(p.S.size()) + " obstacles";
    o.svg = svg_of(p);
    return o;
  });
  auto* s_trap = leaf(segments, "trap", "certify an hourglass trap by pose-grid search");
  s_trap->add_option("--r", s_r, "segment length (> 1)")->required();
  s_trap->add_option("--delta", s_delta, "confinement width")->required();
  s_trap->add_option("--hx", s_hx, "translation step")->capture_default_str();
  s_trap->add_option("--htheta", s_htheta, "rotation step in degrees (divides 180)")->capture_default_str();
  bool s_bare = false;
  s_trap->add_flag("--no-obstacles", s_bare, "control run with the obstacle set removed");
  set(s_trap, "segments trap", [&] {
    params = {{"r", s_r}, {"delta", s_delta}, {"hx", s_hx}, {"htheta_deg", s_htheta}, {"no_obstacles", s_bare}};
    auto p = hourglass_params(s_r, s_delta);
    if (s_bare) p.S.clear();
    PoseGrid grid;
    grid.hx = grid.hy = s_hx;
    grid.htheta_deg = s_htheta;
    const auto cert = trap_certify(p, grid);
    Outcome o;
    o.result = {{"params", to_json(p)}, {"certificate", to_json(cert)}};
    o.passed = s_bare ? cert.reached_horizontal : cert.certified;
    o.summary = cert.reason;
    o.svg = svg_of(p);
    return o;
  });
  auto* s_box = leaf(segments, "midpointbox", "three strip traps confining vertical segments near [-eps, eps]^2");
  s_box->add_option("--eps", s_eps, "box half-width, 0 < eps < 1/4")->required();
  s_box->add_option("--max-states", s_states, "pose budget per strip")->capture_default_str();
  set(s_box, "segments midpointbox", [&] {
    params = {{"eps", s_eps}, {"max_states", s_states}};
    const auto box = midpoint_box_sets(s_eps, true, s_states);
    json strips = json::array();
    std::string summary;
    for (const auto& st : box.strips) {
      strips.push_back({{"name", st.name}, {"y_lo", st.y_lo}, {"y_hi", st.y_hi}, {"r", st.r}, {"delta", st.delta},
                        {"obstacles", st.S.size()}, {"start_x", st.start_x}, {"certificate", to_json(st.certificate)}});
      summary += (summary.empty() ? "" : "; ") + st.name + ": " + st.certificate.reason;
    }
    Outcome o;
    o.result = {{"eps", box.eps}, {"eps1", box.eps1}, {"eps2", box.eps2}, {"r", box.r}, {"obstacles", box.S.size()},
                {"strips", strips}};
    o.passed = box.all_certified();
    o.summary = summary;
    Svg svg;
    svg.circle({0, 0}, 1, kThin);
    svg.rect(-s_eps, -s_eps, s_eps, s_eps, "fill=\"#fee8c8\" stroke=\"#e34a33\" stroke-width=\"0.004\"");
    for (const Vec2& q : box.S) svg.circle(q, 0.003, "fill=\"black\"");
    o.svg = svg.str();
    return o;
  });

  // --- verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "acceptance checks");
  verify->require_subcommand(1);
  auto* v_all = leaf(verify, "all", "run every acceptance criterion at full size");
  set(v_all, "verify all", [&] {
    params = json::object();
    Outcome o;
    json list = json::array();
    int failed = 0;
    for (const auto& c : acceptance::criteria()) {
      const auto r = acceptance::run(c);
      std::cerr << r.line() << std::endl;
      failed += !r.passed;
      list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    o.result = {{"criteria", list}};
    o.passed = failed == 0;
    o.summary = std::to_string(list.size() - failed) + "/" + std::to_string(list.size()) + " criteria passed";
    return o;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!action) {
    std::cerr << app.help();
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // Resolution and infeasibility errors are checked failures, not usage.
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json outputs = json::array();
  try {
    if (!common.out.empty()) {
      if (ends_with(common.out, ".csv")) {
        if (out.csv.empty()) throw UsageError(command + " has no CSV form");
        write_atomic(common.out, out.csv);
      } else {
        json artifact = {{"command", command}, {"parameters", params}, {"seed", common.seed},
                         {"passed", out.passed}, {"result", out.result}};
        write_atomic(common.out, artifact.dump(2) + "\n");
      }
      outputs.push_back(common.out);
    }
    if (!common.svg.empty()) {
      if (out.svg.empty()) throw UsageError(command + " has no SVG form");
      write_atomic(common.svg, out.svg);
      outputs.push_back(common.svg);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  json report = {{"command", command}, {"parameters", params},   {"seed", common.seed}, {"outputs", outputs},
                 {"wall_time_s", wall}, {"passed", out.passed}, {"summary", out.summary}};
  if (common.out.empty()) report["result"] = out.result;
  std::cout << report.dump(2) << std::endl;
  return out.passed ? 0 : 1;
}
