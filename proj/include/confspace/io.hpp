#pragma once
// JSON, CSV and SVG emitters. JSON doubles use the shortest representation
// that round-trips exactly.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "confspace/balance.hpp"
#include "confspace/forests.hpp"
#include "confspace/geometry.hpp"
#include "confspace/pairing.hpp"
#include "confspace/trap.hpp"

namespace confspace {

using json = nlohmann::ordered_json;

// --- forests ---------------------------------------------------------------

inline json to_json(const OrderedForest& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to});
  return {{"n", g.n()}, {"edges", edges}};
}

inline OrderedForest forest_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return OrderedForest(j.at("n").get<int>(), std::move(edges));
}

inline json to_json(const CohomClass& c) {
  json terms = json::array();
  for (const auto& [g, k] : c.terms()) terms.push_back({{"forest", to_json(g)}, {"coeff", k}});
  return {{"degree", c.degree()}, {"terms", terms}};
}

inline CohomClass class_from_json(const json& j) {
  const auto& terms = j.at("terms");
  if (terms.empty()) throw std::invalid_argument("class JSON needs at least one term to fix n");
  const OrderedForest first = forest_from_json(terms.at(0).at("forest"));
  CohomClass c(first.n(), j.at("degree").get<int>());
  for (const auto& t : terms) c.add(forest_from_json(t.at("forest")), t.at("coeff").get<std::int64_t>());
  return c;
}

// --- pairing matrices --------------------------------------------------------

inline json to_json(const PairingMatrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& g : m.rows) rows.push_back(g.to_string());
  for (const auto& p : m.cols) cols.push_back(p.images());
  for (const auto& r : m.entries) entries.push_back(r);
  return {{"n", m.n}, {"rows", rows}, {"columns", cols}, {"entries", entries}};
}

inline std::string to_csv(const PairingMatrix& m) {
  std::ostringstream os;
  os << "forest";
  for (const auto& p : m.cols) os << ',' << p.to_string();
  os << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    os << '"' << m.rows[i].to_string() << '"';
    for (auto v : m.entries[i]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

// --- configurations ----------------------------------------------------------

inline json to_json(const DiskConfig& c) {
  json items = json::array();
  for (const Vec2& p : c.centers) items.push_back({{"center", {p.x, p.y}}, {"angle", nullptr}});
  return {{"kind", "disk"}, {"radius_or_length", c.radius}, {"items", items}};
}

inline json to_json(const SegConfig& c) {
  json items = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    items.push_back({{"center", {c.centers[i].x, c.centers[i].y}}, {"angle", c.angles[i]}});
  }
  return {{"kind", "segment"}, {"radius_or_length", c.length}, {"items", items}};
}

inline DiskConfig disk_config_from_json(const json& j) {
  if (j.at("kind") != "disk") throw std::invalid_argument("expected a disk configuration");
  DiskConfig c{{}, j.at("radius_or_length").get<double>()};
  for (const auto& it : j.at("items")) c.centers.push_back({it.at("center").at(0).get<double>(), it.at("center").at(1).get<double>()});
  return c;
}

inline SegConfig seg_config_from_json(const json& j) {
  if (j.at("kind") != "segment") throw std::invalid_argument("expected a segment configuration");
  SegConfig c{{}, {}, j.at("radius_or_length").get<double>()};
  for (const auto& it : j.at("items")) {
    c.centers.push_back({it.at("center").at(0).get<double>(), it.at("center").at(1).get<double>()});
    c.angles.push_back(it.at("angle").get<double>());
  }
  return c;
}

inline json to_json(const StressGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) {
    if (e.kind == StressEdge::Kind::Internal) {
      edges.push_back({{"kind", "internal"}, {"i", e.i + 1}, {"j", e.j + 1}});
    } else {
      edges.push_back({{"kind", "boundary"}, {"i", e.i + 1}, {"point", {g.boundary[e.j].x, g.boundary[e.j].y}}});
    }
  }
  return edges;
}

inline json balance_report(const DiskConfig& c, const StressGraph& g, const BalanceResult& b) {
  json residual = std::isfinite(b.residual) ? json(b.residual) : json(nullptr);
  return {{"config", to_json(c)}, {"edges", to_json(g)}, {"balanced", b.balanced}, {"weights", b.weights},
          {"residual", residual}};
}

inline json to_json(const TrapParams& p) {
  json pts = json::array();
  for (const Vec2& s : p.S) pts.push_back({s.x, s.y});
  return {{"a", p.a}, {"b", p.b}, {"r", p.r}, {"delta", p.delta},
          {"hourglass_width", p.hourglass_width()}, {"diagonal", p.diagonal()}, {"trap_length", p.trap_length()},
          {"width_ok", p.width_ok()}, {"diagonal_ok", p.diagonal_ok()}, {"length_ok", p.length_ok()},
          {"S", pts}};
}

inline json to_json(const TrapCertificate& c) {
  auto finite = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  return {{"certified", c.certified}, {"reached_horizontal", c.reached_horizontal}, {"hit_window", c.hit_window},
          {"budget_exceeded", c.budget_exceeded}, {"states", c.states}, {"x_min", finite(c.x_min)},
          {"x_max", finite(c.x_max)}, {"theta_min_deg", c.theta_min_deg}, {"theta_max_deg", c.theta_max_deg},
          {"reason", c.reason}};
}

// --- files -------------------------------------------------------------------

/// Writes through a temporary file and renames, so readers never see a
/// partially written artifact.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << content;
    if (!f) throw std::runtime_error("write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

// --- SVG -----------------------------------------------------------------------

class Svg {
 public:
  explicit Svg(double half_extent = 1.1, int pixels = 480) : ext_(half_extent), px_(pixels) {}

  Svg& circle(Vec2 c, double r, const std::string& style) {
    body_ << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(-c.y) << "\" r=\"" << fmt(r) << "\" " << style
          << "/>\n";
    return *this;
  }
  Svg& line(Vec2 a, Vec2 b, const std::string& style) {
    body_ << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(-a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\""
          << fmt(-b.y) << "\" " << style << "/>\n";
    return *this;
  }
  Svg& text(Vec2 at, const std::string& s, double size = 0.06) {
    body_ << "<text x=\"" << fmt(at.x) << "\" y=\"" << fmt(-at.y) << "\" font-size=\"" << fmt(size)
          << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << s << "</text>\n";
    return *this;
  }
  Svg& rect(double x0, double y0, double x1, double y1, const std::string& style) {
    body_ << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(-y1) << "\" width=\"" << fmt(x1 - x0) << "\" height=\""
          << fmt(y1 - y0) << "\" " << style << "/>\n";
    return *this;
  }

  std::string str() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_ << "\" height=\"" << px_ << "\" viewBox=\""
       << fmt(-ext_) << ' ' << fmt(-ext_) << ' ' << fmt(2 * ext_) << ' ' << fmt(2 * ext_) << "\">\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  static std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
  }
  double ext_;
  int px_;
  std::ostringstream body_;
};

inline const char* kThin = "fill=\"none\" stroke=\"black\" stroke-width=\"0.006\"";

inline std::string svg_of(const DiskConfig& c) {
  Svg svg;
  svg.circle({0, 0}, 1, kThin);
  for (std::size_t i = 0; i < c.size(); ++i) {
    svg.circle(c.centers[i], c.radius, "fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"0.006\"");
    svg.text(c.centers[i], std::to_string(i + 1), std::max(0.03, 0.6 * c.radius));
  }
  return svg.str();
}

inline std::string svg_of(const SegConfig& c) {
  Svg svg;
  svg.circle({0, 0}, 1, kThin);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Segment s = c.segment(i);
    svg.line(s.p, s.q, "stroke=\"#c0392b\" stroke-width=\"0.015\"");
    svg.text(c.centers[i] + 0.05 * perp(unit_from_turns(c.angles[i])), std::to_string(i + 1));
  }
  return svg.str();
}

inline std::string svg_of(const StressGraph& g) {
  Svg svg;
  svg.circle({0, 0}, 1, kThin);
  for (const Vec2& p : g.internal) svg.circle(p, g.radius, "fill=\"none\" stroke=\"#999\" stroke-width=\"0.004\"");
  for (const auto& e : g.edges) {
    const Vec2 a = g.internal[e.i];
    const Vec2 b = e.kind == StressEdge::Kind::Internal ? g.internal[e.j] : g.boundary[e.j];
    svg.line(a, b, "stroke=\"#2c7fb8\" stroke-width=\"0.012\"");
  }
  for (const Vec2& y : g.boundary) svg.circle(y, 0.02, "fill=\"#d95f0e\"");
  for (const Vec2& p : g.internal) svg.circle(p, 0.015, "fill=\"black\"");
  return svg.str();
}

/// Strip, obstacles, and the start segment of an hourglass trap.
inline std::string svg_of(const TrapParams& p) {
  Svg svg(std::max(1.2, p.r / 2 + 2 * p.delta + 0.1));
  const double w = p.r / 2 + 2 * p.delta;
  svg.rect(-w, -1, w, 1, "fill=\"#f7f7f7\" stroke=\"black\" stroke-width=\"0.006\"");
  svg.rect(-p.delta / 2, -1, p.delta / 2, 1, "fill=\"#fee8c8\" stroke=\"none\"");
  const double q = p.ratio();
  svg.line({-q, -1}, {q, 1}, "stroke=\"#e34a33\" stroke-width=\"0.004\"");
  svg.line({q, -1}, {-q, 1}, "stroke=\"#e34a33\" stroke-width=\"0.004\"");
  for (const Vec2& s : p.S) {
    if (std::abs(s.x) <= w) svg.circle(s, 0.008, "fill=\"black\"");
  }
  svg.line({0, -p.r / 2}, {0, p.r / 2}, "stroke=\"#c0392b\" stroke-width=\"0.01\"");
  return svg.str();
}

}  // namespace confspace
