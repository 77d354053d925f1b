#pragma once
// The ten acceptance checks, shared by the acceptance binary and `verify all`.
// Every check runs at its full size; the wall time limit is part of the check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "confspace/balance.hpp"
#include "confspace/degree.hpp"
#include "confspace/exact.hpp"
#include "confspace/forests.hpp"
#include "confspace/geometry.hpp"
#include "confspace/packing.hpp"
#include "confspace/pairing.hpp"
#include "confspace/search.hpp"
#include "confspace/segments.hpp"
#include "confspace/trap.hpp"

namespace confspace::acceptance {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  double limit_s = 0;
  std::function<Outcome()> run;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_s = 0;
  std::string detail;

  std::string line() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.2fs / %.0fs", seconds, limit_s);
    return std::string(passed ? "PASS" : "FAIL") + " [" + std::to_string(id) + "] " + name + " (" + buf + "): " +
           detail;
  }
};

inline Outcome dual_basis_unimodular() {
  std::ostringstream os;
  bool ok = true;
  const std::size_t sizes[] = {1, 2, 6, 24, 120};
  for (int n = 2; n <= 6; ++n) {
    const auto m = dual_basis_matrix(n);
    const BigInt det = exact_determinant(m.entries);
    const bool good = m.rows.size() == sizes[n - 2] && m.cols.size() == sizes[n - 2] && abs(det) == 1;
    ok = ok && good;
    os << "n=" << n << " " << m.rows.size() << "x" << m.cols.size() << " det=" << det << (n < 6 ? "; " : "");
  }
  return {ok, os.str()};
}

inline Outcome oracle_agreement() {
  int cases = 0, mismatches = 0;
  std::string first;
  for (int n : {3, 4}) {
    for (const auto& g : enumerate_forests(n, n - 1)) {
      for (const auto& s : permutations_fixing_one(n)) {
        ++cases;
        const int num = numeric_degree_oracle(g, s, default_qn_grid(n));
        const int exact = pairing_forest_qn(g, s);
        if (num != exact) {
          if (mismatches++ == 0) {
            first = g.to_string() + " " + s.to_string() + ": degree " + std::to_string(num) + " vs " +
                    std::to_string(exact);
          }
        }
      }
    }
  }
  std::string d = std::to_string(cases) + " pairs, " + std::to_string(mismatches) + " mismatches";
  if (!first.empty()) d += " (first " + first + ")";
  return {cases == 40 && mismatches == 0, d};
}

inline Outcome length_recursion() {
  // Exact first values in rationals: d_1 = 2, d_2 = 5/2.
  const Rational d1 = 2, d2 = d1 + 1 / d1;
  const bool exact_ok = 4 / d1 == 2 && 4 / d2 == Rational(8, 5) && ell(1) == 2.0 && ell(2) == 1.6;

  bool bounds_ok = true;
  int worst_n = 0;
  double d = 2.0;
  for (int n = 1; n <= 1'000'000; ++n) {
    if (n > 1) d += 1.0 / d;
    const double d2n = d * d;
    if (d2n < 2.0 * (n + 1) || d2n > 3.0 * (n + 1)) {
      bounds_ok = false;
      worst_n = n;
      break;
    }
  }

  double closure = 0;
  const auto seq = d_sequence(1000);
  for (int n = 2; n <= 1000; ++n) {
    const double rho = seq[n - 1] / seq[n];
    closure = std::max(closure, std::abs(4.0 / seq[n] - 4.0 * std::sqrt(rho * (1 - rho))));
  }
  std::ostringstream os;
  os << "l1=" << ell(1) << " l2=" << ell(2) << " bounds to 1e6 " << (bounds_ok ? "hold" : "fail at n=" + std::to_string(worst_n))
     << ", closure max err " << closure;
  return {exact_ok && bounds_ok && closure < 1e-10, os.str()};
}

inline Outcome perpendicular_threshold() {
  const double r = max_perpendicular_length(1e-6);
  char buf[64];
  std::snprintf(buf, sizeof buf, "max length %.7f", r);
  return {std::abs(r - 1.6) <= 1e-4, buf};
}

inline Outcome kernel_ladder() {
  const std::array<std::array<int, 4>, 4> want{{{0, 0, 0, 0}, {0, 0, 6, 6}, {0, 5, 11, 6}, {1, 6, 11, 6}}};
  const double radii[] = {0.2, 0.3, 0.4, 0.5};
  bool ok = true;
  std::ostringstream os;
  for (int k = 0; k < 4; ++k) {
    const auto got = kernel_ladder_n4(radii[k]);
    ok = ok && got == want[k];
    os << "r=" << radii[k] << " (" << got[0] << "," << got[1] << "," << got[2] << "," << got[3] << ")"
       << (k < 3 ? " " : "");
  }
  return {ok, os.str()};
}

inline Outcome balance_witnesses() {
  bool ok = true;
  double worst = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto c = diameter_config(n, 0.1 * n);
    const auto b = is_balanced(contact_graph(c));
    ok = ok && b.balanced && b.residual < 1e-8;
    worst = std::max(worst, b.residual);
  }
  const auto sq = is_balanced(contact_graph(square_config(0.05)));
  ok = ok && sq.balanced;

  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int empty = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Vec2> centers;
    while (static_cast<int>(centers.size()) < n) {
      const Vec2 p{u(rng), u(rng)};
      if (norm(p) < 0.95) centers.push_back(p);
    }
    // Half the supremal radius leaves every constraint slack.
    const DiskConfig c{centers, 0.5 * tau(centers)};
    if (contact_graph(c).edges.empty()) ++empty;
  }
  ok = ok && empty == 100;
  std::ostringstream os;
  os << "diameters n=2..8 balanced (max residual " << worst << "), square " << (sq.balanced ? "balanced" : "NOT balanced")
     << ", " << empty << "/100 contact-free graphs empty";
  return {ok, os.str()};
}

inline Outcome balance_nonexistence() {
  std::ostringstream os;
  bool ok = true;
  for (int n : {3, 4, 5}) {
    SearchOptions opt;
    opt.trials = 10'000;
    opt.seed = 0;
    const auto hits = search_balanced(n, 1.0 / n - 0.01, opt);
    ok = ok && hits.empty();
    os << "n=" << n << ": " << hits.size() << " hits" << (n < 5 ? ", " : "");
  }
  os << " (search evidence, not a proof)";
  return {ok, os.str()};
}

inline Outcome packing_bound() {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_ratio = 0;
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const int k = 1 + static_cast<int>(rng() % 30);
    std::vector<double> radii(k);
    // Mix of scales: some multisets span three orders of magnitude.
    for (double& r : radii) r = std::pow(10.0, -3.0 * u(rng));
    std::sort(radii.rbegin(), radii.rend());
    const auto lay = pack_disks(radii);
    bool good = lay.R * lay.R <= 36 * lay.sum_sq();
    for (int i = 0; i < k; ++i) {
      good = good && norm(lay.centers[i]) + radii[i] <= lay.R * (1 + 1e-12);
      for (int j = 0; j < i; ++j) good = good && distance(lay.centers[i], lay.centers[j]) >= (radii[i] + radii[j]) * (1 - 1e-12);
    }
    if (!good) ++bad;
    worst_ratio = std::max(worst_ratio, lay.R * lay.R / lay.sum_sq());
  }
  std::ostringstream os;
  os << "100 multisets, " << bad << " failures, worst R^2/sum r^2 = " << worst_ratio;
  return {bad == 0, os.str()};
}

inline Outcome trap_certification() {
  const auto p = hourglass_params(1.5, 0.2);
  const bool inequalities = p.width_ok() && p.diagonal_ok() && p.length_ok();
  const auto cert = trap_certify(p);
  TrapParams bare = p;
  bare.S.clear();
  const auto control = trap_certify(bare);
  std::ostringstream os;
  os << "inequalities " << (inequalities ? "hold" : "fail") << "; trap: " << cert.reason << " (" << cert.states
     << " poses, x in [" << cert.x_min << ", " << cert.x_max << "], turn " << cert.theta_min_deg << ".."
     << cert.theta_max_deg << " deg); control without obstacles: " << control.reason;
  return {inequalities && cert.certified && !cert.reached_horizontal && control.reached_horizontal, os.str()};
}

inline Outcome construction_validity() {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr double kRecoverTol = 1e-12;
  int bad_kn = 0, bad_qn = 0;
  double worst_rec = 0, worst_tau = 0;
  for (int t = 0; t < 10'000; ++t) {
    const int n = 1 + t % 5;
    std::vector<double> a(n);
    for (double& x : a) x = u(rng);
    const auto c = build_kn(a);
    bool good = c.is_valid();
    for (int i = 0; i < n; ++i) {
      const Segment s = c.segment(i);
      // Segments are unoriented; recover the angle modulo a half turn.
      const double got = turns_of(s.q - s.p);
      const double err = std::abs(wrap_signed_turns(2 * (got - a[i]))) / 2;
      worst_rec = std::max(worst_rec, err);
      good = good && err <= kRecoverTol;
    }
    if (!good) ++bad_kn;
  }
  for (int t = 0; t < 10'000; ++t) {
    const int n = 2 + t % 7;
    std::vector<double> a(n - 1);
    for (double& x : a) x = u(rng);
    const auto c = build_qn(a);
    bool good = c.is_valid();
    const auto back = recover_qn_angles(c.centers);
    for (int i = 0; i < n - 1; ++i) {
      const double err = std::abs(wrap_signed_turns(back[i] - a[i]));
      worst_rec = std::max(worst_rec, err);
      good = good && err <= kRecoverTol;
    }
    const double te = std::abs(tau(c.centers) - 1.0 / n);
    worst_tau = std::max(worst_tau, te);
    good = good && te <= 1e-9;
    if (!good) ++bad_qn;
  }
  std::ostringstream os;
  os << "k_n failures " << bad_kn << "/10000, q_n failures " << bad_qn << "/10000, max angle error " << worst_rec
     << " turns, max |tau - 1/n| " << worst_tau;
  return {bad_kn == 0 && bad_qn == 0, os.str()};
}

inline std::vector<Criterion> criteria() {
  return {
      {1, "dual-basis matrices are unimodular, n = 2..6", 10, dual_basis_unimodular},
      {2, "numeric degree matches the forest pairing, n = 3, 4", 60, oracle_agreement},
      {3, "length recursion values, bounds and closure", 5, length_recursion},
      {4, "perpendicular segment threshold is 1.6", 60, perpendicular_threshold},
      {5, "n = 4 kernel ladder", 1, kernel_ladder},
      {6, "balance witnesses and contact-free controls", 10, balance_witnesses},
      {7, "no balanced configurations just below 1/n, n = 3, 4, 5", 300, balance_nonexistence},
      {8, "greedy packing bound R^2 <= 36 sum r^2", 30, packing_bound},
      {9, "hourglass trap certification and control", 300, trap_certification},
      {10, "k_n and q_n constructions are valid", 60, construction_validity},
  };
}

inline Result run(const Criterion& c) {
  Result r{c.id, c.name, false, 0, c.limit_s, {}};
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = o.ok && r.seconds < c.limit_s;
  r.detail = o.detail;
  if (o.ok && !r.passed) r.detail += " [over time limit]";
  return r;
}

}  // namespace confspace::acceptance
