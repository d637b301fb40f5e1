// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-minkorder-cli>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "minkorder/causal_set.hpp"
#include "minkorder/cones.hpp"
#include "minkorder/hypersurface.hpp"
#include "minkorder/order.hpp"
#include "minkorder/random.hpp"
#include "minkorder/worldline.hpp"

using namespace minkorder;

namespace {

constexpr double kTimeLimitSeconds = 60.0;

struct Outcome {
  bool pass;
  std::string detail;
};

const OrderKind kKinds[] = {OrderKind::causal, OrderKind::subluminal, OrderKind::temporal};
const Direction kDirs[] = {Direction::forward, Direction::backward};

// The sprinkled sets of criteria 1-3: n in {1,2,3}, 200 events, 5 seeds.
std::vector<std::vector<Event>> sprinkled_sets() {
  std::vector<std::vector<Event>> sets;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) sets.push_back(sprinkle({200, n, {{0, 1}}, 100 * n + seed}));
  }
  return sets;
}

std::vector<double> random_unit(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  double len = 0;
  while (len < 1e-3) {
    len = 0;
    for (double& x : v) {
      x = rng.normal();
      len += x * x;
    }
    len = std::sqrt(len);
  }
  for (double& x : v) x /= len;
  return v;
}

PolyWorldLine random_polyline(Rng& rng, std::size_t n, double c) {
  const std::size_t segments = 1 + rng.below(6);
  std::vector<Event> vs;
  double t = rng.uniform(-1, 1);
  std::vector<double> x(n);
  for (double& xi : x) xi = rng.uniform(-1, 1);
  vs.emplace_back(t, x);
  for (std::size_t k = 0; k < segments; ++k) {
    const double dt = rng.uniform(0.2, 1.0);
    // One segment in four moves at exactly light speed.
    const double speed = rng.below(4) == 0 ? c : c * rng.uniform();
    const auto dir = random_unit(n, rng);
    for (std::size_t i = 0; i < n; ++i) x[i] += dir[i] * speed * dt;
    t += dt;
    vs.emplace_back(t, x);
  }
  return make_polyline(vs, c);
}

Hypersurface random_surface(Rng& rng, std::size_t n, double kc, double c) {
  const double k = kc / c;
  std::vector<Anchor> anchors;
  const std::size_t count = 1 + rng.below(8);
  for (std::size_t a = 0; a < count; ++a) {
    std::vector<double> x(n);
    for (double& xi : x) xi = rng.uniform(-2, 2);
    double h = rng.uniform(-0.5, 0.5);
    for (const Anchor& b : anchors) {
      double d = 0;
      for (std::size_t i = 0; i < n; ++i) d += (x[i] - b.x[i]) * (x[i] - b.x[i]);
      d = std::sqrt(d);
      h = std::clamp(h, b.h - k * d * (1 - 1e-9), b.h + k * d * (1 - 1e-9));
    }
    anchors.push_back({x, h});
  }
  return make_hypersurface(anchors, k, c);
}

// 1. Partial-order axioms of the reflexive closures over all triples.
Outcome order_axioms() {
  std::size_t sets = 0;
  std::size_t triples = 0;
  std::size_t violations = 0;
  for (const auto& ev : sprinkled_sets()) {
    const std::size_t m = ev.size();
    for (OrderKind k : kKinds) {
      for (Direction d : kDirs) {
        const OrderSpec spec{k, 1.0, d};
        std::vector<std::uint8_t> r(m * m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) r[i * m + j] = leq(spec, ev[i], ev[j]);
        for (std::size_t i = 0; i < m; ++i) {
          if (!r[i * m + i]) ++violations;
          for (std::size_t j = 0; j < m; ++j) {
            if (i != j && r[i * m + j] && r[j * m + i] && !(ev[i] == ev[j])) ++violations;
            if (!r[i * m + j]) {
              triples += m;
              continue;
            }
            for (std::size_t l = 0; l < m; ++l) {
              if (r[j * m + l] && !r[i * m + l]) ++violations;
            }
            triples += m;
          }
        }
        ++sets;
      }
    }
  }
  return {violations == 0, std::to_string(sets) + " relations, " + std::to_string(triples) +
                               " triples, " + std::to_string(violations) + " violations"};
}

// 2. Weakening equivalence and the sampled interval oracle.
Outcome weakening() {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (const auto& ev : sprinkled_sets()) {
    for (const Event& a : ev) {
      for (const Event& b : ev) {
        ++pairs;
        if (subluminal_via_weakening(a, b, 1.0) != leq(OrderSpec::subluminal(1.0), a, b)) ++mismatches;
      }
    }
  }

  // 50 timelike pairs and 50 exactly light-like pairs on a dyadic grid.
  Rng rng(2);
  std::size_t related = 0;
  std::size_t lightlike = 0;
  std::size_t oracle_mismatches = 0;
  while (related < 100) {
    const std::size_t n = 1 + rng.below(3);
    std::vector<double> x(n);
    for (double& xi : x) xi = std::ldexp(static_cast<double>(rng.below(1024)), -10);
    const Event a(std::ldexp(static_cast<double>(rng.below(1024)), -10), x);
    Event b = a;
    if (related % 2 == 0) {
      std::vector<double> y(n);
      for (double& yi : y) yi = rng.uniform(0, 1);
      b = Event(a.t() + rng.uniform(0.1, 1.5), y);
      if (classify_pair(a, b, 1.0) != PairClass::timelike_forward) continue;
    } else {
      const double dt = std::ldexp(static_cast<double>(1 + rng.below(1024)), -10);
      std::vector<double> y(a.x().begin(), a.x().end());
      y[rng.below(n)] += rng.below(2) == 0 ? dt : -dt;
      b = Event(a.t() + dt, y);
      if (classify_pair(a, b, 1.0) != PairClass::lightlike_forward) continue;
      ++lightlike;
    }
    if (interval_is_chain_sampled(a, b, 1.0, 1000, related) != interval_is_chain(a, b, 1.0)) {
      ++oracle_mismatches;
    }
    ++related;
  }
  return {mismatches == 0 && oracle_mismatches == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches; interval oracle " +
              std::to_string(oracle_mismatches) + "/" + std::to_string(related) + " disagreements (" +
              std::to_string(lightlike) + " light-like)"};
}

// 3. Reconstruction of the causal order from the subluminal one.
Outcome reconstruction() {
  std::size_t analytic_diffs = 0;
  std::size_t pairs = 0;
  for (const auto& ev : sprinkled_sets()) {
    for (const Event& u : ev) {
      for (const Event& v : ev) {
        ++pairs;
        if (reconstruct_causal_analytic(u, v, 1.0) != leq(OrderSpec::causal(1.0), u, v)) ++analytic_diffs;
      }
    }
  }

  // Fixed queries, independent witness sprinkles of growing size.
  const std::size_t sizes[] = {50, 200, 800};
  double mean_fp[3] = {0, 0, 0};
  std::size_t false_negatives = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto queries = sprinkle({40, 2, {{0, 1}}, 1000 + seed});
    for (int s = 0; s < 3; ++s) {
      const auto witnesses = sprinkle({sizes[s], 2, {{0, 2}, {-1, 2}, {-1, 2}}, 5000 + 10 * seed + s});
      for (const Event& u : queries) {
        for (const Event& v : queries) {
          if (u == v) continue;
          const bool truth = leq(OrderSpec::causal(1.0), u, v);
          const bool cand = reconstruct_causal_sampled(u, v, 1.0, witnesses);
          if (truth && !cand) ++false_negatives;
          if (cand && !truth) mean_fp[s] += 1.0 / 20.0;
        }
      }
    }
  }
  const bool monotone = mean_fp[1] <= mean_fp[0] && mean_fp[2] <= mean_fp[1];
  char buf[200];
  std::snprintf(buf, sizeof buf, "; sampled FN %zu, mean FP %.2f -> %.2f -> %.2f", false_negatives,
                mean_fp[0], mean_fp[1], mean_fp[2]);
  return {analytic_diffs == 0 && false_negatives == 0 && monotone,
          "analytic " + std::to_string(analytic_diffs) + " diffs over " + std::to_string(pairs) + " pairs" + buf};
}

// 4. World lines are chains that no off-line probe extends.
Outcome world_lines() {
  Rng rng(4);
  std::size_t not_chains = 0;
  std::size_t extensions = 0;
  std::size_t probes = 0;
  for (int w = 0; w < 100; ++w) {
    const std::size_t n = 1 + rng.below(3);
    const double c = std::array<double, 3>{0.5, 1.0, 3.0}[rng.below(3)];
    const PolyWorldLine wl = random_polyline(rng, n, c);
    std::vector<double> times;
    for (int i = 0; i < 100; ++i) times.push_back(rng.uniform(wl.t_min(), wl.t_max()));
    if (!is_chain(wl, OrderSpec::causal(c), times)) ++not_chains;
    for (int p = 0; p < 1000; ++p) {
      const double t = rng.uniform(wl.t_min(), wl.t_max());
      std::vector<double> x = wl.eval(t);
      // Offsets from 1e-6 to 1 in scale.
      const double scale = std::pow(10.0, -rng.uniform(0, 6));
      const auto dir = random_unit(n, rng);
      for (std::size_t i = 0; i < n; ++i) x[i] += scale * dir[i];
      ++probes;
      if (extend_probe(wl, Event(t, x), OrderSpec::causal(c))) ++extensions;
    }
  }
  return {not_chains == 0 && extensions == 0,
          "100 polylines, " + std::to_string(not_chains) + " non-chains, " + std::to_string(extensions) + "/" +
              std::to_string(probes) + " probes extended"};
}

// 5. Surfaces are antichains and gradings cross world lines once.
Outcome surfaces() {
  Rng rng(5);
  const double kcs[] = {0.3, 0.6, 0.9};
  std::size_t non_spacelike = 0;
  for (int s = 0; s < 20; ++s) {
    const std::size_t n = 1 + s % 3;
    const Hypersurface hs = random_surface(rng, n, kcs[s % 3], rng.uniform(0.5, 3));
    for (int p = 0; p < 1000; ++p) {
      std::vector<double> a(n), b(n);
      for (double& v : a) v = rng.uniform(-4, 4);
      for (double& v : b) v = rng.uniform(-4, 4);
      if (classify_pair(hs.lift(a), hs.lift(b), hs.c()) != PairClass::spacelike) ++non_spacelike;
    }
  }

  std::size_t found = 0;
  std::size_t bad_residual = 0;
  std::size_t second_changes = 0;
  std::size_t non_monotone = 0;
  std::size_t attempts = 0;
  while (found < 100 && attempts < 10000) {
    ++attempts;
    const std::size_t n = 1 + rng.below(3);
    const double c = rng.uniform(0.5, 3);
    const Hypersurface hs = random_surface(rng, n, kcs[rng.below(3)], c);
    const PolyWorldLine wl = random_polyline(rng, n, c);
    const auto phi = [&](double t) { return t - hs.height(wl.eval(t)); };
    if (phi(wl.t_min()) > 0 || phi(wl.t_max()) < 0) continue;
    ++found;
    const Crossing x = crossing(hs, wl);
    if (!(std::abs(x.residual) <= kCrossingTol) || std::abs(phi(x.t)) > kCrossingTol) ++bad_residual;
    // A second root would show as a sign change away from t*.
    for (int i = 0; i <= 1000; ++i) {
      const double lo = std::min(x.t, wl.t_min() + (x.t - wl.t_min()) * i / 1000.0);
      const double hi = std::min(wl.t_max(), x.t + (wl.t_max() - x.t) * i / 1000.0);
      if (phi(lo) > kCrossingTol) ++second_changes;
      if (phi(hi) < -kCrossingTol) ++second_changes;
    }
    std::vector<double> times;
    for (int i = 0; i < 100; ++i) times.push_back(std::min(wl.t_max(), wl.t_min() + (wl.t_max() - wl.t_min()) * i / 99.0));
    if (!grading_monotone_on(Grading(hs), wl, times)) ++non_monotone;
  }
  return {non_spacelike == 0 && found == 100 && bad_residual == 0 && second_changes == 0 && non_monotone == 0,
          "20 surfaces, " + std::to_string(non_spacelike) + " non-spacelike graph pairs; " +
              std::to_string(found) + " crossings, " + std::to_string(bad_residual) + " bad residuals, " +
              std::to_string(second_changes) + " extra sign changes, " + std::to_string(non_monotone) +
              " non-monotone gradings"};
}

// 6. The canonical gap chain avoids the surface; t is not onto on it.
Outcome pathology() {
  Rng rng(6);
  std::size_t samples = 0;
  std::size_t on_surface = 0;
  std::size_t wrong_side = 0;
  std::size_t range_errors = 0;
  std::size_t in_gap = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const double c = rng.uniform(0.5, 3);
    const Hypersurface hs = random_surface(rng, n, 0.9, c);
    std::vector<double> x0(n);
    for (double& v : x0) v = rng.uniform(-1, 1);
    const Event origin = hs.lift(x0);
    const double t_len = rng.uniform(0.5, 2);
    const Direction dir = trial % 2 == 0 ? Direction::forward : Direction::backward;
    const GapWorldLine g = canonical_gap_chain(origin, random_unit(n, rng), t_len, c, dir);

    const double a = dir == Direction::forward ? origin.t() : origin.t() - t_len;
    const double b = a + t_len;
    // Branch parameter ranges: (-inf, a) and (b, inf), both ends open.
    const auto& br = g.branches();
    if (br.size() != 2 || br[0].t_hi != a || br[0].hi_closed || br[1].t_lo != b || br[1].lo_closed ||
        !std::isinf(br[0].t_lo) || !std::isinf(br[1].t_hi)) {
      ++range_errors;
    }
    const auto gaps = time_image_gaps(g);
    if (gaps.size() != 1 || gaps[0].lo != a || gaps[0].hi != b || !gaps[0].lo_closed || !gaps[0].hi_closed) {
      ++range_errors;
    }

    const auto pts = g.sample(5000, a - 10, b + 10);
    samples += pts.size();
    const SurfaceSides sides = surface_sides(hs, pts);
    on_surface += sides.on;
    for (const Event& p : pts) {
      if (p.t() >= a && p.t() <= b) ++in_gap;
      const double gv = p.t() - hs.height(p.x());
      if ((p.t() < a && !(gv < 0)) || (p.t() > b && !(gv > 0))) ++wrong_side;
    }
  }
  const bool ok = on_surface == 0 && wrong_side == 0 && range_errors == 0 && in_gap == 0 && samples >= 60000;
  return {ok, std::to_string(samples) + " chain points over 6 chains, " + std::to_string(on_surface) +
                  " on the surface, " + std::to_string(in_gap) + " with t in the omitted interval, " +
                  std::to_string(range_errors) + " branch-range errors; t not surjective"};
}

// 7. The canonical gap chain is a subluminal chain no probe extends.
Outcome prop31() {
  Rng rng(7);
  std::size_t chain_violations = 0;
  std::size_t extensions = 0;
  std::size_t probes = 0;
  std::size_t removed_checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const double c = n == 2 ? 2.0 : 1.0;
    const auto dir = random_unit(n, rng);
    const Event origin = Event::origin(n);
    const GapWorldLine g = canonical_gap_chain(origin, dir, 1.0, c);
    const OrderSpec sub = OrderSpec::subluminal(c);

    const auto pts = g.sample(1000, -3, 4);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (!comparable(sub, pts[i], pts[j], kLightSpeedTol)) ++chain_violations;
      }
    }

    // Half uniform in a box, half within 0.05 of a chain or segment point.
    const std::size_t count = n == 3 ? 3334 : 3333;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<double> x(n);
      double t = 0;
      if (k % 2 == 0) {
        t = rng.uniform(-2, 3);
        for (double& v : x) v = rng.uniform(-3, 3);
      } else {
        const double s = rng.uniform(-1, 2);
        t = s;
        const double along = s < 0 ? 0 : (s > 1 ? c : c * s);
        for (std::size_t i = 0; i < n; ++i) x[i] = along * dir[i];
        t += rng.uniform(-0.05, 0.05);
        for (double& v : x) v += rng.uniform(-0.05, 0.05);
      }
      const Event p(t, x);
      if (gap_contains(g, p, 0)) continue;
      ++probes;
      if (is_subluminal_chain_probe(g, p, c)) ++extensions;
    }

    // With the lower endpoint kept the removed upper endpoint is light-like
    // to it, so it does not extend the chain.
    const GapWorldLine kept = canonical_gap_chain(origin, dir, 1.0, c, Direction::forward, KeptEnd::lower);
    for (const Event& r : kept.removed_points()) {
      ++removed_checked;
      if (comparable(sub, r, kept.kept_endpoints().front(), kLightSpeedTol)) ++extensions;
      if (is_subluminal_chain_probe(kept, r, c)) ++extensions;
    }
  }
  return {chain_violations == 0 && extensions == 0 && probes >= 10000,
          std::to_string(chain_violations) + " chain violations, " + std::to_string(extensions) + "/" +
              std::to_string(probes) + " probes extended, " + std::to_string(removed_checked) +
              " removed endpoints incomparable to the kept end"};
}

// 8. Cone classification and invariance.
Outcome cones() {
  std::size_t cases = 0;
  std::size_t wrong = 0;
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (OrderKind k : kKinds) {
      for (Direction d : kDirs) {
        for (double c : {0.5, 1.0, 3.0}) {
          const auto cls = classify_cone(standard_cone(k, d, c, n), 100000, 8, 0.01);
          ++cases;
          const ConeKind want = k == OrderKind::causal       ? ConeKind::causal
                                : k == OrderKind::subluminal ? ConeKind::subluminal
                                                             : ConeKind::temporal;
          const ConeDirection want_dir = d == Direction::forward ? ConeDirection::forward : ConeDirection::backward;
          bool ok = cls.kind == want && cls.direction == want_dir;
          if (k == OrderKind::temporal) {
            ok = ok && !cls.c_estimate;
          } else {
            ok = ok && cls.c_estimate && std::abs(*cls.c_estimate - c) <= 0.01 * c;
            if (cls.c_estimate) worst = std::max(worst, std::abs(*cls.c_estimate - c) / c);
          }
          if (!ok) ++wrong;
        }
      }
    }
  }

  std::size_t invariance_failures = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (OrderKind k : kKinds) {
      for (Direction d : kDirs) {
        for (double c : {0.5, 1.0, 3.0}) {
          if (!check_invariance(standard_cone(k, d, c, n), 1000, 8).passed) ++invariance_failures;
        }
      }
    }
  }
  Eigen::MatrixXd stretch = Eigen::MatrixXd::Identity(3, 3);
  stretch(1, 1) = 3.0;
  const auto aniso = affine_cone(stretch, standard_cone(OrderKind::causal, Direction::forward, 1.0, 2));
  const auto report = check_invariance(aniso, 1000, 8);
  const bool caught = !report.passed && report.witness && report.image &&
                      aniso.contains(*report.witness) != aniso.contains(*report.image);

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return {wrong == 0 && invariance_failures == 0 && caught,
          std::to_string(cases - wrong) + "/" + std::to_string(cases) + " classified (worst c error " + buf +
              "), " + std::to_string(invariance_failures) + " standard cones failed invariance, anisotropic " +
              (caught ? "rejected with witness" : "NOT rejected")};
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  out += "\n<exit " + std::to_string(status) + ">\n";
  return out;
}

std::string strip_timing(const std::string& s) {
  std::istringstream in(s);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("# elapsed_ms:", 0) != 0) out += line + '\n';
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 9. Repeated CLI runs are byte-identical apart from the timing line.
Outcome determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("minkorder_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string q = "'" + cli + "'";
  const std::string d = dir.string();
  {
    std::ofstream(d + "/surface.txt") << "dim=2 c=1 k=0.5\n0 0 0\n0.3 1 1\n";
    std::ofstream(d + "/wl.txt") << "dim=2 c=1\n-2 0 0\n0 0.5 0\n3 0.5 1\n";
  }

  // Each run writes its own copies of the file outputs.
  const auto commands = [&](int run) {
    const std::string r = std::to_string(run);
    return std::vector<std::string>{
        q + " sprinkle --count 300 --dim 2 --box 0:1 --seed 42 --out " + d + "/events" + r + ".txt",
        q + " sprinkle --count 30 --dim 1 --seed 7",
        q + " hasse " + d + "/events" + r + ".txt --dot " + d + "/hasse" + r + ".dot",
        q + " relate " + d + "/events" + r + ".txt 3 17",
        q + " reconstruct " + d + "/events" + r + ".txt --mode sampled",
        q + " reconstruct " + d + "/events" + r + ".txt --mode analytic",
        q + " grade " + d + "/surface.txt " + d + "/events" + r + ".txt",
        q + " crossing " + d + "/surface.txt " + d + "/wl.txt",
        q + " counterexample --surface " + d + "/surface.txt --light-dir 0.6,0.8 --tlen 1",
        q + " classify-cone causal:3:bwd --dim 3 --seed 11",
        q + " invariance 'affine:1,0,0;0,3,0;0,0,1:causal:1:fwd' --dim 2 --seed 11",
    };
  };

  std::vector<std::string> first;
  std::size_t compared = 0;
  std::size_t differing = 0;
  for (int run = 0; run < 3; ++run) {
    std::vector<std::string> outputs;
    for (const auto& cmd : commands(run)) {
      std::string out = strip_timing(capture(cmd + " 2>&1"));
      // Paths differ per run by construction.
      for (std::string tag : {"events", "hasse"}) {
        const std::string name = d + "/" + tag + std::to_string(run);
        for (std::size_t pos; (pos = out.find(name)) != std::string::npos;) out.replace(pos, name.size(), tag + "N");
      }
      outputs.push_back(out);
    }
    outputs.push_back(slurp(d + "/events" + std::to_string(run) + ".txt"));
    outputs.push_back(slurp(d + "/hasse" + std::to_string(run) + ".dot"));
    if (run == 0) {
      first = outputs;
      continue;
    }
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      ++compared;
      if (outputs[i] != first[i]) ++differing;
    }
  }
  // Sanity: the runs did something.
  const bool produced = first.size() > 2 && first[first.size() - 2].size() > 1000 &&
                        first[0].find("<exit 0>") != std::string::npos;
  fs::remove_all(dir);
  return {differing == 0 && produced,
          std::to_string(first.size()) + " outputs x 3 runs, " + std::to_string(differing) + "/" +
              std::to_string(compared) + " comparisons differ"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-minkorder>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"order axioms", order_axioms},
      {"weakening equivalence", weakening},
      {"reconstruction", reconstruction},
      {"world lines are maximal chains", world_lines},
      {"space-like surfaces and gradings", surfaces},
      {"subluminal pathology", pathology},
      {"gap chain probe", prop31},
      {"cone classification", cones},
      {"determinism", [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kTimeLimitSeconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << i + 1 << " " << criteria[i].first << ": " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << " [" << timing << "]" << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
