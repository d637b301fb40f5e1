#include "minkorder/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "minkorder/causal_set.hpp"
#include "minkorder/cones.hpp"
#include "minkorder/error.hpp"
#include "minkorder/hypersurface.hpp"
#include "minkorder/io.hpp"
#include "minkorder/order.hpp"
#include "minkorder/worldline.hpp"

namespace minkorder::cli {

namespace {

// Flags shared by the subcommands. Unset optionals keep file header values.
struct Common {
  std::optional<std::string> order;
  std::optional<double> c;
  std::optional<std::string> dir;
  std::uint64_t seed = 0;
  std::size_t dim = 1;
  std::string box = "0:1";
  std::optional<double> tol;
};

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError(std::string("bad ") + what + " '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad index list '" + s + "'");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

std::vector<std::pair<double, double>> parse_box(const std::string& s) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("box interval '" + item + "' is not lo:hi");
    const auto lo = parse_list(item.substr(0, colon), "box bound");
    const auto hi = parse_list(item.substr(colon + 1), "box bound");
    if (lo.size() != 1 || hi.size() != 1) throw ParseError("box interval '" + item + "' is not lo:hi");
    out.emplace_back(lo[0], hi[0]);
  }
  return out;
}

OrderSpec apply_overrides(OrderSpec spec, const Common& common) {
  if (common.order) spec.kind = parse_order_kind(*common.order);
  if (common.c) spec.c = *common.c;
  if (common.dir) spec.direction = parse_direction(*common.dir);
  spec.validate();
  return spec;
}

std::string join(std::span<const std::size_t> idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0) s += ' ';
    s += std::to_string(idx[k]);
  }
  return s;
}

std::string event_text(const Event& e) {
  std::string s = format_double(e.t());
  for (double xi : e.x()) s += ' ' + format_double(xi);
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string interval_text(const TimeInterval& iv) {
  return std::string(iv.lo_closed ? "[" : "(") + format_double(iv.lo) + ", " +
         format_double(iv.hi) + (iv.hi_closed ? "]" : ")");
}

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw PreconditionError("index " + std::to_string(i) + " out of range for " +
                            std::to_string(n) + " events");
  }
}

void add_order_flags(CLI::App* cmd, Common& common) {
  cmd->add_option("--order", common.order, "causal, subluminal or temporal");
  cmd->add_option("--c", common.c, "light speed");
  cmd->add_option("--dir", common.dir, "fwd or bwd");
}

// Each command writes its payload and returns kOk or kCheckFailed.
using Command = std::function<int(std::ostream&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();

  CLI::App app{"Causal orders on Minkowski space-time", "minkorder"};
  app.require_subcommand(1);
  Common common;
  Command command;

  // sprinkle
  std::size_t count = 0;
  std::string out_path;
  auto* sprinkle_cmd = app.add_subcommand("sprinkle", "uniform random events in a box");
  sprinkle_cmd->add_option("--count", count, "number of events")->required();
  sprinkle_cmd->add_option("--dim", common.dim, "space dimension");
  sprinkle_cmd->add_option("--box", common.box, "lo:hi[,lo:hi...], time axis first");
  sprinkle_cmd->add_option("--seed", common.seed);
  sprinkle_cmd->add_option("--out", out_path, "event file to write (default: stdout)");
  add_order_flags(sprinkle_cmd, common);
  sprinkle_cmd->callback([&] {
    command = [&](std::ostream& os) {
      SprinkleConfig cfg{count, common.dim, parse_box(common.box), common.seed};
      EventFile file{common.dim, apply_overrides(OrderSpec{}, common), sprinkle(cfg)};
      if (out_path.empty()) {
        write_event_file(os, file);
      } else {
        save_event_file(out_path, file);
        os << "wrote: " << out_path << "\nevents: " << file.events.size() << '\n';
      }
      return kOk;
    };
  });

  // relate
  std::string events_path;
  std::size_t idx_i = 0;
  std::size_t idx_j = 0;
  auto* relate_cmd = app.add_subcommand("relate", "classify a pair and evaluate all three orders");
  relate_cmd->add_option("events", events_path)->required();
  relate_cmd->add_option("i", idx_i)->required();
  relate_cmd->add_option("j", idx_j)->required();
  relate_cmd->add_option("--c", common.c, "light speed");
  relate_cmd->add_option("--dir", common.dir, "fwd or bwd");
  relate_cmd->add_option("--tol", common.tol, "relative light-like tolerance (default 0)");
  relate_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const EventFile file = load_event_file(events_path);
      const OrderSpec spec = apply_overrides(file.spec, common);
      check_index(idx_i, file.events.size());
      check_index(idx_j, file.events.size());
      const Event& u = file.events[idx_i];
      const Event& v = file.events[idx_j];
      const double eps = common.tol.value_or(0.0);
      os << "pair: " << idx_i << ' ' << idx_j << '\n';
      os << "class: " << to_string(classify_pair(u, v, spec.c, eps)) << '\n';
      for (OrderKind kind : {OrderKind::causal, OrderKind::subluminal, OrderKind::temporal}) {
        const OrderSpec s{kind, spec.c, spec.direction};
        os << to_string(kind) << ": " << yes_no(leq(s, u, v)) << '\n';
      }
      return kOk;
    };
  });

  // hasse
  std::string dot_path;
  auto* hasse_cmd = app.add_subcommand("hasse", "covering relation of an event file");
  hasse_cmd->add_option("events", events_path)->required();
  hasse_cmd->add_option("--dot", dot_path, "write the diagram as DOT");
  add_order_flags(hasse_cmd, common);
  hasse_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const EventFile file = load_event_file(events_path);
      const FiniteCausalSet fcs = build(file.events, apply_overrides(file.spec, common));
      const auto edges = hasse(fcs);
      os << "order: " << to_string(fcs.spec().kind) << '\n';
      os << "events: " << fcs.size() << "\nedges: " << edges.size() << '\n';
      for (const auto& [a, b] : edges) os << "edge " << a << ' ' << b << '\n';
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw Error("cannot open '" + dot_path + "' for writing");
        write_dot(dot, fcs.size(), edges);
        os << "dot: " << dot_path << '\n';
      }
      return kOk;
    };
  });

  // chains / antichains
  std::size_t cap = 10000;
  const auto add_enum = [&](const char* name, const char* help, bool chains) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("events", events_path)->required();
    cmd->add_option("--cap", cap, "stop after this many sets");
    add_order_flags(cmd, common);
    cmd->callback([&, chains] {
      command = [&, chains](std::ostream& os) {
        const EventFile file = load_event_file(events_path);
        const FiniteCausalSet fcs = build(file.events, apply_overrides(file.spec, common));
        const Enumeration e = chains ? maximal_chains(fcs, cap) : maximal_antichains(fcs, cap);
        os << "count: " << e.sets.size() << "\ntruncated: " << yes_no(e.truncated) << '\n';
        for (const auto& s : e.sets) os << (chains ? "chain: " : "antichain: ") << join(s) << '\n';
        return kOk;
      };
    });
  };
  add_enum("chains", "maximal chains", true);
  add_enum("antichains", "maximal antichains (at most 24 events)", false);

  // cutset
  std::string antichain_text;
  auto* cutset_cmd = app.add_subcommand("cutset", "does an antichain meet every maximal chain");
  cutset_cmd->add_option("events", events_path)->required();
  cutset_cmd->add_option("--antichain", antichain_text, "comma-separated indices")->required();
  add_order_flags(cutset_cmd, common);
  cutset_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const EventFile file = load_event_file(events_path);
      const FiniteCausalSet fcs = build(file.events, apply_overrides(file.spec, common));
      const auto anti = parse_indices(antichain_text);
      for (std::size_t i : anti) check_index(i, fcs.size());
      if (const auto pair = find_comparable_pair(fcs, anti)) {
        throw PreconditionError("not an antichain: events " + std::to_string(pair->first) +
                                " and " + std::to_string(pair->second) + " are comparable");
      }
      const auto chain = avoiding_chain(fcs, anti);
      os << "antichain: " << join(anti) << '\n';
      os << "cutset: " << yes_no(!chain) << '\n';
      if (chain) os << "avoiding_chain: " << join(*chain) << '\n';
      return chain ? kCheckFailed : kOk;
    };
  });

  // grade
  std::string surface_path;
  auto* grade_cmd = app.add_subcommand("grade", "grading value t - h(x) of each event");
  grade_cmd->add_option("surface", surface_path)->required();
  grade_cmd->add_option("events", events_path)->required();
  grade_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const Grading g(load_surface_file(surface_path));
      const EventFile file = load_event_file(events_path);
      for (std::size_t i = 0; i < file.events.size(); ++i) {
        os << "grade " << i << ' ' << format_double(g.value(file.events[i])) << '\n';
      }
      return kOk;
    };
  });

  // crossing
  std::string worldline_path;
  auto* crossing_cmd = app.add_subcommand("crossing", "where a world line meets a surface");
  crossing_cmd->add_option("surface", surface_path)->required();
  crossing_cmd->add_option("worldline", worldline_path)->required();
  crossing_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const Hypersurface hs = load_surface_file(surface_path);
      const PolyWorldLine wl = to_polyline(load_worldline_file(worldline_path));
      const Crossing x = crossing(hs, wl);
      os << "t: " << format_double(x.t) << '\n';
      os << "event: " << event_text(wl.at(x.t)) << '\n';
      os << "residual: " << format_double(x.residual) << '\n';
      os << "iterations: " << x.iterations << '\n';
      return kOk;
    };
  });

  // reconstruct
  std::string mode = "analytic";
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "rebuild the causal order from the subluminal one");
  reconstruct_cmd->add_option("events", events_path)->required();
  reconstruct_cmd->add_option("--mode", mode, "analytic or sampled")
      ->check(CLI::IsMember({"analytic", "sampled"}));
  reconstruct_cmd->add_option("--c", common.c, "light speed");
  reconstruct_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const EventFile file = load_event_file(events_path);
      const double c = common.c.value_or(file.spec.c);
      const auto& ev = file.events;
      const std::size_t n = ev.size();
      BitMatrix truth(n);
      BitMatrix candidate(n);
      if (mode == "analytic") {
        const OrderSpec causal = OrderSpec::causal(c);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (leq(causal, ev[i], ev[j])) truth.set(i, j);
            if (reconstruct_causal_analytic(ev[i], ev[j], c)) candidate.set(i, j);
          }
        }
      } else {
        // Witnesses are the events of the file itself.
        truth = build(ev, OrderSpec::causal(c)).relation();
        candidate = reconstruct_order(build(ev, OrderSpec::subluminal(c)));
      }
      const RelationDiff d = compare_relations(candidate, truth);
      os << "mode: " << mode << "\nevents: " << n << '\n';
      os << "agreements: " << d.agreements << '\n';
      os << "false_positives: " << d.false_positives << '\n';
      os << "false_negatives: " << d.false_negatives << '\n';
      for (const auto& [i, j] : d.differences) {
        os << "diff " << i << ' ' << j << ' ' << (candidate.get(i, j) ? "fp" : "fn") << '\n';
      }
      const bool ok = d.false_negatives == 0 && (mode == "sampled" || d.false_positives == 0);
      return ok ? kOk : kCheckFailed;
    };
  });

  // counterexample
  std::string basepoint_text;
  std::string light_dir_text;
  double t_len = 1.0;
  std::size_t samples = 10000;
  std::size_t chain_points = 1000;
  auto* counter_cmd = app.add_subcommand(
      "counterexample", "gapped subluminal chain through a surface point that avoids it");
  counter_cmd->add_option("--surface", surface_path)->required();
  counter_cmd->add_option("--basepoint", basepoint_text, "t,x1,...,xn on the surface (default: above x = 0)");
  counter_cmd->add_option("--light-dir", light_dir_text, "unit vector (default: first axis)");
  counter_cmd->add_option("--tlen", t_len, "time length of the removed light segment");
  counter_cmd->add_option("--samples", samples, "chain points checked against the surface");
  counter_cmd->add_option("--chain-points", chain_points, "chain points checked pairwise");
  counter_cmd->add_option("--dir", common.dir, "fwd or bwd");
  counter_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const Hypersurface hs = load_surface_file(surface_path);
      const std::size_t n = hs.dim();
      if (n == 0) throw DimensionError("the construction needs at least one space dimension");
      std::vector<double> base_x(n, 0.0);
      double base_t = hs.height(base_x);
      if (!basepoint_text.empty()) {
        const auto v = parse_list(basepoint_text, "basepoint");
        if (v.size() != n + 1) throw DimensionError("basepoint needs " + std::to_string(n + 1) + " coordinates");
        base_t = v[0];
        base_x.assign(v.begin() + 1, v.end());
        const double h = hs.height(base_x);
        if (std::abs(base_t - h) > 1e-9 * std::max(1.0, std::abs(h))) {
          throw DomainError("basepoint is not on the surface: t - h(x) = " + format_double(base_t - h));
        }
      }
      std::vector<double> light_dir(n, 0.0);
      light_dir[0] = 1.0;
      if (!light_dir_text.empty()) light_dir = parse_list(light_dir_text, "light direction");
      const Direction dir = parse_direction(common.dir.value_or("fwd"));
      const Event origin(base_t, base_x);
      const GapWorldLine gwl = canonical_gap_chain(origin, light_dir, t_len, hs.c(), dir);

      os << "basepoint: " << event_text(origin) << '\n';
      os << "direction: " << to_string(dir) << "\nc: " << format_double(hs.c()) << '\n';
      for (std::size_t b = 0; b < gwl.branches().size(); ++b) {
        const Branch& br = gwl.branches()[b];
        os << "branch " << b << ": t in " << interval_text({br.t_lo, br.t_hi, br.lo_closed, br.hi_closed})
           << " x = " << event_text(br.anchor).substr(event_text(br.anchor).find(' ') + 1) << '\n';
      }

      const double lo = gwl.finite_t_min();
      const double hi = gwl.finite_t_max();
      const double pad = std::max(1.0, hi - lo);
      const std::size_t per_branch = std::max<std::size_t>(1, samples / gwl.branches().size());
      const auto pts = gwl.sample(per_branch, lo - pad, hi + pad);
      const SurfaceSides sides = surface_sides(hs, pts);
      os << "samples: " << pts.size() << '\n';
      os << "on_surface: " << sides.on << "\nbelow: " << sides.below << "\nabove: " << sides.above << '\n';

      const std::size_t stride = std::max<std::size_t>(1, pts.size() / std::max<std::size_t>(1, chain_points));
      std::vector<Event> sub;
      for (std::size_t k = 0; k < pts.size(); k += stride) sub.push_back(pts[k]);
      const OrderSpec sl = OrderSpec::subluminal(hs.c());
      std::size_t violations = 0;
      for (std::size_t a = 0; a < sub.size(); ++a) {
        for (std::size_t b = a + 1; b < sub.size(); ++b) {
          if (!comparable(sl, sub[a], sub[b], kLightSpeedTol)) ++violations;
        }
      }
      os << "chain_pairs: " << sub.size() * (sub.size() - 1) / 2 << '\n';
      os << "chain_violations: " << violations << '\n';

      const auto gaps = time_image_gaps(gwl);
      const LightSegment& seg = gwl.gaps().front().segment;
      bool omitted = false;
      for (const TimeInterval& g : gaps) {
        os << "time_gap: " << interval_text(g) << '\n';
        omitted = omitted || ((g.lo < seg.t_start || (g.lo == seg.t_start && g.lo_closed)) &&
                              (g.hi > seg.t_end || (g.hi == seg.t_end && g.hi_closed)));
      }
      os << "omits_segment_times: " << yes_no(omitted) << '\n';
      os << "t_surjective: " << yes_no(gaps.empty()) << '\n';
      return sides.on == 0 && violations == 0 && omitted ? kOk : kCheckFailed;
    };
  });

  // classify-cone
  std::string oracle_text;
  std::size_t budget = 100000;
  auto* classify_cmd = app.add_subcommand("classify-cone", "identify an invariant cone order");
  classify_cmd->add_option("oracle", oracle_text, "causal:<c>:<dir>, subluminal:<c>:<dir>, temporal:<dir>, affine:<m>:<spec>")
      ->required();
  classify_cmd->add_option("--dim", common.dim, "space dimension");
  classify_cmd->add_option("--budget", budget, "probe budget");
  classify_cmd->add_option("--seed", common.seed);
  classify_cmd->add_option("--tol", common.tol, "relative tolerance on c (default 0.01)");
  classify_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const ConeOracle oracle = parse_oracle_spec(oracle_text, common.dim);
      const ConeClass cls = classify_cone(oracle, budget, common.seed, common.tol.value_or(0.01));
      os << "oracle: " << oracle.label() << '\n';
      os << "kind: " << to_string(cls.kind) << "\ndirection: " << to_string(cls.direction) << '\n';
      os << "c: " << (cls.c_estimate ? format_double(*cls.c_estimate) : "none") << '\n';
      os << "probes: " << cls.evidence.probes << '\n';
      os << "speed_member: " << format_double(cls.evidence.speed_member) << '\n';
      os << "speed_nonmember: " << format_double(cls.evidence.speed_nonmember) << '\n';
      for (const Event& w : cls.evidence.witnesses) os << "witness: " << event_text(w) << '\n';
      if (!cls.evidence.note.empty()) os << "note: " << cls.evidence.note << '\n';
      return kOk;
    };
  });

  // invariance
  std::size_t n_samples = 1000;
  auto* invariance_cmd =
      app.add_subcommand("invariance", "check a cone under rotations, translations and dilations");
  invariance_cmd->add_option("oracle", oracle_text)->required();
  invariance_cmd->add_option("--dim", common.dim, "space dimension");
  invariance_cmd->add_option("--samples", n_samples);
  invariance_cmd->add_option("--seed", common.seed);
  invariance_cmd->callback([&] {
    command = [&](std::ostream& os) {
      const ConeOracle oracle = parse_oracle_spec(oracle_text, common.dim);
      const InvarianceReport r = check_invariance(oracle, n_samples, common.seed);
      os << "oracle: " << oracle.label() << "\nchecks: " << r.checks << '\n';
      os << "invariant: " << yes_no(r.passed) << '\n';
      if (!r.passed) {
        os << "failure: " << r.failure << '\n';
        os << "witness: " << event_text(*r.witness) << '\n';
        os << "image: " << event_text(*r.image) << '\n';
      }
      return r.passed ? kOk : kCheckFailed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream payload;
  int status = kOk;
  try {
    status = command(payload);
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::string echo = "minkorder";
  for (const auto& a : args) echo += ' ' + a;
  out << "# command: " << echo << '\n';
  out << "# seed: " << common.seed << '\n';
  out << payload.str();
  out << "# status: " << (status == kOk ? "pass" : "fail") << '\n';
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", elapsed.count());
  out << "# elapsed_ms: " << ms << '\n';
  return status;
}

}  // namespace minkorder::cli
