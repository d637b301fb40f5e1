#include "minkorder/cones.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <string>

#include "minkorder/error.hpp"
#include "minkorder/random.hpp"
#include "minkorder/transforms.hpp"

namespace minkorder {

namespace {

constexpr std::size_t kConsistencySamples = 64;
constexpr std::size_t kBoundaryCopies = 8;

Event scaled(const Event& e, double r) {
  std::vector<double> x(e.x().begin(), e.x().end());
  for (double& xi : x) xi *= r;
  return Event(r * e.t(), std::move(x));
}

Event random_event(const ProbeBox& box, std::size_t n, Rng& rng) {
  const double t = rng.uniform(-box.time_extent, box.time_extent);
  std::vector<double> x(n);
  for (double& xi : x) xi = rng.uniform(-box.space_extent, box.space_extent);
  return Event(t, std::move(x));
}

double parse_double(std::string_view s, std::string_view what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

std::size_t shortest_repr_length(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return static_cast<std::size_t>(res.ptr - buf);
}

// Midpoint of two non-negative doubles in the ordering of their bit patterns.
double bit_midpoint(double lo, double hi) {
  const auto a = std::bit_cast<std::uint64_t>(lo);
  const auto b = std::bit_cast<std::uint64_t>(hi);
  return std::bit_cast<double>(a + (b - a) / 2);
}

// Displacement at time sign `sigma` and speed `s` along signed axis `copy`.
Event speed_probe(std::size_t n, double sigma, double s, std::size_t copy) {
  std::vector<double> x(n, 0.0);
  const std::size_t axis = copy % n;
  const double sign = (copy / n) % 2 == 0 ? 1.0 : -1.0;
  x[axis] = sign * s;
  return Event(sigma, std::move(x));
}

}  // namespace

ConeOracle::ConeOracle(Membership membership, std::size_t dim, ProbeBox box, std::string label)
    : membership_(std::move(membership)), dim_(dim), box_(box), label_(std::move(label)) {
  if (!membership_) throw PreconditionError("cone oracle needs a membership predicate");
  if (dim_ > kMaxSpaceDim) throw DimensionError("space dimension exceeds the supported maximum");
}

bool ConeOracle::contains(const Event& displacement) const {
  if (displacement.dim() != dim_) {
    throw DimensionError("displacement of dimension " + std::to_string(displacement.dim()) +
                         " probed against a cone of dimension " + std::to_string(dim_));
  }
  return membership_(displacement);
}

ConeOracle standard_cone(OrderKind kind, Direction direction, double c, std::size_t n) {
  const OrderSpec spec{kind, c, direction};
  spec.validate();
  std::string label(to_string(kind));
  if (kind != OrderKind::temporal) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, c);
    label += ":" + std::string(buf, res.ptr);
  }
  label += ":" + std::string(to_string(direction));
  const Event origin = Event::origin(n);
  return ConeOracle([spec, origin](const Event& e) { return leq(spec, origin, e); }, n, {},
                    std::move(label));
}

ConeOracle affine_cone(const Eigen::MatrixXd& a, ConeOracle base) {
  const auto size = static_cast<Eigen::Index>(base.dim() + 1);
  if (a.rows() != size || a.cols() != size) {
    throw DimensionError("affine matrix must be " + std::to_string(size) + "x" +
                         std::to_string(size));
  }
  const std::size_t n = base.dim();
  const ProbeBox box = base.box();
  std::string label = "affine(" + base.label() + ")";
  auto membership = [a, base = std::move(base), n](const Event& e) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n + 1));
    v(0) = e.t();
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i + 1)) = e.x()[i];
    const Eigen::VectorXd w = a * v;
    return base.contains(Event(w(0), std::vector<double>(w.data() + 1, w.data() + w.size())));
  };
  return ConeOracle(std::move(membership), n, box, std::move(label));
}

ConeOracle parse_oracle_spec(std::string_view spec, std::size_t n) {
  const auto head_end = spec.find(':');
  if (head_end == std::string_view::npos) throw ParseError("oracle spec needs ':' fields: '" + std::string(spec) + "'");
  const std::string_view head = spec.substr(0, head_end);
  const std::string_view rest = spec.substr(head_end + 1);

  if (head == "temporal") {
    return standard_cone(OrderKind::temporal, parse_direction(rest), 1.0, n);
  }
  if (head == "causal" || head == "subluminal") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw ParseError("expected " + std::string(head) + ":<c>:<fwd|bwd>");
    const double c = parse_double(rest.substr(0, sep), "light speed");
    return standard_cone(parse_order_kind(head), parse_direction(rest.substr(sep + 1)), c, n);
  }
  if (head == "affine") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw ParseError("expected affine:<matrix>:<base spec>");
    const std::string_view body = rest.substr(0, sep);
    std::vector<std::vector<double>> rows;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto end = std::min(body.find(';', pos), body.size());
      std::vector<double> row;
      std::size_t p = pos;
      while (p <= end) {
        const auto comma = std::min(body.find(',', p), end);
        row.push_back(parse_double(body.substr(p, comma - p), "matrix entry"));
        p = comma + 1;
      }
      rows.push_back(std::move(row));
      pos = end + 1;
    }
    if (rows.size() != n + 1) {
      throw ParseError("affine matrix has " + std::to_string(rows.size()) + " rows, expected " +
                       std::to_string(n + 1));
    }
    Eigen::MatrixXd a(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n + 1) throw ParseError("affine matrix row " + std::to_string(i) + " has the wrong length");
      for (std::size_t j = 0; j <= n; ++j) {
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
      }
    }
    return affine_cone(a, parse_oracle_spec(rest.substr(sep + 1), n));
  }
  throw ParseError("unknown oracle '" + std::string(head) + "'");
}

bool cone_order_leq(const ConeOracle& oracle, const Event& u, const Event& v) {
  return oracle.contains(difference(v, u));
}

InvarianceReport check_invariance(const ConeOracle& oracle, std::size_t n_samples,
                                  std::uint64_t seed) {
  if (n_samples == 0) throw PreconditionError("check_invariance needs n_samples >= 1");
  const std::size_t n = oracle.dim();
  Rng rng(seed);
  InvarianceReport report;
  const auto fail = [&](std::string what, Event witness, Event image) {
    report.passed = false;
    report.failure = std::move(what);
    report.witness = std::move(witness);
    report.image = std::move(image);
  };

  for (std::size_t k = 0; k < n_samples && report.passed; ++k) {
    const Event e = random_event(oracle.box(), n, rng);
    const bool member = oracle.contains(e);

    const Eigen::MatrixXd q = random_orthogonal(n, rng);
    const std::vector<double> no_shift(n, 0.0);
    const Event rotated = apply_space_isometry(q, no_shift, e);
    ++report.checks;
    if (oracle.contains(rotated) != member) {
      fail("rotation", e, rotated);
      break;
    }

    const double r = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const Event dilated = apply_dilation(r, e);
    ++report.checks;
    if (oracle.contains(dilated) != member) {
      fail("dilation", e, dilated);
      break;
    }

    const Event u = random_event(oracle.box(), n, rng);
    const Event v = translate(u, e);
    std::vector<double> shift(n);
    for (double& s : shift) s = rng.uniform(-oracle.box().space_extent, oracle.box().space_extent);
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                                               static_cast<Eigen::Index>(n));
    const Event u2 = apply_space_isometry(identity, shift, u);
    const Event v2 = apply_space_isometry(identity, shift, v);
    ++report.checks;
    if (cone_order_leq(oracle, u, v) != cone_order_leq(oracle, u2, v2)) {
      fail("translation", u, u2);
      break;
    }
  }
  return report;
}

std::string_view to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::causal: return "causal";
    case ConeKind::subluminal: return "subluminal";
    case ConeKind::temporal: return "temporal";
    case ConeKind::unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(ConeDirection dir) {
  switch (dir) {
    case ConeDirection::forward: return "fwd";
    case ConeDirection::backward: return "bwd";
    case ConeDirection::unknown: return "unknown";
  }
  return "?";
}

ConeClass classify_cone(const ConeOracle& oracle, std::size_t budget, std::uint64_t seed,
                        double tol) {
  if (!(tol > 0.0) || !(tol < 1.0)) throw DomainError("classification tolerance must lie in (0, 1)");
  const std::size_t n = oracle.dim();
  ConeClass out;
  auto& ev = out.evidence;

  struct BudgetExhausted {};
  const auto probe = [&](const Event& e) {
    if (ev.probes >= budget) throw BudgetExhausted{};
    ++ev.probes;
    return oracle.contains(e);
  };
  const auto unknown = [&](std::string note) {
    out.kind = ConeKind::unknown;
    out.c_estimate.reset();
    ev.note = std::move(note);
    return out;
  };

  try {
    Rng rng(seed);
    for (std::size_t k = 0; k < kConsistencySamples; ++k) {
      const Event v = random_event(oracle.box(), n, rng);
      if (probe(v) != probe(scaled(v, 2.0))) {
        ev.witnesses.push_back(v);
        return unknown("membership of v and 2v differ: not a cone");
      }
    }
    if (!probe(Event::origin(n))) return unknown("origin is not a member: order is not reflexive");

    const bool up = probe(Event(1.0, std::vector<double>(n, 0.0)));
    const bool down = probe(Event(-1.0, std::vector<double>(n, 0.0)));
    if (up == down) {
      return unknown(up ? "both rest directions are members: not antisymmetric"
                        : "no rest displacement is a member");
    }
    out.direction = up ? ConeDirection::forward : ConeDirection::backward;
    const double sigma = up ? 1.0 : -1.0;

    if (n == 0) {
      out.kind = ConeKind::temporal;
      ev.note = "no space dimension: the three families coincide with the time order";
      return out;
    }

    const double bound = oracle.box().speed_bound;
    if (probe(speed_probe(n, sigma, bound, 0))) {
      out.kind = ConeKind::temporal;
      ev.speed_member = bound;
      ev.note = "member at the speed bound";
      return out;
    }

    double lo = 0.0;
    double hi = bound;
    while (std::nextafter(lo, hi) < hi) {
      const double mid = bit_midpoint(lo, hi);
      if (probe(speed_probe(n, sigma, mid, 0))) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    ev.speed_member = lo;
    ev.speed_nonmember = hi;
    if (lo == 0.0) return unknown("no member moves: degenerate cone");

    const double c_hat = shortest_repr_length(hi) < shortest_repr_length(lo) ? hi : lo;
    if (!probe(speed_probe(n, sigma, c_hat * (1.0 - tol), 0)) ||
        probe(speed_probe(n, sigma, c_hat * (1.0 + tol), 0))) {
      return unknown("boundary is not sharp at the requested tolerance");
    }

    std::size_t members = 0;
    for (std::size_t copy = 0; copy < kBoundaryCopies; ++copy) {
      const Event e = speed_probe(n, sigma, c_hat, copy);
      if (probe(e)) ++members;
      if (copy == 0) ev.witnesses.push_back(e);
    }
    if (members != 0 && members != kBoundaryCopies) {
      return unknown("boundary probes disagree across rotated copies");
    }
    out.kind = members == kBoundaryCopies ? ConeKind::causal : ConeKind::subluminal;
    out.c_estimate = c_hat;
    return out;
  } catch (const BudgetExhausted&) {
    out.direction = ConeDirection::unknown;
    return unknown("probe budget exhausted");
  }
}

}  // namespace minkorder
