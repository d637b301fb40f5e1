#include "minkorder/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "minkorder/error.hpp"

namespace minkorder {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  if (in.bad()) throw Error("read failure");
  return lines;
}

double to_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not a number: '" + std::string(s) + "'", line);
  }
  return v;
}

std::size_t to_size(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not a non-negative integer: '" + std::string(s) + "'", line);
  }
  return v;
}

std::map<std::string, std::string> parse_header(const Line& line,
                                                std::initializer_list<std::string_view> allowed) {
  std::map<std::string, std::string> kv;
  for (const std::string& tok : line.tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("header field '" + tok + "' is not key=value", line.number);
    }
    std::string key = tok.substr(0, eq);
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) throw ParseError("unknown header key '" + key + "'", line.number);
    if (!kv.emplace(key, tok.substr(eq + 1)).second) {
      throw ParseError("duplicate header key '" + key + "'", line.number);
    }
  }
  return kv;
}

const std::string& require_key(const std::map<std::string, std::string>& kv, const std::string& key,
                               std::size_t line) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("header is missing '" + key + "='", line);
  return it->second;
}

// Header of event and world-line files.
void read_event_header(const Line& line, std::size_t& dim, OrderSpec& spec) {
  const auto kv = parse_header(line, {"dim", "c", "order", "dir"});
  dim = to_size(require_key(kv, "dim", line.number), line.number);
  if (dim > kMaxSpaceDim) throw ParseError("dim exceeds " + std::to_string(kMaxSpaceDim), line.number);
  spec.c = to_double(require_key(kv, "c", line.number), line.number);
  try {
    if (const auto it = kv.find("order"); it != kv.end()) spec.kind = parse_order_kind(it->second);
    if (const auto it = kv.find("dir"); it != kv.end()) spec.direction = parse_direction(it->second);
    spec.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line.number);
  }
}

Event read_event_row(const Line& line, std::size_t dim) {
  if (line.tokens.size() != dim + 1) {
    throw ParseError("expected " + std::to_string(dim + 1) + " columns, got " +
                         std::to_string(line.tokens.size()),
                     line.number);
  }
  std::vector<double> x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = to_double(line.tokens[i + 1], line.number);
  try {
    return Event(to_double(line.tokens[0], line.number), std::move(x));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line.number);
  }
}

void write_event_header(std::ostream& out, std::size_t dim, const OrderSpec& spec) {
  out << "dim=" << dim << " c=" << format_double(spec.c) << " order=" << to_string(spec.kind)
      << " dir=" << to_string(spec.direction) << '\n';
}

void write_event_row(std::ostream& out, const Event& e) {
  out << format_double(e.t());
  for (double xi : e.x()) out << ' ' << format_double(xi);
  out << '\n';
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

EventFile read_event_file(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("missing header line", 1);
  EventFile file;
  read_event_header(lines.front(), file.dim, file.spec);
  for (std::size_t i = 1; i < lines.size(); ++i) file.events.push_back(read_event_row(lines[i], file.dim));
  return file;
}

EventFile load_event_file(const std::string& path) {
  auto in = open_input(path);
  return read_event_file(in);
}

void write_event_file(std::ostream& out, const EventFile& file) {
  write_event_header(out, file.dim, file.spec);
  for (const Event& e : file.events) {
    if (e.dim() != file.dim) throw DimensionError("event dimension does not match file header");
    write_event_row(out, e);
  }
}

void save_event_file(const std::string& path, const EventFile& file) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_event_file(out, file);
  if (!out) throw Error("write to '" + path + "' failed");
}

Hypersurface read_surface_file(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("missing header line", 1);
  const Line& head = lines.front();
  const auto kv = parse_header(head, {"dim", "c", "k"});
  const std::size_t dim = to_size(require_key(kv, "dim", head.number), head.number);
  const double c = to_double(require_key(kv, "c", head.number), head.number);
  const double k = to_double(require_key(kv, "k", head.number), head.number);
  std::vector<Anchor> anchors;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Event row = read_event_row(lines[i], dim);
    anchors.push_back({std::vector<double>(row.x().begin(), row.x().end()), row.t()});
  }
  if (anchors.empty()) throw ParseError("surface file has no anchors", head.number);
  try {
    return make_hypersurface(std::move(anchors), k, c);
  } catch (const InconsistentAnchors& e) {
    // Anchor i sits on the (i + 2)-th non-blank line.
    throw ParseError(e.what(), lines[e.second() + 1].number);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), head.number);
  }
}

Hypersurface load_surface_file(const std::string& path) {
  auto in = open_input(path);
  return read_surface_file(in);
}

void write_surface_file(std::ostream& out, const Hypersurface& hs) {
  out << "dim=" << hs.dim() << " c=" << format_double(hs.c()) << " k=" << format_double(hs.k())
      << '\n';
  for (const Anchor& a : hs.anchors()) {
    out << format_double(a.h);
    for (double xi : a.x) out << ' ' << format_double(xi);
    out << '\n';
  }
}

WorldLineFile read_worldline_file(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("missing header line", 1);
  WorldLineFile file;
  read_event_header(lines.front(), file.dim, file.spec);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front() != "gap") {
      file.vertices.push_back(read_event_row(line, file.dim));
      continue;
    }
    if (line.tokens.size() != 4) throw ParseError("gap rows are 'gap <t_start> <t_end> <kept>'", line.number);
    try {
      file.gaps.push_back({to_double(line.tokens[1], line.number), to_double(line.tokens[2], line.number),
                           parse_kept_end(line.tokens[3])});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  return file;
}

WorldLineFile load_worldline_file(const std::string& path) {
  auto in = open_input(path);
  return read_worldline_file(in);
}

void write_worldline_file(std::ostream& out, const WorldLineFile& file) {
  write_event_header(out, file.dim, file.spec);
  for (const Event& e : file.vertices) write_event_row(out, e);
  for (const GapRow& g : file.gaps) {
    out << "gap " << format_double(g.t_start) << ' ' << format_double(g.t_end) << ' '
        << to_string(g.kept) << '\n';
  }
}

PolyWorldLine to_polyline(const WorldLineFile& file) {
  return make_polyline(file.vertices, file.spec.c);
}

GapWorldLine to_gap_worldline(const WorldLineFile& file) {
  const PolyWorldLine wl = to_polyline(file);
  const auto segments = light_segments(wl);
  if (segments.size() != file.gaps.size()) {
    throw PreconditionError("world line has " + std::to_string(segments.size()) +
                            " light-like segments but the file lists " +
                            std::to_string(file.gaps.size()) + " gap rows");
  }
  std::vector<KeptEnd> kept;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].t_start != file.gaps[i].t_start || segments[i].t_end != file.gaps[i].t_end) {
      throw PreconditionError("gap row " + std::to_string(i) + " does not match light segment [" +
                              format_double(segments[i].t_start) + ", " +
                              format_double(segments[i].t_end) + "]");
    }
    kept.push_back(file.gaps[i].kept);
  }
  return make_gap_worldline(wl, kept);
}

void write_dot(std::ostream& out, std::size_t n, std::span<const Edge> edges) {
  out << "digraph hasse {\n";
  for (std::size_t i = 0; i < n; ++i) out << "  " << i << ";\n";
  for (const auto& [a, b] : edges) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
}

}  // namespace minkorder
