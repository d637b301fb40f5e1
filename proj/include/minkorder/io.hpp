#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "minkorder/causal_set.hpp"
#include "minkorder/event.hpp"
#include "minkorder/hypersurface.hpp"
#include "minkorder/order.hpp"
#include "minkorder/worldline.hpp"

namespace minkorder {

/// `%.17g`: parses back to the same double.
std::string format_double(double v);

/// Event file:
///
///   dim=<n> c=<c> order=<causal|subluminal|temporal> dir=<fwd|bwd>
///   <t> <x1> ... <xn>
///
/// Blank lines and text after '#' are ignored. order and dir default to
/// causal and fwd when absent.
struct EventFile {
  std::size_t dim = 1;
  OrderSpec spec;
  std::vector<Event> events;
};

EventFile read_event_file(std::istream& in);
EventFile load_event_file(const std::string& path);
void write_event_file(std::ostream& out, const EventFile& file);
void save_event_file(const std::string& path, const EventFile& file);

/// Surface file: header `dim=<n> c=<c> k=<k>`, then `<h> <x1> ... <xn>` per
/// anchor.
Hypersurface read_surface_file(std::istream& in);
Hypersurface load_surface_file(const std::string& path);
void write_surface_file(std::ostream& out, const Hypersurface& hs);

/// World-line file: the event-file format with one vertex per line, plus
/// optional gap rows `gap <t_start> <t_end> <lower|upper|neither>` naming
/// light-like segments to open up.
struct GapRow {
  double t_start;
  double t_end;
  KeptEnd kept;
};

struct WorldLineFile {
  std::size_t dim = 1;
  OrderSpec spec;
  std::vector<Event> vertices;
  std::vector<GapRow> gaps;
};

WorldLineFile read_worldline_file(std::istream& in);
WorldLineFile load_worldline_file(const std::string& path);
void write_worldline_file(std::ostream& out, const WorldLineFile& file);

/// Polyline of the file, validated against its header c.
PolyWorldLine to_polyline(const WorldLineFile& file);

/// World line with the gap rows applied. The rows must list the light-like
/// segments of the polyline in time order, matching their end times exactly.
GapWorldLine to_gap_worldline(const WorldLineFile& file);

/// `digraph hasse { ... }` with nodes 0..n-1 and edges in the given order.
void write_dot(std::ostream& out, std::size_t n, std::span<const Edge> edges);

}  // namespace minkorder
