#include "minkorder/error.hpp"

#include <string>

namespace minkorder {

SpeedViolation::SpeedViolation(std::size_t segment, double speed, double c)
    : Error("segment " + std::to_string(segment) + " has speed " + std::to_string(speed) +
            " > c = " + std::to_string(c)),
      segment_(segment),
      speed_(speed) {}

InconsistentAnchors::InconsistentAnchors(std::size_t i, std::size_t j, double dh, double bound)
    : Error("anchors " + std::to_string(i) + " and " + std::to_string(j) + ": |dh| = " +
            std::to_string(dh) + " exceeds k*|dx| = " + std::to_string(bound)),
      i_(i),
      j_(j) {}

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace minkorder
