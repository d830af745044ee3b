#ifndef XXZCORR_STATE_IO_HPP
#define XXZCORR_STATE_IO_HPP

#include "xxzcorr/qmat.hpp"

#include <iosfwd>
#include <string>

namespace xxz {

/// Intake tolerance for external states. Within it the trace is renormalized.
inline constexpr double kStateFileTolerance = 1e-8;

/// {"dim": 4, "entries": [[re, im], ...]} with 16 row-major entries.
/// Throws std::invalid_argument on malformed input or an invalid state.
[[nodiscard]] TwoQubitState read_state(std::istream& is);
[[nodiscard]] TwoQubitState read_state_file(const std::string& path);

/// Shortest round-trip decimal representation of every entry.
void write_state(std::ostream& os, const TwoQubitState& rho);
void write_state_file(const std::string& path, const TwoQubitState& rho);

}  // namespace xxz

#endif  // XXZCORR_STATE_IO_HPP
