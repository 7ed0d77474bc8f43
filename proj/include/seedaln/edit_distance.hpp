#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace seedaln {

/// Outcome of a threshold-bounded distance computation: the exact
/// distance when it is <= the limit, nullopt when it provably exceeds it.
using DistanceOutcome = std::optional<int>;

/// Semi-global edit distance between `read` and the window: the read is
/// consumed fully, the window is anchored at its start and free at its
/// end (distance = min over window prefixes of the Levenshtein distance).
/// Unit costs; a position where either side is N never matches.
///
/// Runs in O(read_len * (result + 1)) time and O(d_limit) space via the
/// diagonal formulation: per edit count, only the farthest reachable read
/// position on each central diagonal is kept. Returns nullopt as soon as
/// the distance is known to exceed d_limit.
///
/// `cells` (optional) accumulates the number of DP cells touched.
/// Throws std::invalid_argument when d_limit < 0.
DistanceOutcome bounded_distance(std::string_view read,
                                 std::string_view reference_window,
                                 int d_limit, uint64_t* cells = nullptr);

/// Same semantics computed with the full O(n^2) table. Test oracle for
/// bounded_distance; no threshold, no early exit.
int full_dp_distance(std::string_view read, std::string_view reference_window);

}  // namespace seedaln
