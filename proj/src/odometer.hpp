#pragma once

#include <cstdint>
#include <vector>

namespace schreier::detail {

// Advance cur lexicographically within [lo, hi] (last position fastest).
// Returns false once every tuple has been visited.
inline bool advance(std::vector<std::int64_t>& cur,
                    const std::vector<std::int64_t>& lo,
                    const std::vector<std::int64_t>& hi) {
  for (std::size_t pos = cur.size(); pos-- > 0;) {
    if (cur[pos] < hi[pos]) {
      ++cur[pos];
      return true;
    }
    cur[pos] = lo[pos];
  }
  return false;
}

}  // namespace schreier::detail
