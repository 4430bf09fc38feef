#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invdesc {

/// Size limits for the exhaustive enumerators. Brute-force routines refuse
/// inputs above these instead of running for hours.
struct OracleBounds {
  std::size_t yamanouchi_n = 14;
  std::size_t involution_n = 12;
  std::size_t ssyt_n = 8;
  std::size_t ssyt_s = 8;
  std::size_t standard_n = 8;
  std::size_t shape_n = 6;   // |lambda| for fixed-shape fillings and symfunc
  std::size_t shape_m = 4;   // alphabet size for fixed-shape fillings and symfunc
};

/// Raised when an enumeration request exceeds its configured bound.
class BoundsError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

inline void check_bound(std::size_t value, std::size_t bound, const char* what) {
  if (value > bound) {
    throw BoundsError(std::string(what) + " = " + std::to_string(value) +
                      " exceeds oracle bound " + std::to_string(bound));
  }
}

}  // namespace invdesc
