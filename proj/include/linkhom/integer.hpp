#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace linkhom {

/// Arbitrary-precision signed integer used for every coefficient and matrix
/// entry in the library.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& z) { return z.str(); }

/// Returns the value as int64 when it fits.
inline std::optional<std::int64_t> as_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(z);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace linkhom
