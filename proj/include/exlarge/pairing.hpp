#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "exlarge/finset.hpp"

namespace exlarge {

/// d(d+1)/2, throwing on overflow.
inline Natural triangular(Natural d) {
  unsigned __int128 t = static_cast<unsigned __int128>(d) * (d + 1) / 2;
  if (t > std::numeric_limits<Natural>::max()) throw std::overflow_error("triangular number overflow");
  return static_cast<Natural>(t);
}

/// Cantor pairing <x,y> = d(d+1)/2 + y on the diagonal d = x + y.
inline Natural pair(Natural x, Natural y) {
  if (x > std::numeric_limits<Natural>::max() - y) throw std::overflow_error("pair overflow");
  Natural t = triangular(x + y);
  if (t > std::numeric_limits<Natural>::max() - y) throw std::overflow_error("pair overflow");
  return t + y;
}

/// Largest d with d(d+1)/2 <= n.
inline Natural diagonal_of(Natural n) {
  auto d = static_cast<Natural>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  auto tri = [](Natural k) { return static_cast<unsigned __int128>(k) * (k + 1) / 2; };
  while (d > 0 && tri(d) > n) --d;
  while (tri(d + 1) <= n) ++d;
  return d;
}

inline std::pair<Natural, Natural> unpair(Natural n) {
  Natural d = diagonal_of(n);
  Natural y = n - triangular(d);
  return {d - y, y};
}

}  // namespace exlarge
