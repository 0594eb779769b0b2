#pragma once

#include <doctest.h>

#include "problem.hpp"

// Shorthands shared by the unit tests.
namespace th {

using namespace mfk;

inline RingPtr qring(std::vector<std::string> vars) {
  return Ring::make(std::move(vars), MonomialOrder::Grevlex);
}

inline Polynomial pp(const std::string &text, const RingPtr &ring) {
  return parse_polynomial(text, ring);
}

inline FreeModuleMap mat(const RingPtr &ring,
                         const std::vector<std::vector<std::string>> &rows) {
  return FreeModuleMap::from_literals(ring, rows);
}

inline QDim fin(unsigned long long n) { return QDim{true, n}; }
inline QDim inf() { return QDim{false, 0}; }

// Trivial cover {D(1)} of Spec of the ring.
inline CechCover trivial_cover(const RingPtr &ring) {
  return CechCover{ring, {Polynomial::constant(ring, 1)}};
}

inline CechCover cover_of(const RingPtr &ring,
                          const std::vector<std::string> &lits) {
  CechCover c{ring, {}};
  for (const auto &l : lits)
    c.denominators.push_back(pp(l, ring));
  return c;
}

} // namespace th
