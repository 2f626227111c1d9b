#pragma once

// Small named algebras shared by the test files.  Indices are 0-based here.

#include "compatlie/compat.hpp"

namespace ex {

using namespace compatlie;

inline LieBracket bracket(int n, std::initializer_list<std::tuple<int, int, int, long>> entries) {
  LieBracket b(n);
  for (auto [i, j, k, v] : entries) b.add(i, j, k, Rational(v));
  return b;
}

// [e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1
inline LieBracket sl2() { return bracket(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}); }
// [e1,e2] = e2
inline LieBracket n2() { return bracket(2, {{0, 1, 1, 1}}); }
// [e1,e2] = e3
inline LieBracket heisenberg() { return bracket(3, {{0, 1, 2, 1}}); }

inline CompatiblePair sl2_pair() { return CompatiblePair(sl2(), sl2()); }
inline CompatiblePair n2_pair() { return CompatiblePair(n2(), LieBracket(2)); }
inline CompatiblePair abelian_pair(int n) { return CompatiblePair(LieBracket(n), LieBracket(n)); }

}  // namespace ex

namespace ex {

// [e1,e2] = e3 and [e1,e3] = e3, with a Nijenhuis operator for both whose
// square is not in span{Id, N}.
inline CompatiblePair nijenhuis_seed_pair() {
  return CompatiblePair(bracket(3, {{0, 1, 2, 1}}), bracket(3, {{0, 2, 2, 1}}));
}
inline Mat nijenhuis_seed() { return (Mat(3, 3) << -1, 0, 0, -1, -1, 0, -1, -1, -1).finished(); }

}  // namespace ex
