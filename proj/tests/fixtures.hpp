// Shared fixture semigroups. Element conventions:
//   N2    null semigroup {a, inf}:          a = 0, inf = 1
//   SL2   chain semilattice {e, f}:         e = 0 (identity), f = 1 (zero)
//   E3    C2 with a zero attached:          0_G = 0, g = 1, inf = 2
//   M3    monogenic, index 2, period 2:     x = 0, 2x = 1, 3x = 2
//   M3nil monogenic nil {a, 2a, inf}:       a = 0, 2a = 1, inf = 2
#ifndef SGZS_TESTS_FIXTURES_HPP_
#define SGZS_TESTS_FIXTURES_HPP_

#include <vector>

#include "sgzs/semigroup.hpp"

namespace fixtures {

using sgzs::element_id;
using sgzs::Semigroup;

inline Semigroup cyclic(int n) {
  std::vector<element_id> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      flat[static_cast<size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return Semigroup::from_flat(n, std::move(flat));
}

// C2 x C2; elements are 2-bit vectors, the operation is xor.
inline Semigroup klein() {
  std::vector<element_id> flat(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      flat[static_cast<size_t>(i) * 4 + j] = i ^ j;
    }
  }
  return Semigroup::from_flat(4, std::move(flat));
}

inline Semigroup z1() { return Semigroup::from_table({{0}}); }
inline Semigroup c2() { return cyclic(2); }
inline Semigroup c3() { return cyclic(3); }
inline Semigroup n2() { return Semigroup::from_table({{1, 1}, {1, 1}}); }
inline Semigroup sl2() { return Semigroup::from_table({{0, 1}, {1, 1}}); }
inline Semigroup e3() {
  return Semigroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
}
inline Semigroup m3() {
  return Semigroup::from_table({{1, 2, 1}, {2, 1, 2}, {1, 2, 1}});
}
inline Semigroup m3nil() {
  return Semigroup::from_table({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}});
}

struct Named {
  char const* name;
  Semigroup sg;
};

inline std::vector<Named> all() {
  return {{"Z1", z1()},   {"C2", c2()},   {"C3", c3()},
          {"N2", n2()},   {"SL2", sl2()}, {"E3", e3()},
          {"M3", m3()},   {"M3nil", m3nil()}};
}

}  // namespace fixtures

#endif  // SGZS_TESTS_FIXTURES_HPP_
