#ifndef SGZS_SEMIGROUP_HPP_
#define SGZS_SEMIGROUP_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace sgzs {

// Elements are dense integer ids 0..n-1 so that every hot loop is a flat
// array lookup.
using element_id = int;

// A finite commutative semigroup given by its Cayley table. Immutable after
// construction; construction validates symmetry first, then all n^3
// associativity identities. Quotients and sub-semigroups built elsewhere go
// through the same constructor, so every Semigroup in flight is genuine.
class Semigroup {
 public:
  static Semigroup from_table(std::vector<std::vector<element_id>> const& rows) {
    if (rows.empty()) {
      throw Error("order must be positive");
    }
    int const n = static_cast<int>(rows.size());
    std::vector<element_id> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (auto const& row : rows) {
      if (static_cast<int>(row.size()) != n) {
        throw Error("table must be square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat(n, std::move(flat));
  }

  static Semigroup from_flat(int n, std::vector<element_id> flat) {
    if (n < 1) {
      throw Error("order must be positive");
    }
    if (static_cast<int>(flat.size()) != n * n) {
      throw Error("table must be square");
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        element_id const v = flat[static_cast<size_t>(i) * n + j];
        if (v < 0 || v >= n) {
          throw EntryOutOfRange(i, j, v, n);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (flat[static_cast<size_t>(i) * n + j]
            != flat[static_cast<size_t>(j) * n + i]) {
          throw NotCommutative(i, j);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        element_id const ij = flat[static_cast<size_t>(i) * n + j];
        for (int k = 0; k < n; ++k) {
          element_id const jk = flat[static_cast<size_t>(j) * n + k];
          if (flat[static_cast<size_t>(ij) * n + k]
              != flat[static_cast<size_t>(i) * n + jk]) {
            throw NotAssociative(i, j, k);
          }
        }
      }
    }
    return Semigroup(n, std::move(flat));
  }

  int order() const noexcept { return n_; }

  element_id sum(element_id a, element_id b) const {
    return table_[static_cast<size_t>(a) * n_ + b];
  }

  std::vector<element_id> const& flat_table() const noexcept { return table_; }

  bool operator==(Semigroup const& other) const = default;

 private:
  Semigroup(int n, std::vector<element_id> flat)
      : n_(n), table_(std::move(flat)) {}

  int n_;
  std::vector<element_id> table_;
};

// Minimal r, t with r*a == (r+t)*a; r + t <= order + 1.
struct IndexPeriod {
  int index;
  int period;
};

// Linear iteration over the multiples of a, recording first-visit positions.
// The first repeated value closes the cycle: its first position is the
// index, the distance is the period.
inline IndexPeriod index_and_period(Semigroup const& s, element_id a) {
  int const n = s.order();
  std::vector<int> first_seen(static_cast<size_t>(n), 0);  // 0 = unseen
  element_id cur = a;
  for (int m = 1; m <= n + 1; ++m) {
    if (first_seen[cur] != 0) {
      return IndexPeriod{first_seen[cur], m - first_seen[cur]};
    }
    first_seen[cur] = m;
    cur = s.sum(cur, a);
  }
  throw Error("multiples of an element failed to cycle");  // unreachable
}

// k*a for k >= 1; k beyond the cycle is reduced via (index, period).
inline element_id multiple(Semigroup const& s, long long k, element_id a) {
  internal_check(k >= 1, "multiple requires k >= 1");
  auto const ip = index_and_period(s, a);
  if (k > ip.index) {
    k = ip.index + (k - ip.index) % ip.period;
  }
  element_id cur = a;
  for (long long m = 2; m <= k; ++m) {
    cur = s.sum(cur, a);
  }
  return cur;
}

// Least common multiple of the periods of all elements.
inline int exponent(Semigroup const& s) {
  long long e = 1;
  for (element_id a = 0; a < s.order(); ++a) {
    e = std::lcm(e, static_cast<long long>(index_and_period(s, a).period));
  }
  return static_cast<int>(e);
}

struct SpecialElements {
  std::optional<element_id> identity;
  std::optional<element_id> zero;
  std::vector<element_id> idempotents;  // ascending
};

inline SpecialElements special_elements(Semigroup const& s) {
  int const n = s.order();
  SpecialElements out;
  for (element_id e = 0; e < n; ++e) {
    bool is_identity = true;
    bool is_zero = true;
    for (element_id a = 0; a < n; ++a) {
      element_id const v = s.sum(e, a);
      if (v != a) {
        is_identity = false;
      }
      if (v != e) {
        is_zero = false;
      }
    }
    if (is_identity) {
      internal_check(!out.identity.has_value(), "two identity elements");
      out.identity = e;
    }
    if (is_zero) {
      internal_check(!out.zero.has_value(), "two zero elements");
      out.zero = e;
    }
    if (s.sum(e, e) == e) {
      out.idempotents.push_back(e);
    }
  }
  return out;
}

// S unchanged if it already has an identity, else S with a fresh identity
// adjoined as the largest element id.
inline Semigroup adjoin_identity(Semigroup const& s) {
  if (special_elements(s).identity.has_value()) {
    return s;
  }
  int const n = s.order();
  int const m = n + 1;
  std::vector<element_id> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      flat[static_cast<size_t>(i) * m + j] = s.sum(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    flat[static_cast<size_t>(i) * m + n] = i;
    flat[static_cast<size_t>(n) * m + i] = i;
  }
  flat[static_cast<size_t>(n) * m + n] = n;
  return Semigroup::from_flat(m, std::move(flat));
}

}  // namespace sgzs

#endif  // SGZS_SEMIGROUP_HPP_
