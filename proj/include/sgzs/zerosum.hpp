#ifndef SGZS_ZEROSUM_HPP_
#define SGZS_ZEROSUM_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace sgzs {

// A sequence over S is a finite multiset of elements, stored as a
// multiplicity vector. All enumeration below walks multiplicity vectors, so
// permutations of terms never appear twice.
struct Sequence {
  std::vector<int> multiplicity;

  static Sequence zeros(int order) {
    return Sequence{std::vector<int>(static_cast<size_t>(order), 0)};
  }

  static Sequence of(int order, std::vector<std::pair<element_id, int>> const& terms) {
    Sequence out = zeros(order);
    for (auto const& [e, m] : terms) {
      out.multiplicity[e] += m;
    }
    return out;
  }

  int length() const {
    int total = 0;
    for (int m : multiplicity) {
      total += m;
    }
    return total;
  }

  bool operator==(Sequence const&) const = default;
};

inline std::string to_string(Sequence const& seq) {
  std::string out;
  for (element_id e = 0; e < static_cast<int>(seq.multiplicity.size()); ++e) {
    if (seq.multiplicity[e] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(e) + "^" + std::to_string(seq.multiplicity[e]);
  }
  return out.empty() ? "(empty)" : out;
}

// S with an identity available: either S itself (a monoid) or S with a
// formal identity adjoined as the largest id. Partial sums live here so the
// empty partial sum needs no special flag, and the empty-subsequence
// convention (allowed only in monoids) falls out of the arithmetic.
struct AdjoinedMonoid {
  Semigroup s0;
  element_id identity;  // id in s0
  bool formal;          // true if the identity is not an element of S
};

inline AdjoinedMonoid adjoined_monoid(Semigroup const& s) {
  auto const id = special_elements(s).identity;
  if (id.has_value()) {
    return AdjoinedMonoid{s, *id, false};
  }
  return AdjoinedMonoid{adjoin_identity(s), s.order(), true};
}

struct SigmaResult {
  element_id value;
  bool defined;
};

// Sum of all terms; the empty sequence sums to the identity when one exists
// and is undefined otherwise.
inline SigmaResult sigma(Semigroup const& s, Sequence const& seq) {
  internal_check(static_cast<int>(seq.multiplicity.size()) == s.order(),
                 "sequence does not match the semigroup order");
  auto const m = adjoined_monoid(s);
  element_id acc = m.identity;
  bool nonempty = false;
  for (element_id e = 0; e < s.order(); ++e) {
    for (int k = 0; k < seq.multiplicity[e]; ++k) {
      acc = m.s0.sum(acc, e);
      nonempty = true;
    }
  }
  if (!nonempty && m.formal) {
    return SigmaResult{0, false};
  }
  return SigmaResult{acc, true};
}

// Enumerates the sub-multisets of seq, visiting each exactly once; fn gets
// the kept counts, the sum of the kept terms taken in the adjoined monoid,
// and whether the sub-multiset is all of seq. Returns true as soon as fn
// does.
inline bool scan_submultisets(
    Semigroup const& s, Sequence const& seq,
    std::function<bool(std::vector<int> const&, element_id, bool)> const& fn) {
  auto const m = adjoined_monoid(s);
  int const n = s.order();
  std::vector<int> kept(static_cast<size_t>(n), 0);
  std::function<bool(int, element_id, bool)> rec = [&](int e, element_id sum0,
                                                       bool full) -> bool {
    if (e == n) {
      return fn(kept, sum0, full);
    }
    element_id acc = sum0;
    for (int k = 0;; ++k) {
      kept[e] = k;
      if (rec(e + 1, acc, full && k == seq.multiplicity[e])) {
        return true;
      }
      if (k == seq.multiplicity[e]) {
        break;
      }
      acc = m.s0.sum(acc, e);
    }
    kept[e] = 0;
    return false;
  };
  return rec(0, m.identity, true);
}

// A nonempty sequence is reducible when some proper sub-multiset has the
// same sum. The empty sub-multiset qualifies only in monoids, which the
// adjoined-identity sum encodes by itself: a formal identity never equals a
// genuine sum.
inline bool is_reducible(Semigroup const& s, Sequence const& seq) {
  if (seq.length() == 0) {
    throw EmptyInput("reducibility is defined for nonempty sequences");
  }
  element_id const target = sigma(s, seq).value;
  return scan_submultisets(
      s, seq,
      [&](std::vector<int> const&, element_id sum0, bool full) {
        return !full && sum0 == target;
      });
}

// Depth-first enumeration of every irreducible sequence, extending by
// non-decreasing element id. Irreducibility is closed downward, so pruning
// reducible nodes loses nothing; multiplicities stay below each element's
// index + period, which bounds the search intrinsically.
inline std::vector<Sequence> enumerate_irreducible(Semigroup const& s) {
  std::vector<Sequence> out;
  Sequence cur = Sequence::zeros(s.order());
  std::function<void(element_id)> dfs = [&](element_id first) {
    for (element_id e = first; e < s.order(); ++e) {
      ++cur.multiplicity[e];
      if (!is_reducible(s, cur)) {
        out.push_back(cur);
        dfs(e);
      }
      --cur.multiplicity[e];
    }
  };
  dfs(0);
  return out;
}

inline int max_irreducible_length(Semigroup const& s) {
  int best = 0;
  for (auto const& seq : enumerate_irreducible(s)) {
    best = std::max(best, seq.length());
  }
  return best;
}

// Least length that forces reducibility: one more than the longest
// irreducible sequence.
inline int davenport(Semigroup const& s) { return max_irreducible_length(s) + 1; }

// Calls fn on every multiplicity vector over n elements with the given total
// length, in ascending lexicographic order.
inline void for_each_multiset(int n, int length,
                              std::function<void(Sequence const&)> const& fn) {
  Sequence cur = Sequence::zeros(n);
  std::function<void(int, int)> rec = [&](int e, int remaining) {
    if (e == n - 1) {
      cur.multiplicity[e] = remaining;
      fn(cur);
      cur.multiplicity[e] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur.multiplicity[e] = k;
      rec(e + 1, remaining - k);
    }
    cur.multiplicity[e] = 0;
  };
  rec(0, length);
}

// Smallest bound on the size of an equal-sum subset: for every sequence T
// some sub-multiset J with |J| minimal and sigma(J) = sigma(T); the answer
// is the worst such minimum. Scanning sequences up to one past the longest
// irreducible length covers every case, because a minimal J is itself
// irreducible. Deliberately not derived from davenport(), so the two can
// cross-check each other.
inline int small_davenport(Semigroup const& s) {
  int const bound = max_irreducible_length(s) + 1;
  int worst = 0;
  for (int len = 1; len <= bound; ++len) {
    for_each_multiset(s.order(), len, [&](Sequence const& t) {
      element_id const target = sigma(s, t).value;
      int best = len;  // J = T always works
      scan_submultisets(s, t,
                        [&](std::vector<int> const& kept, element_id sum0, bool) {
                          if (sum0 == target) {
                            int size = 0;
                            for (int k : kept) {
                              size += k;
                            }
                            best = std::min(best, size);
                          }
                          return false;
                        });
      worst = std::max(worst, best);
    });
  }
  return worst;
}

// ceil(|S| / exp(S)) * exp(S)
inline int kappa(Semigroup const& s) {
  int const e = exponent(s);
  return (s.order() + e - 1) / e * e;
}

// Whether some sub-multiset B leaves exactly `gap` terms out and keeps the
// full sum. Dynamic programming over (terms removed, partial sum in the
// adjoined monoid); an empty B is representable as the formal identity and
// therefore matches only in monoids.
inline bool balanced_subsequence_exists(Semigroup const& s, Sequence const& seq,
                                        int gap) {
  if (seq.length() == 0) {
    throw EmptyInput("balanced subsequence needs a nonempty sequence");
  }
  if (gap < 1) {
    throw Error("gap must be positive");
  }
  if (gap > seq.length()) {
    throw GapTooLarge("gap " + std::to_string(gap) + " exceeds length "
                      + std::to_string(seq.length()));
  }
  auto const m = adjoined_monoid(s);
  int const n0 = m.s0.order();
  element_id const target = sigma(s, seq).value;
  std::vector<std::vector<char>> reach(
      static_cast<size_t>(gap) + 1, std::vector<char>(static_cast<size_t>(n0), 0));
  reach[0][m.identity] = 1;
  for (element_id e = 0; e < s.order(); ++e) {
    int const avail = seq.multiplicity[e];
    if (avail == 0) {
      continue;
    }
    std::vector<std::vector<char>> next(
        static_cast<size_t>(gap) + 1,
        std::vector<char>(static_cast<size_t>(n0), 0));
    for (int r = 0; r <= gap; ++r) {
      for (element_id v = 0; v < n0; ++v) {
        if (!reach[r][v]) {
          continue;
        }
        element_id acc = v;
        for (int keep = 0;; ++keep) {
          int const removed = avail - keep;
          if (r + removed <= gap) {
            next[r + removed][acc] = 1;
          }
          if (keep == avail) {
            break;
          }
          acc = m.s0.sum(acc, e);
        }
      }
    }
    reach = std::move(next);
  }
  return reach[static_cast<size_t>(gap)][target] != 0;
}

// First sequence of the given length with no balanced sub-sequence at the
// given gap, in multiset enumeration order; nullopt when every sequence
// passes.
inline std::optional<Sequence> egz_failure_witness(Semigroup const& s, int length,
                                                   int gap) {
  std::optional<Sequence> witness;
  for_each_multiset(s.order(), length, [&](Sequence const& t) {
    if (!witness.has_value() && !balanced_subsequence_exists(s, t, gap)) {
      witness = t;
    }
  });
  return witness;
}

struct EgzOutcome {
  std::optional<int> value;  // nullopt: no length up to cap worked
  int cap;
};

// Least length forcing a balanced sub-sequence at gap kappa(S). The scan
// ascends from the best sound lower bound (kappa; for monoids the extremal
// padding construction pushes it to D + kappa - 1) and stops at the first
// length where every multiset passes; if a length passes, so does any longer
// one, by prepending the extra term to the kept part.
inline EgzOutcome egz_constant(Semigroup const& s, int cap) {
  int const k = kappa(s);
  if (cap < k) {
    throw Error("cap " + std::to_string(cap) + " is below kappa = "
                + std::to_string(k));
  }
  int start = k;
  if (special_elements(s).identity.has_value()) {
    start = std::max(start, davenport(s) + k - 1);
  }
  for (int len = start; len <= cap; ++len) {
    if (!egz_failure_witness(s, len, k).has_value()) {
      return EgzOutcome{len, cap};
    }
  }
  return EgzOutcome{std::nullopt, cap};
}

struct MonoidLowerBound {
  int value;          // D + kappa - 1
  Sequence extremal;  // length D + kappa - 2
  bool certified;     // extremal sequence admits no balanced sub-sequence
};

// In a monoid, a longest irreducible sequence padded with kappa - 1 copies
// of the identity has length D + kappa - 2 and no balanced sub-sequence at
// gap kappa, so no length below D + kappa - 1 can work. The construction is
// verified, not assumed.
inline MonoidLowerBound egz_lower_bound_monoid(Semigroup const& s) {
  auto const id = special_elements(s).identity;
  if (!id.has_value()) {
    throw NotAMonoid("the extremal padding construction needs an identity");
  }
  int const k = kappa(s);
  auto const irreducibles = enumerate_irreducible(s);
  Sequence extremal = Sequence::zeros(s.order());
  int longest = 0;
  for (auto const& seq : irreducibles) {
    if (seq.length() > longest) {
      longest = seq.length();
      extremal = seq;
    }
  }
  int const big_d = longest + 1;
  extremal.multiplicity[*id] += k - 1;
  bool certified;
  if (extremal.length() < k) {
    certified = true;  // no sequence this short can shed kappa terms
  } else {
    certified = !balanced_subsequence_exists(s, extremal, k);
  }
  return MonoidLowerBound{big_d + k - 1, std::move(extremal), certified};
}

}  // namespace sgzs

#endif  // SGZS_ZEROSUM_HPP_
