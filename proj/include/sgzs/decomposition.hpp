#ifndef SGZS_DECOMPOSITION_HPP_
#define SGZS_DECOMPOSITION_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "green.hpp"
#include "semigroup.hpp"

namespace sgzs {

// A sub-semigroup with the relabeling that produced it: sg element i is
// members[i] in the parent.
struct SubSemigroup {
  Semigroup sg;
  std::vector<element_id> members;  // ascending
};

inline SubSemigroup restrict_to(Semigroup const& s,
                                std::vector<element_id> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int const k = static_cast<int>(members.size());
  internal_check(k >= 1, "sub-semigroup needs at least one element");
  std::vector<int> pos(static_cast<size_t>(s.order()), -1);
  for (int i = 0; i < k; ++i) {
    pos[members[i]] = i;
  }
  std::vector<element_id> flat(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      element_id const v = s.sum(members[i], members[j]);
      internal_check(pos[v] >= 0, "subset is not closed under the operation");
      flat[static_cast<size_t>(i) * k + j] = pos[v];
    }
  }
  return SubSemigroup{Semigroup::from_flat(k, std::move(flat)),
                      std::move(members)};
}

inline bool is_group(Semigroup const& s) {
  auto const se = special_elements(s);
  if (!se.identity.has_value()) {
    return false;
  }
  for (element_id a = 0; a < s.order(); ++a) {
    bool invertible = false;
    for (element_id b = 0; b < s.order(); ++b) {
      if (s.sum(a, b) == *se.identity) {
        invertible = true;
        break;
      }
    }
    if (!invertible) {
      return false;
    }
  }
  return true;
}

struct Ideal {
  std::vector<element_id> members;  // ascending, nonempty
};

inline bool is_ideal(Semigroup const& s, std::vector<element_id> const& subset) {
  if (subset.empty()) {
    throw EmptyInput("ideal test needs a nonempty subset");
  }
  std::vector<char> in(static_cast<size_t>(s.order()), 0);
  for (element_id a : subset) {
    in[a] = 1;
  }
  for (element_id a : subset) {
    for (element_id x = 0; x < s.order(); ++x) {
      if (!in[s.sum(a, x)]) {
        return false;
      }
    }
  }
  return true;
}

// {a} united with a + S: the smallest ideal containing a.
inline std::vector<element_id> principal_ideal(Semigroup const& s, element_id a) {
  std::vector<char> in(static_cast<size_t>(s.order()), 0);
  in[a] = 1;
  for (element_id x = 0; x < s.order(); ++x) {
    in[s.sum(a, x)] = 1;
  }
  std::vector<element_id> out;
  for (element_id b = 0; b < s.order(); ++b) {
    if (in[b]) {
      out.push_back(b);
    }
  }
  return out;
}

// The kernel: intersection of all ideals, realized as the smallest principal
// ideal. Containment in every other principal ideal is checked, not assumed.
inline Ideal minimal_ideal(Semigroup const& s) {
  std::vector<element_id> best;
  for (element_id a = 0; a < s.order(); ++a) {
    auto cand = principal_ideal(s, a);
    if (best.empty() || cand.size() < best.size()) {
      best = std::move(cand);
    }
  }
  for (element_id b = 0; b < s.order(); ++b) {
    auto const other = principal_ideal(s, b);
    internal_check(std::includes(other.begin(), other.end(), best.begin(), best.end()),
                   "minimal ideal not contained in a principal ideal");
  }
  return Ideal{std::move(best)};
}

// Rees quotient: the ideal collapses to a single zero element, which gets
// the largest target id; all other elements keep their relative order.
inline QuotientMap rees_quotient(Semigroup const& s, Ideal const& ideal) {
  if (!is_ideal(s, ideal.members)) {
    throw NotAnIdeal("Rees quotient requires an ideal");
  }
  int const n = s.order();
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (element_id a : ideal.members) {
    in[a] = 1;
  }
  int const k = n - static_cast<int>(ideal.members.size());  // zero id = k
  std::vector<element_id> proj(static_cast<size_t>(n));
  std::vector<element_id> rep(static_cast<size_t>(k) + 1);
  int next = 0;
  for (element_id a = 0; a < n; ++a) {
    if (in[a]) {
      proj[a] = k;
    } else {
      proj[a] = next;
      rep[next] = a;
      ++next;
    }
  }
  rep[k] = ideal.members[0];
  int const m = k + 1;
  std::vector<element_id> flat(static_cast<size_t>(m) * m);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      flat[static_cast<size_t>(u) * m + v] = proj[s.sum(rep[u], rep[v])];
    }
  }
  QuotientMap out{Semigroup::from_flat(m, std::move(flat)), std::move(proj)};
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      if (out.projection[s.sum(a, b)]
          != out.target.sum(out.projection[a], out.projection[b])) {
        throw CongruenceViolation("Rees projection is not a homomorphism");
      }
    }
  }
  return out;
}

// Nilpotency index: least t with |S + ... + S| = 1 (t summands), provided S
// has a zero and the singleton is that zero. Iterates the set sequence until
// it collapses or revisits a set.
inline std::optional<int> nilpotency(Semigroup const& s) {
  auto const se = special_elements(s);
  if (!se.zero.has_value()) {
    return std::nullopt;
  }
  int const n = s.order();
  std::vector<char> cur(static_cast<size_t>(n), 1);  // sums of one term: all of S
  std::set<std::vector<char>> seen;
  for (int t = 1;; ++t) {
    if (std::count(cur.begin(), cur.end(), 1) == 1) {
      internal_check(cur[*se.zero] == 1, "length-t sums collapsed off the zero");
      return t;
    }
    if (!seen.insert(cur).second) {
      return std::nullopt;
    }
    std::vector<char> next(static_cast<size_t>(n), 0);
    for (element_id a = 0; a < n; ++a) {
      if (!cur[a]) {
        continue;
      }
      for (element_id x = 0; x < n; ++x) {
        next[s.sum(a, x)] = 1;
      }
    }
    cur = std::move(next);
  }
}

// The annihilator of a, taken in S with an identity adjoined: all x there
// with x + a = zero. Ids refer to adjoin_identity(s).
inline std::vector<element_id> annihilator(Semigroup const& s, element_id a) {
  if (!nilpotency(s).has_value()) {
    throw NotNilsemigroup("annihilators are defined on nilsemigroups");
  }
  Semigroup const s0 = adjoin_identity(s);
  element_id const zero = *special_elements(s).zero;
  std::vector<element_id> out;
  for (element_id x = 0; x < s0.order(); ++x) {
    if (s0.sum(x, a) == zero) {
      out.push_back(x);
    }
  }
  return out;
}

// Partition of a nilsemigroup by equal annihilators. The zero is always a
// class of its own.
inline Partition p_classes(Semigroup const& s) {
  if (!nilpotency(s).has_value()) {
    throw NotNilsemigroup("annihilator classes are defined on nilsemigroups");
  }
  int const n = s.order();
  std::vector<std::vector<element_id>> ann(static_cast<size_t>(n));
  for (element_id a = 0; a < n; ++a) {
    ann[a] = annihilator(s, a);
  }
  std::vector<int> label(static_cast<size_t>(n));
  for (element_id a = 0; a < n; ++a) {
    label[a] = a;
    for (element_id b = 0; b < a; ++b) {
      if (ann[b] == ann[a]) {
        label[a] = label[b];
        break;
      }
    }
  }
  Partition out = normalize_partition(label);
  element_id const zero = *special_elements(s).zero;
  internal_check(out.classes[out.class_of[zero]].size() == 1,
                 "zero must be alone in its annihilator class");
  return out;
}

// All distinct multiples m*a, m >= 1 (the full pre-cycle plus cycle).
inline std::vector<char> multiples_mask(Semigroup const& s, element_id a) {
  std::vector<char> seen(static_cast<size_t>(s.order()), 0);
  element_id cur = a;
  while (!seen[cur]) {
    seen[cur] = 1;
    cur = s.sum(cur, a);
  }
  return seen;
}

// a is divided by b: some multiple of a equals b + x with x in S.
inline bool divides_multiple(Semigroup const& s, element_id a, element_id b) {
  auto const mult = multiples_mask(s, a);
  for (element_id x = 0; x < s.order(); ++x) {
    if (mult[s.sum(b, x)]) {
      return true;
    }
  }
  return false;
}

inline bool is_archimedean(Semigroup const& s) {
  for (element_id a = 0; a < s.order(); ++a) {
    for (element_id b = 0; b < s.order(); ++b) {
      if (!divides_multiple(s, a, b)) {
        return false;
      }
    }
  }
  return true;
}

struct SemilatticeDecomposition {
  Partition components;
  Semigroup semilattice;
};

// Finest semilattice decomposition: components are the classes of mutual
// divisibility, the quotient is idempotent and commutative. Every structural
// fact used along the way is re-checked on the concrete table.
inline SemilatticeDecomposition semilattice_decomposition(Semigroup const& s) {
  int const n = s.order();
  std::vector<std::vector<char>> div(static_cast<size_t>(n),
                                     std::vector<char>(static_cast<size_t>(n), 0));
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      div[a][b] = divides_multiple(s, a, b) ? 1 : 0;
    }
  }
  auto mutual = [&](element_id a, element_id b) { return div[a][b] && div[b][a]; };
  std::vector<int> label(static_cast<size_t>(n), -1);
  for (element_id a = 0; a < n; ++a) {
    if (label[a] >= 0) {
      continue;
    }
    label[a] = a;
    for (element_id b = a + 1; b < n; ++b) {
      if (label[b] < 0 && mutual(a, b)) {
        label[b] = a;
      }
    }
  }
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      if ((label[a] == label[b]) != static_cast<bool>(mutual(a, b))) {
        throw ComponentNotClosed("mutual divisibility is not transitive here");
      }
    }
  }
  Partition part = normalize_partition(label);
  int const k = static_cast<int>(part.classes.size());
  std::vector<element_id> flat(static_cast<size_t>(k) * k);
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      flat[static_cast<size_t>(c) * k + d] =
          part.class_of[s.sum(part.classes[c][0], part.classes[d][0])];
    }
  }
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      if (part.class_of[s.sum(a, b)]
          != flat[static_cast<size_t>(part.class_of[a]) * k + part.class_of[b]]) {
        throw ComponentNotClosed("component arithmetic is not well defined");
      }
    }
  }
  SemilatticeDecomposition out{std::move(part),
                               Semigroup::from_flat(k, std::move(flat))};
  for (auto const& members : out.components.classes) {
    auto const sub = restrict_to(s, members);
    internal_check(is_archimedean(sub.sg), "component is not archimedean");
  }
  for (element_id c = 0; c < out.semilattice.order(); ++c) {
    internal_check(out.semilattice.sum(c, c) == c, "semilattice element not idempotent");
  }
  internal_check(is_group_free(out.semilattice), "semilattice has a nontrivial subgroup");
  return out;
}

struct ArchimedeanData {
  element_id idempotent;
  std::vector<element_id> kernel;  // ascending
  Semigroup nil_quotient;          // Rees quotient by the kernel
  int nilpotency_index_of_quotient;
};

// H-class of an idempotent, as a group under the restricted operation.
inline Semigroup maximal_subgroup_at(Semigroup const& s, element_id e) {
  if (s.sum(e, e) != e) {
    throw NotIdempotent("maximal subgroup requires an idempotent");
  }
  Partition const part = green_classes(s);
  auto sub = restrict_to(s, part.classes[part.class_of[e]]);
  internal_check(is_group(sub.sg), "H-class of an idempotent must be a group");
  auto const id = special_elements(sub.sg).identity;
  internal_check(id.has_value() && sub.members[*id] == e,
                 "maximal subgroup identity differs from its idempotent");
  return sub.sg;
}

// Structure of a finite archimedean semigroup: unique idempotent e, kernel
// K = e + S = H_e (a group), and a nil Rees quotient S/K.
inline ArchimedeanData archimedean_data(Semigroup const& s) {
  if (!is_archimedean(s)) {
    throw NotArchimedean("archimedean structure requires an archimedean semigroup");
  }
  auto const se = special_elements(s);
  if (se.idempotents.size() != 1) {
    throw MultipleIdempotents("archimedean semigroup must have a unique idempotent, found "
                              + std::to_string(se.idempotents.size()));
  }
  element_id const e = se.idempotents[0];
  std::vector<char> in(static_cast<size_t>(s.order()), 0);
  for (element_id x = 0; x < s.order(); ++x) {
    in[s.sum(e, x)] = 1;
  }
  std::vector<element_id> kernel;
  for (element_id a = 0; a < s.order(); ++a) {
    if (in[a]) {
      kernel.push_back(a);
    }
  }
  Partition const part = green_classes(s);
  internal_check(kernel == part.classes[part.class_of[e]],
                 "kernel e + S differs from the H-class of e");
  internal_check(is_group(restrict_to(s, kernel).sg), "kernel is not a group");
  auto quotient = rees_quotient(s, Ideal{kernel});
  auto const nil_index = nilpotency(quotient.target);
  internal_check(nil_index.has_value(), "Rees quotient by the kernel is not nil");
  return ArchimedeanData{e, std::move(kernel), std::move(quotient.target),
                         *nil_index};
}

// e + a: the canonical retraction onto the kernel. Fixes kernel elements and
// is idempotent as a map.
inline element_id kernel_retraction(Semigroup const& s, ArchimedeanData const& data,
                                    element_id a) {
  return s.sum(data.idempotent, a);
}

struct ElementarySplit {
  std::vector<element_id> group_part;  // ascending; contains the identity
  std::vector<element_id> nil_part;    // ascending; contains the zero
};

// Split into a group G (the H-class of the identity) and a nil ideal N, when
// the semigroup is a disjoint union of both with matching identity and zero.
// Both parts must be nonempty; in particular a group is not split.
inline std::optional<ElementarySplit> elementary_split(Semigroup const& s) {
  auto const se = special_elements(s);
  if (!se.identity.has_value() || !se.zero.has_value()) {
    return std::nullopt;
  }
  Partition const part = green_classes(s);
  auto const& group_part = part.classes[part.class_of[*se.identity]];
  std::vector<char> in_group(static_cast<size_t>(s.order()), 0);
  for (element_id g : group_part) {
    in_group[g] = 1;
  }
  std::vector<element_id> nil_part;
  for (element_id a = 0; a < s.order(); ++a) {
    if (!in_group[a]) {
      nil_part.push_back(a);
    }
  }
  if (nil_part.empty()) {
    return std::nullopt;
  }
  auto const group_sub = restrict_to(s, group_part);
  if (!is_group(group_sub.sg)) {
    return std::nullopt;
  }
  if (!is_ideal(s, nil_part)) {
    return std::nullopt;
  }
  auto const nil_sub = restrict_to(s, nil_part);
  if (!nilpotency(nil_sub.sg).has_value()) {
    return std::nullopt;
  }
  auto const nil_zero = special_elements(nil_sub.sg).zero;
  if (!nil_zero.has_value() || nil_sub.members[*nil_zero] != *se.zero) {
    return std::nullopt;
  }
  return ElementarySplit{group_part, std::move(nil_part)};
}

}  // namespace sgzs

#endif  // SGZS_DECOMPOSITION_HPP_
