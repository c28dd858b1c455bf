#ifndef SGZS_GREEN_HPP_
#define SGZS_GREEN_HPP_

#include <vector>

#include "semigroup.hpp"

namespace sgzs {

// A labeled partition of the element set. Classes are sorted internally and
// ordered by their minimal member, so partitions are deterministic.
struct Partition {
  std::vector<int> class_of;                     // element id -> class index
  std::vector<std::vector<element_id>> classes;  // ascending members
};

// Builds a Partition from an arbitrary labeling, renumbering classes by
// minimal member.
inline Partition normalize_partition(std::vector<int> const& raw_label) {
  int const n = static_cast<int>(raw_label.size());
  Partition out;
  out.class_of.assign(static_cast<size_t>(n), -1);
  std::vector<int> label_to_class;
  for (element_id a = 0; a < n; ++a) {
    int cls = -1;
    for (size_t c = 0; c < label_to_class.size(); ++c) {
      if (label_to_class[c] == raw_label[a]) {
        cls = static_cast<int>(c);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(label_to_class.size());
      label_to_class.push_back(raw_label[a]);
      out.classes.emplace_back();
    }
    out.class_of[a] = cls;
    out.classes[cls].push_back(a);
  }
  return out;
}

// Green's preorder: a <= b iff a = b + t for some t in S^0 (t may be the
// formal identity, i.e. a == b).
inline bool green_leq(Semigroup const& s, element_id a, element_id b) {
  if (a == b) {
    return true;
  }
  for (element_id t = 0; t < s.order(); ++t) {
    if (s.sum(b, t) == a) {
      return true;
    }
  }
  return false;
}

// Classes of mutual green_leq.
inline Partition green_classes(Semigroup const& s) {
  int const n = s.order();
  std::vector<int> label(static_cast<size_t>(n), -1);
  for (element_id a = 0; a < n; ++a) {
    if (label[a] >= 0) {
      continue;
    }
    label[a] = a;
    for (element_id b = a + 1; b < n; ++b) {
      if (label[b] < 0 && green_leq(s, a, b) && green_leq(s, b, a)) {
        label[b] = a;
      }
    }
  }
  return normalize_partition(label);
}

struct QuotientMap {
  Semigroup target;
  std::vector<element_id> projection;  // source element -> target element
};

inline bool is_group_free(Semigroup const& s) { return exponent(s) == 1; }

// Quotient by Green's congruence. Class representatives are the minimal
// member ids; well-definedness of the class operation is checked on every
// pair instead of being assumed.
inline QuotientMap quotient_green(Semigroup const& s) {
  Partition const part = green_classes(s);
  int const k = static_cast<int>(part.classes.size());
  std::vector<element_id> flat(static_cast<size_t>(k) * k);
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      flat[static_cast<size_t>(c) * k + d] =
          part.class_of[s.sum(part.classes[c][0], part.classes[d][0])];
    }
  }
  for (element_id a = 0; a < s.order(); ++a) {
    for (element_id b = 0; b < s.order(); ++b) {
      if (part.class_of[s.sum(a, b)]
          != flat[static_cast<size_t>(part.class_of[a]) * k + part.class_of[b]]) {
        throw CongruenceViolation("Green's relation is not a congruence here");
      }
    }
  }
  QuotientMap out{Semigroup::from_flat(k, std::move(flat)), part.class_of};
  internal_check(is_group_free(out.target), "Green quotient has a nontrivial subgroup");
  return out;
}

}  // namespace sgzs

#endif  // SGZS_GREEN_HPP_
