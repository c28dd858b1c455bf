#ifndef SGZS_REPORT_HPP_
#define SGZS_REPORT_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sgzs {

// The checkable statements, in fixed report order. The two CONJ entries are
// open statements: a failure there is a finding to report loudly, not a
// defect, and must not flip the process exit code.
enum class ClaimId {
  kProp2,    // big Davenport = small Davenport + 1
  kConj4,    // E <= D + kappa - 1
  kConj5,    // monoids: E = D + kappa - 1
  kGroupFree,   // group-free: E <= D + kappa - 1
  kNil,         // nilsemigroups: E <= D + kappa - 1
  kElementary,  // elementary: E = D + kappa - 1
  kArch,        // archimedean: E <= D + kappa
  kArch3,       // archimedean with L(S/K) <= 3: E <= D + kappa - 1
  kRees,        // D(S) >= D(S/I) for every ideal I
  kLNil,        // nilsemigroups: L <= D <= L + 1
  kGreenEq,     // group-free: Green classes are singletons
  kPropC,       // the Green quotient is group-free
  kAnn,         // nil, a strictly below b: ann(b) strictly inside ann(a)
  kAct,         // elementary: each group element permutes each annihilator class
  kAddNil,      // nil: a + b = a forces a = zero
  kMonoidLB,    // monoids: padding construction certifies E >= D + kappa - 1
};

inline constexpr std::array<ClaimId, 16> kAllClaims = {
    ClaimId::kProp2,  ClaimId::kConj4,   ClaimId::kConj5, ClaimId::kGroupFree,
    ClaimId::kNil,    ClaimId::kElementary, ClaimId::kArch,  ClaimId::kArch3,
    ClaimId::kRees,   ClaimId::kLNil,    ClaimId::kGreenEq, ClaimId::kPropC,
    ClaimId::kAnn,    ClaimId::kAct,     ClaimId::kAddNil, ClaimId::kMonoidLB,
};

inline char const* claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::kProp2: return "C-PROP2";
    case ClaimId::kConj4: return "C-CONJ4";
    case ClaimId::kConj5: return "C-CONJ5";
    case ClaimId::kGroupFree: return "C-GF";
    case ClaimId::kNil: return "C-NIL";
    case ClaimId::kElementary: return "C-ELEM";
    case ClaimId::kArch: return "C-ARCH";
    case ClaimId::kArch3: return "C-ARCH3";
    case ClaimId::kRees: return "C-REES";
    case ClaimId::kLNil: return "C-LNIL";
    case ClaimId::kGreenEq: return "C-GREEN";
    case ClaimId::kPropC: return "C-PROPC";
    case ClaimId::kAnn: return "C-ANN";
    case ClaimId::kAct: return "C-ACT";
    case ClaimId::kAddNil: return "C-ADDNIL";
    case ClaimId::kMonoidLB: return "C-MONLB";
  }
  return "?";
}

inline bool claim_is_conjecture(ClaimId id) {
  return id == ClaimId::kConj4 || id == ClaimId::kConj5;
}

struct ClaimVerdict {
  ClaimId id;
  bool applicable = false;
  std::optional<bool> holds;           // present iff applicable
  std::optional<std::string> witness;  // present iff holds == false
};

struct ClassificationFlags {
  bool group_free = false;
  bool nil = false;
  bool archimedean = false;
  bool elementary = false;
  bool monoid = false;
  bool group = false;
};

struct InvariantReport {
  int order = 0;
  int exp = 0;
  int kappa = 0;
  int small_d = 0;
  int big_d = 0;
  std::optional<int> egz;  // nullopt: every length up to egz_cap fails
  int egz_cap = 0;
  ClassificationFlags flags;
  std::vector<ClaimVerdict> claims;
};

}  // namespace sgzs

#endif  // SGZS_REPORT_HPP_
