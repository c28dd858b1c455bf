#ifndef SGZS_VERIFY_HPP_
#define SGZS_VERIFY_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "catalog.hpp"
#include "decomposition.hpp"
#include "green.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "version.hpp"
#include "zerosum.hpp"

namespace sgzs {

struct AnalyzeOptions {
  std::optional<int> cap;  // default: D + kappa + 2
};

namespace detail {

inline ClaimVerdict not_applicable(ClaimId id) { return ClaimVerdict{id, false, {}, {}}; }

inline ClaimVerdict verdict(ClaimId id, bool holds, std::string witness_on_fail) {
  ClaimVerdict v{id, true, holds, {}};
  if (!holds) {
    v.witness = std::move(witness_on_fail);
  }
  return v;
}

// Upper-bound claims on E share one shape. With E under the cap the
// comparison is direct. A capped-out E still decides the claim when the cap
// is at least the bound (E > cap >= bound); below that the cap is too small
// to tell and the claim is reported as not applicable.
inline ClaimVerdict egz_upper_claim(Semigroup const& s, InvariantReport const& r,
                                    ClaimId id, int bound, bool require_equality) {
  if (r.egz.has_value()) {
    bool holds = require_equality ? *r.egz == bound : *r.egz <= bound;
    std::string witness;
    if (!holds) {
      if (*r.egz > bound) {
        auto const w = egz_failure_witness(s, bound, r.kappa);
        witness = "length-" + std::to_string(bound) + " sequence "
                  + (w.has_value() ? to_string(*w) : std::string("?"))
                  + " has no balanced subsequence";
      } else {
        witness = "E = " + std::to_string(*r.egz) + " is below "
                  + std::to_string(bound);
      }
    }
    return verdict(id, holds, std::move(witness));
  }
  if (r.egz_cap >= bound) {
    auto const w = egz_failure_witness(s, bound, r.kappa);
    return verdict(id, false,
                   "E exceeds cap " + std::to_string(r.egz_cap)
                       + "; length-" + std::to_string(bound) + " sequence "
                       + (w.has_value() ? to_string(*w) : std::string("?"))
                       + " has no balanced subsequence");
  }
  return not_applicable(id);
}

inline std::string ids_to_string(std::vector<element_id> const& ids) {
  std::string out = "{";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(ids[i]);
  }
  return out + "}";
}

}  // namespace detail

// Every applicable claim, evaluated on one semigroup. Exceptions out of a
// single check become a failed verdict rather than aborting the run.
inline std::vector<ClaimVerdict> check_claims(Semigroup const& s,
                                              InvariantReport const& r) {
  using detail::not_applicable;
  using detail::verdict;

  auto const nil_index = nilpotency(s);
  auto const split = elementary_split(s);
  std::optional<ArchimedeanData> arch_data;
  std::optional<std::string> arch_error;
  if (r.flags.archimedean) {
    try {
      arch_data = archimedean_data(s);
    } catch (Error const& e) {
      arch_error = e.what();
    }
  }

  auto eval = [&](ClaimId id) -> ClaimVerdict {
    switch (id) {
      case ClaimId::kProp2:
        return verdict(ClaimId::kProp2, r.big_d == r.small_d + 1,
                       "D = " + std::to_string(r.big_d) + ", d = "
                           + std::to_string(r.small_d));

      case ClaimId::kConj4:
        return detail::egz_upper_claim(s, r, ClaimId::kConj4,
                                       r.big_d + r.kappa - 1, false);

      case ClaimId::kConj5:
        if (!r.flags.monoid) {
          return not_applicable(ClaimId::kConj5);
        }
        return detail::egz_upper_claim(s, r, ClaimId::kConj5,
                                       r.big_d + r.kappa - 1, true);

      case ClaimId::kGroupFree:
        if (!r.flags.group_free) {
          return not_applicable(ClaimId::kGroupFree);
        }
        return detail::egz_upper_claim(s, r, ClaimId::kGroupFree,
                                       r.big_d + r.kappa - 1, false);

      case ClaimId::kNil:
        if (!r.flags.nil) {
          return not_applicable(ClaimId::kNil);
        }
        return detail::egz_upper_claim(s, r, ClaimId::kNil,
                                       r.big_d + r.kappa - 1, false);

      case ClaimId::kElementary:
        if (!r.flags.elementary) {
          return not_applicable(ClaimId::kElementary);
        }
        return detail::egz_upper_claim(s, r, ClaimId::kElementary,
                                       r.big_d + r.kappa - 1, true);

      case ClaimId::kArch:
        if (!r.flags.archimedean) {
          return not_applicable(ClaimId::kArch);
        }
        return detail::egz_upper_claim(s, r, ClaimId::kArch, r.big_d + r.kappa,
                                       false);

      case ClaimId::kArch3:
        if (!r.flags.archimedean) {
          return not_applicable(ClaimId::kArch3);
        }
        if (!arch_data.has_value()) {
          return verdict(ClaimId::kArch3, false,
                         "archimedean structure unavailable: "
                             + arch_error.value_or("unknown"));
        }
        if (arch_data->nilpotency_index_of_quotient > 3) {
          return not_applicable(ClaimId::kArch3);
        }
        return detail::egz_upper_claim(s, r, ClaimId::kArch3,
                                       r.big_d + r.kappa - 1, false);

      case ClaimId::kRees: {
        std::vector<std::vector<element_id>> ideals;
        if (s.order() <= 3) {
          for (unsigned mask = 1; mask < (1u << s.order()); ++mask) {
            std::vector<element_id> subset;
            for (element_id a = 0; a < s.order(); ++a) {
              if (mask & (1u << a)) {
                subset.push_back(a);
              }
            }
            if (is_ideal(s, subset)) {
              ideals.push_back(std::move(subset));
            }
          }
        } else {
          for (element_id a = 0; a < s.order(); ++a) {
            auto ideal = principal_ideal(s, a);
            if (std::find(ideals.begin(), ideals.end(), ideal) == ideals.end()) {
              ideals.push_back(std::move(ideal));
            }
          }
        }
        for (auto const& members : ideals) {
          auto const q = rees_quotient(s, Ideal{members});
          int const dq = davenport(q.target);
          if (dq > r.big_d) {
            return verdict(ClaimId::kRees, false,
                           "ideal " + detail::ids_to_string(members) + ": D(S) = "
                               + std::to_string(r.big_d) + " < D(S/I) = "
                               + std::to_string(dq));
          }
        }
        return verdict(ClaimId::kRees, true, "");
      }

      case ClaimId::kLNil: {
        if (!r.flags.nil) {
          return not_applicable(ClaimId::kLNil);
        }
        int const l = *nil_index;
        return verdict(ClaimId::kLNil, l <= r.big_d && r.big_d <= l + 1,
                       "L = " + std::to_string(l) + ", D = "
                           + std::to_string(r.big_d));
      }

      case ClaimId::kGreenEq: {
        if (!r.flags.group_free) {
          return not_applicable(ClaimId::kGreenEq);
        }
        auto const part = green_classes(s);
        for (auto const& cls : part.classes) {
          if (cls.size() != 1) {
            return verdict(ClaimId::kGreenEq, false,
                           "class " + detail::ids_to_string(cls)
                               + " is not a singleton");
          }
        }
        return verdict(ClaimId::kGreenEq, true, "");
      }

      case ClaimId::kPropC: {
        auto const q = quotient_green(s);
        return verdict(ClaimId::kPropC, is_group_free(q.target),
                       "Green quotient has exponent "
                           + std::to_string(exponent(q.target)));
      }

      case ClaimId::kAnn: {
        if (!r.flags.nil) {
          return not_applicable(ClaimId::kAnn);
        }
        for (element_id a = 0; a < s.order(); ++a) {
          for (element_id b = 0; b < s.order(); ++b) {
            if (a == b || !green_leq(s, a, b) || green_leq(s, b, a)) {
              continue;
            }
            auto const ann_a = annihilator(s, a);
            auto const ann_b = annihilator(s, b);
            bool const strict = ann_b.size() < ann_a.size()
                                && std::includes(ann_a.begin(), ann_a.end(),
                                                 ann_b.begin(), ann_b.end());
            if (!strict) {
              return verdict(ClaimId::kAnn, false,
                             "pair (" + std::to_string(a) + ","
                                 + std::to_string(b) + "): ann(b) = "
                                 + detail::ids_to_string(ann_b)
                                 + " not strictly inside ann(a) = "
                                 + detail::ids_to_string(ann_a));
            }
          }
        }
        return verdict(ClaimId::kAnn, true, "");
      }

      case ClaimId::kAct: {
        if (!r.flags.elementary) {
          return not_applicable(ClaimId::kAct);
        }
        auto const nil_sub = restrict_to(s, split->nil_part);
        auto const classes = p_classes(nil_sub.sg);
        for (element_id g : split->group_part) {
          for (auto const& cls : classes.classes) {
            std::set<element_id> image;
            std::set<element_id> original;
            for (element_id local : cls) {
              original.insert(nil_sub.members[local]);
              image.insert(s.sum(g, nil_sub.members[local]));
            }
            if (image != original) {
              return verdict(ClaimId::kAct, false,
                             "g = " + std::to_string(g)
                                 + " does not permute class "
                                 + detail::ids_to_string(std::vector<element_id>(
                                     original.begin(), original.end())));
            }
          }
        }
        return verdict(ClaimId::kAct, true, "");
      }

      case ClaimId::kAddNil: {
        if (!r.flags.nil) {
          return not_applicable(ClaimId::kAddNil);
        }
        element_id const zero = *special_elements(s).zero;
        for (element_id a = 0; a < s.order(); ++a) {
          for (element_id b = 0; b < s.order(); ++b) {
            if (s.sum(a, b) == a && a != zero) {
              return verdict(ClaimId::kAddNil, false,
                             "a = " + std::to_string(a) + ", b = "
                                 + std::to_string(b)
                                 + " absorb without a being the zero");
            }
          }
        }
        return verdict(ClaimId::kAddNil, true, "");
      }

      case ClaimId::kMonoidLB: {
        if (!r.flags.monoid) {
          return not_applicable(ClaimId::kMonoidLB);
        }
        auto const lb = egz_lower_bound_monoid(s);
        bool holds = lb.certified;
        if (r.egz.has_value() && *r.egz < lb.value) {
          holds = false;
        }
        return verdict(ClaimId::kMonoidLB, holds,
                       "extremal sequence " + to_string(lb.extremal)
                           + " failed to certify E >= "
                           + std::to_string(lb.value));
      }
    }
    return not_applicable(id);
  };

  std::vector<ClaimVerdict> out;
  out.reserve(kAllClaims.size());
  for (ClaimId id : kAllClaims) {
    try {
      out.push_back(eval(id));
    } catch (Error const& e) {
      out.push_back(verdict(id, false, std::string("check aborted: ") + e.what()));
    }
  }
  return out;
}

inline InvariantReport analyze(Semigroup const& s, AnalyzeOptions const& opt = {}) {
  InvariantReport r;
  r.order = s.order();
  r.exp = exponent(s);
  r.kappa = kappa(s);
  r.big_d = davenport(s);
  r.small_d = small_davenport(s);
  r.egz_cap = opt.cap.value_or(r.big_d + r.kappa + 2);
  r.egz = egz_constant(s, r.egz_cap).value;
  r.flags.group_free = is_group_free(s);
  r.flags.nil = nilpotency(s).has_value();
  r.flags.archimedean = is_archimedean(s);
  r.flags.elementary = elementary_split(s).has_value();
  r.flags.monoid = special_elements(s).identity.has_value();
  r.flags.group = is_group(s);
  r.claims = check_claims(s, r);
  return r;
}

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline InvariantReport analyze_file(std::string const& path,
                                    AnalyzeOptions const& opt = {}) {
  return analyze(parse(read_file(path)), opt);
}

struct VerifyConfig {
  std::optional<int> order;        // generate a catalog of this order
  std::optional<std::string> dir;  // or read every file in this directory
  std::optional<int> cap;
  int jobs = 1;
};

struct EntryResult {
  std::string source;                    // "generated" or a file path
  std::optional<std::string> canonical;  // canonical form, printable
  std::optional<InvariantReport> report;
  std::optional<std::string> error;  // parse/validation failure
};

struct RunAggregate {
  int entries = 0;
  int entries_failed = 0;
  int claims_applicable = 0;
  int claims_held = 0;
  int claims_failed = 0;
  int theorem_failures = 0;
  int conjecture_failures = 0;
};

struct RunReport {
  std::string tool_version;
  VerifyConfig config;
  std::vector<EntryResult> entries;
  RunAggregate aggregate;
  double wall_ms = 0.0;
};

// Analyzes every catalog entry on a bounded worker pool. Entries are ordered
// by canonical form before the workers start, so results are deterministic
// whatever the schedule; per-entry failures are isolated into the report.
inline RunReport run_verification(VerifyConfig const& config) {
  auto const t0 = std::chrono::steady_clock::now();
  RunReport run;
  run.tool_version = kVersion;
  run.config = config;

  struct Job {
    std::string source;
    std::optional<Semigroup> semigroup;
    std::optional<std::string> canonical;
    std::optional<std::string> error;
  };
  std::vector<Job> jobs;

  if (config.order.has_value()) {
    for (auto& entry : generate_commutative(*config.order)) {
      jobs.push_back(Job{"generated", std::move(entry.semigroup),
                         entry.canonical.to_string(), {}});
    }
  } else if (config.dir.has_value()) {
    std::vector<std::string> paths;
    for (auto const& item : std::filesystem::directory_iterator(*config.dir)) {
      if (item.is_regular_file()) {
        paths.push_back(item.path().string());
      }
    }
    std::sort(paths.begin(), paths.end());
    for (auto const& path : paths) {
      Job job;
      job.source = path;
      try {
        job.semigroup = parse(read_file(path));
        job.canonical = canonical_form(*job.semigroup).to_string();
      } catch (Error const& e) {
        job.semigroup.reset();
        job.error = e.what();
      }
      jobs.push_back(std::move(job));
    }
  } else {
    throw Error("verification needs either an order or a directory");
  }

  std::sort(jobs.begin(), jobs.end(), [](Job const& a, Job const& b) {
    bool const a_ok = a.canonical.has_value();
    bool const b_ok = b.canonical.has_value();
    if (a_ok != b_ok) {
      return a_ok;  // analyzable entries first, failures last
    }
    if (a_ok && *a.canonical != *b.canonical) {
      return *a.canonical < *b.canonical;
    }
    return a.source < b.source;
  });

  std::vector<EntryResult> results(jobs.size());
  std::atomic<size_t> next{0};
  int const workers = std::max(1, std::min<int>(config.jobs,
                                                static_cast<int>(jobs.size())));
  auto work = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      auto const& job = jobs[i];
      EntryResult out;
      out.source = job.source;
      out.canonical = job.canonical;
      if (job.error.has_value()) {
        out.error = job.error;
      } else {
        try {
          out.report = analyze(*job.semigroup, AnalyzeOptions{config.cap});
        } catch (Error const& e) {
          out.error = e.what();
        }
      }
      results[i] = std::move(out);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  run.entries = std::move(results);

  for (auto const& entry : run.entries) {
    ++run.aggregate.entries;
    if (entry.error.has_value()) {
      ++run.aggregate.entries_failed;
      continue;
    }
    for (auto const& claim : entry.report->claims) {
      if (!claim.applicable) {
        continue;
      }
      ++run.aggregate.claims_applicable;
      if (*claim.holds) {
        ++run.aggregate.claims_held;
      } else {
        ++run.aggregate.claims_failed;
        if (claim_is_conjecture(claim.id)) {
          ++run.aggregate.conjecture_failures;
        } else {
          ++run.aggregate.theorem_failures;
        }
      }
    }
  }
  run.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return run;
}

// Exit 3 on a failed proven statement, 2 on invalid input, 0 otherwise;
// conjecture counterexamples exit 0 and are flagged in the report instead.
inline int exit_code_for(RunReport const& run) {
  if (run.aggregate.theorem_failures > 0) {
    return 3;
  }
  if (run.aggregate.entries_failed > 0) {
    return 2;
  }
  return 0;
}

inline nlohmann::ordered_json to_json(ClaimVerdict const& v) {
  nlohmann::ordered_json j;
  j["id"] = claim_name(v.id);
  j["applicable"] = v.applicable;
  if (v.holds.has_value()) {
    j["holds"] = *v.holds;
  }
  if (v.witness.has_value()) {
    j["witness"] = *v.witness;
  }
  return j;
}

inline nlohmann::ordered_json to_json(InvariantReport const& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["exp"] = r.exp;
  j["kappa"] = r.kappa;
  j["small_d"] = r.small_d;
  j["big_d"] = r.big_d;
  if (r.egz.has_value()) {
    j["egz"] = *r.egz;
  } else {
    j["egz"] = nullptr;
  }
  j["egz_cap"] = r.egz_cap;
  j["flags"] = nlohmann::ordered_json{{"group_free", r.flags.group_free},
                                      {"nil", r.flags.nil},
                                      {"archimedean", r.flags.archimedean},
                                      {"elementary", r.flags.elementary},
                                      {"monoid", r.flags.monoid},
                                      {"group", r.flags.group}};
  j["claims"] = nlohmann::ordered_json::array();
  for (auto const& claim : r.claims) {
    j["claims"].push_back(to_json(claim));
  }
  return j;
}

inline nlohmann::ordered_json to_json(RunReport const& run) {
  nlohmann::ordered_json j;
  j["schema"] = "sgzs-report/1";
  j["tool_version"] = run.tool_version;
  nlohmann::ordered_json cfg;
  cfg["mode"] = run.config.order.has_value() ? "order" : "dir";
  if (run.config.order.has_value()) {
    cfg["order"] = *run.config.order;
  }
  if (run.config.dir.has_value()) {
    cfg["dir"] = *run.config.dir;
  }
  if (run.config.cap.has_value()) {
    cfg["cap"] = *run.config.cap;
  } else {
    cfg["cap"] = "default";
  }
  cfg["jobs"] = run.config.jobs;
  j["config"] = cfg;
  j["entries"] = nlohmann::ordered_json::array();
  for (auto const& entry : run.entries) {
    nlohmann::ordered_json e;
    e["source"] = entry.source;
    if (entry.canonical.has_value()) {
      e["canonical"] = *entry.canonical;
    }
    if (entry.error.has_value()) {
      e["error"] = *entry.error;
    }
    if (entry.report.has_value()) {
      e["report"] = to_json(*entry.report);
    }
    j["entries"].push_back(e);
  }
  j["aggregate"] = nlohmann::ordered_json{
      {"entries", run.aggregate.entries},
      {"entries_failed", run.aggregate.entries_failed},
      {"claims_applicable", run.aggregate.claims_applicable},
      {"claims_held", run.aggregate.claims_held},
      {"claims_failed", run.aggregate.claims_failed},
      {"theorem_failures", run.aggregate.theorem_failures},
      {"conjecture_failures", run.aggregate.conjecture_failures}};
  j["wall_ms"] = run.wall_ms;
  return j;
}

// One row per semigroup; claim columns hold 1/0 for holds/fails and '-' when
// not applicable.
inline std::string to_csv(RunReport const& run) {
  std::string out =
      "canonical,source,order,group_free,nil,archimedean,elementary,monoid,"
      "group,exp,kappa,small_d,big_d,egz,egz_cap";
  for (ClaimId id : kAllClaims) {
    out += ",";
    out += claim_name(id);
  }
  out += ",error\n";
  for (auto const& entry : run.entries) {
    out += "\"" + entry.canonical.value_or("") + "\",";
    out += "\"" + entry.source + "\",";
    if (entry.report.has_value()) {
      auto const& r = *entry.report;
      out += std::to_string(r.order) + ",";
      out += std::string(r.flags.group_free ? "1" : "0") + ",";
      out += std::string(r.flags.nil ? "1" : "0") + ",";
      out += std::string(r.flags.archimedean ? "1" : "0") + ",";
      out += std::string(r.flags.elementary ? "1" : "0") + ",";
      out += std::string(r.flags.monoid ? "1" : "0") + ",";
      out += std::string(r.flags.group ? "1" : "0") + ",";
      out += std::to_string(r.exp) + "," + std::to_string(r.kappa) + ",";
      out += std::to_string(r.small_d) + "," + std::to_string(r.big_d) + ",";
      out += (r.egz.has_value() ? std::to_string(*r.egz)
                                : std::string("cap_exceeded"));
      out += "," + std::to_string(r.egz_cap);
      for (auto const& claim : r.claims) {
        out += ",";
        out += !claim.applicable ? "-" : (*claim.holds ? "1" : "0");
      }
      out += ",";
    } else {
      // order through egz_cap: 13 empty fields, then 16 claim fields
      for (int i = 0; i < 12 + static_cast<int>(kAllClaims.size()); ++i) {
        out += ",";
      }
      out += ",";
    }
    if (entry.error.has_value()) {
      std::string msg = *entry.error;
      std::replace(msg.begin(), msg.end(), '"', '\'');
      out += "\"" + msg + "\"";
    }
    out += "\n";
  }
  return out;
}

inline std::string to_text(InvariantReport const& r) {
  std::string out;
  out += "order: " + std::to_string(r.order) + "\n";
  out += "exp: " + std::to_string(r.exp) + "\n";
  out += "kappa: " + std::to_string(r.kappa) + "\n";
  out += "small_d: " + std::to_string(r.small_d) + "\n";
  out += "big_d: " + std::to_string(r.big_d) + "\n";
  out += "egz: "
         + (r.egz.has_value() ? std::to_string(*r.egz)
                              : "cap " + std::to_string(r.egz_cap) + " exceeded")
         + " (cap " + std::to_string(r.egz_cap) + ")\n";
  out += "flags:";
  if (r.flags.group_free) out += " group_free";
  if (r.flags.nil) out += " nil";
  if (r.flags.archimedean) out += " archimedean";
  if (r.flags.elementary) out += " elementary";
  if (r.flags.monoid) out += " monoid";
  if (r.flags.group) out += " group";
  out += "\nclaims:\n";
  for (auto const& claim : r.claims) {
    out += "  ";
    out += claim_name(claim.id);
    out += std::string(10 - std::min<size_t>(9, std::string(claim_name(claim.id)).size()), ' ');
    if (!claim.applicable) {
      out += "-\n";
    } else if (*claim.holds) {
      out += "holds\n";
    } else {
      out += "FAILS";
      if (claim.witness.has_value()) {
        out += "  (" + *claim.witness + ")";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace sgzs

#endif  // SGZS_VERIFY_HPP_
