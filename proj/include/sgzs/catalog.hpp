#ifndef SGZS_CATALOG_HPP_
#define SGZS_CATALOG_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace sgzs {

// Lexicographically minimal row-major table over all relabelings. Two
// semigroups are isomorphic exactly when their forms compare equal.
struct CanonicalForm {
  int order = 0;
  std::vector<uint8_t> bytes;

  auto operator<=>(CanonicalForm const&) const = default;

  std::string to_string() const {
    std::string out = std::to_string(order) + ":";
    for (size_t i = 0; i < bytes.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += std::to_string(static_cast<int>(bytes[i]));
    }
    return out;
  }

  // FNV-1a over the printable form; used for catalog file names.
  uint64_t hash() const {
    uint64_t h = 1469598103934665603ULL;
    for (char c : to_string()) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::string hash_hex() const {
    static char const* digits = "0123456789abcdef";
    uint64_t h = hash();
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
      out[i] = digits[h & 0xf];
      h >>= 4;
    }
    return out;
  }
};

inline Semigroup relabel(Semigroup const& s, std::vector<int> const& perm) {
  int const n = s.order();
  internal_check(static_cast<int>(perm.size()) == n, "permutation size mismatch");
  std::vector<element_id> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      flat[static_cast<size_t>(perm[i]) * n + perm[j]] = perm[s.sum(i, j)];
    }
  }
  return Semigroup::from_flat(n, std::move(flat));
}

// Explicit minimum over all n! relabelings; n is capped where factorial
// scan stops being a desk-scale operation.
inline CanonicalForm canonical_form(Semigroup const& s) {
  int const n = s.order();
  if (n > 8) {
    throw OrderTooLarge("canonical form supports order <= 8, got "
                        + std::to_string(n));
  }
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint8_t> best;
  std::vector<uint8_t> cand(static_cast<size_t>(n) * n);
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cand[static_cast<size_t>(perm[i]) * n + perm[j]] =
            static_cast<uint8_t>(perm[s.sum(i, j)]);
      }
    }
    if (best.empty() || cand < best) {
      best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalForm{n, std::move(best)};
}

inline Semigroup from_canonical(CanonicalForm const& form) {
  std::vector<element_id> flat(form.bytes.begin(), form.bytes.end());
  return Semigroup::from_flat(form.order, std::move(flat));
}

// Cayley-table text format:
//   line 1: the order n
//   next n lines: n space-separated entries in [0, n-1]
// '#' lines and blank lines are skipped; anything else is a SyntaxError with
// its 1-based physical line number.
inline Semigroup parse(std::string const& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<element_id>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (blank || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string tok;
    while (fields >> tok) {
      try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) {
          throw std::invalid_argument(tok);
        }
        values.push_back(v);
      } catch (std::exception const&) {
        throw SyntaxError(lineno, "expected an integer, got '" + tok + "'");
      }
    }
    if (n < 0) {
      if (values.size() != 1) {
        throw SyntaxError(lineno, "expected a single order on the first data line");
      }
      if (values[0] < 1 || values[0] > 4096) {
        throw SyntaxError(lineno, "order must be in [1, 4096]");
      }
      n = static_cast<int>(values[0]);
      continue;
    }
    if (static_cast<int>(rows.size()) == n) {
      throw SyntaxError(lineno, "extra data after " + std::to_string(n) + " rows");
    }
    if (static_cast<int>(values.size()) != n) {
      throw SyntaxError(lineno, "expected " + std::to_string(n) + " entries, got "
                                    + std::to_string(values.size()));
    }
    std::vector<element_id> row;
    row.reserve(values.size());
    for (long long v : values) {
      if (v < -(1LL << 30) || v > (1LL << 30)) {
        throw SyntaxError(lineno, "entry out of representable range");
      }
      row.push_back(static_cast<element_id>(v));
    }
    rows.push_back(std::move(row));
  }
  if (n < 0) {
    throw SyntaxError(lineno + 1, "missing order line");
  }
  if (static_cast<int>(rows.size()) != n) {
    throw SyntaxError(lineno + 1, "expected " + std::to_string(n) + " rows, got "
                                      + std::to_string(rows.size()));
  }
  return Semigroup::from_table(rows);
}

// No comments, single spaces, one trailing newline.
inline std::string serialize(Semigroup const& s) {
  std::string out = std::to_string(s.order()) + "\n";
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (j > 0) {
        out += ' ';
      }
      out += std::to_string(s.sum(i, j));
    }
    out += '\n';
  }
  return out;
}

struct CatalogEntry {
  Semigroup semigroup;
  CanonicalForm canonical;
  std::string source;  // "generated" or a file path
};

namespace detail {

// Backtracking over the upper triangle: diagonal cells first (the idempotent
// pattern splits the space early), then off-diagonal cells row by row. Every
// triple whose four lookups are determined is checked on the spot, so dead
// branches die as soon as a contradiction is expressible.
class CommutativeTableSearch {
 public:
  CommutativeTableSearch(int n, std::function<void(Semigroup)> emit)
      : n_(n), table_(static_cast<size_t>(n) * n, -1), emit_(std::move(emit)) {
    for (int i = 0; i < n_; ++i) {
      cells_.emplace_back(i, i);
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        cells_.emplace_back(i, j);
      }
    }
  }

  void run() { extend(0); }

 private:
  int at(int i, int j) const { return table_[static_cast<size_t>(i) * n_ + j]; }

  void set(int i, int j, int v) {
    table_[static_cast<size_t>(i) * n_ + j] = v;
    table_[static_cast<size_t>(j) * n_ + i] = v;
  }

  bool consistent() const {
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        int const xy = at(x, y);
        if (xy < 0) {
          continue;
        }
        for (int z = 0; z < n_; ++z) {
          int const yz = at(y, z);
          if (yz < 0) {
            continue;
          }
          int const left = at(xy, z);
          int const right = at(x, yz);
          if (left >= 0 && right >= 0 && left != right) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void extend(size_t cell) {
    if (cell == cells_.size()) {
      emit_(Semigroup::from_flat(n_, table_));
      return;
    }
    auto const [i, j] = cells_[cell];
    for (int v = 0; v < n_; ++v) {
      set(i, j, v);
      if (consistent()) {
        extend(cell + 1);
      }
    }
    table_[static_cast<size_t>(i) * n_ + j] = -1;
    table_[static_cast<size_t>(j) * n_ + i] = -1;
  }

  int n_;
  std::vector<int> table_;
  std::vector<std::pair<int, int>> cells_;
  std::function<void(Semigroup)> emit_;
};

}  // namespace detail

// Every commutative semigroup of order n, one representative per isomorphism
// class (the representative is its own canonical table), in canonical order.
inline std::vector<CatalogEntry> generate_commutative(int n) {
  if (n < 1 || n > 5) {
    throw OrderTooLarge("generation supports 1 <= order <= 5, got "
                        + std::to_string(n));
  }
  std::set<CanonicalForm> seen;
  detail::CommutativeTableSearch search(n, [&](Semigroup s) {
    seen.insert(canonical_form(s));
  });
  search.run();
  std::vector<CatalogEntry> out;
  out.reserve(seen.size());
  for (auto const& form : seen) {
    out.push_back(CatalogEntry{from_canonical(form), form, "generated"});
  }
  return out;
}

}  // namespace sgzs

#endif  // SGZS_CATALOG_HPP_
