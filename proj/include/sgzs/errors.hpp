#ifndef SGZS_ERRORS_HPP_
#define SGZS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sgzs {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string const& msg) : std::runtime_error(msg) {}
};

// Cayley-table validation failures. Each carries the first witnessing
// position in row-major scan order.
class EntryOutOfRange : public Error {
 public:
  EntryOutOfRange(int i, int j, int value, int order)
      : Error("table entry (" + std::to_string(i) + "," + std::to_string(j)
              + ") = " + std::to_string(value) + " outside [0,"
              + std::to_string(order - 1) + "]"),
        row(i),
        col(j),
        value(value) {}
  int row;
  int col;
  int value;
};

class NotCommutative : public Error {
 public:
  NotCommutative(int i, int j)
      : Error("table is not symmetric at (" + std::to_string(i) + ","
              + std::to_string(j) + ")"),
        row(i),
        col(j) {}
  int row;
  int col;
};

class NotAssociative : public Error {
 public:
  NotAssociative(int i, int j, int k)
      : Error("associativity fails on (" + std::to_string(i) + ","
              + std::to_string(j) + "," + std::to_string(k) + ")"),
        a(i),
        b(j),
        c(k) {}
  int a;
  int b;
  int c;
};

// Quotient construction detected a congruence violation; impossible for a
// valid input, kept as a live check rather than an assumption.
class CongruenceViolation : public Error {
 public:
  using Error::Error;
};

class ComponentNotClosed : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotNilsemigroup : public Error {
 public:
  using Error::Error;
};

class NotArchimedean : public Error {
 public:
  using Error::Error;
};

class MultipleIdempotents : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotAMonoid : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class GapTooLarge : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, std::string const& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Always-on internal invariant check; failures signal a bug upstream, not
// bad user input.
inline void internal_check(bool cond, char const* what) {
  if (!cond) {
    throw Error(std::string("internal invariant violated: ") + what);
  }
}

}  // namespace sgzs

#endif  // SGZS_ERRORS_HPP_
