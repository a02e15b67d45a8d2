#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypersym {

/// Base class for all library errors. Mathematical verdicts (a failed axiom,
/// a missing witness, ...) are returned as data; exceptions are reserved for
/// misuse and for operations whose contract cannot be met at all.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partial addition left the carrier window.
class WindowOverflow final : public Error {
 public:
  WindowOverflow(int lhs_in, int rhs_in)
      : Error("sum " + std::to_string(lhs_in) + " + " + std::to_string(rhs_in) +
              " is not representable inside the window"),
        lhs(lhs_in),
        rhs(rhs_in) {}
  int lhs;
  int rhs;
};

/// A Cayley table failed monoid validation; `witness` holds the offending
/// pair (commutativity) or triple (associativity), and is empty for a
/// missing identity.
class MonoidValidationError final : public Error {
 public:
  enum class Kind { NotCommutative, NotAssociative, NoIdentity };

  MonoidValidationError(Kind kind_in, std::vector<int> witness_in, const std::string& message)
      : Error(message), kind(kind_in), witness(std::move(witness_in)) {}
  Kind kind;
  std::vector<int> witness;
};

/// split_witness was asked about a quadruple with x + y != u + v.
class NotBalanced final : public Error {
 public:
  NotBalanced(int x_in, int y_in, int u_in, int v_in)
      : Error("quadruple is not balanced: " + std::to_string(x_in) + " + " +
              std::to_string(y_in) + " != " + std::to_string(u_in) + " + " +
              std::to_string(v_in)),
        x(x_in),
        y(y_in),
        u(u_in),
        v(v_in) {}
  int x, y, u, v;
};

/// The splitting condition fails on the recorded quadruple (x + y = u + v
/// with no splitting element z).
class SplittingFailed final : public Error {
 public:
  SplittingFailed(int x_in, int y_in, int u_in, int v_in)
      : Error("splitting condition fails on x=" + std::to_string(x_in) +
              " y=" + std::to_string(y_in) + " u=" + std::to_string(u_in) +
              " v=" + std::to_string(v_in)),
        x(x_in),
        y(y_in),
        u(u_in),
        v(v_in) {}
  int x, y, u, v;
};

/// Forced symmetrization needs a total divisibility preorder; (x, y) is an
/// incomparable pair, i.e. a mixed-sign cell that would be empty.
class NotTotal final : public Error {
 public:
  NotTotal(int x_in, int y_in)
      : Error("divisibility preorder is not total: " + std::to_string(x_in) +
              " and " + std::to_string(y_in) + " are incomparable"),
        x(x_in),
        y(y_in) {}
  int x, y;
};

/// A candidate map into a hypergroup is not additive; (a, b) is the failing
/// pair (a = b = identity encodes a neutral-element violation).
class NotAdditive final : public Error {
 public:
  NotAdditive(int a_in, int b_in, const std::string& message)
      : Error(message), a(a_in), b(b_in) {}
  int a, b;
};

class TargetMismatch final : public Error {
 public:
  TargetMismatch(int first_in, int second_in)
      : Error("decompositions have different targets: " + std::to_string(first_in) +
              " vs " + std::to_string(second_in)),
        first(first_in),
        second(second_in) {}
  int first, second;
};

class InvalidCertificate final : public Error {
 public:
  using Error::Error;
};

class SizeMismatch final : public Error {
 public:
  SizeMismatch(int lhs_in, int rhs_in)
      : Error("carriers differ in size: " + std::to_string(lhs_in) + " vs " +
              std::to_string(rhs_in)),
        lhs(lhs_in),
        rhs(rhs_in) {}
  int lhs, rhs;
};

class OrderTooLarge final : public Error {
 public:
  OrderTooLarge(int order_in, const std::string& message)
      : Error(message), order(order_in) {}
  int order;
};

/// group_as_monoid received a monoid with a non-invertible element.
class NotAGroup final : public Error {
 public:
  explicit NotAGroup(int witness_in)
      : Error("element " + std::to_string(witness_in) + " has no inverse"),
        witness(witness_in) {}
  int witness;
};

/// Malformed input: JSON files, builtin carrier specs, decomposition strings.
class ParseError final : public Error {
 public:
  using Error::Error;
};

}  // namespace hypersym
