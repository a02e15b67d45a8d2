#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersym/errors.hpp"

namespace hypersym {

/// A commutative monoid presented through the operations needed to evaluate
/// signed sums: a zero, a (possibly partial) addition, exact division, and a
/// finite carrier {0, ..., carrier_size()-1}. Finite Cayley tables and
/// window-bounded infinite carriers both implement it.
class SolvableMonoid {
 public:
  virtual ~SolvableMonoid() = default;

  virtual int carrier_size() const = 0;
  virtual int zero() const = 0;

  /// Partial addition; empty when the result is not representable.
  virtual std::optional<int> try_add(int a, int b) const = 0;

  /// All z with z + b = a, ascending.
  virtual std::vector<int> div(int a, int b) const = 0;

  /// Total addition; throws WindowOverflow where try_add is empty.
  int add(int a, int b) const;

  /// The first `bound` carrier elements (all of them when bound < 0).
  std::vector<int> elements(int bound = -1) const;
};

/// A validated finite commutative monoid: carrier {0..n-1}, a symmetric
/// associative Cayley table, and the (auto-detected) identity element.
class FiniteCommutativeMonoid final : public SolvableMonoid {
 public:
  /// Checks commutativity, then associativity, then the existence of an
  /// identity; throws MonoidValidationError carrying a witness otherwise.
  static FiniteCommutativeMonoid validate(std::vector<std::vector<int>> table,
                                          std::string name = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int at(int x, int y) const { return table_[x][y]; }

  int carrier_size() const override { return order_; }
  int zero() const override { return identity_; }
  std::optional<int> try_add(int a, int b) const override;
  std::vector<int> div(int a, int b) const override;

  /// Equality of order and table; names are ignored.
  bool same_table(const FiniteCommutativeMonoid& other) const;

 private:
  FiniteCommutativeMonoid(std::vector<std::vector<int>> table, int identity, std::string name);

  std::vector<std::vector<int>> table_;
  int order_ = 0;
  int identity_ = 0;
  std::string name_;
};

/// The naturals {0, ..., window} under ordinary addition. Sums beyond the
/// window signal WindowOverflow instead of being truncated; truncation would
/// change the algebra.
class NaturalsWindow final : public SolvableMonoid {
 public:
  explicit NaturalsWindow(int window);

  int window() const { return window_; }
  int carrier_size() const override { return window_ + 1; }
  int zero() const override { return 0; }
  std::optional<int> try_add(int a, int b) const override;
  std::vector<int> div(int a, int b) const override;

 private:
  int window_;
};

struct PreorderReport {
  bool total = true;
  std::optional<std::pair<int, int>> counterexample;  // neither x <= y nor y <= x
};

struct CancellativityReport {
  bool cancellative = true;
  std::optional<std::array<int, 3>> counterexample;  // (x, y, a): x != y, x + a = y + a
};

struct IdempotencyReport {
  bool idempotent = true;
  std::optional<int> counterexample;  // x with x + x != x
};

/// Divisibility preorder: x <= y iff some z solves x + z = y.
bool leq(const SolvableMonoid& m, int x, int y);

/// Scans all pairs for comparability; first incomparable pair wins.
PreorderReport is_total(const SolvableMonoid& m);

/// Scans for x != y, a with x + a = y + a (sums that leave a window are
/// skipped). Witness order is lexicographic in (x, y, a).
CancellativityReport is_cancellative(const SolvableMonoid& m);

IdempotencyReport is_idempotent(const SolvableMonoid& m);

/// The unique b with a + b = 0, when it exists.
std::optional<int> inverse(const SolvableMonoid& m, int a);

}  // namespace hypersym
