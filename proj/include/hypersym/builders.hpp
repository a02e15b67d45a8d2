#pragma once

#include <string>
#include <vector>

#include "hypersym/hypergroup.hpp"
#include "hypersym/monoid.hpp"

namespace hypersym {

/// The chain {0 < 1 < ... < n-1} under x + y = max(x, y); the finite
/// stand-in for idempotent max carriers.
FiniteCommutativeMonoid chain_max(int n);

/// The naturals truncated at `window`; addition is partial.
NaturalsWindow naturals_window(int window);

/// Componentwise product; element (a, b) has index a * order(second) + b.
FiniteCommutativeMonoid product(const FiniteCommutativeMonoid& first,
                                const FiniteCommutativeMonoid& second);

/// Validates the table and additionally requires every element to be
/// invertible; throws NotAGroup with the first non-invertible element.
FiniteCommutativeMonoid group_as_monoid(std::vector<std::vector<int>> table,
                                        std::string name = {});

/// The cyclic group of order n, as a monoid.
FiniteCommutativeMonoid cyclic_group(int n);

/// The closed-form hypergroup on {0, +1, ..., +(n-1), -1, ..., -(n-1)}
/// expected from symmetrizing an n-element max-chain: the larger magnitude
/// wins, x + x = x, and x + (-x) is the whole interval [-x, x]. Built
/// directly from that case split, independently of symmetrize.
FiniteHypergroup signed_chain_hypergroup(int n);

/// Integers in [-window, window] with partial singleton addition; the
/// expected value oracle for symmetrized natural-number windows.
class IntegerWindow {
 public:
  explicit IntegerWindow(int window);

  int window() const { return window_; }
  bool contains(int v) const { return v >= -window_ && v <= window_; }

  /// Throws WindowOverflow when an operand or the result leaves the window.
  int sum(int a, int b) const;

  /// The singleton cell {a + b}, as a hypergroup-style view.
  std::vector<int> cell(int a, int b) const { return {sum(a, b)}; }

 private:
  int window_;
};

IntegerWindow integer_window(int window);

}  // namespace hypersym
