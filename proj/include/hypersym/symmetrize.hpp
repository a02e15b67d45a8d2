#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypersym/hypergroup.hpp"
#include "hypersym/monoid.hpp"

namespace hypersym {

/// A monoid element with a formal sign. Canonical form stores the class of
/// (a, -1) as (a', +1) whenever a has the inverse a'; in particular
/// (0, -1) and (0, +1) are the same class.
struct SignedElement {
  int magnitude = 0;
  int sign = +1;  // +1 or -1

  friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

/// Orders by magnitude, positives before negatives.
bool operator<(const SignedElement& a, const SignedElement& b);

SignedElement canonical_signed(const SolvableMonoid& m, SignedElement s);

/// The signed sum of two signed elements, evaluated on the pair as given:
/// same-sign sums are singletons, a mixed sum (a, +1) + (b, -1) collects
/// {(z, +1) : z + b = a} and {(z, -1) : z + a = b}. Results are
/// canonicalized, sorted and deduplicated. Works over windowed carriers;
/// throws WindowOverflow when a same-sign sum is not representable.
std::vector<SignedElement> signed_sum(const SolvableMonoid& m, SignedElement x, SignedElement y);

/// A splitting element for the balanced quadruple (x, y, u, v):
/// Case One:  x + z = u and z + v = y;
/// Case Two:  x = u + z and v = z + y.
struct SplitWitness {
  enum class Case { One = 1, Two = 2 };
  Case which = Case::One;
  int z = 0;
};

struct SplitCounterexample {
  int x = 0, y = 0, u = 0, v = 0;
};

/// Scans z ascending, Case One before Case Two, so the result is
/// deterministic. Throws NotBalanced when x + y != u + v.
std::optional<SplitWitness> split_witness(const SolvableMonoid& m, int x, int y, int u, int v);

/// The splitting condition: every balanced quadruple has a witness.
/// Returns the lexicographically first failing quadruple, or nullopt when
/// the condition holds. Quadruples whose sums leave a window are skipped.
std::optional<SplitCounterexample> check_splitting(const SolvableMonoid& m);

struct SymmetrizationResult {
  FiniteHypergroup hypergroup;
  std::vector<int> injection;                   // monoid element -> carrier index
  std::vector<std::array<int, 2>> class_map;    // [element][0: +1, 1: -1] -> carrier index

  int class_of(SignedElement s) const {
    return class_map[static_cast<std::size_t>(s.magnitude)][s.sign < 0 ? 1 : 0];
  }
};

/// Builds the signed quotient carrier (one class per signed element, with
/// negatives of invertibles rewritten as positives of their inverses) and
/// the full signed-sum table. Requires the splitting condition, else throws
/// SplittingFailed. With force=true only totality of the divisibility
/// preorder is required (enough for every cell to be nonempty) and the
/// axiom checker can then locate whatever fails; non-total input throws
/// NotTotal.
SymmetrizationResult symmetrize(const FiniteCommutativeMonoid& m, bool force = false);

/// The classical group completion: pairs (a, b) modulo
/// (a, b) ~ (c, d)  iff  a + d + k = c + b + k for some k. On windowed
/// carriers k ranges over the window and the quotient is exact only when
/// the window is at least twice the largest input; the closed group table
/// is materialized only when every class sum stays representable.
struct GrothendieckResult {
  std::vector<std::pair<int, int>> class_reps;  // lexicographically least member per class
  int neutral_class = 0;                        // class of (0, 0)
  std::vector<int> unit_map;                    // a -> class of (a, 0)
  std::optional<FiniteCommutativeMonoid> group;
};

GrothendieckResult grothendieck_group(const SolvableMonoid& m);

/// Class of the pair (a, b), when both coordinates lie in the carrier.
std::optional<int> grothendieck_class_of(const GrothendieckResult& g, const SolvableMonoid& m,
                                         int a, int b);

/// Representative-wise class addition; empty when a sum leaves the window.
std::optional<int> grothendieck_class_add(const GrothendieckResult& g, const SolvableMonoid& m,
                                          int c1, int c2);

struct GrothendieckComparison {
  bool cancellative = false;
  bool s_is_group = false;
  std::optional<std::vector<int>> isomorphism;  // s(B) index -> class index, group case only
  bool equivalence_holds = false;
};

/// Checks, on one instance, that s(B) is a group iff the monoid is
/// cancellative, and in the group case exhibits an isomorphism between s(B)
/// and the Grothendieck group. Requires the splitting condition.
GrothendieckComparison compare_grothendieck(const FiniteCommutativeMonoid& m);

/// Extends an additive map g : B -> K (g(0) = 0 and g(a+b) in g(a) + g(b),
/// checked, else NotAdditive) to the morphism h on s(B) with h(i(a)) = g(a)
/// and h(-i(a)) = -g(a).
HypergroupMorphism extend_additive_map(const FiniteCommutativeMonoid& m,
                                       const SymmetrizationResult& sym,
                                       const FiniteHypergroup& target, const std::vector<int>& g);
HypergroupMorphism extend_additive_map(const FiniteCommutativeMonoid& m,
                                       const FiniteHypergroup& target, const std::vector<int>& g);

struct UniversalCheckReport {
  bool ok = true;
  int additive_maps = 0;  // number of additive g : B -> K found
  std::string detail;     // first violation, when any
};

/// For every additive g : B -> K (enumerated exhaustively), checks that the
/// extension is a morphism factoring through the injection and that it is
/// the unique such morphism (by enumerating all functions s(B) -> K).
UniversalCheckReport check_universal(const FiniteCommutativeMonoid& m,
                                     const FiniteHypergroup& target);

}  // namespace hypersym
