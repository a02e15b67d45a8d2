#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypersym/monoid.hpp"

namespace hypersym {

/// A finite multivalued addition table: cell(x, y) is a nonempty sorted set
/// of element indices. Construction validates shape only; the algebraic laws
/// are the business of check_axioms, so defective tables can be loaded and
/// diagnosed rather than rejected.
class FiniteHypergroup {
 public:
  FiniteHypergroup(std::vector<std::string> labels, int neutral,
                   std::vector<std::vector<std::vector<int>>> table);

  int size() const { return static_cast<int>(labels_.size()); }
  int neutral() const { return neutral_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& cell(int x, int y) const {
    return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  const std::vector<std::vector<std::vector<int>>>& table() const { return table_; }

  bool operator==(const FiniteHypergroup&) const = default;

 private:
  std::vector<std::string> labels_;
  int neutral_ = 0;
  std::vector<std::vector<std::vector<int>>> table_;
};

/// Union of the cells a + b over a in xs, b in ys; sorted, deduplicated.
/// Both inputs must be nonempty subsets of the carrier.
std::vector<int> hypersum(const FiniteHypergroup& h, const std::vector<int>& xs,
                          const std::vector<int>& ys);

struct AxiomVerdict {
  bool ok = true;
  std::vector<int> witness;  // axiom-specific element indices
  std::string detail;
};

/// Verdicts for the five canonical-hypergroup axioms, each established by an
/// independent exhaustive scan: (1) commutativity, (2) associativity,
/// (3) neutrality, (4) existence and uniqueness of negatives,
/// (5) reversibility (x in y+z implies z in x-y).
///
/// When axiom (4) degenerates, (5) is read as: x-y is the union of x+y* over
/// every y* with 0 in y+y*, and fails outright when y has no such partner.
struct AxiomReport {
  std::array<AxiomVerdict, 5> axiom;

  const AxiomVerdict& verdict(int number) const {
    return axiom.at(static_cast<std::size_t>(number - 1));
  }
  bool all_pass() const;
  bool pass_one_to_four() const;
};

AxiomReport check_axioms(const FiniteHypergroup& h);

/// x -> -x (the unique axiom-(4) partner), when it is defined everywhere.
std::optional<std::vector<int>> negation_map(const FiniteHypergroup& h);

/// True iff every cell is a singleton.
bool is_group(const FiniteHypergroup& h);

struct HypergroupMorphism {
  FiniteHypergroup source;
  FiniteHypergroup target;
  std::vector<int> mapping;  // source index -> target index
};

struct MorphismReport {
  bool ok = true;
  std::array<int, 3> witness{};  // x, y, member of x+y whose image escapes
  std::string detail;
};

/// Checks mapping(0) = 0 and that the image of every member of x + y lies in
/// mapping(x) + mapping(y).
MorphismReport check_morphism(const HypergroupMorphism& h);

/// A neutral-preserving bijection with cell-wise equal tables, if one
/// exists; exhaustive over bijections (fine for carriers up to ~9). Throws
/// SizeMismatch when the carriers differ in size.
std::optional<std::vector<int>> isomorphic(const FiniteHypergroup& h, const FiniteHypergroup& k);

/// Cell-for-cell equality after matching element labels.
bool equal_up_to_labels(const FiniteHypergroup& h, const FiniteHypergroup& k);

/// The hypergroup with singleton cells taken from a monoid table; satisfies
/// the canonical axioms iff the monoid is a group.
FiniteHypergroup singleton_hypergroup(const FiniteCommutativeMonoid& m);

}  // namespace hypersym
