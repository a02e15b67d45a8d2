#pragma once

#include <optional>
#include <vector>

#include "hypersym/monoid.hpp"
#include "hypersym/symmetrize.hpp"

namespace hypersym {

/// An element written as an ordered sum of parts. Zero parts are permitted;
/// the parts list is never empty.
struct Decomposition {
  int target = 0;
  std::vector<int> parts;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Left-fold of parts[begin..end); throws WindowOverflow when a partial sum
/// leaves the window. The range must be nonempty.
int fold_sum(const SolvableMonoid& m, const std::vector<int>& parts, std::size_t begin,
             std::size_t end);

/// Folds the parts and records the target.
Decomposition make_decomposition(const SolvableMonoid& m, std::vector<int> parts);

/// Cut positions splitting a fine decomposition into consecutive nonempty
/// intervals, one per coarse part: cuts[i] is one past the last fine index
/// of interval i, so cuts is strictly increasing and ends at the fine length.
struct RefinementCertificate {
  std::vector<int> cuts;

  friend bool operator==(const RefinementCertificate&, const RefinementCertificate&) = default;
};

/// Re-checks a certificate: interval shape plus one interval sum per coarse
/// part.
bool check_refinement(const SolvableMonoid& m, const Decomposition& fine,
                      const Decomposition& coarse, const RefinementCertificate& cert);

/// Searches for a certificate by backtracking over cut positions (greedy is
/// unsound in non-cancellative monoids), memoizing failed states. Throws
/// TargetMismatch when the decompositions disagree on the target.
std::optional<RefinementCertificate> refines(const SolvableMonoid& m, const Decomposition& fine,
                                             const Decomposition& coarse);

struct CommonRefinement {
  Decomposition common;
  RefinementCertificate first_cert;   // for the first input
  RefinementCertificate second_cert;  // for the second input
};

/// A decomposition refining both inputs, built recursively: two-part inputs
/// resolve through a splitting witness into [x, z, v] or [u, z, y]; longer
/// inputs split off their last parts and recurse on the remainder, which
/// strictly shrinks the combined length. Both certificates are re-checked
/// before returning. Throws TargetMismatch or SplittingFailed.
CommonRefinement common_refinement(const SolvableMonoid& m, const Decomposition& first,
                                   const Decomposition& second);

/// Reads a splitting witness for the two-part decompositions first = [x, y]
/// and second = [u, v] off a verified common refinement: with k and l the
/// first cut of each certificate, z is the interval sum between them (zero
/// when they coincide). Throws InvalidCertificate when the certificates do
/// not check out.
SplitWitness witness_from_refinement(const SolvableMonoid& m, const Decomposition& first,
                                     const Decomposition& second, const CommonRefinement& common);

}  // namespace hypersym
