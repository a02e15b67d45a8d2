#include "hypersym/decomposition.hpp"

#include <stdexcept>

namespace hypersym {

int fold_sum(const SolvableMonoid& m, const std::vector<int>& parts, std::size_t begin,
             std::size_t end) {
  if (begin >= end || end > parts.size()) throw std::invalid_argument("empty fold range");
  int acc = parts[begin];
  for (std::size_t i = begin + 1; i < end; ++i) acc = m.add(acc, parts[i]);
  return acc;
}

Decomposition make_decomposition(const SolvableMonoid& m, std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("decomposition needs at least one part");
  for (int p : parts)
    if (p < 0 || p >= m.carrier_size())
      throw std::invalid_argument("decomposition part out of range");
  const int target = fold_sum(m, parts, 0, parts.size());
  return Decomposition{target, std::move(parts)};
}

bool check_refinement(const SolvableMonoid& m, const Decomposition& fine,
                      const Decomposition& coarse, const RefinementCertificate& cert) {
  if (fine.target != coarse.target) return false;
  const std::size_t fine_len = fine.parts.size();
  if (cert.cuts.size() != coarse.parts.size()) return false;
  int previous = 0;
  for (std::size_t i = 0; i < cert.cuts.size(); ++i) {
    const int cut = cert.cuts[i];
    if (cut <= previous || cut > static_cast<int>(fine_len)) return false;
    if (fold_sum(m, fine.parts, static_cast<std::size_t>(previous),
                 static_cast<std::size_t>(cut)) != coarse.parts[i])
      return false;
    previous = cut;
  }
  return previous == static_cast<int>(fine_len);
}

std::optional<RefinementCertificate> refines(const SolvableMonoid& m, const Decomposition& fine,
                                             const Decomposition& coarse) {
  if (fine.target != coarse.target) throw TargetMismatch(fine.target, coarse.target);

  const int fine_len = static_cast<int>(fine.parts.size());
  const int coarse_len = static_cast<int>(coarse.parts.size());
  std::vector<std::vector<bool>> failed(static_cast<std::size_t>(fine_len + 1),
                                        std::vector<bool>(static_cast<std::size_t>(coarse_len + 1),
                                                          false));
  std::vector<int> cuts;

  const auto search = [&](const auto& self, int fi, int ci) -> bool {
    if (fi == fine_len && ci == coarse_len) return true;
    if (fi == fine_len || ci == coarse_len) return false;
    if (fine_len - fi < coarse_len - ci) return false;  // each interval is nonempty
    if (failed[static_cast<std::size_t>(fi)][static_cast<std::size_t>(ci)]) return false;

    std::optional<int> acc;
    for (int j = fi; j < fine_len; ++j) {
      acc = j == fi ? std::optional<int>(fine.parts[static_cast<std::size_t>(j)])
                    : m.try_add(*acc, fine.parts[static_cast<std::size_t>(j)]);
      if (!acc) break;  // window left; longer intervals cannot be evaluated either
      if (*acc == coarse.parts[static_cast<std::size_t>(ci)]) {
        cuts.push_back(j + 1);
        if (self(self, j + 1, ci + 1)) return true;
        cuts.pop_back();
      }
    }
    failed[static_cast<std::size_t>(fi)][static_cast<std::size_t>(ci)] = true;
    return false;
  };

  if (!search(search, 0, 0)) return std::nullopt;
  return RefinementCertificate{std::move(cuts)};
}

namespace {

std::vector<int> identity_cuts(std::size_t n) {
  std::vector<int> cuts(n);
  for (std::size_t i = 0; i < n; ++i) cuts[i] = static_cast<int>(i) + 1;
  return cuts;
}

std::vector<int> slice(const std::vector<int>& v, std::size_t begin, std::size_t end) {
  return std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(begin),
                          v.begin() + static_cast<std::ptrdiff_t>(end));
}

CommonRefinement refine_recursive(const SolvableMonoid& m, const std::vector<int>& a_parts,
                                  const std::vector<int>& b_parts, int target) {
  const std::size_t n = a_parts.size();
  const std::size_t k = b_parts.size();

  if (a_parts == b_parts)
    return {Decomposition{target, a_parts}, RefinementCertificate{identity_cuts(n)},
            RefinementCertificate{identity_cuts(k)}};
  if (n == 1)
    return {Decomposition{target, b_parts}, RefinementCertificate{{static_cast<int>(k)}},
            RefinementCertificate{identity_cuts(k)}};
  if (k == 1)
    return {Decomposition{target, a_parts}, RefinementCertificate{identity_cuts(n)},
            RefinementCertificate{{static_cast<int>(n)}}};

  if (n == 2 && k == 2) {
    const int x = a_parts[0], y = a_parts[1], u = b_parts[0], v = b_parts[1];
    const auto w = split_witness(m, x, y, u, v);
    if (!w) throw SplittingFailed(x, y, u, v);
    if (w->which == SplitWitness::Case::One)
      return {Decomposition{target, {x, w->z, v}}, RefinementCertificate{{1, 3}},
              RefinementCertificate{{2, 3}}};
    return {Decomposition{target, {u, w->z, y}}, RefinementCertificate{{2, 3}},
            RefinementCertificate{{1, 3}}};
  }

  // Split off the last parts and recurse; the combined length shrinks by one.
  const int x = fold_sum(m, a_parts, 0, n - 1);
  const int y = a_parts[n - 1];
  const int u = fold_sum(m, b_parts, 0, k - 1);
  const int v = b_parts[k - 1];
  const auto w = split_witness(m, x, y, u, v);
  if (!w) throw SplittingFailed(x, y, u, v);

  if (w->which == SplitWitness::Case::One) {
    // x + z = u and z + v = y: both [a_1 .. a_{n-1}, z] and [b_1 .. b_{k-1}]
    // decompose u; adjoin v as the last element afterwards.
    auto a_rest = slice(a_parts, 0, n - 1);
    a_rest.push_back(w->z);
    const auto rec = refine_recursive(m, a_rest, slice(b_parts, 0, k - 1), u);
    const int p = static_cast<int>(rec.common.parts.size());

    auto parts = rec.common.parts;
    parts.push_back(v);
    auto first_cuts = slice(rec.first_cert.cuts, 0, n - 1);  // drop z's interval end
    first_cuts.push_back(p + 1);                             // its interval absorbs v: z + v = y
    auto second_cuts = rec.second_cert.cuts;
    second_cuts.push_back(p + 1);
    return {Decomposition{target, std::move(parts)}, RefinementCertificate{std::move(first_cuts)},
            RefinementCertificate{std::move(second_cuts)}};
  }

  // x = u + z and v = z + y: both [a_1 .. a_{n-1}] and [b_1 .. b_{k-1}, z]
  // decompose x; adjoin y as the last element afterwards.
  auto b_rest = slice(b_parts, 0, k - 1);
  b_rest.push_back(w->z);
  const auto rec = refine_recursive(m, slice(a_parts, 0, n - 1), b_rest, x);
  const int p = static_cast<int>(rec.common.parts.size());

  auto parts = rec.common.parts;
  parts.push_back(y);
  auto first_cuts = rec.first_cert.cuts;
  first_cuts.push_back(p + 1);
  auto second_cuts = slice(rec.second_cert.cuts, 0, k - 1);  // drop z's interval end
  second_cuts.push_back(p + 1);                              // its interval absorbs y: z + y = v
  return {Decomposition{target, std::move(parts)}, RefinementCertificate{std::move(first_cuts)},
          RefinementCertificate{std::move(second_cuts)}};
}

}  // namespace

CommonRefinement common_refinement(const SolvableMonoid& m, const Decomposition& first,
                                   const Decomposition& second) {
  if (first.target != second.target) throw TargetMismatch(first.target, second.target);
  auto result = refine_recursive(m, first.parts, second.parts, first.target);
  if (!check_refinement(m, result.common, first, result.first_cert) ||
      !check_refinement(m, result.common, second, result.second_cert))
    throw std::logic_error("common refinement produced an invalid certificate");
  return result;
}

SplitWitness witness_from_refinement(const SolvableMonoid& m, const Decomposition& first,
                                     const Decomposition& second, const CommonRefinement& common) {
  if (first.parts.size() != 2 || second.parts.size() != 2)
    throw std::invalid_argument("witness extraction needs two-part decompositions");
  if (!check_refinement(m, common.common, first, common.first_cert))
    throw InvalidCertificate("first certificate does not check out");
  if (!check_refinement(m, common.common, second, common.second_cert))
    throw InvalidCertificate("second certificate does not check out");

  const int k = common.first_cert.cuts[0];
  const int l = common.second_cert.cuts[0];
  if (k == l) return SplitWitness{SplitWitness::Case::One, m.zero()};
  if (k < l)
    return SplitWitness{SplitWitness::Case::One,
                        fold_sum(m, common.common.parts, static_cast<std::size_t>(k),
                                 static_cast<std::size_t>(l))};
  return SplitWitness{SplitWitness::Case::Two,
                      fold_sum(m, common.common.parts, static_cast<std::size_t>(l),
                               static_cast<std::size_t>(k))};
}

}  // namespace hypersym
