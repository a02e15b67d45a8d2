#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypersym/builders.hpp"
#include "hypersym/hypergroup.hpp"
#include "hypersym/symmetrize.hpp"

using namespace hypersym;

namespace {

int index_of(const FiniteHypergroup& h, const std::string& label) {
  for (int i = 0; i < h.size(); ++i)
    if (h.label(i) == label) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_SUITE("hypergroup") {

TEST_CASE("hypersum basics on symmetrized chains") {
  const auto s2 = symmetrize(chain_max(2)).hypergroup;
  // {+1} + {-1} = {0, +1, -1}
  const auto sum = hypersum(s2, {index_of(s2, "+1")}, {index_of(s2, "-1")});
  CHECK(sum == std::vector<int>{index_of(s2, "0"), index_of(s2, "+1"), index_of(s2, "-1")});

  // {0} + {x} = {x} for every x
  for (int x = 0; x < s2.size(); ++x)
    CHECK(hypersum(s2, {s2.neutral()}, {x}) == std::vector<int>{x});

  const auto s3 = symmetrize(chain_max(3)).hypergroup;
  CHECK(hypersum(s3, {index_of(s3, "+1")}, {index_of(s3, "-2")}) ==
        std::vector<int>{index_of(s3, "-2")});
}

TEST_CASE("hypersum on singletons agrees with the raw table and is monotone") {
  const auto h = symmetrize(chain_max(4)).hypergroup;
  for (int x = 0; x < h.size(); ++x)
    for (int y = 0; y < h.size(); ++y) CHECK(hypersum(h, {x}, {y}) == h.cell(x, y));

  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> xs, xs_bigger, ys, ys_bigger;
    for (int i = 0; i < h.size(); ++i) {
      const bool in_x = coin(rng) == 1, in_y = coin(rng) == 1;
      if (in_x) xs.push_back(i);
      if (in_y) ys.push_back(i);
      if (in_x || coin(rng) == 1) xs_bigger.push_back(i);
      if (in_y || coin(rng) == 1) ys_bigger.push_back(i);
    }
    if (xs.empty() || ys.empty()) continue;
    const auto small = hypersum(h, xs, ys);
    const auto big = hypersum(h, xs_bigger, ys_bigger);
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("check_axioms passes on a symmetrized chain") {
  const auto report = check_axioms(symmetrize(chain_max(3)).hypergroup);
  CHECK(report.all_pass());
}

TEST_CASE("check_axioms finds a missing negative") {
  // Singleton cells of the two-chain: 1 has no partner, so axiom (4) fails.
  const auto h = singleton_hypergroup(chain_max(2));
  const auto report = check_axioms(h);
  CHECK(report.verdict(1).ok);
  CHECK(report.verdict(2).ok);
  CHECK(report.verdict(3).ok);
  REQUIRE_FALSE(report.verdict(4).ok);
  CHECK(report.verdict(4).witness == std::vector<int>{1});
  // re-check the witness: no y puts 0 into 1 + y
  for (int y = 0; y < h.size(); ++y) {
    const auto& cell = h.cell(1, y);
    CHECK_FALSE(std::binary_search(cell.begin(), cell.end(), h.neutral()));
  }
}

TEST_CASE("reversibility follows from the first four axioms on sample tables") {
  const std::vector<FiniteHypergroup> corpus = {
      symmetrize(chain_max(1)).hypergroup,  symmetrize(chain_max(4)).hypergroup,
      symmetrize(cyclic_group(3)).hypergroup, signed_chain_hypergroup(5),
      singleton_hypergroup(cyclic_group(4)), singleton_hypergroup(chain_max(3))};
  for (const auto& h : corpus) {
    const auto report = check_axioms(h);
    if (report.pass_one_to_four()) CHECK(report.verdict(5).ok);
  }
}

TEST_CASE("is_group") {
  CHECK(is_group(symmetrize(cyclic_group(2)).hypergroup));
  CHECK_FALSE(is_group(symmetrize(chain_max(2)).hypergroup));
  CHECK(is_group(symmetrize(FiniteCommutativeMonoid::validate({{0}})).hypergroup));
}

TEST_CASE("check_morphism") {
  const auto s3 = symmetrize(chain_max(3)).hypergroup;

  std::vector<int> identity(static_cast<std::size_t>(s3.size()));
  for (int i = 0; i < s3.size(); ++i) identity[static_cast<std::size_t>(i)] = i;
  CHECK(check_morphism({s3, s3, identity}).ok);

  const std::vector<int> constant(static_cast<std::size_t>(s3.size()), s3.neutral());
  CHECK(check_morphism({s3, s3, constant}).ok);

  // sign flip: negation is an automorphism
  const auto neg = negation_map(s3);
  REQUIRE(neg.has_value());
  CHECK(check_morphism({s3, s3, *neg}).ok);

  // a map that breaks the neutral element is rejected with a report
  std::vector<int> bad = identity;
  bad[static_cast<std::size_t>(s3.neutral())] = index_of(s3, "+1");
  CHECK_FALSE(check_morphism({s3, s3, bad}).ok);
}

TEST_CASE("morphism failure carries a re-checkable witness") {
  const auto s3 = symmetrize(chain_max(3)).hypergroup;
  // collapse +2 onto +1 but keep everything else; additivity must break
  std::vector<int> squash(static_cast<std::size_t>(s3.size()));
  for (int i = 0; i < s3.size(); ++i) squash[static_cast<std::size_t>(i)] = i;
  squash[static_cast<std::size_t>(index_of(s3, "+2"))] = index_of(s3, "+1");
  const auto report = check_morphism({s3, s3, squash});
  REQUIRE_FALSE(report.ok);
  const auto [x, y, w] = report.witness;
  const auto& source_cell = s3.cell(x, y);
  REQUIRE(std::binary_search(source_cell.begin(), source_cell.end(), w));
  const auto& target_cell = s3.cell(squash[static_cast<std::size_t>(x)],
                                    squash[static_cast<std::size_t>(y)]);
  CHECK_FALSE(std::binary_search(target_cell.begin(), target_cell.end(),
                                 squash[static_cast<std::size_t>(w)]));
}

TEST_CASE("isomorphic finds identity-shaped bijections") {
  const auto s2 = symmetrize(chain_max(2)).hypergroup;
  const auto expected = signed_chain_hypergroup(2);
  const auto iso = isomorphic(s2, expected);
  REQUIRE(iso.has_value());

  const auto sz2 = symmetrize(cyclic_group(2)).hypergroup;
  const auto z2h = singleton_hypergroup(cyclic_group(2));
  CHECK(isomorphic(sz2, z2h).has_value());
}

TEST_CASE("isomorphic rejects different carrier sizes") {
  const auto s2 = symmetrize(chain_max(2)).hypergroup;
  const auto trivial = symmetrize(FiniteCommutativeMonoid::validate({{0}})).hypergroup;
  CHECK_THROWS_AS(isomorphic(s2, trivial), SizeMismatch);
}

TEST_CASE("isomorphic is reflexive and symmetric on the corpus") {
  const std::vector<FiniteHypergroup> corpus = {
      symmetrize(chain_max(2)).hypergroup, symmetrize(chain_max(3)).hypergroup,
      symmetrize(cyclic_group(3)).hypergroup, signed_chain_hypergroup(3)};
  for (const auto& h : corpus) CHECK(isomorphic(h, h).has_value());
  for (const auto& h : corpus)
    for (const auto& k : corpus) {
      if (h.size() != k.size()) continue;
      CHECK(isomorphic(h, k).has_value() == isomorphic(k, h).has_value());
    }
}

TEST_CASE("equal_up_to_labels aligns permuted labelings") {
  const auto h = symmetrize(chain_max(3)).hypergroup;
  CHECK(equal_up_to_labels(h, h));
  CHECK(equal_up_to_labels(h, signed_chain_hypergroup(3)));
  CHECK_FALSE(equal_up_to_labels(h, signed_chain_hypergroup(2)));
}

TEST_CASE("negation is an involution and an automorphism on symmetrizations") {
  for (const auto& sym :
       {symmetrize(chain_max(3)), symmetrize(cyclic_group(4)),
        symmetrize(product(cyclic_group(2), cyclic_group(2)))}) {
    const auto& h = sym.hypergroup;
    const auto neg = negation_map(h);
    REQUIRE(neg.has_value());
    for (int x = 0; x < h.size(); ++x)
      CHECK((*neg)[static_cast<std::size_t>((*neg)[static_cast<std::size_t>(x)])] == x);
    // strong automorphism: cell-wise equality, not just inclusion
    for (int x = 0; x < h.size(); ++x)
      for (int y = 0; y < h.size(); ++y) {
        std::vector<int> mapped;
        for (int w : h.cell(x, y)) mapped.push_back((*neg)[static_cast<std::size_t>(w)]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == h.cell((*neg)[static_cast<std::size_t>(x)],
                               (*neg)[static_cast<std::size_t>(y)]));
      }
  }
}

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(FiniteHypergroup({"0"}, 0, {{{}}}), std::invalid_argument);  // empty cell
  CHECK_THROWS_AS(FiniteHypergroup({"0"}, 1, {{{0}}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteHypergroup({"0", "1"}, 0, {{{0}}}), std::invalid_argument);
}

}  // TEST_SUITE
