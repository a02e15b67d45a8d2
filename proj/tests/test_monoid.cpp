#include <doctest.h>

#include "hypersym/builders.hpp"
#include "hypersym/monoid.hpp"

using namespace hypersym;

namespace {

// Independent oracle: solve z + b = a by scanning every z.
std::vector<int> div_by_scan(const SolvableMonoid& m, int a, int b) {
  std::vector<int> out;
  for (int z = 0; z < m.carrier_size(); ++z) {
    const auto s = m.try_add(z, b);
    if (s && *s == a) out.push_back(z);
  }
  return out;
}

}  // namespace

TEST_SUITE("monoid") {

TEST_CASE("validate accepts the one-element monoid") {
  const auto m = FiniteCommutativeMonoid::validate({{0}});
  CHECK(m.order() == 1);
  CHECK(m.identity() == 0);
}

TEST_CASE("validate accepts the two-chain and detects its identity") {
  const auto m = FiniteCommutativeMonoid::validate({{0, 1}, {1, 1}});
  CHECK(m.identity() == 0);
  CHECK(m.at(1, 1) == 1);
}

TEST_CASE("validate accepts the order-two group") {
  const auto m = FiniteCommutativeMonoid::validate({{0, 1}, {1, 0}});
  // associativity double-checked by an exhaustive triple scan
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) CHECK(m.at(m.at(x, y), z) == m.at(x, m.at(y, z)));
}

TEST_CASE("validate rejects a non-commutative table with a witness") {
  try {
    FiniteCommutativeMonoid::validate({{0, 1}, {0, 1}});
    FAIL("expected MonoidValidationError");
  } catch (const MonoidValidationError& e) {
    CHECK(e.kind == MonoidValidationError::Kind::NotCommutative);
    REQUIRE(e.witness.size() == 2);
    const int x = e.witness[0], y = e.witness[1];
    std::vector<std::vector<int>> t{{0, 1}, {0, 1}};
    CHECK(t[x][y] != t[y][x]);
  }
}

TEST_CASE("validate rejects a non-associative table with a witness") {
  // commutative, identity 0, but (1+1)+2 = 0 while 1+(1+2) = 1
  const std::vector<std::vector<int>> t{{0, 1, 2}, {1, 2, 0}, {2, 0, 0}};
  try {
    FiniteCommutativeMonoid::validate(t);
    FAIL("expected MonoidValidationError");
  } catch (const MonoidValidationError& e) {
    CHECK(e.kind == MonoidValidationError::Kind::NotAssociative);
    REQUIRE(e.witness.size() == 3);
    const int x = e.witness[0], y = e.witness[1], z = e.witness[2];
    CHECK(t[t[x][y]][z] != t[x][t[y][z]]);
  }
}

TEST_CASE("validate rejects a table without identity") {
  CHECK_THROWS_AS(FiniteCommutativeMonoid::validate({{1, 1}, {1, 1}}),
                  MonoidValidationError);
}

TEST_CASE("div on the naturals window") {
  const auto m = naturals_window(10);
  CHECK(m.div(5, 3) == std::vector<int>{2});
  CHECK(m.div(3, 5).empty());
}

TEST_CASE("div on the three-element max chain collects the whole lower set") {
  const auto m = chain_max(3);
  CHECK(m.div(2, 2) == std::vector<int>{0, 1, 2});
}

TEST_CASE("div agrees with the exhaustive scan oracle") {
  const auto nat = naturals_window(12);
  const auto chain = chain_max(4);
  const auto z3 = cyclic_group(3);
  const std::vector<const SolvableMonoid*> monoids{&nat, &chain, &z3};
  for (const SolvableMonoid* m : monoids)
    for (int a = 0; a < m->carrier_size(); ++a)
      for (int b = 0; b < m->carrier_size(); ++b) CHECK(m->div(a, b) == div_by_scan(*m, a, b));
}

TEST_CASE("leq basics") {
  const auto chain = chain_max(3);
  const auto z2 = cyclic_group(2);
  for (int y = 0; y < 3; ++y) CHECK(leq(chain, 0, y));  // z = y works
  CHECK_FALSE(leq(chain, 2, 1));
  CHECK(leq(z2, 1, 0));  // 1 + 1 = 0
}

TEST_CASE("leq is reflexive and transitive on the test monoids") {
  const auto chain = chain_max(4);
  const auto z3 = cyclic_group(3);
  const auto two_chain = chain_max(2);
  const auto prod = product(two_chain, two_chain);
  const std::vector<const SolvableMonoid*> monoids{&chain, &z3, &prod};
  for (const SolvableMonoid* m : monoids) {
    const int n = m->carrier_size();
    for (int x = 0; x < n; ++x) CHECK(leq(*m, x, x));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (leq(*m, x, y) && leq(*m, y, z)) CHECK(leq(*m, x, z));
  }
}

TEST_CASE("is_total verdicts") {
  CHECK(is_total(chain_max(4)).total);
  CHECK(is_total(cyclic_group(2)).total);

  const auto two_chain = chain_max(2);
  const auto report = is_total(product(two_chain, two_chain));
  REQUIRE_FALSE(report.total);
  // (0, a) and (a, 0) are incomparable; indices 1 and 2 under the product layout
  CHECK(report.counterexample == std::pair{1, 2});
  CHECK_FALSE(leq(product(two_chain, two_chain), 1, 2));
  CHECK_FALSE(leq(product(two_chain, two_chain), 2, 1));
}

TEST_CASE("is_cancellative verdicts") {
  CHECK(is_cancellative(cyclic_group(2)).cancellative);
  CHECK(is_cancellative(FiniteCommutativeMonoid::validate({{0}})).cancellative);

  const auto report = is_cancellative(chain_max(2));
  REQUIRE_FALSE(report.cancellative);
  CHECK(*report.counterexample == std::array{0, 1, 1});  // 0 + a = a + a = a
}

TEST_CASE("is_idempotent verdicts") {
  for (int n = 1; n <= 5; ++n) CHECK(is_idempotent(chain_max(n)).idempotent);
  CHECK(is_idempotent(FiniteCommutativeMonoid::validate({{0}})).idempotent);

  const auto report = is_idempotent(cyclic_group(2));
  REQUIRE_FALSE(report.idempotent);
  CHECK(report.counterexample == 1);
}

TEST_CASE("antisymmetry of the preorder on idempotent monoids") {
  for (int n = 1; n <= 5; ++n) {
    const auto m = chain_max(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq(m, x, y) && leq(m, y, x)) CHECK(x == y);
  }
}

TEST_CASE("inverse") {
  const auto z2 = cyclic_group(2);
  CHECK(inverse(z2, 1) == 1);
  CHECK(inverse(z2, 0) == 0);
  CHECK(inverse(chain_max(2), 1) == std::nullopt);
  CHECK(inverse(chain_max(2), 0) == 0);
  CHECK(inverse(naturals_window(5), 3) == std::nullopt);
}

TEST_CASE("window overflow is an error, not a truncation") {
  const auto m = naturals_window(8);
  CHECK(m.add(3, 5) == 8);
  CHECK_FALSE(m.try_add(8, 1).has_value());
  CHECK_THROWS_AS(m.add(8, 1), WindowOverflow);
}

TEST_CASE("elements enumeration respects the bound") {
  const auto m = naturals_window(6);
  CHECK(m.elements().size() == 7);
  CHECK(m.elements(3) == std::vector<int>{0, 1, 2});
}

}  // TEST_SUITE
