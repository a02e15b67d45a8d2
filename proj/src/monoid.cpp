#include "hypersym/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypersym {

int SolvableMonoid::add(int a, int b) const {
  if (auto r = try_add(a, b)) return *r;
  throw WindowOverflow(a, b);
}

std::vector<int> SolvableMonoid::elements(int bound) const {
  int n = carrier_size();
  if (bound >= 0 && bound < n) n = bound;
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

FiniteCommutativeMonoid::FiniteCommutativeMonoid(std::vector<std::vector<int>> table,
                                                 int identity, std::string name)
    : table_(std::move(table)),
      order_(static_cast<int>(table_.size())),
      identity_(identity),
      name_(std::move(name)) {}

FiniteCommutativeMonoid FiniteCommutativeMonoid::validate(std::vector<std::vector<int>> table,
                                                          std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("monoid table must be nonempty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("monoid table must be square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("monoid table entry out of range");
  }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (table[x][y] != table[y][x])
        throw MonoidValidationError(
            MonoidValidationError::Kind::NotCommutative, {x, y},
            "not commutative: " + std::to_string(x) + " + " + std::to_string(y) + " = " +
                std::to_string(table[x][y]) + " but " + std::to_string(y) + " + " +
                std::to_string(x) + " = " + std::to_string(table[y][x]));

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw MonoidValidationError(
              MonoidValidationError::Kind::NotAssociative, {x, y, z},
              "not associative on (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
                  std::to_string(z) + ")");

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool acts_as_identity = true;
    for (int x = 0; x < n && acts_as_identity; ++x)
      if (table[e][x] != x) acts_as_identity = false;
    if (acts_as_identity) identity = e;
  }
  if (identity < 0)
    throw MonoidValidationError(MonoidValidationError::Kind::NoIdentity, {},
                                "no element acts as an identity");

  return FiniteCommutativeMonoid(std::move(table), identity, std::move(name));
}

std::optional<int> FiniteCommutativeMonoid::try_add(int a, int b) const {
  return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::vector<int> FiniteCommutativeMonoid::div(int a, int b) const {
  std::vector<int> out;
  for (int z = 0; z < order_; ++z)
    if (table_[static_cast<std::size_t>(z)][static_cast<std::size_t>(b)] == a) out.push_back(z);
  return out;
}

bool FiniteCommutativeMonoid::same_table(const FiniteCommutativeMonoid& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

NaturalsWindow::NaturalsWindow(int window) : window_(window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
}

std::optional<int> NaturalsWindow::try_add(int a, int b) const {
  if (a + b > window_) return std::nullopt;
  return a + b;
}

std::vector<int> NaturalsWindow::div(int a, int b) const {
  if (a >= b) return {a - b};
  return {};
}

bool leq(const SolvableMonoid& m, int x, int y) { return !m.div(y, x).empty(); }

PreorderReport is_total(const SolvableMonoid& m) {
  const int n = m.carrier_size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!leq(m, x, y) && !leq(m, y, x)) return {false, std::pair{x, y}};
  return {};
}

CancellativityReport is_cancellative(const SolvableMonoid& m) {
  const int n = m.carrier_size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int a = 0; a < n; ++a) {
        const auto xa = m.try_add(x, a);
        const auto ya = m.try_add(y, a);
        if (xa && ya && *xa == *ya) return {false, std::array{x, y, a}};
      }
  return {};
}

IdempotencyReport is_idempotent(const SolvableMonoid& m) {
  const int n = m.carrier_size();
  for (int x = 0; x < n; ++x) {
    const auto xx = m.try_add(x, x);
    if (!xx || *xx != x) return {false, x};
  }
  return {};
}

std::optional<int> inverse(const SolvableMonoid& m, int a) {
  const int n = m.carrier_size();
  for (int b = 0; b < n; ++b) {
    const auto s = m.try_add(a, b);
    if (s && *s == m.zero()) return b;  // inverses are unique in a monoid
  }
  return std::nullopt;
}

}  // namespace hypersym
