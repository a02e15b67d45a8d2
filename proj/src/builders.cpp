#include "hypersym/builders.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypersym {

FiniteCommutativeMonoid chain_max(int n) {
  if (n < 1) throw std::invalid_argument("chain length must be at least 1");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::max(x, y);
  return FiniteCommutativeMonoid::validate(std::move(table), "chain:" + std::to_string(n));
}

NaturalsWindow naturals_window(int window) { return NaturalsWindow(window); }

FiniteCommutativeMonoid product(const FiniteCommutativeMonoid& first,
                                const FiniteCommutativeMonoid& second) {
  const int n1 = first.order();
  const int n2 = second.order();
  const int n = n1 * n2;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          table[static_cast<std::size_t>(a1 * n2 + a2)][static_cast<std::size_t>(b1 * n2 + b2)] =
              first.at(a1, b1) * n2 + second.at(a2, b2);
  std::string name = "prod:" + (first.name().empty() ? "?" : first.name()) + "," +
                     (second.name().empty() ? "?" : second.name());
  return FiniteCommutativeMonoid::validate(std::move(table), std::move(name));
}

FiniteCommutativeMonoid group_as_monoid(std::vector<std::vector<int>> table, std::string name) {
  auto m = FiniteCommutativeMonoid::validate(std::move(table), std::move(name));
  for (int a = 0; a < m.order(); ++a)
    if (!inverse(m, a)) throw NotAGroup(a);
  return m;
}

FiniteCommutativeMonoid cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  return group_as_monoid(std::move(table), "z:" + std::to_string(n));
}

FiniteHypergroup signed_chain_hypergroup(int n) {
  if (n < 1) throw std::invalid_argument("chain length must be at least 1");
  const int size = 2 * n - 1;

  // Index layout: 0, then +t at t, then -t at (n - 1) + t.
  const auto magnitude = [n](int idx) { return idx < n ? idx : idx - (n - 1); };
  const auto negative_index = [n](int t) { return (n - 1) + t; };

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(size));
  labels.push_back("0");
  for (int t = 1; t < n; ++t) labels.push_back("+" + std::to_string(t));
  for (int t = 1; t < n; ++t) labels.push_back("-" + std::to_string(t));

  std::vector<std::vector<std::vector<int>>> table(
      static_cast<std::size_t>(size),
      std::vector<std::vector<int>>(static_cast<std::size_t>(size)));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      std::vector<int> cell;
      const int mx = magnitude(x), my = magnitude(y);
      if (x == y || mx > my) {
        cell = {x};
      } else if (my > mx) {
        cell = {y};
      } else {
        // Equal magnitudes with opposite signs: the whole interval [-x, x].
        cell.push_back(0);
        for (int t = 1; t <= mx; ++t) cell.push_back(t);
        for (int t = 1; t <= mx; ++t) cell.push_back(negative_index(t));
        std::sort(cell.begin(), cell.end());
      }
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::move(cell);
    }
  return FiniteHypergroup(std::move(labels), 0, std::move(table));
}

IntegerWindow::IntegerWindow(int window) : window_(window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
}

int IntegerWindow::sum(int a, int b) const {
  if (!contains(a) || !contains(b) || !contains(a + b)) throw WindowOverflow(a, b);
  return a + b;
}

IntegerWindow integer_window(int window) { return IntegerWindow(window); }

}  // namespace hypersym
