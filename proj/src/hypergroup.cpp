#include "hypersym/hypergroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypersym {

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> image(const std::vector<int>& cell, const std::vector<int>& map) {
  std::vector<int> out;
  out.reserve(cell.size());
  for (int x : cell) out.push_back(map[static_cast<std::size_t>(x)]);
  sort_unique(out);
  return out;
}

/// All y with 0 in x + y, per x.
std::vector<std::vector<int>> partner_sets(const FiniteHypergroup& h) {
  const int n = h.size();
  std::vector<std::vector<int>> partners(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (contains(h.cell(x, y), h.neutral())) partners[static_cast<std::size_t>(x)].push_back(y);
  return partners;
}

}  // namespace

FiniteHypergroup::FiniteHypergroup(std::vector<std::string> labels, int neutral,
                                   std::vector<std::vector<std::vector<int>>> table)
    : labels_(std::move(labels)), neutral_(neutral), table_(std::move(table)) {
  const int n = static_cast<int>(labels_.size());
  if (n == 0) throw std::invalid_argument("hypergroup carrier must be nonempty");
  if (neutral_ < 0 || neutral_ >= n) throw std::invalid_argument("neutral index out of range");
  if (static_cast<int>(table_.size()) != n)
    throw std::invalid_argument("hypergroup table must be square");
  for (auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("hypergroup table must be square");
    for (auto& cell : row) {
      if (cell.empty()) throw std::invalid_argument("hypergroup cells must be nonempty");
      for (int v : cell)
        if (v < 0 || v >= n) throw std::invalid_argument("hypergroup cell entry out of range");
      sort_unique(cell);
    }
  }
}

std::vector<int> hypersum(const FiniteHypergroup& h, const std::vector<int>& xs,
                          const std::vector<int>& ys) {
  if (xs.empty() || ys.empty()) throw std::invalid_argument("hypersum needs nonempty inputs");
  const int n = h.size();
  std::vector<int> out;
  for (int a : xs) {
    if (a < 0 || a >= n) throw std::invalid_argument("hypersum input out of range");
    for (int b : ys) {
      if (b < 0 || b >= n) throw std::invalid_argument("hypersum input out of range");
      const auto& cell = h.cell(a, b);
      out.insert(out.end(), cell.begin(), cell.end());
    }
  }
  sort_unique(out);
  return out;
}

bool AxiomReport::all_pass() const {
  for (const auto& v : axiom)
    if (!v.ok) return false;
  return true;
}

bool AxiomReport::pass_one_to_four() const {
  for (int i = 0; i < 4; ++i)
    if (!axiom[static_cast<std::size_t>(i)].ok) return false;
  return true;
}

AxiomReport check_axioms(const FiniteHypergroup& h) {
  AxiomReport report;
  const int n = h.size();

  // (1) commutativity
  for (int x = 0; x < n && report.axiom[0].ok; ++x)
    for (int y = x + 1; y < n && report.axiom[0].ok; ++y)
      if (h.cell(x, y) != h.cell(y, x))
        report.axiom[0] = {false, {x, y}, "cell(x, y) != cell(y, x)"};

  // (2) associativity, as set equality of (x+y)+z and x+(y+z)
  for (int x = 0; x < n && report.axiom[1].ok; ++x)
    for (int y = 0; y < n && report.axiom[1].ok; ++y)
      for (int z = 0; z < n && report.axiom[1].ok; ++z) {
        const auto lhs = hypersum(h, h.cell(x, y), {z});
        const auto rhs = hypersum(h, {x}, h.cell(y, z));
        if (lhs != rhs) report.axiom[1] = {false, {x, y, z}, "(x + y) + z != x + (y + z)"};
      }

  // (3) neutrality, exact
  for (int x = 0; x < n && report.axiom[2].ok; ++x) {
    const std::vector<int> just_x{x};
    if (h.cell(h.neutral(), x) != just_x || h.cell(x, h.neutral()) != just_x)
      report.axiom[2] = {false, {x}, "0 + x != {x}"};
  }

  // (4) existence and uniqueness of negatives
  const auto partners = partner_sets(h);
  for (int x = 0; x < n && report.axiom[3].ok; ++x) {
    const auto& p = partners[static_cast<std::size_t>(x)];
    if (p.empty())
      report.axiom[3] = {false, {x}, "no y with 0 in x + y"};
    else if (p.size() > 1)
      report.axiom[3] = {false, {x}, "several negatives: y=" + std::to_string(p[0]) + " and y=" +
                                         std::to_string(p[1])};
  }

  // (5) reversibility: x in y + z implies z in x - y
  for (int y = 0; y < n && report.axiom[4].ok; ++y) {
    const auto& p = partners[static_cast<std::size_t>(y)];
    for (int z = 0; z < n && report.axiom[4].ok; ++z)
      for (int x : h.cell(y, z)) {
        bool reversible = false;
        for (int neg : p)
          if (contains(h.cell(x, neg), z)) {
            reversible = true;
            break;
          }
        if (!reversible) {
          report.axiom[4] = {false,
                             {x, y, z},
                             p.empty() ? "y has no negative to reverse through"
                                       : "z not in x - y"};
          break;
        }
      }
  }

  return report;
}

std::optional<std::vector<int>> negation_map(const FiniteHypergroup& h) {
  const auto partners = partner_sets(h);
  std::vector<int> neg(partners.size());
  for (std::size_t x = 0; x < partners.size(); ++x) {
    if (partners[x].size() != 1) return std::nullopt;
    neg[x] = partners[x][0];
  }
  return neg;
}

bool is_group(const FiniteHypergroup& h) {
  const int n = h.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h.cell(x, y).size() != 1) return false;
  return true;
}

MorphismReport check_morphism(const HypergroupMorphism& h) {
  const int n = h.source.size();
  if (static_cast<int>(h.mapping.size()) != n)
    throw std::invalid_argument("morphism mapping has the wrong size");
  for (int v : h.mapping)
    if (v < 0 || v >= h.target.size())
      throw std::invalid_argument("morphism mapping value out of range");

  if (h.mapping[static_cast<std::size_t>(h.source.neutral())] != h.target.neutral())
    return {false,
            {h.source.neutral(), h.source.neutral(), h.source.neutral()},
            "neutral element is not preserved"};

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& target_cell = h.target.cell(h.mapping[static_cast<std::size_t>(x)],
                                              h.mapping[static_cast<std::size_t>(y)]);
      for (int w : h.source.cell(x, y))
        if (!std::binary_search(target_cell.begin(), target_cell.end(),
                                h.mapping[static_cast<std::size_t>(w)]))
          return {false, {x, y, w}, "image of a member of x + y escapes mapping(x) + mapping(y)"};
    }
  return {};
}

std::optional<std::vector<int>> isomorphic(const FiniteHypergroup& h, const FiniteHypergroup& k) {
  if (h.size() != k.size()) throw SizeMismatch(h.size(), k.size());
  const int n = h.size();

  std::vector<int> others_h, others_k;
  for (int i = 0; i < n; ++i) {
    if (i != h.neutral()) others_h.push_back(i);
    if (i != k.neutral()) others_k.push_back(i);
  }
  std::sort(others_k.begin(), others_k.end());

  std::vector<int> map(static_cast<std::size_t>(n));
  do {
    map[static_cast<std::size_t>(h.neutral())] = k.neutral();
    for (std::size_t i = 0; i < others_h.size(); ++i)
      map[static_cast<std::size_t>(others_h[i])] = others_k[i];

    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (image(h.cell(x, y), map) !=
            k.cell(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
          ok = false;
    if (ok) return map;
  } while (std::next_permutation(others_k.begin(), others_k.end()));
  return std::nullopt;
}

bool equal_up_to_labels(const FiniteHypergroup& h, const FiniteHypergroup& k) {
  if (h.size() != k.size()) return false;
  const int n = h.size();

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int found = -1;
    for (int j = 0; j < n; ++j)
      if (k.label(j) == h.label(i)) {
        found = j;
        break;
      }
    if (found < 0) return false;
    map[static_cast<std::size_t>(i)] = found;
  }

  if (map[static_cast<std::size_t>(h.neutral())] != k.neutral()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image(h.cell(x, y), map) !=
          k.cell(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

FiniteHypergroup singleton_hypergroup(const FiniteCommutativeMonoid& m) {
  const int n = m.order();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));

  std::vector<std::vector<std::vector<int>>> table(
      static_cast<std::size_t>(n),
      std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = {m.at(x, y)};
  return FiniteHypergroup(std::move(labels), m.identity(), std::move(table));
}

}  // namespace hypersym
