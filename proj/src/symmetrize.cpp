#include "hypersym/symmetrize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hypersym {

namespace {

/// Eq-style evaluation on the pair as given, before canonicalization.
std::vector<SignedElement> raw_signed_sum(const SolvableMonoid& m, SignedElement x,
                                          SignedElement y) {
  std::vector<SignedElement> out;
  if (x.sign == y.sign) {
    out.push_back({m.add(x.magnitude, y.magnitude), x.sign});
    return out;
  }
  const int p = x.sign > 0 ? x.magnitude : y.magnitude;  // the positive magnitude
  const int q = x.sign > 0 ? y.magnitude : x.magnitude;  // the negative magnitude
  for (int z : m.div(p, q)) out.push_back({z, +1});
  for (int z : m.div(q, p)) out.push_back({z, -1});
  return out;
}

std::vector<SignedElement> canonicalize_all(const SolvableMonoid& m,
                                            std::vector<SignedElement> v) {
  for (auto& s : v) s = canonical_signed(m, s);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Steps f through all functions into {0, ..., base-1}; false after the last.
bool next_function(std::vector<int>& f, int base) {
  for (auto& digit : f) {
    if (++digit < base) return true;
    digit = 0;
  }
  return false;
}

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

/// a + d + k = c + b + k for some carrier k, all sums representable.
bool grothendieck_related(const SolvableMonoid& m, int a, int b, int c, int d) {
  const int n = m.carrier_size();
  const auto ad = m.try_add(a, d);
  const auto cb = m.try_add(c, b);
  if (!ad || !cb) return false;
  for (int k = 0; k < n; ++k) {
    const auto lhs = m.try_add(*ad, k);
    const auto rhs = m.try_add(*cb, k);
    if (lhs && rhs && *lhs == *rhs) return true;
  }
  return false;
}

}  // namespace

bool operator<(const SignedElement& a, const SignedElement& b) {
  if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
  return a.sign > b.sign;
}

SignedElement canonical_signed(const SolvableMonoid& m, SignedElement s) {
  if (s.sign < 0) {
    if (auto inv = inverse(m, s.magnitude)) return {*inv, +1};
  }
  return s;
}

std::vector<SignedElement> signed_sum(const SolvableMonoid& m, SignedElement x, SignedElement y) {
  return canonicalize_all(m, raw_signed_sum(m, x, y));
}

std::optional<SplitWitness> split_witness(const SolvableMonoid& m, int x, int y, int u, int v) {
  const auto xy = m.try_add(x, y);
  const auto uv = m.try_add(u, v);
  if (!xy || !uv || *xy != *uv) throw NotBalanced(x, y, u, v);

  const int n = m.carrier_size();
  for (int z = 0; z < n; ++z) {
    const auto xz = m.try_add(x, z);
    const auto zv = m.try_add(z, v);
    if (xz && zv && *xz == u && *zv == y) return SplitWitness{SplitWitness::Case::One, z};
    const auto uz = m.try_add(u, z);
    const auto zy = m.try_add(z, y);
    if (uz && zy && *uz == x && *zy == v) return SplitWitness{SplitWitness::Case::Two, z};
  }
  return std::nullopt;
}

std::optional<SplitCounterexample> check_splitting(const SolvableMonoid& m) {
  const int n = m.carrier_size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto xy = m.try_add(x, y);
      if (!xy) continue;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const auto uv = m.try_add(u, v);
          if (!uv || *uv != *xy) continue;
          if (!split_witness(m, x, y, u, v)) return SplitCounterexample{x, y, u, v};
        }
    }
  return std::nullopt;
}

SymmetrizationResult symmetrize(const FiniteCommutativeMonoid& m, bool force) {
  if (force) {
    const auto preorder = is_total(m);
    if (!preorder.total)
      throw NotTotal(preorder.counterexample->first, preorder.counterexample->second);
  } else if (const auto cex = check_splitting(m)) {
    throw SplittingFailed(cex->x, cex->y, cex->u, cex->v);
  }

  const int n = m.order();
  std::vector<SignedElement> reps;
  std::vector<std::array<int, 2>> class_map(static_cast<std::size_t>(n), {-1, -1});

  // Identity class first, then the remaining positives ascending, then the
  // negative classes of non-invertible elements ascending.
  class_map[static_cast<std::size_t>(m.identity())][0] = 0;
  reps.push_back({m.identity(), +1});
  for (int a = 0; a < n; ++a) {
    if (a == m.identity()) continue;
    class_map[static_cast<std::size_t>(a)][0] = static_cast<int>(reps.size());
    reps.push_back({a, +1});
  }
  for (int a = 0; a < n; ++a) {
    if (const auto inv = inverse(m, a)) {
      class_map[static_cast<std::size_t>(a)][1] = class_map[static_cast<std::size_t>(*inv)][0];
    } else {
      class_map[static_cast<std::size_t>(a)][1] = static_cast<int>(reps.size());
      reps.push_back({a, -1});
    }
  }

  const int size = static_cast<int>(reps.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(size));
  for (const auto& rep : reps) {
    if (rep.magnitude == m.identity() && rep.sign > 0)
      labels.push_back("0");
    else
      labels.push_back((rep.sign > 0 ? "+" : "-") + std::to_string(rep.magnitude));
  }

  std::vector<std::vector<std::vector<int>>> table(
      static_cast<std::size_t>(size),
      std::vector<std::vector<int>>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      std::vector<int> cell;
      for (const auto& s : raw_signed_sum(m, reps[static_cast<std::size_t>(i)],
                                          reps[static_cast<std::size_t>(j)]))
        cell.push_back(class_map[static_cast<std::size_t>(s.magnitude)][s.sign < 0 ? 1 : 0]);
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      if (cell.empty())
        throw std::logic_error("empty signed-sum cell despite totality");  // unreachable
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cell;
      table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(cell);
    }

  SymmetrizationResult result{FiniteHypergroup(std::move(labels), 0, std::move(table)),
                              std::vector<int>(static_cast<std::size_t>(n)), std::move(class_map)};
  for (int a = 0; a < n; ++a)
    result.injection[static_cast<std::size_t>(a)] =
        result.class_map[static_cast<std::size_t>(a)][0];
  return result;
}

GrothendieckResult grothendieck_group(const SolvableMonoid& m) {
  const int n = m.carrier_size();
  const auto pair_id = [n](int a, int b) { return a * n + b; };

  DisjointSets sets(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = a; c < n; ++c)
        for (int d = (c == a ? b + 1 : 0); d < n; ++d)
          if (sets.find(pair_id(a, b)) != sets.find(pair_id(c, d)) &&
              grothendieck_related(m, a, b, c, d))
            sets.unite(pair_id(a, b), pair_id(c, d));

  GrothendieckResult result;
  std::vector<int> class_of(static_cast<std::size_t>(n * n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int root = sets.find(pair_id(a, b));
      if (class_of[static_cast<std::size_t>(root)] < 0) {
        class_of[static_cast<std::size_t>(root)] = static_cast<int>(result.class_reps.size());
        result.class_reps.emplace_back(a, b);  // roots are lexicographically least members
      }
      class_of[static_cast<std::size_t>(pair_id(a, b))] =
          class_of[static_cast<std::size_t>(root)];
    }

  result.neutral_class = class_of[static_cast<std::size_t>(pair_id(m.zero(), m.zero()))];
  result.unit_map.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    result.unit_map[static_cast<std::size_t>(a)] =
        class_of[static_cast<std::size_t>(pair_id(a, m.zero()))];

  const int classes = static_cast<int>(result.class_reps.size());
  std::vector<std::vector<int>> group_table(
      static_cast<std::size_t>(classes), std::vector<int>(static_cast<std::size_t>(classes)));
  bool representable = true;
  for (int c1 = 0; c1 < classes && representable; ++c1)
    for (int c2 = 0; c2 < classes && representable; ++c2) {
      const auto [a, b] = result.class_reps[static_cast<std::size_t>(c1)];
      const auto [c, d] = result.class_reps[static_cast<std::size_t>(c2)];
      const auto first = m.try_add(a, c);
      const auto second = m.try_add(b, d);
      if (!first || !second) {
        representable = false;
        break;
      }
      group_table[static_cast<std::size_t>(c1)][static_cast<std::size_t>(c2)] =
          class_of[static_cast<std::size_t>(pair_id(*first, *second))];
    }
  if (representable)
    result.group = FiniteCommutativeMonoid::validate(std::move(group_table), "grothendieck");
  return result;
}

std::optional<int> grothendieck_class_of(const GrothendieckResult& g, const SolvableMonoid& m,
                                         int a, int b) {
  const int n = m.carrier_size();
  if (a < 0 || a >= n || b < 0 || b >= n) return std::nullopt;
  for (std::size_t c = 0; c < g.class_reps.size(); ++c)
    if (grothendieck_related(m, a, b, g.class_reps[c].first, g.class_reps[c].second))
      return static_cast<int>(c);
  return std::nullopt;  // not related to any representative inside the window
}

std::optional<int> grothendieck_class_add(const GrothendieckResult& g, const SolvableMonoid& m,
                                          int c1, int c2) {
  const auto [a, b] = g.class_reps.at(static_cast<std::size_t>(c1));
  const auto [c, d] = g.class_reps.at(static_cast<std::size_t>(c2));
  const auto first = m.try_add(a, c);
  const auto second = m.try_add(b, d);
  if (!first || !second) return std::nullopt;
  return grothendieck_class_of(g, m, *first, *second);
}

GrothendieckComparison compare_grothendieck(const FiniteCommutativeMonoid& m) {
  const auto sym = symmetrize(m);  // throws SplittingFailed when the condition fails

  GrothendieckComparison cmp;
  cmp.cancellative = is_cancellative(m).cancellative;
  cmp.s_is_group = is_group(sym.hypergroup);
  cmp.equivalence_holds = (cmp.cancellative == cmp.s_is_group);

  if (cmp.s_is_group) {
    const auto g = grothendieck_group(m);
    if (g.group && g.group->order() == sym.hypergroup.size())
      cmp.isomorphism = isomorphic(sym.hypergroup, singleton_hypergroup(*g.group));
    if (!cmp.isomorphism) cmp.equivalence_holds = false;
  }
  return cmp;
}

HypergroupMorphism extend_additive_map(const FiniteCommutativeMonoid& m,
                                       const SymmetrizationResult& sym,
                                       const FiniteHypergroup& target,
                                       const std::vector<int>& g) {
  const int n = m.order();
  if (static_cast<int>(g.size()) != n)
    throw std::invalid_argument("additive map has the wrong domain size");
  for (int v : g)
    if (v < 0 || v >= target.size())
      throw std::invalid_argument("additive map value out of range");

  if (g[static_cast<std::size_t>(m.identity())] != target.neutral())
    throw NotAdditive(m.identity(), m.identity(), "map does not send 0 to 0");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& cell = target.cell(g[static_cast<std::size_t>(a)],
                                     g[static_cast<std::size_t>(b)]);
      if (!std::binary_search(cell.begin(), cell.end(),
                              g[static_cast<std::size_t>(m.at(a, b))]))
        throw NotAdditive(a, b, "g(a + b) is not a member of g(a) + g(b) for a=" +
                                    std::to_string(a) + " b=" + std::to_string(b));
    }

  const auto negation = negation_map(target);
  if (!negation)
    throw std::invalid_argument("target hypergroup has no well-defined negation");

  const int size = sym.hypergroup.size();
  std::vector<int> mapping(static_cast<std::size_t>(size), -1);
  for (int a = 0; a < n; ++a) {
    const int ga = g[static_cast<std::size_t>(a)];
    mapping[static_cast<std::size_t>(sym.class_map[static_cast<std::size_t>(a)][0])] = ga;
    const int neg_class = sym.class_map[static_cast<std::size_t>(a)][1];
    mapping[static_cast<std::size_t>(neg_class)] = (*negation)[static_cast<std::size_t>(ga)];
  }
  // Positive and negative assignments agree on merged classes because the
  // negative of g(a) is g(a') whenever a + a' = 0 and g is additive.
  return HypergroupMorphism{sym.hypergroup, target, std::move(mapping)};
}

HypergroupMorphism extend_additive_map(const FiniteCommutativeMonoid& m,
                                       const FiniteHypergroup& target,
                                       const std::vector<int>& g) {
  return extend_additive_map(m, symmetrize(m), target, g);
}

UniversalCheckReport check_universal(const FiniteCommutativeMonoid& m,
                                     const FiniteHypergroup& target) {
  const auto sym = symmetrize(m);
  const int n = m.order();
  const int k = target.size();
  const int s = sym.hypergroup.size();

  // All morphisms s(B) -> K, enumerated once.
  std::vector<std::vector<int>> morphisms;
  {
    std::vector<int> f(static_cast<std::size_t>(s), 0);
    do {
      if (check_morphism({sym.hypergroup, target, f}).ok) morphisms.push_back(f);
    } while (next_function(f, k));
  }

  UniversalCheckReport report;
  std::vector<int> g(static_cast<std::size_t>(n), 0);
  do {
    // Additivity filter.
    if (g[static_cast<std::size_t>(m.identity())] != target.neutral()) continue;
    bool additive = true;
    for (int a = 0; a < n && additive; ++a)
      for (int b = 0; b < n && additive; ++b) {
        const auto& cell =
            target.cell(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]);
        if (!std::binary_search(cell.begin(), cell.end(),
                                g[static_cast<std::size_t>(m.at(a, b))]))
          additive = false;
      }
    if (!additive) continue;
    ++report.additive_maps;

    const auto h = extend_additive_map(m, sym, target, g);
    if (!check_morphism(h).ok) {
      report.ok = false;
      if (report.detail.empty()) report.detail = "extension is not a morphism";
      continue;
    }

    // The extension must be the unique morphism factoring g through the
    // injection.
    int matching = 0;
    bool extension_seen = false;
    for (const auto& f : morphisms) {
      bool factors = true;
      for (int a = 0; a < n && factors; ++a)
        if (f[static_cast<std::size_t>(sym.injection[static_cast<std::size_t>(a)])] !=
            g[static_cast<std::size_t>(a)])
          factors = false;
      if (factors) {
        ++matching;
        if (f == h.mapping) extension_seen = true;
      }
    }
    if (matching != 1 || !extension_seen) {
      report.ok = false;
      if (report.detail.empty())
        report.detail = "factoring morphism count is " + std::to_string(matching);
    }
  } while (next_function(g, k));

  return report;
}

}  // namespace hypersym
