#include "hypersym/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace hypersym {

namespace {

using Table = std::vector<std::vector<int>>;

/// True when every fully-determined triple associates; cells still free are
/// skipped, so this can prune partial tables.
bool associativity_consistent(const Table& t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        const int yz = t[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
        if (yz < 0) continue;
        const int lhs = t[static_cast<std::size_t>(xy)][static_cast<std::size_t>(z)];
        const int rhs = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(yz)];
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
      }
    }
  return true;
}

std::vector<int> flatten(const Table& t, int n) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat.push_back(t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  return flat;
}

/// Least flattened table over all relabelings fixing the identity 0.
std::vector<int> canonical_form(const Table& t, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = flatten(t, n);
  std::vector<int> relabeled(static_cast<std::size_t>(n * n));

  // Permute the non-identity elements only; any isomorphism fixes 0.
  std::sort(perm.begin() + 1, perm.end());
  do {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        relabeled[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)] * n +
                                           perm[static_cast<std::size_t>(y)])] =
            perm[static_cast<std::size_t>(
                t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])];
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteCommutativeMonoid> enumerate_monoids(int order, bool allow_order_5) {
  if (order < 1) throw OrderTooLarge(order, "order must be at least 1");
  if (order > 5)
    throw OrderTooLarge(order, "order " + std::to_string(order) + " is out of range (max 5)");
  if (order == 5 && !allow_order_5)
    throw OrderTooLarge(order, "order 5 must be requested explicitly");

  const int n = order;
  Table table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int x = 0; x < n; ++x) {
    table[0][static_cast<std::size_t>(x)] = x;
    table[static_cast<std::size_t>(x)][0] = x;
  }

  std::vector<std::pair<int, int>> free_cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) free_cells.emplace_back(i, j);

  std::vector<FiniteCommutativeMonoid> out;
  const auto fill = [&](const auto& self, std::size_t cell) -> void {
    if (cell == free_cells.size()) {
      // All cells set and every triple checked, so the table is a
      // commutative monoid; keep it iff it is its own canonical form.
      if (flatten(table, n) == canonical_form(table, n))
        out.push_back(FiniteCommutativeMonoid::validate(
            table, "n" + std::to_string(n) + "-" + std::to_string(out.size())));
      return;
    }
    const auto [i, j] = free_cells[cell];
    for (int v = 0; v < n; ++v) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
      if (associativity_consistent(table, n)) self(self, cell + 1);
    }
    table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
  };
  fill(fill, 0);
  return out;
}

ClassificationRecord classify(const FiniteCommutativeMonoid& m) {
  ClassificationRecord record;
  record.id = m.name();

  const auto preorder = is_total(m);
  record.total = preorder.total;
  record.total_counterexample = preorder.counterexample;

  const auto split = check_splitting(m);
  record.splitting = !split.has_value();
  record.splitting_counterexample = split;

  const auto cancel = is_cancellative(m);
  record.cancellative = cancel.cancellative;
  record.cancellation_counterexample = cancel.counterexample;

  const auto idem = is_idempotent(m);
  record.idempotent = idem.idempotent;
  record.idempotence_counterexample = idem.counterexample;

  if (record.splitting) record.s_is_group = is_group(symmetrize(m).hypergroup);
  return record;
}

Survey survey(int order, bool allow_order_5) {
  Survey s;
  s.order = order;
  for (const auto& m : enumerate_monoids(order, allow_order_5)) s.records.push_back(classify(m));
  return s;
}

std::map<std::string, int> flag_combination_counts(const Survey& s) {
  std::map<std::string, int> counts;
  for (const auto& r : s.records) {
    std::string key;
    const auto append = [&key](bool flag, const char* name) {
      if (!flag) return;
      if (!key.empty()) key += ",";
      key += name;
    };
    append(r.total, "total");
    append(r.splitting, "split");
    append(r.cancellative, "cancellative");
    append(r.idempotent, "idempotent");
    append(r.s_is_group.value_or(false), "group");
    if (key.empty()) key = "none";
    ++counts[key];
  }
  return counts;
}

void write_survey_csv(std::ostream& out, const Survey& s) {
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "id,order,total,split,cancellative,idempotent,s_is_group,"
         "total_counterexample,split_counterexample,cancellation_counterexample,"
         "idempotence_counterexample\n";
  for (const auto& r : s.records) {
    out << r.id << "," << s.order << "," << yes_no(r.total) << "," << yes_no(r.splitting) << ","
        << yes_no(r.cancellative) << "," << yes_no(r.idempotent) << ","
        << (r.s_is_group ? yes_no(*r.s_is_group) : "") << ",";
    if (r.total_counterexample)
      out << "x=" << r.total_counterexample->first << " y=" << r.total_counterexample->second;
    out << ",";
    if (r.splitting_counterexample)
      out << "x=" << r.splitting_counterexample->x << " y=" << r.splitting_counterexample->y
          << " u=" << r.splitting_counterexample->u << " v=" << r.splitting_counterexample->v;
    out << ",";
    if (r.cancellation_counterexample)
      out << "x=" << (*r.cancellation_counterexample)[0]
          << " y=" << (*r.cancellation_counterexample)[1]
          << " a=" << (*r.cancellation_counterexample)[2];
    out << ",";
    if (r.idempotence_counterexample) out << "x=" << *r.idempotence_counterexample;
    out << "\n";
  }
}

}  // namespace hypersym
