#include "hypersym/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "hypersym/builders.hpp"
#include "hypersym/decomposition.hpp"
#include "hypersym/enumeration.hpp"
#include "hypersym/io.hpp"
#include "hypersym/symmetrize.hpp"

namespace hypersym::cli {

namespace {

using Carrier = std::variant<FiniteCommutativeMonoid, NaturalsWindow>;

const SolvableMonoid& as_solvable(const Carrier& c) {
  if (const auto* m = std::get_if<FiniteCommutativeMonoid>(&c)) return *m;
  return std::get<NaturalsWindow>(c);
}

const FiniteCommutativeMonoid* as_finite(const Carrier& c) {
  return std::get_if<FiniteCommutativeMonoid>(&c);
}

int parse_int(std::string_view& rest, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(std::string(rest), &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what);
  }
  rest.remove_prefix(used);
  return value;
}

// Builtin grammar: chain:<n> | nat:<w> | z:<n> | prod:<spec>,<spec>
Carrier parse_builtin(std::string_view& rest, bool top_level) {
  const auto eat = [&rest](std::string_view prefix) {
    if (rest.substr(0, prefix.size()) != prefix) return false;
    rest.remove_prefix(prefix.size());
    return true;
  };
  if (eat("chain:")) return chain_max(parse_int(rest, "chain:<n>"));
  if (eat("z:")) return cyclic_group(parse_int(rest, "z:<n>"));
  if (eat("nat:")) {
    if (!top_level) throw ParseError("prod operands must be finite (nat: is windowed)");
    return naturals_window(parse_int(rest, "nat:<W>"));
  }
  if (eat("prod:")) {
    auto first = parse_builtin(rest, false);
    if (rest.empty() || rest.front() != ',') throw ParseError("prod needs two comma-separated operands");
    rest.remove_prefix(1);
    auto second = parse_builtin(rest, false);
    return product(*as_finite(first), *as_finite(second));
  }
  throw ParseError("unknown builtin carrier: " + std::string(rest));
}

bool looks_builtin(const std::string& s) {
  for (const char* prefix : {"chain:", "nat:", "z:", "prod:"})
    if (s.rfind(prefix, 0) == 0) return true;
  return false;
}

Carrier load_carrier(const std::string& input) {
  if (looks_builtin(input)) {
    std::string_view rest(input);
    auto carrier = parse_builtin(rest, true);
    if (!rest.empty()) throw ParseError("trailing characters in carrier spec: " + std::string(rest));
    return carrier;
  }
  return monoid_from_json(read_json_file(input));
}

std::string carrier_name(const std::string& input, const Carrier& c) {
  if (const auto* m = as_finite(c); m && !m->name().empty()) return m->name();
  return input;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<int> parse_parts(const std::string& text, const SolvableMonoid& m) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("bad decomposition entry: " + item);
      parts.push_back(v);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad decomposition entry: " + item);
    }
  }
  if (parts.empty()) throw ParseError("decomposition must list at least one part");
  for (int p : parts)
    if (p < 0 || p >= m.carrier_size())
      throw ParseError("decomposition part " + std::to_string(p) + " is outside the carrier");
  return parts;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

void print_split_verdict(std::ostream& out, const SolvableMonoid& m) {
  if (const auto cex = check_splitting(m)) {
    out << "splitting condition: fails   counterexample: x=" << cex->x << " y=" << cex->y
        << " u=" << cex->u << " v=" << cex->v << " (x+y = u+v = " << m.add(cex->x, cex->y)
        << ", no splitting z)\n";
  } else {
    out << "splitting condition: ok\n";
  }
}

void print_hypergroup_table(std::ostream& out, const FiniteHypergroup& h) {
  out << "labels:";
  for (const auto& l : h.labels()) out << " " << l;
  out << "\n";
  for (int x = 0; x < h.size(); ++x)
    for (int y = x; y < h.size(); ++y) {
      out << h.label(x) << " + " << h.label(y) << " = {";
      const auto& cell = h.cell(x, y);
      for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) out << ", ";
        out << h.label(cell[static_cast<std::size_t>(i)]);
      }
      out << "}\n";
    }
}

void print_axiom_report(std::ostream& out, const AxiomReport& report) {
  static const char* names[5] = {"commutativity", "associativity", "neutral element",
                                 "unique negatives", "reversibility"};
  for (int i = 1; i <= 5; ++i) {
    const auto& v = report.verdict(i);
    out << "axiom (" << i << ") " << names[i - 1] << ": " << (v.ok ? "pass" : "FAIL");
    if (!v.ok) {
      out << "   witness:";
      for (int w : v.witness) out << " " << w;
      out << " (" << v.detail << ")";
    }
    out << "\n";
  }
}

int cmd_check(std::ostream& out, const std::string& input, const std::string& require_flags) {
  const Carrier carrier = load_carrier(input);
  const SolvableMonoid& m = as_solvable(carrier);
  const auto* finite = as_finite(carrier);

  out << "input: " << carrier_name(input, carrier) << "\n";
  if (finite) {
    out << "order: " << finite->order() << "\n";
    out << "identity: " << finite->identity() << "\n";
    out << "commutative: yes\nassociative: yes\n";  // guaranteed by validation
  } else {
    out << "carrier: 0.." << (m.carrier_size() - 1) << " (windowed, addition partial)\n";
  }

  const auto preorder = is_total(m);
  out << "total preorder: " << yes_no(preorder.total);
  if (!preorder.total)
    out << "   counterexample: x=" << preorder.counterexample->first
        << " y=" << preorder.counterexample->second << " (incomparable)";
  out << "\n";

  const auto cancel = is_cancellative(m);
  out << "cancellative: " << yes_no(cancel.cancellative);
  if (!cancel.cancellative)
    out << "   counterexample: x=" << (*cancel.counterexample)[0]
        << " y=" << (*cancel.counterexample)[1] << " a=" << (*cancel.counterexample)[2];
  out << "\n";

  const auto idem = is_idempotent(m);
  out << "idempotent: " << yes_no(idem.idempotent);
  if (!idem.idempotent) out << "   counterexample: x=" << *idem.counterexample;
  out << "\n";

  const auto split = check_splitting(m);
  print_split_verdict(out, m);

  std::optional<bool> group_flag;
  if (!split && finite) {
    group_flag = is_group(symmetrize(*finite).hypergroup);
    out << "s(B) is a group: " << yes_no(*group_flag) << "\n";
  }

  if (require_flags.empty()) return 0;
  bool all_met = true;
  std::stringstream ss(require_flags);
  std::string flag;
  while (std::getline(ss, flag, ',')) {
    bool met = false;
    if (flag == "total")
      met = preorder.total;
    else if (flag == "split")
      met = !split.has_value();
    else if (flag == "cancellative")
      met = cancel.cancellative;
    else if (flag == "idempotent")
      met = idem.idempotent;
    else if (flag == "group") {
      if (!finite)
        throw ParseError("--require group needs a closed finite table; windowed carriers "
                         "have no closed symmetrization to inspect");
      met = group_flag.value_or(false);  // splitting failures leave no hypergroup to ask
    } else
      throw ParseError("unknown --require flag: " + flag +
                       " (known: total, split, cancellative, idempotent, group)");
    if (!met) {
      out << "required property not met: " << flag << "\n";
      all_met = false;
    }
  }
  return all_met ? 0 : 1;
}

int cmd_symmetrize(std::ostream& out, const std::string& input, bool force,
                   const std::string& out_path) {
  const Carrier carrier = load_carrier(input);
  const auto* finite = as_finite(carrier);
  if (!finite)
    throw ParseError("symmetrize needs a closed finite table; windowed carriers (nat:<W>) "
                     "have no closed symmetrization");

  const auto sym = symmetrize(*finite, force);
  out << "s(" << carrier_name(input, carrier) << "): " << sym.hypergroup.size()
      << " elements, neutral " << sym.hypergroup.label(sym.hypergroup.neutral()) << "\n";
  print_hypergroup_table(out, sym.hypergroup);
  if (force) print_axiom_report(out, check_axioms(sym.hypergroup));
  if (!out_path.empty()) {
    write_text_file(out_path, symmetrization_to_json(sym).dump(2) + "\n");
    out << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_grothendieck(std::ostream& out, const std::string& input) {
  const Carrier carrier = load_carrier(input);
  const SolvableMonoid& m = as_solvable(carrier);
  const auto* finite = as_finite(carrier);
  const std::string name = carrier_name(input, carrier);

  const auto g = grothendieck_group(m);
  out << "grothendieck group of " << name << ": " << g.class_reps.size() << " classes\n";
  if (g.group) {
    out << monoid_to_json(*g.group).dump() << "\n";
  } else {
    out << "closed group table not representable inside the window\n";
    out << "class representatives (a - b):";
    for (const auto& [a, b] : g.class_reps) out << " (" << a << "," << b << ")";
    out << "\n";
  }
  out << "unit map:";
  for (std::size_t a = 0; a < g.unit_map.size(); ++a)
    out << " " << a << "->" << g.unit_map[a];
  out << "\n";

  if (finite) {
    const auto cmp = compare_grothendieck(*finite);  // throws SplittingFailed when it fails
    out << "cancellative: " << yes_no(cmp.cancellative) << "\n";
    if (cmp.s_is_group)
      out << "s(B) is a group: matches Grothendieck (isomorphism "
          << (cmp.isomorphism ? "found" : "MISSING") << ")\n";
    else
      out << "s(B) is a group: no (monoid is not cancellative); Grothendieck comparison "
             "collapses\n";
    if (!cmp.equivalence_holds) {
      out << "equivalence violated\n";
      return 1;
    }
  }
  return 0;
}

/// Deterministic same-target re-decomposition: shuffle the parts, then merge
/// a few adjacent runs. Folds never leave the window because partial sums of
/// a permutation are bounded by the target on the carriers we ship.
Decomposition scramble(const SolvableMonoid& m, const Decomposition& d, std::mt19937_64& rng) {
  std::vector<int> parts = d.parts;
  std::shuffle(parts.begin(), parts.end(), rng);
  std::vector<int> merged;
  for (std::size_t i = 0; i < parts.size();) {
    std::uniform_int_distribution<std::size_t> span(1, parts.size() - i);
    const std::size_t take = span(rng);
    merged.push_back(fold_sum(m, parts, i, i + take));
    i += take;
  }
  return make_decomposition(m, std::move(merged));
}

int cmd_refine(std::ostream& out, const std::string& input, std::vector<std::string> d_specs,
               int trials, std::uint64_t seed) {
  const Carrier carrier = load_carrier(input);
  const SolvableMonoid& m = as_solvable(carrier);

  if (trials > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> element(0, m.carrier_size() - 1);
    int ran = 0;
    for (int t = 0; t < trials; ++t) {
      std::uniform_int_distribution<int> length(1, 4);
      std::vector<int> parts(static_cast<std::size_t>(length(rng)));
      bool ok = true;
      for (auto& p : parts) p = element(rng);
      Decomposition d1;
      try {
        d1 = make_decomposition(m, parts);
      } catch (const WindowOverflow&) {
        ok = false;  // resample implicitly; the trial still counts as skipped
      }
      if (!ok) continue;
      const Decomposition d2 = scramble(m, d1, rng);
      const auto common = common_refinement(m, d1, d2);
      if (!refines(m, common.common, d1) || !refines(m, common.common, d2))
        throw std::logic_error("common refinement failed independent verification");
      ++ran;
    }
    out << "trials: " << ran << " ok (of " << trials << " attempted)\n";
    return 0;
  }

  if (d_specs.size() != 2) throw ParseError("refine needs exactly two --d decompositions");
  const auto d1 = make_decomposition(m, parse_parts(d_specs[0], m));
  const auto d2 = make_decomposition(m, parse_parts(d_specs[1], m));
  if (d1.target != d2.target) throw TargetMismatch(d1.target, d2.target);

  out << "target: " << d1.target << "\n";
  out << "first:  " << join_parts(d1.parts) << "\n";
  out << "second: " << join_parts(d2.parts) << "\n";
  const auto common = common_refinement(m, d1, d2);
  out << "common refinement: " << join_parts(common.common.parts) << "\n";
  out << "first certificate cuts:  " << join_parts(common.first_cert.cuts) << "\n";
  out << "second certificate cuts: " << join_parts(common.second_cert.cuts) << "\n";
  if (d1.parts.size() == 2 && d2.parts.size() == 2) {
    const auto w = witness_from_refinement(m, d1, d2, common);
    out << "split witness: case " << (w.which == SplitWitness::Case::One ? 1 : 2)
        << ", z=" << w.z << "\n";
  }
  return 0;
}

int cmd_enumerate(std::ostream& out, int order, bool classify_flag, const std::string& csv_path,
                  bool allow_order_5) {
  if (classify_flag || !csv_path.empty()) {
    const auto s = survey(order, allow_order_5);
    out << "order " << order << ": " << s.records.size() << " isomorphism classes\n";
    for (const auto& r : s.records) {
      out << r.id << "  total=" << yes_no(r.total) << " split=" << yes_no(r.splitting)
          << " cancellative=" << yes_no(r.cancellative) << " idempotent=" << yes_no(r.idempotent);
      if (r.s_is_group) out << " group=" << yes_no(*r.s_is_group);
      out << "\n";
    }
    out << "flag combinations:\n";
    for (const auto& [key, count] : flag_combination_counts(s))
      out << "  " << key << ": " << count << "\n";
    if (!csv_path.empty()) {
      std::ostringstream csv;
      write_survey_csv(csv, s);
      write_text_file(csv_path, csv.str());
      out << "wrote " << csv_path << "\n";
    }
  } else {
    const auto monoids = enumerate_monoids(order, allow_order_5);
    out << "order " << order << ": " << monoids.size() << " isomorphism classes\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"commutative monoids, their symmetrizations, and canonical hypergroups"};
  app.name("hypersym");
  app.require_subcommand(1);

  std::string input, require_flags, out_path, csv_path;
  std::vector<std::string> d_specs;
  bool force = false, classify_flag = false, allow_order_5 = false;
  int order = 0, trials = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "validate a monoid and report its properties");
  check->add_option("input", input, "monoid JSON file or builtin (chain:<n>, nat:<W>, z:<n>, prod:<a>,<b>)")
      ->required();
  check->add_option("--require", require_flags,
                    "comma-separated properties that must hold (exit 1 otherwise)");

  auto* symmetrize_cmd = app.add_subcommand("symmetrize", "build the signed hypergroup s(B)");
  symmetrize_cmd->add_option("input", input, "monoid JSON file or builtin")->required();
  symmetrize_cmd->add_flag("--force", force,
                           "build from totality alone and report which axioms fail");
  symmetrize_cmd->add_option("--out", out_path, "write the hypergroup JSON here");

  auto* grothendieck_cmd =
      app.add_subcommand("grothendieck", "group completion and comparison with s(B)");
  grothendieck_cmd->add_option("input", input, "monoid JSON file or builtin")->required();

  auto* refine = app.add_subcommand("refine", "common refinement of two decompositions");
  refine->add_option("input", input, "monoid JSON file or builtin")->required();
  refine->add_option("--d", d_specs, "decomposition as comma-separated element indices (twice)");
  refine->add_option("--trials", trials, "run seeded random decomposition pairs instead of --d");
  refine->add_option("--seed", seed, "seed for --trials");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "commutative monoids of a given order, up to isomorphism");
  enumerate_cmd->add_option("--order", order, "carrier size (1..4; 5 needs --allow-order-5)")
      ->required();
  enumerate_cmd->add_flag("--classify", classify_flag, "classify every class");
  enumerate_cmd->add_option("--csv", csv_path, "write the classification as CSV");
  enumerate_cmd->add_flag("--allow-order-5", allow_order_5, "permit the slow order-5 search");

  std::vector<const char*> argv;
  argv.push_back("hypersym");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(out, input, require_flags);
    if (symmetrize_cmd->parsed()) return cmd_symmetrize(out, input, force, out_path);
    if (grothendieck_cmd->parsed()) return cmd_grothendieck(out, input);
    if (refine->parsed()) return cmd_refine(out, input, d_specs, trials, seed);
    if (enumerate_cmd->parsed())
      return cmd_enumerate(out, order, classify_flag, csv_path, allow_order_5);
  } catch (const SplittingFailed& e) {
    err << "splitting condition fails: x=" << e.x << " y=" << e.y << " u=" << e.u << " v=" << e.v
        << "\n";
    return 1;
  } catch (const NotTotal& e) {
    err << "divisibility preorder is not total: " << e.x << " and " << e.y
        << " are incomparable\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}

}  // namespace hypersym::cli
