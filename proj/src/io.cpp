#include "hypersym/io.hpp"

#include <fstream>
#include <sstream>

namespace hypersym {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw ParseError(message);
}

}  // namespace

nlohmann::json monoid_to_json(const FiniteCommutativeMonoid& m) {
  nlohmann::json j;
  if (!m.name().empty()) j["name"] = m.name();
  j["order"] = m.order();
  j["table"] = m.table();
  return j;
}

FiniteCommutativeMonoid monoid_from_json(const nlohmann::json& j) {
  require(j.is_object(), "monoid JSON must be an object");
  require(j.contains("order") && j["order"].is_number_integer(),
          "monoid JSON needs an integer \"order\"");
  require(j.contains("table") && j["table"].is_array(), "monoid JSON needs a \"table\" array");
  const int order = j["order"].get<int>();
  require(order >= 1, "monoid order must be positive");
  std::string name;
  if (j.contains("name")) {
    require(j["name"].is_string(), "monoid \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) {
    require(row.is_array(), "monoid table rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      require(v.is_number_integer(), "monoid table entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  require(static_cast<int>(table.size()) == order, "monoid table size must match order");
  return FiniteCommutativeMonoid::validate(std::move(table), std::move(name));
}

nlohmann::json hypergroup_to_json(const FiniteHypergroup& h) {
  nlohmann::json j;
  j["elements"] = h.labels();
  j["neutral"] = h.neutral();
  j["table"] = h.table();
  return j;
}

FiniteHypergroup hypergroup_from_json(const nlohmann::json& j) {
  require(j.is_object(), "hypergroup JSON must be an object");
  require(j.contains("elements") && j["elements"].is_array(),
          "hypergroup JSON needs an \"elements\" array");
  require(j.contains("neutral") && j["neutral"].is_number_integer(),
          "hypergroup JSON needs an integer \"neutral\"");
  require(j.contains("table") && j["table"].is_array(),
          "hypergroup JSON needs a \"table\" array");

  std::vector<std::string> labels;
  for (const auto& l : j["elements"]) {
    require(l.is_string(), "hypergroup element labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::vector<std::vector<int>>> table;
  for (const auto& row : j["table"]) {
    require(row.is_array(), "hypergroup table rows must be arrays");
    std::vector<std::vector<int>> r;
    for (const auto& cell : row) {
      require(cell.is_array(), "hypergroup cells must be arrays");
      std::vector<int> c;
      for (const auto& v : cell) {
        require(v.is_number_integer(), "hypergroup cell entries must be integers");
        c.push_back(v.get<int>());
      }
      r.push_back(std::move(c));
    }
    table.push_back(std::move(r));
  }
  try {
    return FiniteHypergroup(std::move(labels), j["neutral"].get<int>(), std::move(table));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("hypergroup JSON rejected: ") + e.what());
  }
}

nlohmann::json symmetrization_to_json(const SymmetrizationResult& s) {
  nlohmann::json j = hypergroup_to_json(s.hypergroup);
  j["injection"] = s.injection;
  return j;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw ParseError("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.good()) throw ParseError("cannot open file for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out.good()) throw ParseError("failed to write file: " + path);
}

}  // namespace hypersym
