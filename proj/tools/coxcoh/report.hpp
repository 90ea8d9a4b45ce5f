#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace coxcoh::cli {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Comparison {
  std::string group;
  std::vector<std::size_t> expected;
  std::vector<std::size_t> computed;
  std::string verdict;
  int shift = 0;
};

struct FieldInfo {
  int M = 1;
  std::string minpoly;
};

struct Report {
  std::string command;
  std::string group;
  std::optional<FieldInfo> field;
  std::vector<std::size_t> space_dims;
  std::vector<std::size_t> h_dims;
  std::optional<long> euler;
  std::string mode;
  std::vector<Check> checks;
  std::vector<Comparison> comparisons;
  /// Command-specific data, emitted under "details".
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const;
  std::string verdict() const { return passed() ? "pass" : "fail"; }
  void add_check(std::string name, bool passed, std::string detail = "");
};

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

std::string render_json(const Report& r);
std::string render_table(const Report& r);

std::string dims_string(const std::vector<std::size_t>& v);

}  // namespace coxcoh::cli
