#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace coxcoh::cli {

using nlohmann::ordered_json;

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add_check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string dims_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["command"] = r.command;
  j["group"] = r.group.empty() ? ordered_json(nullptr) : ordered_json(r.group);
  if (r.field) {
    j["field"] = {{"M", r.field->M}, {"minpoly", r.field->minpoly}};
  } else {
    j["field"] = nullptr;
  }
  j["space_dims"] = r.space_dims;
  j["h_dims"] = r.h_dims;
  j["euler"] = r.euler ? ordered_json(*r.euler) : ordered_json(nullptr);
  j["mode"] = r.mode;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  j["comparisons"] = ordered_json::array();
  for (const auto& c : r.comparisons)
    j["comparisons"].push_back({{"group", c.group},
                                {"expected", c.expected},
                                {"computed", c.computed},
                                {"verdict", c.verdict},
                                {"shift", c.shift}});
  j["details"] = r.details;
  j["verdict"] = r.verdict();
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  if (!j.at("group").is_null()) r.group = j.at("group").get<std::string>();
  if (!j.at("field").is_null())
    r.field = FieldInfo{j.at("field").at("M").get<int>(), j.at("field").at("minpoly").get<std::string>()};
  r.space_dims = j.at("space_dims").get<std::vector<std::size_t>>();
  r.h_dims = j.at("h_dims").get<std::vector<std::size_t>>();
  if (!j.at("euler").is_null()) r.euler = j.at("euler").get<long>();
  r.mode = j.at("mode").get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>() == "pass",
                        c.at("detail").get<std::string>()});
  for (const auto& c : j.at("comparisons"))
    r.comparisons.push_back({c.at("group").get<std::string>(), c.at("expected").get<std::vector<std::size_t>>(),
                             c.at("computed").get<std::vector<std::size_t>>(), c.at("verdict").get<std::string>(),
                             c.at("shift").get<int>()});
  r.details = j.at("details");
  return r;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_table(const Report& r) {
  std::ostringstream out;
  out << "command  " << r.command << "\n";
  if (!r.group.empty()) out << "group    " << r.group << "\n";
  if (r.field) out << "field    Q(2cos(pi/" << r.field->M << ")), minimal polynomial " << r.field->minpoly << "\n";
  if (!r.mode.empty()) out << "mode     " << r.mode << "\n";

  if (!r.space_dims.empty() || !r.h_dims.empty()) {
    const int first = r.details.contains("first_degree") ? r.details["first_degree"].get<int>() : 0;
    out << "\n" << std::setw(8) << "degree" << std::setw(10) << "space" << std::setw(8) << "H" << "\n";
    const std::size_t rows = std::max(r.space_dims.size(), r.h_dims.size());
    for (std::size_t k = 0; k < rows; ++k) {
      out << std::setw(8) << first + static_cast<int>(k);
      out << std::setw(10) << (k < r.space_dims.size() ? std::to_string(r.space_dims[k]) : "-");
      out << std::setw(8) << (k < r.h_dims.size() ? std::to_string(r.h_dims[k]) : "-") << "\n";
    }
  }
  if (r.euler) out << "euler    " << *r.euler << "\n";

  if (!r.comparisons.empty()) {
    out << "\n" << std::left << std::setw(8) << "group" << std::setw(22) << "expected" << std::setw(22) << "computed"
        << "verdict\n";
    for (const auto& c : r.comparisons) {
      out << std::setw(8) << c.group << std::setw(22) << dims_string(c.expected) << std::setw(22)
          << dims_string(c.computed) << c.verdict;
      if (c.shift != 0) out << " (" << (c.shift > 0 ? "+" : "") << c.shift << ")";
      out << "\n";
    }
    out << std::right;
  }

  if (!r.details.empty()) {
    out << "\n";
    for (const auto& [key, value] : r.details.items()) {
      if (key == "first_degree") continue;
      out << key << ": " << value.dump() << "\n";
    }
  }

  if (!r.checks.empty()) {
    out << "\n";
    for (const auto& c : r.checks) {
      out << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  out << "\nverdict  " << r.verdict() << "\n";
  return out.str();
}

}  // namespace coxcoh::cli
