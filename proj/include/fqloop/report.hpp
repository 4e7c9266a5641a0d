#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace fqloop {

using Json = nlohmann::json;

/// One named pass/fail row; `witness` is null when there is nothing to show.
struct CheckRow {
  std::string name;
  bool pass = true;
  Json witness;
};

struct Report {
  std::vector<CheckRow> rows;

  void add(std::string name, bool pass, Json witness = nullptr) {
    rows.push_back({std::move(name), pass, std::move(witness)});
  }
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  const CheckRow* find(const std::string& name) const {
    for (const auto& r : rows)
      if (r.name == name) return &r;
    return nullptr;
  }
  Json to_json() const {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back({{"name", r.name}, {"pass", r.pass}, {"witness", r.witness}});
    return out;
  }
};

}  // namespace fqloop
