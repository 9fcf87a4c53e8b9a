#pragma once

// On-disk table format. JSON layout:
//   {"n": int, "version": "1", "entries": [{"lambda": [int], "mu": [int],
//    "class": {"type": [int], "mark": int}, "value": "p/q"}]}
// Values are reduced fraction strings, integers without the "/1". Emission
// order is deterministic: pairs by lambda reverse-lex then mu, classes by
// type reverse-lex then mark descending.

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"
#include "genchar/rational.hpp"
#include "genchar/spherical.hpp"

namespace genchar {

struct TableEntry {
  Partition lambda;
  Partition mu;
  MarkedClass cls;
  Rational value;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct TableFile {
  int n = 0;
  std::string version = "1";
  std::vector<TableEntry> entries;

  friend bool operator==(const TableFile&, const TableFile&) = default;
};

inline TableFile to_table_file(const GenCharTable& t) {
  std::vector<std::size_t> class_order(t.classes.size());
  std::iota(class_order.begin(), class_order.end(), 0);
  std::sort(class_order.begin(), class_order.end(), [&](std::size_t a, std::size_t b) {
    if (t.classes[a].cycle_type != t.classes[b].cycle_type)
      return revlex_before(t.classes[a].cycle_type, t.classes[b].cycle_type);
    return t.classes[a].mark > t.classes[b].mark;
  });
  TableFile f;
  f.n = t.n;
  for (std::size_t p = 0; p < t.pairs.size(); ++p)
    for (std::size_t c : class_order)
      f.entries.push_back(
          {t.pairs[p].first, t.pairs[p].second, t.classes[c], t.values[p][c]});
  return f;
}

namespace detail {

inline nlohmann::ordered_json parts_json(const Partition& p) {
  return nlohmann::ordered_json(p.parts());
}

inline Partition parts_from_json(const nlohmann::json& j) {
  return Partition(j.get<std::vector<int>>());
}

}  // namespace detail

inline std::string emit_json(const TableFile& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["version"] = f.version;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : f.entries) {
    nlohmann::ordered_json je;
    je["lambda"] = detail::parts_json(e.lambda);
    je["mu"] = detail::parts_json(e.mu);
    je["class"] = {{"type", detail::parts_json(e.cls.cycle_type)}, {"mark", e.cls.mark}};
    je["value"] = to_fraction_string(e.value);
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

inline TableFile parse_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  TableFile f;
  f.n = j.at("n").get<int>();
  f.version = j.at("version").get<std::string>();
  for (const auto& je : j.at("entries")) {
    TableEntry e;
    e.lambda = detail::parts_from_json(je.at("lambda"));
    e.mu = detail::parts_from_json(je.at("mu"));
    e.cls = MarkedClass(detail::parts_from_json(je.at("class").at("type")),
                        je.at("class").at("mark").get<int>());
    e.value = parse_rational(je.at("value").get<std::string>());
    f.entries.push_back(std::move(e));
  }
  return f;
}

inline std::string emit_csv(const TableFile& f) {
  std::ostringstream out;
  out << "lambda,mu,class_type,mark,value\n";
  for (const auto& e : f.entries)
    out << '"' << to_string(e.lambda) << "\",\"" << to_string(e.mu) << "\",\""
        << to_string(e.cls.cycle_type) << "\"," << e.cls.mark << ','
        << to_fraction_string(e.value) << '\n';
  return out.str();
}

}  // namespace genchar
