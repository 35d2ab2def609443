#pragma once
#include <optional>
#include <string>

#include "newtonlab/system.hpp"

namespace nl {

// Instance file: {"dim": n, "f": [...], "g": [...]} or {"dim": n, "h": [...]};
// mixed volumes use "polytopes", semi-interlaced families "parent" and
// "daughters".
struct Instance {
  std::size_t dim = 0;
  std::optional<std::vector<IVec>> f, g, h;
  std::vector<std::vector<IVec>> polytopes;
  std::optional<std::vector<IVec>> parent;
  std::vector<std::vector<IVec>> daughters;

  bool has_pair() const { return f && g; }
  // h, or build_H(f, g) when only the pair is given.
  std::vector<IVec> lifted() const;
};

// Throws InputError with line:column context.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& in);

struct ResultRecord {
  std::string label;
  std::optional<ExtCovector> covector;
  std::vector<IVec> points;
  std::vector<std::pair<std::string, Int>> values;
};

struct ResultCheck {
  std::string kind;
  std::vector<std::pair<std::string, Int>> values;
  bool match = false;
};

struct ResultFile {
  std::string command;
  std::string source;
  std::string status;
  std::vector<ResultRecord> records;
  std::vector<std::pair<std::string, Int>> totals;
  std::optional<ResultCheck> check;
  std::vector<std::string> notes;
};

// Canonical JSON: fixed key order, reduced fractions, "inf" for ∞.
std::string to_json(const ResultFile& r);
ResultFile parse_result(const std::string& text);
// Aligned UTF-8 table.
std::string to_table(const ResultFile& r);

ResultRecord record_row(const AsymptoticRecord& r);

}  // namespace nl
