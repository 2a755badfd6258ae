#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace semiwkb {

using FieldValue = std::variant<double, std::int64_t, std::string>;

/// Flat, ordered row of named fields. Doubles are rounded to 9 significant
/// digits on insertion so every writer sees the same value.
class OutputRecord {
 public:
  OutputRecord& add(std::string name, double v);
  OutputRecord& add(std::string name, int v) { return add(std::move(name), std::int64_t{v}); }
  OutputRecord& add(std::string name, std::int64_t v);
  OutputRecord& add(std::string name, std::string v);
  OutputRecord& add(std::string name, const char* v) { return add(std::move(name), std::string(v)); }

  const std::vector<std::pair<std::string, FieldValue>>& fields() const noexcept { return fields_; }
  const FieldValue* find(const std::string& name) const;

 private:
  std::vector<std::pair<std::string, FieldValue>> fields_;
};

enum class OutputFormat { Json, Csv, Table };

double round_significant(double v);
std::string format_number(double v);

void write_json_lines(const std::vector<OutputRecord>& records, std::ostream& out);
void write_csv(const std::vector<OutputRecord>& records, std::ostream& out);
void write_table(const std::vector<OutputRecord>& records, std::ostream& out);
void write_records(const std::vector<OutputRecord>& records, OutputFormat format, std::ostream& out);

/// Inverse of write_json_lines.
std::vector<OutputRecord> read_json_lines(std::istream& in);

}  // namespace semiwkb
