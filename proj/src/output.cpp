#include "semiwkb/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include "json.hpp"
#include <ostream>

#include "semiwkb/error.hpp"

namespace semiwkb {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double round_significant(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

OutputRecord& OutputRecord::add(std::string name, double v) {
  fields_.emplace_back(std::move(name), round_significant(v));
  return *this;
}

OutputRecord& OutputRecord::add(std::string name, std::int64_t v) {
  fields_.emplace_back(std::move(name), v);
  return *this;
}

OutputRecord& OutputRecord::add(std::string name, std::string v) {
  fields_.emplace_back(std::move(name), std::move(v));
  return *this;
}

const FieldValue* OutputRecord::find(const std::string& name) const {
  for (const auto& [k, v] : fields_) {
    if (k == name) return &v;
  }
  return nullptr;
}

namespace {

std::string to_text(const FieldValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Union of field names in first-appearance order.
std::vector<std::string> columns(const std::vector<OutputRecord>& records) {
  std::vector<std::string> cols;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.fields()) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  return cols;
}

}  // namespace

void write_json_lines(const std::vector<OutputRecord>& records, std::ostream& out) {
  for (const auto& r : records) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fields()) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(x)) {
                j[k] = x;
              } else {
                j[k] = format_number(x);
              }
            } else {
              j[k] = x;
            }
          },
          v);
    }
    out << j.dump() << '\n';
  }
}

void write_csv(const std::vector<OutputRecord>& records, std::ostream& out) {
  if (records.empty()) return;
  const auto cols = columns(records);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out << ',';
      if (const auto* v = r.find(cols[i])) out << csv_escape(to_text(*v));
    }
    out << '\n';
  }
}

void write_table(const std::vector<OutputRecord>& records, std::ostream& out) {
  if (records.empty()) return;
  const auto cols = columns(records);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const auto& r : records) {
    auto& row = cells.emplace_back();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto* v = r.find(cols[i]);
      row.push_back(v ? to_text(*v) : "");
      width[i] = std::max(width[i], row.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    out << '\n';
  };
  emit(cols);
  for (const auto& row : cells) emit(row);
}

void write_records(const std::vector<OutputRecord>& records, OutputFormat format,
                   std::ostream& out) {
  switch (format) {
    case OutputFormat::Json: write_json_lines(records, out); break;
    case OutputFormat::Csv: write_csv(records, out); break;
    case OutputFormat::Table: write_table(records, out); break;
  }
}

std::vector<OutputRecord> read_json_lines(std::istream& in) {
  std::vector<OutputRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorKind::InvalidArgument, "read_json_lines: malformed line");
    }
    OutputRecord r;
    for (const auto& [k, v] : j.items()) {
      if (v.is_number_integer()) {
        r.add(k, v.get<std::int64_t>());
      } else if (v.is_number()) {
        r.add(k, v.get<double>());
      } else if (v.is_string()) {
        r.add(k, v.get<std::string>());
      } else {
        throw Error(ErrorKind::InvalidArgument, "read_json_lines: unsupported value for " + k);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace semiwkb
