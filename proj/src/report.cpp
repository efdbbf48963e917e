#include "gie/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace gie {

std::string format_digits(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

void round_numbers(OrderedJson& j, int significant_digits) {
  if (j.is_number_float()) {
    const std::string s = format_digits(j.get<double>(), significant_digits);
    j = std::strtod(s.c_str(), nullptr);
    return;
  }
  if (j.is_object() || j.is_array()) {
    for (auto& item : j) round_numbers(item, significant_digits);
  }
}

std::string dump_report(OrderedJson j) {
  round_numbers(j);
  return j.dump(2) + "\n";
}

namespace {
std::string escape_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += escape_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string csv_cell(double x) { return format_digits(x, 9); }

}  // namespace gie
