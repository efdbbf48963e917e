#pragma once
#include <string>
#include <vector>

#include "json.hpp"

namespace gie {

using OrderedJson = nlohmann::ordered_json;

// Format one double with the given number of significant digits ("%.*g").
std::string format_digits(double x, int digits);

// Recursively rounds every floating-point number in the tree to the given
// number of significant digits, so serialized reports carry a fixed,
// reproducible precision.
void round_numbers(OrderedJson& j, int significant_digits = 15);

// Canonical report serialization: 15-significant-digit numbers, two-space
// indentation, trailing newline.
std::string dump_report(OrderedJson j);

// Minimal CSV writer (quotes a cell only when it needs quoting).
std::string to_csv(const std::vector<std::vector<std::string>>& rows);

// One CSV numeric cell: 9 significant digits.
std::string csv_cell(double x);

}  // namespace gie
