#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace begdob::cli {

/// Empty cells print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

enum class Format { Csv, Json };

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest-form decimal with `digits` significant digits, locale independent.
std::string format_number(double v, int digits);

/// The double denoted by format_number(v, digits), so CSV and JSON carry
/// identical values.
double round_to_digits(double v, int digits);

/// CSV with a header row, or a JSON array of row objects.
void write_table(std::ostream& out, const Table& table, Format format, int digits);

}  // namespace begdob::cli
