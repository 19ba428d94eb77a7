#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zeno::cli {

/// Numbers, integers, or short text tags (method, mode). An empty string
/// marks a value the row does not define.
using Cell = std::variant<double, long long, std::string>;

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Echoed as `# key = value` comment lines ahead of the header row.
    std::vector<std::pair<std::string, std::string>> metadata;

    /// Appends a row. Throws InvalidArgument for a width mismatch or a
    /// non-finite number.
    void add_row(std::vector<Cell> row);

    /// Index of a column by name; throws std::out_of_range if absent.
    std::size_t column(const std::string& name) const;
};

/// 17 significant digits, shortest exponent form ("%.17g").
std::string format_number(double v);

/// Comment header, column row, data rows; `,` separated, LF terminated.
void write_csv(const SweepTable& table, std::ostream& os);

std::string to_csv(const SweepTable& table);

}  // namespace zeno::cli
