#include "zeno/cli/sweep_table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno::cli {

void SweepTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw InvalidArgument("row has " + std::to_string(row.size()) + " cells, table has " +
                              std::to_string(columns.size()) + " columns");
    }
    for (const auto& cell : row) {
        if (const double* v = std::get_if<double>(&cell); v != nullptr && !std::isfinite(*v)) {
            throw InvalidArgument("table values must be finite");
        }
    }
    rows.push_back(std::move(row));
}

std::size_t SweepTable::column(const std::string& name) const {
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] == name) return k;
    }
    throw std::out_of_range("no column named " + name);
}

std::string format_number(double v) {
    // to_chars is locale-independent, unlike printf.
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

namespace {

struct CellWriter {
    std::ostream& os;
    void operator()(double v) const { os << format_number(v); }
    void operator()(long long v) const { os << v; }
    void operator()(const std::string& s) const { os << s; }
};

}  // namespace

void write_csv(const SweepTable& table, std::ostream& os) {
    for (const auto& [key, value] : table.metadata) os << "# " << key << " = " << value << '\n';
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
        if (k > 0) os << ',';
        os << table.columns[k];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) os << ',';
            std::visit(CellWriter{os}, row[k]);
        }
        os << '\n';
    }
}

std::string to_csv(const SweepTable& table) {
    std::ostringstream os;
    write_csv(table, os);
    return os.str();
}

}  // namespace zeno::cli
