#include "table.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include <json.hpp>

namespace begdob::cli {

std::string format_number(double v, int digits) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

double round_to_digits(double v, int digits) {
    if (!std::isfinite(v)) return v;
    const std::string text = format_number(v, digits);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

namespace {

std::string csv_cell(const Cell& c, int digits) {
    struct Visitor {
        int digits;
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return format_number(v, digits); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{digits}, c);
}

nlohmann::ordered_json json_cell(const Cell& c, int digits) {
    struct Visitor {
        int digits;
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) return nullptr;
            return round_to_digits(v, digits);
        }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{digits}, c);
}

}  // namespace

void write_table(std::ostream& out, const Table& table, Format format, int digits) {
    if (format == Format::Csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << (i ? "," : "") << table.columns[i];
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << csv_cell(row[i], digits);
            }
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            obj[table.columns[i]] = json_cell(row[i], digits);
        }
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace begdob::cli
