#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surdsym/enumerate.hpp"
#include "surdsym/period.hpp"

namespace surdsym {

enum class Format { Markdown, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

/// A flat table. Cells are kept as text; the column kind drives JSON typing.
struct Table {
    enum class Kind { Integer, Text, Boolean };
    struct Column {
        std::string name;
        Kind kind = Kind::Text;
    };
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t index_of(std::string_view name) const;  // throws DomainError if absent
};

/// CSV with a header row, JSON array of flat objects, or a pipe table.
std::string render(const Table & t, Format f);

/// Parses CSV (RFC 4180 quoting) back into a table of text columns.
Table parse_csv(std::string_view text);
/// Parses a JSON array of flat objects; column order follows the first object.
Table parse_json(std::string_view text);

/// One record per class: delta, m, n, k, gamma, cf, length, t, t_up, t_down, symmetry, primitive, square.
Table report_records(const std::vector<ClassReport> & reports);
/// Display layout for Markdown output: delta, m, n, k, period, length, t, t_up-t_down, symmetry, star.
Table report_display(const std::vector<ClassReport> & reports);
std::vector<ClassReport> reports_from_table(const Table & t);

/// delta, square, total, one count and one fraction column per symmetry type.
Table stats_records(const std::vector<StatsRow> & rows);
std::vector<StatsRow> stats_from_table(const Table & t);

/// "[1,2,3]" -> {1,2,3}; "" and "[]" give an empty sequence.
Sequence parse_sequence(std::string_view text);

}  // namespace surdsym
