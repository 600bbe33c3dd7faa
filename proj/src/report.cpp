#include "surdsym/report.hpp"

#include <sstream>

#include "json.hpp"

namespace surdsym {

namespace {

using Kind = Table::Kind;
using json = nlohmann::ordered_json;

std::string text(const Int & v)
{
    return v.to_string();
}

std::string text(bool b)
{
    return b ? "true" : "false";
}

bool parse_bool(std::string_view s)
{
    if (s == "true" || s == "1")
        return true;
    if (s == "false" || s == "0")
        return false;
    throw DomainError("expected a boolean, got '" + std::string(s) + "'");
}

std::string csv_field(const std::string & s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string & s)
{
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += '\\';
        out += c;
    }
    return out;
}

json typed(const std::string & cell, Kind kind)
{
    switch (kind) {
    case Kind::Integer: {
        Int v = parse_int(cell);
        if (v.fits_int64())
            return v.to_int64();
        return cell;
    }
    case Kind::Boolean: return parse_bool(cell);
    case Kind::Text: return cell;
    }
    return cell;
}

// fixed six-decimal rendering of num/den, rounded half up
std::string decimal_fraction(const Int & num, const Int & den)
{
    constexpr long long scale = 1000000;
    Int scaled = floor_div(2 * num * scale + den, 2 * den);
    std::string frac = floor_mod(scaled, scale).to_string();
    frac.insert(0, 6 - frac.size(), '0');
    return floor_div(scaled, scale).to_string() + "." + frac;
}

std::string column_name(SymmetryType t)
{
    std::string s(short_label(t));
    return s == "m+n" ? "mpn" : s;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "md" || name == "markdown")
        return Format::Markdown;
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    return std::nullopt;
}

std::size_t Table::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name)
            return i;
    throw DomainError("missing column '" + std::string(name) + "'");
}

std::string render(const Table & t, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::Csv:
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << csv_field(t.columns[i].name);
        out << '\n';
        for (const auto & row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
        break;
    case Format::Json: {
        json arr = json::array();
        for (const auto & row : t.rows) {
            json rec = json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                rec[t.columns[i].name] = typed(row[i], t.columns[i].kind);
            arr.push_back(std::move(rec));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::Markdown:
        out << '|';
        for (const auto & c : t.columns)
            out << ' ' << md_cell(c.name) << " |";
        out << "\n|";
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << "---|";
        out << '\n';
        for (const auto & row : t.rows) {
            out << '|';
            for (const auto & cell : row)
                out << ' ' << md_cell(cell) << " |";
            out << '\n';
        }
        break;
    }
    return out.str();
}

Table parse_csv(std::string_view input)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < input.size(); ++i) {
        char c = input[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < input.size() && input[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        any = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < input.size() && input[i + 1] == '\n')
                ++i;
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field += c;
        }
    }
    if (quoted)
        throw DomainError("unterminated quoted CSV field");
    if (any || !field.empty() || !record.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    if (records.empty())
        throw DomainError("CSV input has no header row");
    Table t;
    for (auto & name : records.front())
        t.columns.push_back({name, Kind::Text});
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != t.columns.size())
            throw DomainError("CSV row " + std::to_string(r) + " has " +
                              std::to_string(records[r].size()) + " fields, expected " +
                              std::to_string(t.columns.size()));
        t.rows.push_back(std::move(records[r]));
    }
    return t;
}

Table parse_json(std::string_view input)
{
    json doc;
    try {
        doc = json::parse(input);
    } catch (const json::exception & e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw DomainError("expected a JSON array of records");
    Table t;
    for (const auto & rec : doc) {
        if (!rec.is_object())
            throw DomainError("expected a flat JSON object");
        if (t.columns.empty())
            for (const auto & [key, value] : rec.items())
                t.columns.push_back({key, Kind::Text});
        std::vector<std::string> row;
        for (const auto & c : t.columns) {
            if (!rec.contains(c.name))
                throw DomainError("record lacks field '" + c.name + "'");
            const json & v = rec.at(c.name);
            if (v.is_string())
                row.push_back(v.get<std::string>());
            else if (v.is_boolean())
                row.push_back(text(v.get<bool>()));
            else if (v.is_number_integer())
                row.push_back(std::to_string(v.get<long long>()));
            else
                throw DomainError("field '" + c.name + "' is not flat");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Sequence parse_sequence(std::string_view s)
{
    Sequence out;
    std::string body(s);
    // strip [..] or ((..))
    while (!body.empty() && (body.front() == '[' || body.front() == '(')) {
        const char close = body.front() == '[' ? ']' : ')';
        if (body.size() < 2 || body.back() != close)
            throw DomainError("unbalanced brackets in '" + std::string(s) + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::size_t start = 0;
    while (start < body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string::npos)
            comma = body.size();
        out.push_back(parse_int(body.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

Table report_records(const std::vector<ClassReport> & reports)
{
    Table t;
    t.columns = {{"delta", Kind::Integer}, {"m", Kind::Integer},       {"n", Kind::Integer},
                 {"k", Kind::Integer},     {"gamma", Kind::Text},      {"cf", Kind::Text},
                 {"length", Kind::Integer}, {"t", Kind::Integer},      {"t_up", Kind::Integer},
                 {"t_down", Kind::Integer}, {"symmetry", Kind::Text},  {"primitive", Kind::Boolean},
                 {"square", Kind::Boolean}};
    for (const auto & r : reports) {
        t.rows.push_back({text(r.delta), text(r.representative.m), text(r.representative.n),
                          text(r.representative.k), r.square ? "" : format_period(r.gamma),
                          r.square ? format_period(r.cf_k_over_m) : "", text(r.length), text(r.t),
                          text(r.t_up), text(r.t_down), std::string(to_string(r.symmetry)),
                          text(r.primitive), text(r.square)});
    }
    return t;
}

Table report_display(const std::vector<ClassReport> & reports)
{
    bool any_square = false, any_plain = false;
    for (const auto & r : reports)
        (r.square ? any_square : any_plain) = true;
    std::string seq = any_square && any_plain ? "Γ / k/m" : any_square ? "k/m" : "Γ";
    std::string len = any_square && any_plain ? "P / L" : any_square ? "L" : "P";
    Table t;
    t.columns = {{"Δ"}, {"m"}, {"n"}, {"k"}, {seq}, {len}, {"t"}, {"t↑-t↓"}, {"symmetry"}, {"⋆"}};
    for (const auto & r : reports) {
        std::string cf = r.square ? (r.cf_k_over_m.empty() ? "0" : format_period(r.cf_k_over_m))
                                  : format_period(r.gamma);
        t.rows.push_back({text(r.delta), text(r.representative.m), text(r.representative.n),
                          text(r.representative.k), cf, text(r.length), text(r.t),
                          text(r.t_up) + "-" + text(r.t_down), std::string(short_label(r.symmetry)),
                          r.primitive ? "" : "⋆"});
    }
    return t;
}

std::vector<ClassReport> reports_from_table(const Table & t)
{
    const std::size_t delta = t.index_of("delta"), m = t.index_of("m"), n = t.index_of("n"),
                      k = t.index_of("k"), gamma = t.index_of("gamma"), cf = t.index_of("cf"),
                      length = t.index_of("length"), tt = t.index_of("t"),
                      up = t.index_of("t_up"), down = t.index_of("t_down"),
                      sym = t.index_of("symmetry"), prim = t.index_of("primitive"),
                      sq = t.index_of("square");
    std::vector<ClassReport> out;
    for (const auto & row : t.rows) {
        ClassReport r{};
        r.delta = parse_int(row[delta]);
        r.representative = Form{parse_int(row[m]), parse_int(row[n]), parse_int(row[k])};
        r.gamma = parse_sequence(row[gamma]);
        r.cf_k_over_m = parse_sequence(row[cf]);
        r.length = parse_int(row[length]);
        r.t = parse_int(row[tt]);
        r.t_up = parse_int(row[up]);
        r.t_down = parse_int(row[down]);
        auto s = parse_symmetry(row[sym]);
        if (!s)
            throw DomainError("unknown symmetry type '" + row[sym] + "'");
        r.symmetry = *s;
        r.primitive = parse_bool(row[prim]);
        r.square = parse_bool(row[sq]);
        out.push_back(std::move(r));
    }
    return out;
}

Table stats_records(const std::vector<StatsRow> & rows)
{
    Table t;
    t.columns = {{"delta", Kind::Integer}, {"square", Kind::Boolean}, {"total", Kind::Integer}};
    for (auto s : kAllSymmetryTypes)
        t.columns.push_back({column_name(s), Kind::Integer});
    for (auto s : kAllSymmetryTypes)
        t.columns.push_back({"frac_" + column_name(s), Kind::Text});
    for (const auto & r : rows) {
        std::vector<std::string> cells{text(r.delta), text(r.square), text(r.total)};
        for (auto s : kAllSymmetryTypes)
            cells.push_back(text(r.count(s)));
        for (auto s : kAllSymmetryTypes)
            cells.push_back(decimal_fraction(r.count(s), r.total));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

std::vector<StatsRow> stats_from_table(const Table & t)
{
    const std::size_t delta = t.index_of("delta"), sq = t.index_of("square"),
                      total = t.index_of("total");
    std::vector<StatsRow> out;
    for (const auto & row : t.rows) {
        StatsRow r{parse_int(row[delta]), parse_bool(row[sq]), parse_int(row[total]), {}};
        for (auto s : kAllSymmetryTypes)
            r.counts[static_cast<std::size_t>(s)] = parse_int(row[t.index_of(column_name(s))]);
        out.push_back(r);
    }
    return out;
}

}  // namespace surdsym
