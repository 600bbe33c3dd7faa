#include "doctest.h"
#include "surdsym/report.hpp"

#include "json.hpp"

using namespace surdsym;

TEST_CASE("parse_format")
{
    CHECK(parse_format("md") == Format::Markdown);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("sequence parsing")
{
    CHECK(parse_sequence("[1,2,3]") == Sequence{1, 2, 3});
    CHECK(parse_sequence("[]").empty());
    CHECK(parse_sequence("").empty());
    CHECK(parse_sequence("((3,5,3,2,2))") == Sequence{3, 5, 3, 2, 2});
    CHECK_THROWS_AS(parse_sequence("[1,x]"), DomainError);
    CHECK_THROWS_AS(parse_sequence("((1,2)"), DomainError);
}

TEST_CASE("csv quoting round trip")
{
    Table t;
    t.columns = {{"a", Table::Kind::Text}, {"b", Table::Kind::Integer}};
    t.rows = {{"[1,2]", "3"}, {"say \"hi\"", "-4"}, {"plain", "0"}};
    std::string csv = render(t, Format::Csv);
    CHECK(csv.rfind("a,b\n", 0) == 0);
    CHECK(csv.find("\"[1,2]\"") != std::string::npos);
    Table back = parse_csv(csv);
    CHECK(back.rows == t.rows);
    CHECK(back.columns.size() == 2);
    CHECK(back.index_of("b") == 1);
    CHECK_THROWS_AS(back.index_of("c"), DomainError);
}

TEST_CASE("json is an array of flat typed records")
{
    auto reports = class_table(60, TableKind::Nonzero);
    auto j = nlohmann::json::parse(render(report_records(reports), Format::Json));
    REQUIRE(j.is_array());
    CHECK(j.size() == reports.size());
    for (const auto & rec : j) {
        CHECK(rec.is_object());
        CHECK(rec["delta"].is_number_integer());
        CHECK(rec["gamma"].is_string());
        CHECK(rec["primitive"].is_boolean());
        for (const auto & [key, value] : rec.items())
            CHECK_FALSE(value.is_structured());
    }
}

TEST_CASE("report records round trip through csv and json")
{
    for (TableKind which : {TableKind::Nonzero, TableKind::Zero}) {
        auto reports = class_table(200, which);
        Table records = report_records(reports);
        CHECK(reports_from_table(parse_csv(render(records, Format::Csv))) == reports);
        CHECK(reports_from_table(parse_json(render(records, Format::Json))) == reports);
    }
}

TEST_CASE("stats round trip and fractions")
{
    auto rows = symmetry_stats(1000);
    Table t = stats_records(rows);
    CHECK(stats_from_table(parse_csv(render(t, Format::Csv))) == rows);
    CHECK(stats_from_table(parse_json(render(t, Format::Json))) == rows);
    std::size_t frac = t.index_of("frac_super");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].delta == 5)
            CHECK(t.rows[i][frac] == "1.000000");
}

TEST_CASE("markdown display")
{
    auto reports = class_table(17, TableKind::Nonzero);
    std::string md = render(report_display(reports), Format::Markdown);
    CHECK(md.find("| 17 | 1 | -2 | 3 | [1,1,3] | 3 | 10 | 5-5 | super |") != std::string::npos);
    CHECK(md.find("|---|") != std::string::npos);
    Table t;
    t.columns = {{"x", Table::Kind::Text}};
    t.rows = {{"a|b"}};
    CHECK(render(t, Format::Markdown).find("a\\|b") != std::string::npos);
}
