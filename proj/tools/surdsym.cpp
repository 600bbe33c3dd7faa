// surdsym: command-line front end for the surdsym library.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "surdsym/continued_fraction.hpp"
#include "surdsym/enumerate.hpp"
#include "surdsym/oracle.hpp"
#include "surdsym/period.hpp"
#include "surdsym/reduction.hpp"
#include "surdsym/report.hpp"

using namespace surdsym;

namespace {

struct FormArgs {
    std::string m, n, k;

    Form form() const
    {
        Form f{parse_int(m), parse_int(n), parse_int(k)};
        Int d = discriminant(f);
        if (d <= 0)
            throw DomainError("form " + f.to_string() + " has discriminant " + d.to_string() +
                              "; an indefinite form needs a positive one");
        return f;
    }
};

void add_form_args(CLI::App * cmd, FormArgs & args)
{
    cmd->add_option("m", args.m, "coefficient of x^2")->required();
    cmd->add_option("n", args.n, "coefficient of y^2")->required();
    cmd->add_option("k", args.k, "coefficient of xy")->required();
}

std::string word_text(const GeneratorWord & w)
{
    return w.to_string();
}

Table single(std::vector<std::pair<std::string, Table::Kind>> cols, std::vector<std::string> row)
{
    Table t;
    for (auto & [name, kind] : cols)
        t.columns.push_back({name, kind});
    t.rows.push_back(std::move(row));
    return t;
}

std::string forms_text(const std::vector<Form> & forms)
{
    std::string out;
    for (std::size_t i = 0; i < forms.size(); ++i)
        out += (i ? " " : "") + forms[i].to_string();
    return out;
}

Table period_table(const Form & f)
{
    using K = Table::Kind;
    const Int d = discriminant(f);
    if (f.m == 0)
        throw ZeroLeadingCoefficient("form " + f.to_string() + " has m = 0; its first root is infinite");
    if (is_square(d)) {
        CFExpansion cf = cf_surd(root_plus(f));
        return single({{"delta", K::Integer}, {"expansion", K::Text}, {"period", K::Text},
                       {"length", K::Integer}},
                      {d.to_string(), format_expansion(cf), "", "0"});
    }
    CFExpansion cf = cf_surd(f);
    auto [plus, minus] = period_inverse_pair(f);
    return single({{"delta", K::Integer}, {"expansion", K::Text}, {"period", K::Text},
                   {"length", K::Integer}, {"inverse_period", K::Text}},
                  {d.to_string(), format_expansion(cf), format_period(cf.period),
                   std::to_string(cf.period.size()), format_period(minus)});
}

Table counts_table(const Form & f)
{
    using K = Table::Kind;
    ClassReport r = classify_class(f);
    return single({{"delta", K::Integer}, {"t", K::Integer}, {"t_up", K::Integer},
                   {"t_down", K::Integer}},
                  {r.delta.to_string(), r.t.to_string(), r.t_up.to_string(), r.t_down.to_string()});
}

Table reduce_table(const Form & f)
{
    using K = Table::Kind;
    H0Reduction h = reduce_to_H0(f);
    std::string classical_form, classical_word;
    if (f.m > 0 && f.n > 0 && f.k < 0 && !is_square(discriminant(f))) {
        ClassicalReduction c = reduce_classical(f);
        classical_form = c.form.to_string();
        classical_word = word_text(c.word);
    }
    return single({{"input", K::Text}, {"h0_form", K::Text}, {"involution", K::Text},
                   {"word", K::Text}, {"direct_word", K::Text}, {"classical_form", K::Text},
                   {"classical_word", K::Text}},
                  {f.to_string(), h.form.to_string(), std::string(to_string(h.involution)),
                   word_text(h.word), word_text(h.direct), classical_form, classical_word});
}

Table modular_table(const Form & f)
{
    using K = Table::Kind;
    ModularCF cf = modular_cf_surd(f);
    ReducedCycle cycle = reduced_cycle(f);
    SymmetryType sym = classify_period(period_of_class(f));
    SumRule rule = check_sum_rule(cycle, sym);
    return single({{"delta", K::Integer}, {"expansion", K::Text}, {"period", K::Text},
                   {"cycle_length", K::Integer}, {"cycle_period", K::Text},
                   {"reduced_forms", K::Text}, {"symmetry", K::Text}, {"sum_rule", K::Text}},
                  {discriminant(f).to_string(), format_expansion(cf),
                   format_modular_period(cf.period), std::to_string(cycle.forms.size()),
                   format_modular_period(cycle.modular_period), forms_text(cycle.forms),
                   std::string(to_string(sym)),
                   rule.vacuous ? "n/a" : (rule.holds ? "holds" : "fails")});
}

Table orbit_table(const Form & f, const std::string & bound_text, const std::string & filter)
{
    using K = Table::Kind;
    Int bound = bound_text.empty() ? default_bound(f) : parse_int(bound_text);
    if (bound <= 0)
        throw DomainError("--bound must be positive");
    const bool square = is_square(discriminant(f));
    Table t;
    t.columns = {{"m", K::Integer}, {"n", K::Integer}, {"k", K::Integer}, {"domain", K::Text},
                 {"gamma", K::Text}};
    for (const Form & g : orbit_bfs(f, bound)) {
        DomainLabel d = domain_of(g);
        bool keep = filter == "all" ||
                    (filter == "h0" && d == DomainLabel::H0) ||
                    (filter == "corner" && d == DomainLabel::H0 &&
                     abs(g.k) > abs(g.m + g.n));
        if (!keep)
            continue;
        std::string gamma;
        if (!square && g.m != 0)
            gamma = format_period(period_of_class(g));
        t.rows.push_back({g.m.to_string(), g.n.to_string(), g.k.to_string(),
                          std::string(to_string(d)), gamma});
    }
    return t;
}

Int positive_delta(const std::string & text)
{
    Int d = parse_int(text);
    if (d < 1)
        throw DomainError("--delta-max must be at least 1");
    return d;
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Symmetry types and representative counts of classes of indefinite binary "
                 "quadratic forms"};
    app.require_subcommand(1);

    std::string format_name = "md", out_path;
    app.add_option("--format", format_name, "output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    FormArgs args;
    std::string bound_text, filter = "corner", delta_text = "100", which = "nonzero";
    int jobs = 1;

    std::vector<CLI::App *> form_cmds;
    for (auto [name, help] : std::vector<std::pair<const char *, const char *>>{
             {"classify", "symmetry type, period and counts of the class"},
             {"period", "continued fraction of the first root"},
             {"counts", "representatives in H0 and on each side"},
             {"reduce", "move the form to m n <= 0, and classical reduction when m, n > 0 > k"},
             {"modular", "modular fraction and the cycle of reduced forms"},
             {"orbit", "bounded orbit listing"}}) {
        auto * cmd = app.add_subcommand(name, help);
        add_form_args(cmd, args);
        cmd->fallthrough();
        form_cmds.push_back(cmd);
    }
    CLI::App * orbit = form_cmds.back();
    orbit->add_option("--bound", bound_text, "largest absolute coefficient explored (default 4 disc)");
    orbit->add_option("--filter", filter, "corner, h0 or all")
        ->check(CLI::IsMember({"corner", "h0", "all"}));

    auto * table = app.add_subcommand("table", "one row per class for every discriminant up to --delta-max");
    table->add_option("--delta-max", delta_text, "largest discriminant");
    table->add_option("--which", which, "nonzero or zero")->check(CLI::IsMember({"nonzero", "zero"}));
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    table->fallthrough();

    auto * stats = app.add_subcommand("stats", "symmetry census per discriminant");
    stats->add_option("--delta-max", delta_text, "largest discriminant");
    stats->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    stats->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const Format format = *parse_format(format_name);
        std::string output;
        auto sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "table") {
            auto kind = which == "zero" ? TableKind::Zero : TableKind::Nonzero;
            auto reports = class_table(positive_delta(delta_text), kind, jobs);
            output = render(format == Format::Markdown ? report_display(reports)
                                                       : report_records(reports),
                            format);
        } else if (name == "stats") {
            output = render(stats_records(symmetry_stats(positive_delta(delta_text), jobs)), format);
        } else {
            const Form f = args.form();
            Table t;
            if (name == "classify") {
                std::vector<ClassReport> r{classify_class(f)};
                t = format == Format::Markdown ? report_display(r) : report_records(r);
            } else if (name == "period") {
                t = period_table(f);
            } else if (name == "counts") {
                t = counts_table(f);
            } else if (name == "reduce") {
                t = reduce_table(f);
            } else if (name == "modular") {
                t = modular_table(f);
            } else {
                t = orbit_table(f, bound_text, filter);
            }
            output = render(t, format);
        }

        if (out_path.empty()) {
            std::cout << output;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file)
                throw DomainError("cannot open " + out_path + " for writing");
            file << output;
            if (!file)
                throw DomainError("failed writing " + out_path);
        }
        return 0;
    } catch (const DomainError & e) {
        std::cerr << "surdsym: " << e.what() << '\n';
        return 1;
    } catch (const OverflowError & e) {
        std::cerr << "surdsym: overflow: " << e.what() << '\n';
        return 1;
    } catch (const InconclusiveError & e) {
        std::cerr << "surdsym: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error & e) {
        std::cerr << "surdsym: internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception & e) {
        std::cerr << "surdsym: internal error: " << e.what() << '\n';
        return 2;
    }
}
