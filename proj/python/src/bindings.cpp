// Python bindings for the surdsym library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "surdsym/enumerate.hpp"
#include "surdsym/oracle.hpp"
#include "surdsym/reduction.hpp"
#include "surdsym/report.hpp"

namespace py = pybind11;
using namespace surdsym;

namespace pybind11::detail {

// Python int <-> Int through the decimal representation; out-of-range values raise OverflowError.
template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr()))
            return false;
        value = parse_int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Int & v, return_value_policy, handle)
    {
        return PyLong_FromString(v.to_string().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

Form to_form(const py::handle & h)
{
    if (py::isinstance<Form>(h))
        return h.cast<Form>();
    auto t = h.cast<py::sequence>();
    if (t.size() != 3)
        throw DomainError("a form is given by three integers (m, n, k)");
    return Form{t[0].cast<Int>(), t[1].cast<Int>(), t[2].cast<Int>()};
}

py::tuple cf_tuple(const CFExpansion & cf)
{
    return py::make_tuple(cf.preperiod, cf.period);
}

TableKind parse_kind(const std::string & which)
{
    if (which == "nonzero")
        return TableKind::Nonzero;
    if (which == "zero")
        return TableKind::Zero;
    throw DomainError("which must be 'nonzero' or 'zero', got '" + which + "'");
}

Format format_of(const std::string & name)
{
    auto f = parse_format(name);
    if (!f)
        throw DomainError("format must be md, csv or json, got '" + name + "'");
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, mod)
{
    mod.doc() = "Symmetry classification of indefinite binary quadratic forms";

    auto domain_error = py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
    py::register_exception<OverflowError>(mod, "IntegerOverflow", PyExc_OverflowError);
    py::register_exception<InconclusiveError>(mod, "InconclusiveError", PyExc_RuntimeError);
    (void)domain_error;

    py::class_<Form>(mod, "Form")
        .def(py::init([](Int m, Int n, Int k) { return Form{m, n, k}; }), py::arg("m"), py::arg("n"),
             py::arg("k"))
        .def_readwrite("m", &Form::m)
        .def_readwrite("n", &Form::n)
        .def_readwrite("k", &Form::k)
        .def_property_readonly("discriminant", [](const Form & f) { return discriminant(f); })
        .def("as_tuple", [](const Form & f) { return py::make_tuple(f.m, f.n, f.k); })
        .def("__eq__", [](const Form & a, const Form & b) { return a == b; })
        .def("__lt__", [](const Form & a, const Form & b) { return a < b; })
        .def("__hash__", [](const Form & f) { return std::hash<Form>{}(f); })
        .def("__repr__", [](const Form & f) { return "Form" + f.to_string(); });

    py::enum_<SymmetryType>(mod, "SymmetryType")
        .value("Asymmetric", SymmetryType::Asymmetric)
        .value("KSymmetric", SymmetryType::KSymmetric)
        .value("MPlusNSymmetric", SymmetryType::MPlusNSymmetric)
        .value("Antisymmetric", SymmetryType::Antisymmetric)
        .value("Supersymmetric", SymmetryType::Supersymmetric)
        .def_property_readonly("label", [](SymmetryType t) { return std::string(short_label(t)); });

    py::class_<ClassReport>(mod, "ClassReport")
        .def_readonly("representative", &ClassReport::representative)
        .def_readonly("delta", &ClassReport::delta)
        .def_readonly("gamma", &ClassReport::gamma)
        .def_readonly("cf_k_over_m", &ClassReport::cf_k_over_m)
        .def_readonly("length", &ClassReport::length)
        .def_readonly("t", &ClassReport::t)
        .def_readonly("t_up", &ClassReport::t_up)
        .def_readonly("t_down", &ClassReport::t_down)
        .def_readonly("symmetry", &ClassReport::symmetry)
        .def_readonly("primitive", &ClassReport::primitive)
        .def_readonly("square", &ClassReport::square)
        .def("__repr__", [](const ClassReport & r) {
            return "ClassReport(" + r.representative.to_string() + ", delta=" + r.delta.to_string() + ", " +
                   format_period(r.square ? r.cf_k_over_m : r.gamma) + ", " +
                   std::string(short_label(r.symmetry)) + ")";
        });

    mod.def("discriminant", [](py::handle f) { return discriminant(to_form(f)); }, py::arg("form"));
    mod.def("classify", [](py::handle f) { return classify_class(to_form(f)); }, py::arg("form"),
            "Symmetry type, period and representative counts of the class of a form.");
    mod.def("classify_period", &classify_period, py::arg("period"));
    mod.def("period", [](py::handle f) { return period_of_class(to_form(f)); }, py::arg("form"),
            "First-occurrence period of the first root.");
    mod.def("cf_expansion", [](py::handle f) { return cf_tuple(cf_surd(to_form(f))); }, py::arg("form"),
            "(preperiod, period) of the regular continued fraction of the first root.");
    mod.def(
        "modular_expansion",
        [](py::handle f) {
            ModularCF cf = modular_cf_surd(to_form(f));
            return py::make_tuple(cf.preperiod, cf.period);
        },
        py::arg("form"), "(preperiod, period) of the minus continued fraction of the first root.");
    mod.def("cf_period_to_modular_period", &cf_period_to_modular_period, py::arg("period"));
    mod.def("modular_period_to_cf_period", &modular_period_to_cf_period, py::arg("modular"));
    mod.def("is_rotation_of", &is_rotation_of, py::arg("a"), py::arg("b"));
    mod.def(
        "counts",
        [](py::handle f) {
            ClassReport r = classify_class(to_form(f));
            return py::make_tuple(r.t, r.t_up, r.t_down);
        },
        py::arg("form"), "(t, t_up, t_down) of the class.");
    mod.def(
        "reduce",
        [](py::handle f) {
            H0Reduction r = reduce_to_H0(to_form(f));
            return py::dict(py::arg("form") = r.form, py::arg("involution") = std::string(to_string(r.involution)),
                            py::arg("word") = r.word.to_string(), py::arg("direct_word") = r.direct.to_string());
        },
        py::arg("form"), "Reduction to a form with m n <= 0 in the same class.");
    mod.def(
        "reduced_cycle",
        [](py::handle f) {
            ReducedCycle c = reduced_cycle(to_form(f));
            return py::make_tuple(c.forms, c.modular_period);
        },
        py::arg("form"), "(reduced forms, modular period) of the class.");
    mod.def("orbit", [](py::handle f, Int bound) { return orbit_bfs(to_form(f), bound); }, py::arg("form"),
            py::arg("bound"));
    mod.def(
        "verify_symmetry",
        [](py::handle f, std::optional<Int> bound) {
            Form g = to_form(f);
            return verify_symmetry(g, bound.value_or(default_bound(g)));
        },
        py::arg("form"), py::arg("bound") = py::none(), "Symmetry type found by brute-force orbit search.");
    mod.def(
        "verify_counts",
        [](py::handle f, std::optional<Int> bound) {
            Form g = to_form(f);
            DomainTally t = verify_counts(g, bound.value_or(default_bound(g)));
            py::dict out;
            for (auto [label, count] : t.by_domain)
                out[py::str(std::string(to_string(label)))] = count;
            return out;
        },
        py::arg("form"), py::arg("bound") = py::none(), "Orbit members tallied by domain.");
    mod.def("enumerate_classes", &enumerate_classes, py::arg("delta"));
    mod.def("canonical_representative", [](py::handle f) { return canonical_representative(to_form(f)); },
            py::arg("form"));
    mod.def(
        "table",
        [](Int delta_max, const std::string & which, int jobs) {
            py::gil_scoped_release release;
            return class_table(delta_max, parse_kind(which), jobs);
        },
        py::arg("delta_max"), py::arg("which") = "nonzero", py::arg("jobs") = 1);
    mod.def(
        "render_table",
        [](Int delta_max, const std::string & which, const std::string & format, int jobs) {
            Format fmt = format_of(format);
            std::vector<ClassReport> reports;
            {
                py::gil_scoped_release release;
                reports = class_table(delta_max, parse_kind(which), jobs);
            }
            return render(fmt == Format::Markdown ? report_display(reports) : report_records(reports), fmt);
        },
        py::arg("delta_max"), py::arg("which") = "nonzero", py::arg("format") = "csv", py::arg("jobs") = 1);
    mod.def(
        "render_stats",
        [](Int delta_max, const std::string & format, int jobs) {
            Format fmt = format_of(format);
            std::vector<StatsRow> rows;
            {
                py::gil_scoped_release release;
                rows = symmetry_stats(delta_max, jobs);
            }
            return render(stats_records(rows), fmt);
        },
        py::arg("delta_max"), py::arg("format") = "csv", py::arg("jobs") = 1);
}
