#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "skewmorph/cli.hpp"
#include "skewmorph/constructors.hpp"
#include "skewmorph/enumerate.hpp"
#include "skewmorph/invariants.hpp"
#include "skewmorph/records.hpp"

namespace py = pybind11;
using namespace skewmorph;

namespace {

py::dict counts_dict(const Counts& c) {
    py::dict d;
    d["total"] = c.total;
    d["automorphisms"] = c.automorphisms;
    d["proper"] = c.proper;
    d["smooth"] = c.smooth;
    d["nonsmooth"] = c.nonsmooth;
    return d;
}

std::optional<SkewMorphism> from_result(Result<SkewMorphism> r) {
    if (!r) return std::nullopt;
    return std::move(r).value();
}

}  // namespace

PYBIND11_MODULE(skewmorph_py, m) {
    m.doc() = "Skew morphisms of finite abelian groups";

    py::register_exception<GroupError>(m, "GroupError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def(py::init<>())
        .def(py::init<std::vector<int>>(), py::arg("factors"))
        .def_static("parse", &AbelianGroup::parse, py::arg("literal"))
        .def_property_readonly("factors", &AbelianGroup::factors)
        .def_property_readonly("order", &AbelianGroup::order)
        .def_property_readonly("label", &AbelianGroup::label)
        .def("is_cyclic", &AbelianGroup::is_cyclic)
        .def("add", &AbelianGroup::add)
        .def("neg", &AbelianGroup::neg)
        .def("coords", &AbelianGroup::coords)
        .def("index", [](const AbelianGroup& G, const std::vector<int>& c) { return G.index(c); })
        .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
        .def("__repr__", [](const AbelianGroup& G) { return "AbelianGroup('" + G.label() + "')"; });

    py::class_<SkewMorphism>(m, "SkewMorphism")
        .def_property_readonly("group", &SkewMorphism::group)
        .def_property_readonly("perm", [](const SkewMorphism& s) { return s.perm().table(); })
        .def_property_readonly("order", &SkewMorphism::order)
        .def_property_readonly("power", &SkewMorphism::power)
        .def("__call__", &SkewMorphism::operator())
        .def("apply_power", &SkewMorphism::apply_power)
        .def("is_smooth", [](const SkewMorphism& s) { return is_smooth(s); })
        .def("is_proper", [](const SkewMorphism& s) { return is_proper(s); })
        .def("is_automorphism", [](const SkewMorphism& s) { return is_automorphism(s); })
        .def("kernel", [](const SkewMorphism& s) { return kernel(s).members; })
        .def("skew_type", [](const SkewMorphism& s) { return skew_type(s); })
        .def("to_json", [](const SkewMorphism& s) { return to_json(s); })
        .def("invariant_failure",
             [](const SkewMorphism& s) -> std::optional<std::string> {
                 if (auto f = check_invariants(s)) return f->property;
                 return std::nullopt;
             })
        .def("__eq__", [](const SkewMorphism& a, const SkewMorphism& b) { return a == b; })
        .def("__repr__", [](const SkewMorphism& s) { return "SkewMorphism(" + to_json(s) + ")"; });

    m.def(
        "validate",
        [](const AbelianGroup& G, std::vector<Element> table) { return from_result(validate(G, Permutation(std::move(table)))); },
        py::arg("group"), py::arg("perm"), "The skew morphism with this table, or None if it is not one.");

    m.def(
        "enumerate",
        [](const AbelianGroup& G, std::size_t max_order, unsigned threads, bool oracle) {
            py::gil_scoped_release release;
            return oracle ? brute_force_oracle(G, max_order ? max_order : kOracleGuard).morphisms
                          : enumerate_skew_morphisms(G, {max_order, threads}).morphisms;
        },
        py::arg("group"), py::arg("max_order") = 0, py::arg("threads") = 1, py::arg("oracle") = false);
    m.def(
        "counts",
        [](const AbelianGroup& G, std::size_t max_order) {
            Counts c;
            {
                py::gil_scoped_release release;
                c = enumerate_skew_morphisms(G, {max_order, 1}).counts;
            }
            return counts_dict(c);
        },
        py::arg("group"), py::arg("max_order") = 0);

    m.def("smooth_only_predicate", &smooth_only_predicate, py::arg("n"));
    m.def("theorem2_necessary", &theorem2_necessary, py::arg("group"));
    m.def(
        "verify_theorem1",
        [](std::int64_t max_n) {
            const auto v = verify_theorem1(max_n);
            py::list rows;
            for (const auto& r : v.rows) {
                py::dict d;
                d["n"] = r.n;
                d["total"] = r.total;
                d["nonsmooth"] = r.nonsmooth;
                d["predicate"] = r.predicate;
                d["pass"] = r.pass;
                rows.append(d);
            }
            py::dict out;
            out["pass"] = v.pass;
            out["rows"] = rows;
            return out;
        },
        py::arg("max_n"));

    m.def(
        "csm",
        [](std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t s, std::int64_t t) {
            return csm_construct(check_csm({n, k, r, s, t, 0}));
        },
        py::arg("n"), py::arg("k"), py::arg("r"), py::arg("s"), py::arg("t"));
    m.def(
        "root",
        [](std::int64_t n, std::int64_t k, std::int64_t s) {
            RootParams p;
            p.n = n;
            p.k = k;
            p.s = s;
            return root_construct(check_root(p));
        },
        py::arg("n"), py::arg("k"), py::arg("s"));
    m.def(
        "nse",
        [](std::int64_t p, std::int64_t d, std::int64_t nu, std::int64_t r) {
            NseParams q;
            q.p = p;
            q.d = d;
            q.nu = nu;
            q.r = r;
            return nse_construct(q).morphism;
        },
        py::arg("p"), py::arg("d"), py::arg("nu"), py::arg("r"));
    m.def(
        "pns_witness",
        [](std::int64_t p, int e) { return p == 2 ? pns_witness_two(e) : pns_witness_odd(p, e); },
        py::arg("p"), py::arg("e"));
    m.def("nonsmooth_witness", &nonsmooth_witness, py::arg("group"));
    m.def(
        "direct_product",
        [](const SkewMorphism& a, const SkewMorphism& b) { return from_result(direct_product(a, b)); },
        py::arg("phi"), py::arg("psi"), "phi x psi, or None if the pair is rejected.");

    m.def(
        "check_record",
        [](const std::string& text) {
            const auto r = check_record(text);
            return py::make_tuple(static_cast<int>(r.status), r.field, r.message);
        },
        py::arg("text"), "(status, field, message) with status 0 match, 1 mismatch, 2 malformed.");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "skewmorph");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
