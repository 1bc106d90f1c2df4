#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "singcat/commands.hpp"

namespace py = pybind11;
using namespace singcat;

namespace {

GlobalOptions options(std::size_t bound, std::uint64_t seed, std::optional<std::uint64_t> field)
{
    GlobalOptions g;
    g.bound = bound;
    g.seed = seed;
    g.field = field;
    return g;
}

py::tuple result(const CommandResult& r)
{
    return py::make_tuple(r.exit_code, r.report.dump(), r.text);
}

StandardKind kind_of(const std::string& k)
{
    if (k == "simple")
        return StandardKind::simple;
    if (k == "projective")
        return StandardKind::projective;
    if (k == "injective")
        return StandardKind::injective;
    throw py::value_error("kind must be 'simple', 'projective' or 'injective'");
}

}  // namespace

PYBIND11_MODULE(_singcat, m)
{
    m.doc() = "Bindings for the singcat command layer. Every call returns (exit_code, report_json, text).";
    m.attr("__version__") = tool_version;

    m.def(
        "check",
        [](const std::string& alg, std::size_t bound, std::uint64_t seed, std::optional<std::uint64_t> field) {
            return result(cmd_check(alg, options(bound, seed, field)));
        },
        py::arg("algebra"), py::arg("bound") = default_bound, py::arg("seed") = 0, py::arg("field") = py::none());

    m.def(
        "resolve",
        [](const std::string& alg, std::optional<std::string> module, std::optional<std::string> kind,
           const std::string& vertex, std::size_t bound, std::uint64_t seed, std::optional<std::uint64_t> field) {
            ModuleSelector sel;
            if (module)
                sel.file = *module;
            else if (kind)
                sel = {std::nullopt, kind_of(*kind), vertex};
            return result(cmd_resolve(alg, sel, options(bound, seed, field)));
        },
        py::arg("algebra"), py::arg("module") = py::none(), py::arg("kind") = py::none(), py::arg("vertex") = "",
        py::arg("bound") = default_bound, py::arg("seed") = 0, py::arg("field") = py::none());

    m.def(
        "gorenstein",
        [](const std::string& alg, std::size_t bound, std::uint64_t seed, std::optional<std::uint64_t> field) {
            return result(cmd_gorenstein(alg, options(bound, seed, field)));
        },
        py::arg("algebra"), py::arg("bound") = default_bound, py::arg("seed") = 0, py::arg("field") = py::none());

    m.def(
        "schur",
        [](const std::string& alg, const std::vector<std::string>& idem, std::optional<std::string> corner_ref,
           std::size_t bound, std::uint64_t seed, std::optional<std::uint64_t> field) {
            std::optional<std::filesystem::path> ref;
            if (corner_ref)
                ref = *corner_ref;
            return result(cmd_schur(alg, idem, ref, options(bound, seed, field)));
        },
        py::arg("algebra"), py::arg("idempotent"), py::arg("corner_ref") = py::none(),
        py::arg("bound") = default_bound, py::arg("seed") = 0, py::arg("field") = py::none());

    m.def(
        "triangular",
        [](const std::string& orientation, const std::string& r, const std::string& s, const std::string& bim,
           std::optional<std::string> reference, std::size_t bound, std::uint64_t seed,
           std::optional<std::uint64_t> field) {
            if (orientation != "upper" && orientation != "lower")
                throw py::value_error("orientation must be 'upper' or 'lower'");
            std::optional<std::filesystem::path> ref;
            if (reference)
                ref = *reference;
            return result(cmd_triangular(orientation == "upper" ? Orientation::upper : Orientation::lower, r, s,
                                         bim, ref, options(bound, seed, field)));
        },
        py::arg("orientation"), py::arg("r"), py::arg("s"), py::arg("bimodule"), py::arg("reference") = py::none(),
        py::arg("bound") = default_bound, py::arg("seed") = 0, py::arg("field") = py::none());

    m.def(
        "verify",
        [](const std::string& report) { return result(cmd_verify(report, GlobalOptions{})); },
        py::arg("report"));
}
