// singcat command-line tool.
#include <iostream>

#include <CLI11.hpp>

#include "singcat/commands.hpp"

using namespace singcat;

namespace {

std::optional<std::uint64_t> parse_field(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    if (s == "QQ" || s == "Q" || s == "0")
        return 0;
    std::string digits = s;
    if (digits.rfind("GF(", 0) == 0 && digits.back() == ')')
        digits = digits.substr(3, digits.size() - 4);
    else if (digits.rfind("F", 0) == 0)
        digits = digits.substr(1);
    std::size_t pos = 0;
    const unsigned long long p = std::stoull(digits, &pos);
    if (pos != digits.size())
        throw InputError("cannot read field '" + s + "'");
    (void)Field::prime(p);
    return p;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Singularity categories of finite-dimensional algebras: resolutions, Gorenstein tests, Schur "
                 "functors and triangular matrix algebras"};
    app.require_subcommand(1);

    GlobalOptions g;
    bool as_json = false;
    std::string field;
    app.add_option("--bound", g.bound, "Syzygy search bound")->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for the randomized isomorphism search")->capture_default_str();
    app.add_flag("--json", as_json, "Print the JSON report");
    app.add_option("--field", field, "Override the field: 0 for QQ or a prime p");
    app.add_flag("--timing", g.timing, "Add wall-clock timing to the report");

    std::string alg;
    auto* check = app.add_subcommand("check", "Build an algebra and run its structural checks");
    check->add_option("algebra", alg, "Algebra file")->required();

    ModuleSelector sel;
    std::string module_file, simple_v, proj_v, inj_v;
    auto* resolve = app.add_subcommand("resolve", "Minimal projective resolution and projective dimension");
    resolve->add_option("algebra", alg, "Algebra file")->required();
    auto* o1 = resolve->add_option("--module", module_file, "Module file");
    auto* o2 = resolve->add_option("--simple", simple_v, "Simple module at a vertex");
    auto* o3 = resolve->add_option("--projective", proj_v, "Indecomposable projective at a vertex");
    auto* o4 = resolve->add_option("--injective", inj_v, "Indecomposable injective at a vertex");
    o1->excludes(o2)->excludes(o3)->excludes(o4);
    o2->excludes(o3)->excludes(o4);
    o3->excludes(o4);

    auto* gor = app.add_subcommand("gorenstein", "Decide whether an algebra is Gorenstein");
    gor->add_option("algebra", alg, "Algebra file")->required();

    std::vector<std::string> idem;
    std::string corner_ref;
    auto* schur = app.add_subcommand("schur", "Classify an idempotent and test the corner reduction");
    schur->add_option("algebra", alg, "Algebra file")->required();
    schur->add_option("--idempotent,-e", idem, "Vertices in the support of e")->required()->delimiter(',');
    schur->add_option("--corner-ref", corner_ref, "Algebra file to match against eAe");

    std::vector<std::string> upper, lower;
    std::string reference;
    auto* tri = app.add_subcommand("triangular", "Analyse a triangular matrix algebra");
    auto* up = tri->add_option("--upper", upper, "R.alg S.alg M.bim for (R M; 0 S)")->expected(3);
    auto* lo = tri->add_option("--lower", lower, "R.alg S.alg N.bim for (R 0; N S)")->expected(3);
    up->excludes(lo);
    tri->add_option("--reference", reference, "Algebra file to match against the triangular algebra");

    std::string report_file;
    auto* verify = app.add_subcommand("verify", "Re-check every certificate in a saved JSON report");
    verify->add_option("report", report_file, "Report file")->required();

    for (auto* sub : {check, resolve, gor, schur, tri, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    CommandResult res;
    try {
        g.field = parse_field(field);
    } catch (const std::exception& e) {
        res = guarded_error("cli", exit_input, std::string("bad --field: ") + e.what());
    }

    if (res.report.is_null()) {
        if (*check) {
            res = cmd_check(alg, g);
        } else if (*resolve) {
            if (*o1)
                sel.file = module_file;
            else if (*o2)
                sel = {std::nullopt, StandardKind::simple, simple_v};
            else if (*o3)
                sel = {std::nullopt, StandardKind::projective, proj_v};
            else if (*o4)
                sel = {std::nullopt, StandardKind::injective, inj_v};
            res = cmd_resolve(alg, sel, g);
        } else if (*gor) {
            res = cmd_gorenstein(alg, g);
        } else if (*schur) {
            std::optional<std::filesystem::path> ref;
            if (!corner_ref.empty())
                ref = corner_ref;
            res = cmd_schur(alg, idem, ref, g);
        } else if (*tri) {
            if (upper.empty() == lower.empty()) {
                res = guarded_error("triangular", exit_input, "give exactly one of --upper or --lower");
            } else {
                const bool is_upper = !upper.empty();
                const auto& files = is_upper ? upper : lower;
                std::optional<std::filesystem::path> ref;
                if (!reference.empty())
                    ref = reference;
                res = cmd_triangular(is_upper ? Orientation::upper : Orientation::lower, files[0], files[1],
                                     files[2], ref, g);
            }
        } else if (*verify) {
            res = cmd_verify(report_file, g);
        }
    }

    if (as_json) {
        std::cout << res.report.dump(2) << "\n";
    } else if (res.exit_code == exit_input || res.exit_code == exit_consistency) {
        if (res.report.contains("error"))
            std::cerr << res.text;
        else
            std::cout << res.text;
    } else {
        std::cout << res.text;
    }
    return res.exit_code;
}
