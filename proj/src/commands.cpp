#include <chrono>
#include <sstream>

#include "singcat/commands.hpp"

namespace singcat {

namespace {

/// Named algebras a report refers to. Certificates name their algebra by key
/// so that a saved report can be re-checked against freshly built algebras.
class Registry {
public:
    void add(const std::string& key, AlgebraPtr a) { entries_.emplace_back(key, std::move(a)); }

    void add_with_opposite(const std::string& key, const AlgebraPtr& a)
    {
        add(key, a);
        add(key + "^op", opposite(*a));
    }

    std::string key_of(const Algebra& a) const
    {
        for (const auto& [k, p] : entries_)
            if (p.get() == &a)
                return k;
        for (const auto& [k, p] : entries_)
            if (same_structure(*p, a))
                return k;
        throw ConsistencyError("certificate refers to an algebra outside the report context ('" + a.name() + "')");
    }

    AlgebraPtr get(const std::string& key) const
    {
        for (const auto& [k, p] : entries_)
            if (k == key)
                return p;
        throw InputError("report refers to unknown algebra key '" + key + "'");
    }

private:
    std::vector<std::pair<std::string, AlgebraPtr>> entries_;
};

struct Input {
    std::string role;
    InputFile file;
};

struct Context {
    std::vector<Input> inputs;
    Registry registry;
    std::uint64_t characteristic = 0;
    json options = json::object();
};

using Clock = std::chrono::steady_clock;

json header(const std::string& command, const Context& ctx, const GlobalOptions& g)
{
    json inputs = json::array();
    for (const auto& in : ctx.inputs)
        inputs.push_back({{"role", in.role}, {"path", in.file.path}, {"sha256", in.file.sha256}});
    return json{{"tool", tool_name},
                {"version", tool_version},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"characteristic", ctx.characteristic},
                {"field", ctx.characteristic ? "GF(" + std::to_string(ctx.characteristic) + ")" : "QQ"},
                {"bound", g.bound},
                {"seed", g.seed},
                {"options", ctx.options}};
}

CommandResult finish(json report, std::string text, int code, const GlobalOptions& g, Clock::time_point start)
{
    report["exit_code"] = code;
    if (g.timing)
        report["timing"] = {{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
    return {code, std::move(report), std::move(text)};
}

json module_certificate(const Registry& reg, const Module& from, const Module& to, const Mat& map)
{
    return json{{"type", "module_isomorphism"},
                {"algebra", reg.key_of(from.algebra())},
                {"from", module_to_json(from)},
                {"to", module_to_json(to)},
                {"map", to_json(map)}};
}

json algebra_certificate(const std::string& source, const std::string& target, const Mat& map)
{
    return json{{"type", "algebra_isomorphism"}, {"source", source}, {"target", target}, {"map", to_json(map)}};
}

json dim_json(const DimResult& d, const Registry& reg)
{
    json j{{"verdict", d.to_string()}};
    switch (d.kind) {
    case DimResult::Kind::finite:
        j["kind"] = "Finite";
        j["value"] = d.value;
        break;
    case DimResult::Kind::infinite_certified:
        j["kind"] = "InfiniteCertified";
        j["j"] = d.j;
        j["k"] = d.k;
        if (d.from && d.to && d.certificate)
            j["certificate"] = module_certificate(reg, *d.from, *d.to, *d.certificate);
        break;
    case DimResult::Kind::unknown:
        j["kind"] = "Unknown";
        j["bound"] = d.value;
        break;
    }
    return j;
}

std::string kind_name(GorensteinVerdict::Kind k)
{
    switch (k) {
    case GorensteinVerdict::Kind::gorenstein:
        return "Gorenstein";
    case GorensteinVerdict::Kind::not_gorenstein:
        return "NotGorenstein";
    case GorensteinVerdict::Kind::unknown:
        break;
    }
    return "Unknown";
}

json gorenstein_json(const GorensteinVerdict& v, const Algebra& a, const Registry& reg)
{
    json j{{"verdict", v.to_string()},
           {"kind", kind_name(v.kind)},
           {"left_injdim", dim_json(v.left, reg)},
           {"right_injdim", dim_json(v.right, reg)}};
    if (v.kind == GorensteinVerdict::Kind::gorenstein)
        j["gdim"] = v.gdim;
    if (!v.witness.empty())
        j["witness"] = v.witness;
    json lp = json::array(), rp = json::array();
    for (std::size_t i = 0; i < v.left_parts.size(); ++i)
        lp.push_back({{"vertex", a.prim_names()[i]}, {"inj_dim_P", dim_json(v.left_parts[i], reg)}});
    for (std::size_t i = 0; i < v.right_parts.size(); ++i)
        rp.push_back({{"vertex", a.prim_names()[i]}, {"proj_dim_I", dim_json(v.right_parts[i], reg)}});
    j["left_parts"] = std::move(lp);
    j["right_parts"] = std::move(rp);
    return j;
}

json invariants_json(const CornerInvariants& inv, const AlgebraPtr& c, const Registry& reg)
{
    json periods = json::array();
    for (const auto& p : inv.omega_periods)
        periods.push_back(p ? json(*p) : json(nullptr));
    return json{{"name", inv.name},
                {"dim", inv.dim},
                {"simples", inv.simples},
                {"semisimple", inv.semisimple},
                {"gorenstein", gorenstein_json(inv.gorenstein, *c, reg)},
                {"omega_periods", std::move(periods)},
                {"stable_end_dims", inv.stable_end_dims}};
}

json report_json(const EquivalenceReport& r, const Registry& reg)
{
    json hyps = json::array();
    for (const auto& h : r.hypotheses)
        hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"evidence", h.evidence}});
    json j{{"tag", r.tag},
           {"status", r.established() ? "established" : "inconclusive"},
           {"hypotheses", std::move(hyps)},
           {"scope", r.scope},
           {"decorations", r.decorations}};
    if (r.established())
        j["conclusion"] = r.conclusion;
    else
        j["failing"] = r.failing;
    if (r.target && r.target_algebra)
        j["target"] = invariants_json(*r.target, r.target_algebra, reg);
    return j;
}

void render_report(std::ostream& out, const EquivalenceReport& r)
{
    out << "report [" << r.tag << "]: " << (r.established() ? "established" : "inconclusive") << "\n";
    for (const auto& h : r.hypotheses)
        out << "  hypothesis: " << h.name << ": " << to_string(h.status) << " (" << h.evidence << ")\n";
    if (r.established()) {
        out << "  conclusion: " << r.conclusion << "\n";
        for (const auto& d : r.decorations)
            out << "  note: " << d << "\n";
    } else {
        out << "  first failing hypothesis: " << r.failing << "\n";
    }
    out << "  scope: " << r.scope << "\n";
}

/// Exit code for a report: a hypothesis left undecided is an Unknown verdict.
int report_code(const EquivalenceReport& r)
{
    for (const auto& h : r.hypotheses) {
        if (h.status == Tri::unknown)
            return exit_unknown;
        if (h.status == Tri::no)
            return exit_ok;
    }
    return exit_ok;
}

AlgebraPtr add_algebra(Context& ctx, const std::string& role, const std::filesystem::path& p,
                       std::optional<std::uint64_t> field)
{
    LoadedAlgebra la = load_algebra(p, field);
    ctx.inputs.push_back({role, la.file});
    return la.algebra;
}

Context single_context(const std::filesystem::path& p, std::optional<std::uint64_t> field, AlgebraPtr* out)
{
    Context ctx;
    *out = add_algebra(ctx, "algebra", p, field);
    ctx.characteristic = (*out)->field().characteristic();
    ctx.registry.add_with_opposite("A", *out);
    return ctx;
}

struct SchurSetup {
    Context ctx;
    AlgebraPtr a;
    Idempotent e;
    Corner c;
    AlgebraPtr reference;
};

SchurSetup schur_setup(const std::filesystem::path& p, const std::vector<std::string>& idem,
                       const std::optional<std::filesystem::path>& corner_ref, std::optional<std::uint64_t> field)
{
    SchurSetup s;
    s.a = add_algebra(s.ctx, "algebra", p, field);
    s.ctx.characteristic = s.a->field().characteristic();
    if (idem.empty())
        throw InputError("--idempotent needs at least one vertex");
    s.e = Idempotent::from_names(*s.a, idem);
    s.c = corner(*s.a, s.e);
    s.ctx.options["idempotent"] = idem;
    s.ctx.registry.add_with_opposite("A", s.a);
    s.ctx.registry.add_with_opposite("eAe", s.c.algebra);
    if (corner_ref) {
        s.reference = add_algebra(s.ctx, "corner_reference", *corner_ref, s.ctx.characteristic);
        s.ctx.registry.add("corner_reference", s.reference);
    }
    return s;
}

struct TriangularSetup {
    Context ctx;
    TriangularData t;
    AlgebraPtr reference;
};

TriangularSetup triangular_setup(Orientation o, const std::filesystem::path& rp, const std::filesystem::path& sp,
                                 const std::filesystem::path& bp, const std::optional<std::filesystem::path>& ref,
                                 std::optional<std::uint64_t> field)
{
    TriangularSetup s;
    const AlgebraPtr r = add_algebra(s.ctx, "r", rp, field);
    const std::uint64_t ch = r->field().characteristic();
    const AlgebraPtr sa = add_algebra(s.ctx, "s", sp, field.value_or(ch));
    if (!(sa->field() == r->field()))
        throw InputError("the two corner algebras are over different fields");
    s.ctx.characteristic = ch;
    const AlgebraPtr& left = o == Orientation::upper ? r : sa;
    const AlgebraPtr& right = o == Orientation::upper ? sa : r;
    InputFile bf;
    Bimodule m = load_bimodule(left, right, bp, &bf);
    s.ctx.inputs.push_back({"bimodule", bf});
    s.t = build_triangular(r, sa, std::move(m), o);
    s.ctx.options["orientation"] = to_string(o);
    s.ctx.registry.add_with_opposite("r", r);
    s.ctx.registry.add_with_opposite("s", sa);
    s.ctx.registry.add_with_opposite("T", s.t.algebra);
    if (ref) {
        s.reference = add_algebra(s.ctx, "reference", *ref, ch);
        s.ctx.registry.add("reference", s.reference);
    }
    return s;
}

std::string vertex_list(const Algebra& a, const std::vector<std::size_t>& mult)
{
    std::string s;
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t k = 0; k < mult[i]; ++k)
            s += (s.empty() ? "P(" : " + P(") + a.prim_names()[i] + ")";
    return s.empty() ? "0" : s;
}

std::string kind_label(StandardKind k)
{
    switch (k) {
    case StandardKind::simple:
        return "S";
    case StandardKind::projective:
        return "P";
    case StandardKind::injective:
        break;
    }
    return "I";
}

}  // namespace

CommandResult guarded_error(const std::string& command, int code, const std::string& message)
{
    json report{{"tool", tool_name},
                {"version", tool_version},
                {"command", command},
                {"error", {{"kind", code == exit_consistency ? "consistency" : "input"}, {"message", message}}},
                {"exit_code", code}};
    return {code, std::move(report), std::string(code == exit_consistency ? "consistency failure: " : "error: ") +
                                         message + "\n"};
}

CommandResult cmd_check(const std::filesystem::path& algebra, const GlobalOptions& g)
{
    return guarded("check", [&] {
        const auto start = Clock::now();
        AlgebraPtr a;
        Context ctx = single_context(algebra, g.field, &a);
        const AlgebraDiagnostics diag = check_algebra(*a);
        json items = json::array();
        std::ostringstream out;
        out << "algebra " << a->name() << " over " << a->field().name() << ": dim " << a->dim() << "\n";
        out << "basis:";
        for (const auto& l : a->labels())
            out << " " << l;
        out << "\n";
        for (const auto& d : diag.items) {
            items.push_back({{"check", d.check}, {"passed", d.passed}, {"detail", d.detail}});
            out << "  " << (d.passed ? "ok  " : "FAIL") << " " << d.check << ": " << d.detail << "\n";
        }
        out << "radical dim " << a->radical().size() << ", Loewy length " << diag.nilpotency_index << "\n";
        json result{{"algebra", a->name()},
                    {"dim", a->dim()},
                    {"basis", a->labels()},
                    {"vertices", a->prim_names()},
                    {"radical_dim", a->radical().size()},
                    {"loewy_length", diag.nilpotency_index},
                    {"diagnostics", std::move(items)},
                    {"passed", diag.all_passed()}};
        json report = header("check", ctx, g);
        report["result"] = std::move(result);
        return finish(std::move(report), out.str(), diag.all_passed() ? exit_ok : exit_consistency, g, start);
    });
}

CommandResult cmd_resolve(const std::filesystem::path& algebra, const ModuleSelector& which, const GlobalOptions& g)
{
    return guarded("resolve", [&] {
        const auto start = Clock::now();
        AlgebraPtr a;
        Context ctx = single_context(algebra, g.field, &a);
        Module m;
        std::string what;
        if (which.file) {
            InputFile mf;
            m = load_module(a, *which.file, &mf, ctx.characteristic);
            ctx.inputs.push_back({"module", mf});
            what = which.file->filename().string();
            ctx.options["module"] = "file";
        } else if (which.kind) {
            const std::size_t i = a->prim_index(which.vertex);
            m = standard_module(a, *which.kind, i);
            what = kind_label(*which.kind) + "(" + a->prim_names()[i] + ")";
            ctx.options["module"] = what;
        } else {
            throw InputError("resolve needs a module file or one of --simple/--projective/--injective");
        }
        const SearchOptions opt = g.search();
        const DimResult pd = proj_dim(m, opt);
        const std::size_t steps = pd.is_finite() ? pd.value + 1 : pd.is_infinite() ? pd.k + 1 : g.bound;
        const Resolution res = resolve(m, steps);

        std::ostringstream out;
        out << "algebra " << a->name() << " over " << a->field().name() << "; module " << what << " (dim "
            << m.dim() << ")\n";
        json terms = json::array();
        for (std::size_t k = 0; k < res.covers.size(); ++k) {
            const auto& mult = res.covers[k].multiplicities;
            json cover = json::object();
            for (std::size_t i = 0; i < mult.size(); ++i)
                if (mult[i])
                    cover[a->prim_names()[i]] = mult[i];
            terms.push_back({{"k", k}, {"syzygy_dim", res.syzygies[k].dim()}, {"cover", std::move(cover)}});
            out << "  Omega^" << k << ": dim " << res.syzygies[k].dim() << ", cover " << vertex_list(*a, mult)
                << "\n";
        }
        out << "proj.dim " << what << " = " << pd.to_string() << "\n";
        json result{{"module", what},
                    {"dim", m.dim()},
                    {"dims", m.peirce()},
                    {"resolution", {{"terms", std::move(terms)}, {"terminated", res.terminated}}},
                    {"proj_dim", dim_json(pd, ctx.registry)}};
        json report = header("resolve", ctx, g);
        report["result"] = std::move(result);
        return finish(std::move(report), out.str(), pd.is_unknown() ? exit_unknown : exit_ok, g, start);
    });
}

CommandResult cmd_gorenstein(const std::filesystem::path& algebra, const GlobalOptions& g)
{
    return guarded("gorenstein", [&] {
        const auto start = Clock::now();
        AlgebraPtr a;
        Context ctx = single_context(algebra, g.field, &a);
        const GorensteinVerdict v = gorenstein(a, g.search());
        std::ostringstream out;
        out << "algebra " << a->name() << " over " << a->field().name() << ": " << v.to_string() << "\n";
        for (std::size_t i = 0; i < a->num_prims(); ++i)
            out << "  inj.dim P(" << a->prim_names()[i] << ") = " << v.left_parts[i].to_string() << ", proj.dim I("
                << a->prim_names()[i] << ") = " << v.right_parts[i].to_string() << "\n";
        if (!v.witness.empty())
            out << "  witness: " << v.witness << "\n";
        json report = header("gorenstein", ctx, g);
        report["result"] = gorenstein_json(v, *a, ctx.registry);
        const int code = v.kind == GorensteinVerdict::Kind::unknown ? exit_unknown : exit_ok;
        return finish(std::move(report), out.str(), code, g, start);
    });
}

CommandResult cmd_schur(const std::filesystem::path& algebra, const std::vector<std::string>& idempotent,
                        const std::optional<std::filesystem::path>& corner_ref, const GlobalOptions& g)
{
    return guarded("schur", [&] {
        const auto start = Clock::now();
        SchurSetup s = schur_setup(algebra, idempotent, corner_ref, g.field);
        const SearchOptions opt = g.search();
        const Registry& reg = s.ctx.registry;
        const Algebra& a = *s.a;
        const AlgebraDiagnostics cdiag = check_algebra(*s.c.algebra);

        std::ostringstream out;
        std::string sup;
        for (auto i : s.e.support)
            sup += (sup.empty() ? "" : ",") + a.prim_names()[i];
        out << "algebra " << a.name() << " over " << a.field().name() << "; e = {" << sup << "}\n";
        out << "corner " << s.c.algebra->name() << ": dim " << s.c.algebra->dim() << ", radical dim "
            << s.c.algebra->radical().size() << ", Loewy length " << cdiag.nilpotency_index << "\n";

        const IdempotentClass cls = classify_idempotent(s.a, s.e, opt);
        auto evidence = [&](const std::vector<SimpleEvidence>& ev) {
            json arr = json::array();
            for (const auto& x : ev)
                arr.push_back({{"vertex", a.prim_names()[x.vertex]}, {"proj_dim_S", dim_json(x.pd, reg)}});
            return arr;
        };
        json classification{{"regular", to_string(cls.regular)},
                            {"regular_evidence", evidence(cls.regular_evidence)},
                            {"singularly_complete", to_string(cls.singularly_complete)},
                            {"singularly_complete_evidence", evidence(cls.complete_evidence)}};
        if (cls.regular_witness)
            classification["regular_witness"] = a.prim_names()[*cls.regular_witness];
        if (cls.complete_witness)
            classification["singularly_complete_witness"] = a.prim_names()[*cls.complete_witness];
        out << "e regular: " << to_string(cls.regular) << "; e singularly-complete: "
            << to_string(cls.singularly_complete) << "\n";

        const EquivalenceReport rep = theorem21_report(s.a, s.e, opt);
        render_report(out, rep);
        int code = report_code(rep);

        json corner_json{{"name", s.c.algebra->name()},
                         {"dim", s.c.algebra->dim()},
                         {"basis", s.c.algebra->labels()},
                         {"radical_dim", s.c.algebra->radical().size()},
                         {"loewy_length", cdiag.nilpotency_index},
                         {"embedding", to_json(s.c.embedding)}};
        json result{{"idempotent", idempotent},
                    {"corner", std::move(corner_json)},
                    {"classification", std::move(classification)},
                    {"report", report_json(rep, reg)}};
        if (s.reference) {
            const auto phi = find_basis_alignment(*s.c.algebra, *s.reference);
            json cr{{"name", s.reference->name()}, {"matched", phi.has_value()}};
            if (phi) {
                cr["certificate"] = algebra_certificate("eAe", "corner_reference", *phi);
                out << "corner is isomorphic to " << s.reference->name() << " (structure constants match)\n";
            } else {
                out << "no basis permutation matches the corner with " << s.reference->name() << "\n";
                code = std::max(code, static_cast<int>(exit_unknown));
            }
            result["corner_reference"] = std::move(cr);
        }
        json report = header("schur", s.ctx, g);
        report["result"] = std::move(result);
        return finish(std::move(report), out.str(), code, g, start);
    });
}

CommandResult cmd_triangular(Orientation o, const std::filesystem::path& r, const std::filesystem::path& s,
                             const std::filesystem::path& bimodule,
                             const std::optional<std::filesystem::path>& reference, const GlobalOptions& g)
{
    return guarded("triangular", [&] {
        const auto start = Clock::now();
        TriangularSetup ts = triangular_setup(o, r, s, bimodule, reference, g.field);
        const TriangularData& t = ts.t;
        const Registry& reg = ts.ctx.registry;
        const SearchOptions opt = g.search();
        int code = exit_ok;

        std::ostringstream out;
        out << to_string(o) << " triangular algebra " << t.algebra->name() << " over " << t.algebra->field().name()
            << ": dim " << t.algebra->dim() << " (" << t.r->dim() << " + " << t.m.dim << " + " << t.s->dim()
            << ")\n";
        json result{{"orientation", to_string(o)},
                    {"algebra", {{"name", t.algebra->name()}, {"dim", t.algebra->dim()}, {"basis", t.algebra->labels()}}}};

        json seqs = json::array();
        for (const SequenceCheck& sc : {sequence_column(t), sequence_block(t)}) {
            seqs.push_back({{"name", sc.name},
                            {"exact", sc.exact},
                            {"middle_projective", sc.middle_projective},
                            {"dims", sc.dims},
                            {"detail", sc.detail}});
            out << "sequence " << sc.name << ": " << (sc.exact ? "exact" : "NOT exact") << ", dims";
            for (auto d : sc.dims)
                out << " " << d;
            out << (sc.detail.empty() ? "" : " (" + sc.detail + ")") << "\n";
            if (!sc.exact)
                code = exit_consistency;
        }
        result["sequences"] = std::move(seqs);

        json gt;
        try {
            const TriangularGorenstein v = gorenstein_triangular(t, opt);
            gt = {{"applicable", true},
                  {"verdict", v.to_string()},
                  {"bimodule_left_pd", dim_json(v.left_pd, reg)},
                  {"bimodule_right_pd", dim_json(v.right_pd, reg)},
                  {"r", gorenstein_json(v.r_verdict, *t.r, reg)},
                  {"s", gorenstein_json(v.s_verdict, *t.s, reg)},
                  {"bounds", {v.bounds.first, v.bounds.second}}};
            if (v.t_verdict)
                gt["T"] = gorenstein_json(*v.t_verdict, *t.algebra, reg);
            if (!v.witness.empty())
                gt["witness"] = v.witness;
            out << "Gorenstein criterion: " << v.to_string();
            if (v.t_verdict)
                out << " (direct: " << v.t_verdict->to_string() << ")";
            out << "; corner verdicts " << v.r_verdict.to_string() << ", " << v.s_verdict.to_string()
                << "; G.dim bounds [" << v.bounds.first << ", " << v.bounds.second << "]\n";
            if (!v.witness.empty())
                out << "  witness: " << v.witness << "\n";
            if (v.kind == TriangularGorenstein::Kind::unknown)
                code = std::max(code, static_cast<int>(exit_unknown));
        } catch (const InputError& e) {
            gt = {{"applicable", false}, {"reason", e.what()}};
            out << "Gorenstein criterion not applicable: " << e.what() << "\n";
        }
        result["gorenstein"] = std::move(gt);

        const EquivalenceReport rep = theorem41_report(t, opt);
        render_report(out, rep);
        result["report"] = report_json(rep, reg);
        if (code != exit_consistency)
            code = std::max(code, report_code(rep));

        if (ts.reference) {
            const auto phi = find_basis_alignment(*t.algebra, *ts.reference);
            json rj{{"name", ts.reference->name()}, {"matched", phi.has_value()}};
            if (phi) {
                rj["certificate"] = algebra_certificate("T", "reference", *phi);
                out << "isomorphic to " << ts.reference->name() << " (structure constants match)\n";
            } else {
                out << "no basis permutation matches " << ts.reference->name() << "\n";
                if (code != exit_consistency)
                    code = std::max(code, static_cast<int>(exit_unknown));
            }
            result["reference"] = std::move(rj);
        }
        json report = header("triangular", ts.ctx, g);
        report["result"] = std::move(result);
        return finish(std::move(report), out.str(), code, g, start);
    });
}

namespace {

struct VerifyTally {
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

void verify_walk(const json& j, const Registry& reg, const std::string& where, VerifyTally& tally)
{
    if (j.is_object()) {
        if (j.contains("type") && j["type"].is_string()) {
            const std::string type = j["type"].get<std::string>();
            if (type == "module_isomorphism") {
                ++tally.checked;
                const AlgebraPtr a = reg.get(j.at("algebra").get<std::string>());
                bool ok = false;
                try {
                    const Module from = module_from_actions_json(a, j.at("from"));
                    const Module to = module_from_actions_json(a, j.at("to"));
                    const Mat f = mat_from_json(a->field(), j.at("map"), where);
                    ok = verify_isomorphism(from, to, f);
                } catch (const InputError&) {
                    ok = false;
                }
                if (!ok)
                    tally.failures.push_back(where);
                return;
            }
            if (type == "algebra_isomorphism") {
                ++tally.checked;
                const AlgebraPtr src = reg.get(j.at("source").get<std::string>());
                const AlgebraPtr tgt = reg.get(j.at("target").get<std::string>());
                bool ok = false;
                try {
                    ok = verify_algebra_isomorphism(*src, *tgt, mat_from_json(src->field(), j.at("map"), where));
                } catch (const InputError&) {
                    ok = false;
                }
                if (!ok)
                    tally.failures.push_back(where);
                return;
            }
        }
        for (auto it = j.begin(); it != j.end(); ++it)
            verify_walk(it.value(), reg, where + "/" + it.key(), tally);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            verify_walk(j[i], reg, where + "/" + std::to_string(i), tally);
    }
}

}  // namespace

CommandResult cmd_verify(const std::filesystem::path& report_path, const GlobalOptions& g)
{
    return guarded("verify", [&] {
        const auto start = Clock::now();
        json saved;
        try {
            saved = json::parse(read_file(report_path));
        } catch (const json::exception& e) {
            throw InputError(report_path.string() + ": not a JSON report (" + e.what() + ")");
        }
        if (!saved.is_object() || !saved.contains("command") || !saved.contains("inputs"))
            throw InputError(report_path.string() + ": not a " + std::string(tool_name) + " report");
        if (saved.contains("error"))
            throw InputError(report_path.string() + ": the report records a failed run");
        const std::string command = saved["command"].get<std::string>();
        const std::uint64_t ch = saved.value("characteristic", std::uint64_t{0});
        const json options = saved.value("options", json::object());

        std::map<std::string, std::filesystem::path> paths;
        std::map<std::string, std::string> digests;
        for (const auto& in : saved["inputs"]) {
            std::filesystem::path p = in.at("path").get<std::string>();
            if (!std::filesystem::exists(p) && p.is_relative() && std::filesystem::exists(report_path.parent_path() / p))
                p = report_path.parent_path() / p;
            paths[in.at("role").get<std::string>()] = p;
            digests[in.at("role").get<std::string>()] = in.at("sha256").get<std::string>();
        }
        auto need = [&](const std::string& role) {
            auto it = paths.find(role);
            if (it == paths.end())
                throw InputError("report lacks the '" + role + "' input");
            return it->second;
        };
        auto optional_path = [&](const std::string& role) -> std::optional<std::filesystem::path> {
            auto it = paths.find(role);
            return it == paths.end() ? std::nullopt : std::optional<std::filesystem::path>(it->second);
        };

        Context ctx;
        if (command == "check" || command == "resolve" || command == "gorenstein") {
            AlgebraPtr a;
            ctx = single_context(need("algebra"), ch, &a);
            if (auto mp = optional_path("module")) {
                InputFile mf;
                (void)load_module(a, *mp, &mf, ch);
                ctx.inputs.push_back({"module", mf});
            }
        } else if (command == "schur") {
            ctx = schur_setup(need("algebra"), options.at("idempotent").get<std::vector<std::string>>(),
                              optional_path("corner_reference"), ch)
                      .ctx;
        } else if (command == "triangular") {
            const std::string o = options.at("orientation").get<std::string>();
            if (o != "upper" && o != "lower")
                throw InputError("unknown orientation '" + o + "' in report");
            ctx = triangular_setup(o == "upper" ? Orientation::upper : Orientation::lower, need("r"), need("s"),
                                   need("bimodule"), optional_path("reference"), ch)
                      .ctx;
        } else {
            throw InputError("reports of command '" + command + "' carry no certificates");
        }

        std::vector<std::string> changed;
        for (const auto& in : ctx.inputs)
            if (digests[in.role] != in.file.sha256)
                changed.push_back(in.role + " (" + in.file.path + ")");
        if (!changed.empty()) {
            std::string msg = "input files changed since the report was written:";
            for (const auto& c : changed)
                msg += " " + c;
            throw InputError(msg);
        }

        ctx.inputs.push_back({"report", {report_path.string(), sha256_hex(read_file(report_path))}});
        VerifyTally tally;
        verify_walk(saved.value("result", json::object()), ctx.registry, "result", tally);

        std::ostringstream out;
        out << "report " << report_path.string() << " (" << command << "): " << tally.checked << " certificates, "
            << tally.checked - tally.failures.size() << " verified\n";
        for (const auto& f : tally.failures)
            out << "  FAILED: " << f << "\n";
        json result{{"report", report_path.string()},
                    {"report_command", command},
                    {"certificates", tally.checked},
                    {"verified", tally.checked - tally.failures.size()},
                    {"failures", tally.failures}};
        json report = header("verify", ctx, g);
        report["result"] = std::move(result);
        return finish(std::move(report), out.str(), tally.failures.empty() ? exit_ok : exit_consistency, g, start);
    });
}

}  // namespace singcat
