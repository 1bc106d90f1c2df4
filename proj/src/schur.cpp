#include "singcat/schur.hpp"

namespace singcat {

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::yes:
        return "yes";
    case Tri::no:
        return "no";
    case Tri::unknown:
        break;
    }
    return "unknown";
}

namespace {

Tri tri_of(const DimResult& d)
{
    if (d.is_finite())
        return Tri::yes;
    if (d.is_infinite())
        return Tri::no;
    return Tri::unknown;
}

std::string scope_of(const Algebra& a)
{
    return "finite-dimensional algebras over " + a.field().name();
}

}  // namespace

SchurImage schur_apply(const Corner& c, const Idempotent& e, const Module& m)
{
    const Field f = m.algebra().field();
    const Mat em = m.act(e.element);
    const Mat basis = m.dim() ? column_space(em) : Mat(f, 0, 0);
    const std::size_t d = basis.cols();
    if (d == 0)
        return {Module::zero(c.algebra), Mat(f, m.dim(), 0)};
    std::vector<Mat> actions;
    for (std::size_t k = 0; k < c.embedding.cols(); ++k) {
        auto x = solve(basis, m.act(c.embedding.column(k)) * basis);
        if (!x)
            throw ConsistencyError("eM is not stable under the corner action");
        actions.push_back(*x);
    }
    return {Module(c.algebra, std::move(actions)), basis};
}

Module schur_apply(const Algebra& a, const Idempotent& e, const Module& m)
{
    require_same_algebra(a, m.algebra(), "schur_apply");
    return schur_apply(corner(a, e), e, m).module;
}

ModuleMap schur_apply(const Corner& c, const Idempotent& e, const ModuleMap& f)
{
    const SchurImage src = schur_apply(c, e, f.source);
    const SchurImage tgt = schur_apply(c, e, f.target);
    const Field fld = f.matrix.field();
    if (src.module.dim() == 0 || tgt.module.dim() == 0)
        return {src.module, tgt.module, Mat(fld, tgt.module.dim(), src.module.dim())};
    auto x = solve(tgt.inclusion, f.matrix * src.inclusion);
    if (!x)
        throw ConsistencyError("homomorphism does not map eM into eN");
    return {src.module, tgt.module, *x};
}

bool in_kernel(const Algebra& a, const Idempotent& e, const Module& m)
{
    require_same_algebra(a, m.algebra(), "in_kernel");
    bool zero = true;
    for (auto i : e.support)
        if (m.peirce()[i] != 0)
            zero = false;
    const Idempotent c = e.complement(a);
    const bool whole = m.dim() == 0 || (!c.support.empty() && rank(m.act(c.element)) == m.dim());
    if (zero != whole)
        throw ConsistencyError("eM = 0 and (1-e)M = M disagree");
    return zero;
}

namespace {

void classify_support(const AlgebraPtr& a, const std::vector<std::size_t>& support, const SearchOptions& opt,
                      Tri& verdict, std::optional<std::size_t>& witness, std::vector<SimpleEvidence>& evidence)
{
    verdict = Tri::yes;
    for (auto i : support) {
        SimpleEvidence ev{i, proj_dim(simple(a, i), opt)};
        if (ev.pd.is_infinite() && verdict != Tri::no) {
            verdict = Tri::no;
            witness = i;
        } else if (ev.pd.is_unknown() && verdict == Tri::yes) {
            verdict = Tri::unknown;
        }
        evidence.push_back(std::move(ev));
    }
}

}  // namespace

IdempotentClass classify_idempotent(const AlgebraPtr& a, const Idempotent& e, const SearchOptions& opt)
{
    IdempotentClass c;
    classify_support(a, e.support, opt, c.regular, c.regular_witness, c.regular_evidence);
    classify_support(a, e.complement(*a).support, opt, c.singularly_complete, c.complete_witness,
                     c.complete_evidence);
    return c;
}

GlobalDim global_dimension(const AlgebraPtr& a, const SearchOptions& opt)
{
    GlobalDim g;
    g.finite = Tri::yes;
    for (std::size_t i = 0; i < a->num_prims(); ++i) {
        g.simples.push_back(proj_dim(simple(a, i), opt));
        const DimResult& d = g.simples.back();
        if (d.is_infinite() && g.finite != Tri::no) {
            g.finite = Tri::no;
            g.witness = i;
        } else if (d.is_unknown() && g.finite == Tri::yes) {
            g.finite = Tri::unknown;
        } else if (d.is_finite()) {
            g.value = std::max(g.value, d.value);
        }
    }
    return g;
}

CornerInvariants corner_invariants(const AlgebraPtr& c, const SearchOptions& opt)
{
    CornerInvariants inv;
    inv.name = c->name();
    inv.dim = c->dim();
    inv.simples = c->num_prims();
    inv.semisimple = c->radical().empty();
    inv.gorenstein = gorenstein(c, opt);
    for (std::size_t i = 0; i < c->num_prims(); ++i) {
        const Module s = simple(c, i);
        const DimResult d = proj_dim(s, opt);
        inv.omega_periods.push_back(d.is_infinite() ? std::optional<std::size_t>(d.k - d.j) : std::nullopt);
        inv.stable_end_dims.push_back(stable_hom_dim(s, s));
    }
    return inv;
}

namespace {

std::string summary(const CornerInvariants& inv)
{
    std::string s = inv.gorenstein.kind == GorensteinVerdict::Kind::gorenstein && inv.gorenstein.gdim == 0
                        ? "self-injective"
                        : inv.gorenstein.to_string();
    s += " with " + std::to_string(inv.simples) + (inv.simples == 1 ? " simple" : " simples");
    for (std::size_t i = 0; i < inv.simples; ++i) {
        s += i ? "; " : ", ";
        if (inv.omega_periods[i])
            s += "Omega-period " + std::to_string(*inv.omega_periods[i]);
        else
            s += "not Omega-periodic";
        s += ", stable End dim " + std::to_string(inv.stable_end_dims[i]);
    }
    return s;
}

std::vector<std::string> decorate(const CornerInvariants& inv, const std::string& source, bool mcm_allowed)
{
    std::vector<std::string> out;
    const std::string& c = inv.name;
    if (inv.semisimple)
        out.push_back(c + " is semisimple: D_sg(" + source + ") and D_sg(" + c + ") are both trivial");
    const bool gor = inv.gorenstein.kind == GorensteinVerdict::Kind::gorenstein;
    if (gor && inv.gorenstein.gdim == 0)
        out.push_back("D_sg(" + source + ") ~ stable module category of " + c + " (" + c + " is self-injective)");
    if (gor && mcm_allowed)
        out.push_back("D_sg(" + source + ") ~ stable MCM(" + c + ") (" + c + " is Gorenstein of dimension " +
                      std::to_string(inv.gorenstein.gdim) + ")");
    bool k_like = gor && inv.gorenstein.gdim == 0 && inv.simples == 1 && !inv.semisimple &&
                  inv.omega_periods[0] == std::optional<std::size_t>(1) && inv.stable_end_dims[0] == 1;
    out.push_back(std::string(k_like ? "K-mod-like: " : "") + "corner " + summary(inv));
    return out;
}

void finish(EquivalenceReport& r)
{
    r.status = EquivalenceReport::Status::established;
    for (const auto& h : r.hypotheses)
        if (h.status != Tri::yes) {
            r.status = EquivalenceReport::Status::inconclusive;
            r.failing = h.name + " (" + to_string(h.status) + ")";
            break;
        }
    if (r.status != EquivalenceReport::Status::established) {
        r.conclusion.clear();
        r.decorations.clear();
    }
}

std::string simple_list(const Algebra& a, const std::vector<SimpleEvidence>& ev)
{
    std::string s;
    for (const auto& e : ev)
        s += (s.empty() ? "" : ", ") + std::string("pd S_") + a.prim_names()[e.vertex] + " = " + e.pd.to_string();
    return s.empty() ? "no simples to check" : s;
}

}  // namespace

EquivalenceReport theorem21_report(const AlgebraPtr& a, const Idempotent& e, const SearchOptions& opt)
{
    EquivalenceReport r;
    r.tag = "schur-corner";
    r.scope = scope_of(*a);
    const Corner c = corner(*a, e);
    r.target_algebra = c.algebra;

    const IdempotentClass cls = classify_idempotent(a, e, opt);
    HypothesisItem h1{"e is singularly-complete", cls.singularly_complete, simple_list(*a, cls.complete_evidence)};
    if (cls.complete_witness)
        h1.evidence = "witness S_" + a->prim_names()[*cls.complete_witness] + ": " + h1.evidence;
    r.hypotheses.push_back(std::move(h1));

    const Module ea = schur_apply(c, e, regular_module(a)).module;
    const DimResult pd = proj_dim(ea, opt);
    HypothesisItem h2{"proj.dim of eA over eAe is finite", tri_of(pd), "pd = " + pd.to_string()};
    if (pd.is_finite() && pd.value == 0) {
        const auto split = split_projective_summands(ea);
        std::size_t rank = 0;
        for (auto k : split.multiplicities)
            rank += k;
        h2.evidence += c.algebra->num_prims() == 1 ? ", free of rank " + std::to_string(rank)
                                                   : ", projective with " + std::to_string(rank) + " summands";
    }
    r.hypotheses.push_back(std::move(h2));

    r.conclusion = "D_sg(" + a->name() + ") ~ D_sg(" + c.algebra->name() + ")";
    finish(r);
    if (r.established()) {
        r.target = corner_invariants(c.algebra, opt);
        r.decorations = decorate(*r.target, a->name(), true);
    }
    return r;
}

EquivalenceReport theorem41_report(const TriangularData& t, const SearchOptions& opt)
{
    EquivalenceReport r;
    r.scope = scope_of(*t.algebra);
    r.target_algebra = t.s;
    const std::string tn = t.algebra->name();
    const GlobalDim gl = global_dimension(t.r, opt);
    auto gl_item = [&](const std::string& name, const GlobalDim& g, const Algebra& alg) {
        HypothesisItem h{name, g.finite, ""};
        if (g.finite == Tri::yes)
            h.evidence = "global dimension " + std::to_string(g.value);
        else if (g.witness)
            h.evidence = "pd S_" + alg.prim_names()[*g.witness] + " = " + g.simples[*g.witness].to_string();
        else
            h.evidence = "undecided within bound " + std::to_string(opt.bound);
        return h;
    };
    const AlgebraPtr rop = opposite(*t.r);
    const GlobalDim glop = global_dimension(rop, opt);
    const Tri regular = gl.finite == Tri::yes && glop.finite == Tri::yes ? Tri::yes
                        : gl.finite == Tri::no || glop.finite == Tri::no ? Tri::no
                                                                          : Tri::unknown;
    const CornerInvariants sinv = corner_invariants(t.s, opt);
    const bool s_gor = sinv.gorenstein.kind == GorensteinVerdict::Kind::gorenstein;

    if (t.orientation == Orientation::upper) {
        r.tag = "triangular-upper";
        r.hypotheses.push_back(gl_item(t.r->name() + " has finite left global dimension", gl, *t.r));
    } else {
        r.tag = "triangular-lower";
        HypothesisItem reg{t.r->name() + " is regular (finite global dimension on both sides)", regular, ""};
        reg.evidence = "left: " + gl_item("", gl, *t.r).evidence + "; right: " + gl_item("", glop, *rop).evidence;
        r.hypotheses.push_back(std::move(reg));
        HypothesisItem gor{t.s->name() + " is Gorenstein",
                           s_gor                                                          ? Tri::yes
                           : sinv.gorenstein.kind == GorensteinVerdict::Kind::not_gorenstein ? Tri::no
                                                                                           : Tri::unknown,
                           sinv.gorenstein.to_string()};
        if (!sinv.gorenstein.witness.empty())
            gor.evidence += ": " + sinv.gorenstein.witness;
        r.hypotheses.push_back(std::move(gor));
        const DimResult pd = proj_dim(Module(t.s, t.m.left_action), opt);
        r.hypotheses.push_back({"proj.dim of the bimodule over " + t.s->name() + " is finite", tri_of(pd),
                                "pd = " + pd.to_string()});
    }
    r.conclusion = "D_sg(" + tn + ") ~ D_sg(" + t.s->name() + ")";
    finish(r);
    if (r.established()) {
        r.target = sinv;
        r.decorations = decorate(sinv, tn, regular == Tri::yes && s_gor);
    }
    return r;
}

}  // namespace singcat
