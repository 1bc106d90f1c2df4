#include <random>
#include <sstream>

#include "singcat/module.hpp"

namespace singcat {

namespace {

Mat act_on(const std::vector<Mat>& action, Field f, std::size_t dim, const Vec& x)
{
    Mat out(f, dim, dim);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero())
            out = out + x[k] * action[k];
    return out;
}

Mat empty_cols(Field f, std::size_t rows)
{
    return Mat(f, rows, 0);
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<Mat> action)
{
    if (!algebra)
        throw InputError("module without algebra");
    const Algebra& a = *algebra;
    if (action.size() != a.dim())
        throw InputError("module over '" + a.name() + "' needs one action matrix per basis element");
    const std::size_t dim = action.front().rows();
    const Field f = a.field();
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim || !(m.field() == f))
            throw InputError("module action matrices have inconsistent shapes or fields");

    auto d = std::make_shared<Data>();
    d->algebra = std::move(algebra);
    d->dim = dim;
    d->action = std::move(action);

    std::vector<Mat> bases;
    for (const auto& e : a.prims()) {
        Mat pb = dim ? column_space(act_on(d->action, f, dim, e)) : empty_cols(f, 0);
        d->peirce.push_back(pb.cols());
        bases.push_back(pb);
    }
    d->peirce_basis = bases;

    Adapted& ad = d->adapted;
    ad.basis = hstack(f, dim, bases);
    if (ad.basis.cols() != dim)
        throw InputError("the primitive idempotents do not decompose the module (unit does not act as identity)");
    auto inv = inverse(ad.basis);
    if (!inv)
        throw InputError("the primitive idempotents do not decompose the module");
    ad.inverse = std::move(*inv);
    std::size_t off = 0;
    for (auto p : d->peirce) {
        ad.offsets.push_back(off);
        off += p;
    }
    ad.offsets.push_back(off);
    std::vector<Vec> gens;
    if (a.is_basic()) {
        gens = a.radical_generators();
    } else {
        for (std::size_t i = 0; i < a.dim(); ++i)
            gens.push_back(a.basis_vec(i));
    }
    for (const auto& g : gens)
        ad.generators.push_back(ad.inverse * act_on(d->action, f, dim, g) * ad.basis);
    d_ = std::move(d);
}

Module Module::zero(AlgebraPtr algebra)
{
    const Field f = algebra->field();
    std::vector<Mat> action(algebra->dim(), Mat(f, 0, 0));
    return Module(std::move(algebra), std::move(action));
}

Mat Module::act(const Vec& x) const
{
    return act_on(d_->action, d_->algebra->field(), d_->dim, x);
}

std::vector<std::string> Module::check() const
{
    std::vector<std::string> out;
    const Algebra& a = algebra();
    if (!act(a.unit()).is_identity())
        out.push_back("unit does not act as the identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Mat lhs = act(a.left_mult(i).column(j));
            if (!(lhs == action(i) * action(j)))
                out.push_back("action(" + a.labels()[i] + "*" + a.labels()[j] + ") != action(" + a.labels()[i] +
                              ") action(" + a.labels()[j] + ")");
        }
    return out;
}

bool ModuleMap::is_homomorphism() const
{
    if (!same_structure(source.algebra(), target.algebra()))
        return false;
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        return false;
    for (std::size_t k = 0; k < source.algebra().dim(); ++k)
        if (!(target.action(k) * matrix == matrix * source.action(k)))
            return false;
    return true;
}

Module regular_module(AlgebraPtr a)
{
    auto actions = a->left_mults();
    return Module(std::move(a), std::move(actions));
}

Mat projective_basis(const Algebra& a, std::size_t i)
{
    if (i >= a.num_prims())
        throw InputError("primitive idempotent index " + std::to_string(i) + " out of range");
    return column_space(a.right_mult_by(a.prims()[i]));
}

Module projective(AlgebraPtr a, std::size_t i)
{
    const Mat b = projective_basis(*a, i);
    const Field f = a->field();
    std::vector<Mat> rhs;
    for (std::size_t k = 0; k < a->dim(); ++k)
        rhs.push_back(a->left_mult(k) * b);
    auto x = solve(b, hstack(f, a->dim(), rhs));
    if (!x)
        throw ConsistencyError("A e_i is not a left ideal");
    std::vector<Mat> actions;
    for (std::size_t k = 0; k < a->dim(); ++k)
        actions.push_back(x->block(0, k * b.cols(), b.cols(), b.cols()));
    return Module(std::move(a), std::move(actions));
}

Module simple(AlgebraPtr a, std::size_t i)
{
    const Module p = projective(std::move(a), i);
    return quotient(p, radical_submodule_basis(p)).module;
}

Module injective(AlgebraPtr a, std::size_t i)
{
    const Module p = projective(opposite(*a), i);
    std::vector<Mat> actions;
    for (const auto& m : p.actions())
        actions.push_back(m.transpose());
    return Module(std::move(a), std::move(actions));
}

Module standard_module(AlgebraPtr a, StandardKind kind, std::size_t i)
{
    if (i >= a->num_prims())
        throw InputError("primitive idempotent index " + std::to_string(i) + " out of range");
    switch (kind) {
    case StandardKind::simple:
        return simple(std::move(a), i);
    case StandardKind::projective:
        return projective(std::move(a), i);
    case StandardKind::injective:
        return injective(std::move(a), i);
    }
    throw InputError("unknown module kind");
}

std::vector<Mat> hom_basis(const Module& m, const Module& n)
{
    require_same_algebra(m.algebra(), n.algebra(), "hom_space");
    const Field f = m.algebra().field();
    const auto& am = m.adapted();
    const auto& an = n.adapted();
    const std::size_t k = m.algebra().num_prims();

    std::vector<std::size_t> var_off(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i)
        var_off[i + 1] = var_off[i] + m.peirce()[i] * n.peirce()[i];
    const std::size_t nvar = var_off[k];
    if (nvar == 0)
        return {};
    auto var = [&](std::size_t block, std::size_t row, std::size_t col) {
        return var_off[block] + row * m.peirce()[block] + col;
    };

    RowEchelon ech(f, nvar);
    for (std::size_t g = 0; g < am.generators.size(); ++g) {
        const Mat& gn = an.generators[g];
        const Mat& gm = am.generators[g];
        for (std::size_t j = 0; j < k; ++j)      // block of the row index a (in N)
            for (std::size_t i = 0; i < k; ++i) {  // block of the column index b (in M)
                for (std::size_t a = an.offsets[j]; a < an.offsets[j + 1]; ++a)
                    for (std::size_t b = am.offsets[i]; b < am.offsets[i + 1]; ++b) {
                        Vec row = zero_vec(f, nvar);
                        bool nonzero = false;
                        // (G_N D)(a, b) = sum_c G_N(a, c) D(c, b), c in block i of N
                        for (std::size_t c = an.offsets[i]; c < an.offsets[i + 1]; ++c) {
                            const Scalar& x = gn(a, c);
                            if (x.is_zero())
                                continue;
                            row[var(i, c - an.offsets[i], b - am.offsets[i])] += x;
                            nonzero = true;
                        }
                        // (D G_M)(a, b) = sum_c D(a, c) G_M(c, b), c in block j of M
                        for (std::size_t c = am.offsets[j]; c < am.offsets[j + 1]; ++c) {
                            const Scalar& x = gm(c, b);
                            if (x.is_zero())
                                continue;
                            row[var(j, a - an.offsets[j], c - am.offsets[j])] -= x;
                            nonzero = true;
                        }
                        if (nonzero)
                            ech.add(std::move(row));
                    }
            }
    }
    const Mat ker = ech.kernel_basis();
    std::vector<Mat> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Mat d(f, n.dim(), m.dim());
        for (std::size_t blk = 0; blk < k; ++blk)
            for (std::size_t r = 0; r < n.peirce()[blk]; ++r)
                for (std::size_t s = 0; s < m.peirce()[blk]; ++s)
                    d(an.offsets[blk] + r, am.offsets[blk] + s) = ker(var(blk, r, s), c);
        out.push_back(an.basis * d * am.inverse);
    }
    return out;
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n)
{
    std::vector<ModuleMap> out;
    for (auto& h : hom_basis(m, n))
        out.push_back(ModuleMap{m, n, std::move(h)});
    return out;
}

Module direct_sum(const std::vector<Module>& parts)
{
    if (parts.empty())
        throw InputError("direct sum of an empty list");
    const AlgebraPtr& a = parts.front().algebra_ptr();
    for (const auto& p : parts)
        require_same_algebra(*a, p.algebra(), "direct_sum");
    std::vector<Mat> actions;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        std::vector<Mat> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.action(k));
        actions.push_back(block_diagonal(a->field(), blocks));
    }
    return Module(a, std::move(actions));
}

Submodule submodule(const Module& m, const Mat& basis)
{
    const Algebra& a = m.algebra();
    const Field f = a.field();
    if (basis.rows() != m.dim())
        throw InputError("submodule basis has the wrong length");
    if (basis.cols() == 0)
        return {Module::zero(m.algebra_ptr()), empty_cols(f, m.dim())};
    std::vector<Mat> rhs;
    for (std::size_t k = 0; k < a.dim(); ++k)
        rhs.push_back(m.action(k) * basis);
    auto x = solve(basis, hstack(f, m.dim(), rhs));
    if (!x)
        throw InputError("subspace is not invariant under the algebra action");
    const std::size_t w = basis.cols();
    std::vector<Mat> actions;
    for (std::size_t k = 0; k < a.dim(); ++k)
        actions.push_back(x->block(0, k * w, w, w));
    return {Module(m.algebra_ptr(), std::move(actions)), basis};
}

Submodule generated_submodule(const Module& m, const std::vector<Vec>& vectors)
{
    const Field f = m.algebra().field();
    std::vector<Vec> cols;
    for (const auto& v : vectors)
        for (std::size_t k = 0; k < m.algebra().dim(); ++k) {
            Vec w = m.action(k).apply(v);
            if (!is_zero(w))
                cols.push_back(std::move(w));
        }
    if (cols.empty())
        return submodule(m, empty_cols(f, m.dim()));
    return submodule(m, column_space(Mat::from_columns(f, m.dim(), cols)));
}

Quotient quotient(const Module& m, const Mat& basis)
{
    const Algebra& a = m.algebra();
    const Field f = a.field();
    const std::size_t n = m.dim();
    const std::size_t w = basis.cols();
    const Mat comp = extend_basis(basis, Mat::identity(f, n));
    const Mat parts[] = {basis, comp};
    auto inv = inverse(hstack(f, n, parts));
    if (!inv)
        throw InputError("quotient: basis columns are dependent");
    std::vector<std::size_t> rows;
    for (std::size_t r = w; r < n; ++r)
        rows.push_back(r);
    const Mat proj = inv->select_rows(rows);
    std::vector<Mat> actions;
    for (std::size_t k = 0; k < a.dim(); ++k)
        actions.push_back(proj * m.action(k) * comp);
    Module q(m.algebra_ptr(), std::move(actions));
    // the subspace must be invariant for the quotient action to be well defined
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (!(proj * m.action(k) * basis).is_zero())
            throw InputError("quotient by a subspace that is not a submodule");
    return {std::move(q), proj, comp};
}

ModuleMap kernel_of(const ModuleMap& f)
{
    const Mat k = kernel_basis(f.matrix);
    auto sub = submodule(f.source, k);
    return ModuleMap{sub.module, f.source, sub.inclusion};
}

ModuleMap image_of(const ModuleMap& f)
{
    const Mat im = f.matrix.cols() ? column_space(f.matrix) : Mat(f.matrix.field(), f.target.dim(), 0);
    auto sub = submodule(f.target, im);
    return ModuleMap{sub.module, f.target, sub.inclusion};
}

ModuleMap cokernel_of(const ModuleMap& f)
{
    const Mat im = f.matrix.cols() ? column_space(f.matrix) : Mat(f.matrix.field(), f.target.dim(), 0);
    auto q = quotient(f.target, im);
    return ModuleMap{f.target, q.module, q.projection};
}

Mat radical_submodule_basis(const Module& m)
{
    const Field f = m.algebra().field();
    if (m.dim() == 0 || m.algebra().radical().empty())
        return empty_cols(f, m.dim());
    std::vector<Mat> parts;
    for (const auto& r : m.algebra().radical())
        parts.push_back(m.act(r));
    return column_space(hstack(f, m.dim(), parts));
}

Mat socle_basis(const Module& m)
{
    const Field f = m.algebra().field();
    if (m.algebra().radical().empty())
        return Mat::identity(f, m.dim());
    std::vector<Mat> parts;
    for (const auto& r : m.algebra().radical())
        parts.push_back(m.act(r));
    return kernel_basis(vstack(f, m.dim(), parts));
}

namespace {

std::vector<std::size_t> peirce_of_subspace(const Module& m, const Mat& sub)
{
    std::vector<std::size_t> out;
    for (const auto& e : m.algebra().prims())
        out.push_back(sub.cols() ? rank(m.act(e) * sub) : 0);
    return out;
}

}  // namespace

std::vector<std::size_t> top_multiplicities(const Module& m)
{
    const auto radp = peirce_of_subspace(m, radical_submodule_basis(m));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < radp.size(); ++i)
        out.push_back(m.peirce()[i] - radp[i]);
    return out;
}

std::vector<std::size_t> socle_multiplicities(const Module& m)
{
    return peirce_of_subspace(m, socle_basis(m));
}

Cover projective_cover(const Module& m)
{
    if (m.is_zero())
        throw InputError("projective cover of the zero module");
    const AlgebraPtr& a = m.algebra_ptr();
    const Field f = a->field();
    const Mat rad = radical_submodule_basis(m);
    Cover cover;
    std::vector<Module> parts;
    std::vector<Mat> columns;
    for (std::size_t i = 0; i < a->num_prims(); ++i) {
        const Mat ei = m.act(a->prims()[i]);
        const Mat eirad = rad.cols() ? column_space(ei * rad) : empty_cols(f, m.dim());
        const Mat gens = extend_basis(eirad, m.peirce_basis(i));
        cover.multiplicities.push_back(gens.cols());
        if (gens.cols() == 0)
            continue;
        const Module pi = projective(a, i);
        const Mat pb = projective_basis(*a, i);
        for (std::size_t g = 0; g < gens.cols(); ++g) {
            const Vec gen = gens.column(g);
            Mat block(f, m.dim(), pb.cols());
            for (std::size_t t = 0; t < pb.cols(); ++t)
                block.set_column(t, m.act(pb.column(t)).apply(gen));
            parts.push_back(pi);
            columns.push_back(std::move(block));
        }
    }
    cover.map = ModuleMap{direct_sum(parts), m, hstack(f, m.dim(), columns)};
    return cover;
}

Module syzygy(const Module& m)
{
    if (m.is_zero())
        return m;
    return kernel_of(projective_cover(m).map).source;
}

Module dual(const Module& m, AlgebraPtr opposite_algebra)
{
    if (opposite_algebra->dim() != m.algebra().dim())
        throw InputError("dual: opposite algebra has the wrong dimension");
    std::vector<Mat> actions;
    for (const auto& a : m.actions())
        actions.push_back(a.transpose());
    return Module(std::move(opposite_algebra), std::move(actions));
}

Module dual(const Module& m)
{
    return dual(m, opposite(m.algebra()));
}

std::string ModuleInvariants::to_string() const
{
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    return "dim " + std::to_string(dim) + ", peirce " + list(peirce) + ", top " + list(top) + ", socle " +
           list(socle) + ", radical layers " + list(radical_layers);
}

ModuleInvariants module_invariants(const Module& m)
{
    ModuleInvariants inv;
    inv.dim = m.dim();
    inv.peirce = m.peirce();
    inv.top = top_multiplicities(m);
    inv.socle = socle_multiplicities(m);
    const Field f = m.algebra().field();
    Mat layer = Mat::identity(f, m.dim());
    while (layer.cols() > 0) {
        inv.radical_layers.push_back(layer.cols());
        std::vector<Mat> parts;
        for (const auto& r : m.algebra().radical())
            parts.push_back(m.act(r) * layer);
        if (parts.empty())
            break;
        layer = column_space(hstack(f, m.dim(), parts));
    }
    return inv;
}

bool verify_isomorphism(const Module& m, const Module& n, const Mat& f)
{
    if (!same_structure(m.algebra(), n.algebra()))
        return false;
    if (f.rows() != n.dim() || f.cols() != m.dim() || m.dim() != n.dim())
        return false;
    if (m.dim() > 0 && rank(f) != m.dim())
        return false;
    return ModuleMap{m, n, f}.is_homomorphism();
}

namespace {

void require_randomizable(Field f)
{
    if (!f.is_rational() && f.characteristic() < 11)
        throw InputError("randomized procedures need characteristic 0 or p >= 11 (got " + f.name() + ")");
}

Scalar random_coefficient(Field f, std::mt19937_64& rng)
{
    if (f.is_rational())
        return Scalar(f, static_cast<long>(rng() % 7) - 3);
    return Scalar(f, static_cast<long>(rng() % f.characteristic()));
}

}  // namespace

IsoVerdict is_isomorphic(const Module& m, const Module& n, std::size_t attempts, std::uint64_t seed)
{
    require_same_algebra(m.algebra(), n.algebra(), "is_isomorphic");
    const Field f = m.algebra().field();
    require_randomizable(f);
    IsoVerdict v;
    if (m.dim() != n.dim() || m.peirce() != n.peirce()) {
        v.kind = IsoVerdict::Kind::not_iso;
        v.witness = "dimension vectors differ";
        return v;
    }
    if (m.dim() == 0) {
        v.kind = IsoVerdict::Kind::iso;
        v.certificate = Mat(f, 0, 0);
        return v;
    }
    const auto im = module_invariants(m);
    const auto in = module_invariants(n);
    if (!(im == in)) {
        v.kind = IsoVerdict::Kind::not_iso;
        v.witness = "invariants differ: [" + im.to_string() + "] vs [" + in.to_string() + "]";
        return v;
    }
    const auto homs = hom_basis(m, n);
    const std::size_t end_dim = hom_basis(m, m).size();
    if (homs.size() != end_dim) {
        v.kind = IsoVerdict::Kind::not_iso;
        v.witness = "dim Hom(M,N) = " + std::to_string(homs.size()) + " but dim End(M) = " + std::to_string(end_dim);
        return v;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 1; t <= attempts; ++t) {
        Mat cand(f, n.dim(), m.dim());
        for (const auto& h : homs)
            cand = cand + random_coefficient(f, rng) * h;
        if (rank(cand) != m.dim())
            continue;
        if (!verify_isomorphism(m, n, cand))
            throw ConsistencyError("hom-space element failed to intertwine");
        v.kind = IsoVerdict::Kind::iso;
        v.certificate = std::move(cand);
        v.attempts = t;
        return v;
    }
    v.kind = IsoVerdict::Kind::unknown;
    v.attempts = attempts;
    v.witness = "no invertible homomorphism found in " + std::to_string(attempts) + " random attempts";
    return v;
}

ProjectiveSplit split_projective_summands(const Module& m)
{
    const AlgebraPtr& a = m.algebra_ptr();
    const Field f = a->field();
    ProjectiveSplit out;
    out.rest = m;
    out.rest_inclusion = Mat::identity(f, m.dim());
    out.multiplicities.assign(a->num_prims(), 0);

    std::vector<Module> projs;
    std::vector<Mat> pbases, tops;
    for (std::size_t i = 0; i < a->num_prims(); ++i) {
        projs.push_back(projective(a, i));
        pbases.push_back(projective_basis(*a, i));
        const Mat rad = radical_submodule_basis(projs.back());
        tops.push_back(kernel_basis(rad.transpose()).transpose());
    }

    bool found = true;
    while (found && !out.rest.is_zero()) {
        found = false;
        const Module& cur = out.rest;
        for (std::size_t i = 0; i < a->num_prims() && !found; ++i) {
            if (cur.peirce()[i] == 0 || projs[i].dim() > cur.dim())
                continue;
            const Mat& ei = cur.peirce_basis(i);
            for (const auto& h : hom_basis(cur, projs[i])) {
                const Mat t = tops[i] * h * ei;
                std::optional<std::size_t> col;
                for (std::size_t c = 0; c < t.cols() && !col; ++c)
                    for (std::size_t r = 0; r < t.rows(); ++r)
                        if (!t(r, c).is_zero()) {
                            col = c;
                            break;
                        }
                if (!col)
                    continue;
                const Vec gen = ei.column(*col);
                Mat fm(f, cur.dim(), pbases[i].cols());
                for (std::size_t s = 0; s < pbases[i].cols(); ++s)
                    fm.set_column(s, cur.act(pbases[i].column(s)).apply(gen));
                if (rank(h * fm) != projs[i].dim())
                    throw ConsistencyError("split_projective_summands: composite is not an automorphism");
                auto ker = kernel_of(ModuleMap{cur, projs[i], h});
                out.rest_inclusion = out.rest_inclusion * ker.matrix;
                out.rest = ker.source;
                ++out.multiplicities[i];
                found = true;
                break;
            }
        }
    }
    return out;
}

bool is_projective(const Module& m)
{
    return split_projective_summands(m).rest.is_zero();
}

Module random_module(AlgebraPtr a, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const Field f = a->field();
    const std::size_t k = 1 + rng() % 2;
    std::vector<Module> parts;
    for (std::size_t t = 0; t < k; ++t)
        parts.push_back(projective(a, rng() % a->num_prims()));
    const Module p = direct_sum(parts);
    const Mat rad = radical_submodule_basis(p);
    if (rad.cols() == 0)
        return p;
    const std::size_t nvec = 1 + rng() % 2;
    std::vector<Vec> vecs;
    for (std::size_t t = 0; t < nvec; ++t) {
        Vec v = zero_vec(f, p.dim());
        for (std::size_t c = 0; c < rad.cols(); ++c)
            axpy(v, Scalar(f, static_cast<long>(rng() % 5) - 2), rad.column(c));
        vecs.push_back(std::move(v));
    }
    const auto sub = generated_submodule(p, vecs);
    return quotient(p, sub.inclusion).module;
}

bool is_short_exact(const ModuleMap& f, const ModuleMap& g, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (f.target.dim() != g.source.dim())
        return fail("middle terms differ");
    if (!f.is_homomorphism())
        return fail("first map is not a homomorphism");
    if (!g.is_homomorphism())
        return fail("second map is not a homomorphism");
    if (f.source.dim() > 0 && g.target.dim() > 0 && !(g.matrix * f.matrix).is_zero())
        return fail("composite is nonzero");
    const std::size_t rf = f.matrix.empty() ? 0 : rank(f.matrix);
    const std::size_t rg = g.matrix.empty() ? 0 : rank(g.matrix);
    if (rf != f.source.dim())
        return fail("first map is not injective");
    if (rg != g.target.dim())
        return fail("second map is not surjective");
    if (rf != g.source.dim() - rg)
        return fail("image of the first map differs from the kernel of the second");
    return true;
}

}  // namespace singcat
