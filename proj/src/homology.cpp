#include <algorithm>

#include "singcat/homology.hpp"

namespace singcat {

std::size_t Resolution::length() const
{
    return covers.empty() ? 0 : covers.size() - 1;
}

Resolution resolve(const Module& m, std::size_t bound)
{
    if (bound < 1)
        throw InputError("resolution bound must be at least 1");
    Resolution r;
    r.module = m;
    r.bound = bound;
    r.syzygies.push_back(m);
    if (m.is_zero()) {
        r.terminated = true;
        return r;
    }
    while (r.covers.size() < bound) {
        const Module& cur = r.syzygies.back();
        Cover c = projective_cover(cur);
        ModuleMap incl = kernel_of(c.map);
        std::string why;
        if (!is_short_exact(incl, c.map, &why))
            throw ConsistencyError("resolution step " + std::to_string(r.covers.size()) + " is not exact: " + why);
        r.covers.push_back(std::move(c));
        r.syzygies.push_back(incl.source);
        r.inclusions.push_back(std::move(incl));
        if (r.syzygies.back().is_zero()) {
            r.terminated = true;
            break;
        }
    }
    return r;
}

DimResult DimResult::finite(std::size_t n)
{
    DimResult d;
    d.kind = Kind::finite;
    d.value = n;
    return d;
}

DimResult DimResult::unknown(std::size_t bound)
{
    DimResult d;
    d.kind = Kind::unknown;
    d.value = bound;
    return d;
}

bool DimResult::verify() const
{
    if (kind != Kind::infinite_certified)
        return true;
    if (!from || !to || !certificate || j >= k || from->is_zero())
        return false;
    return verify_isomorphism(*from, *to, *certificate);
}

std::string DimResult::to_string() const
{
    switch (kind) {
    case Kind::finite:
        return "Finite(" + std::to_string(value) + ")";
    case Kind::infinite_certified:
        return "InfiniteCertified(np Omega^" + std::to_string(k) + " ~ np Omega^" + std::to_string(j) + ")";
    case Kind::unknown:
        break;
    }
    return "Unknown(>=" + std::to_string(value) + ")";
}

std::vector<Module> reduced_syzygies(const Module& m, std::size_t count)
{
    std::vector<Module> out;
    Module cur = m;
    while (out.size() < count) {
        Module np = split_projective_summands(cur).rest;
        if (np.is_zero())
            break;
        out.push_back(np);
        cur = syzygy(np);
    }
    return out;
}

DimResult proj_dim(const Module& m, const SearchOptions& opt)
{
    if (m.is_zero())
        return DimResult::finite(0);
    std::vector<Module> seen;
    Module cur = m;
    for (std::size_t k = 0; k <= opt.bound; ++k) {
        Module np = split_projective_summands(cur).rest;
        if (np.is_zero())
            return DimResult::finite(k);
        for (std::size_t j = 0; j < seen.size(); ++j) {
            if (seen[j].dim() != np.dim() || seen[j].peirce() != np.peirce())
                continue;
            auto v = is_isomorphic(seen[j], np, opt.attempts, opt.seed + 1000003ULL * k + j);
            if (v.kind != IsoVerdict::Kind::iso)
                continue;
            DimResult d;
            d.kind = DimResult::Kind::infinite_certified;
            d.j = j;
            d.k = k;
            d.from = seen[j];
            d.to = np;
            d.certificate = std::move(v.certificate);
            if (!d.verify())
                throw ConsistencyError("periodicity certificate failed to re-verify");
            return d;
        }
        seen.push_back(np);
        cur = syzygy(np);
    }
    return DimResult::unknown(opt.bound);
}

DimResult inj_dim(const Module& m, const SearchOptions& opt)
{
    return proj_dim(dual(m), opt);
}

std::size_t span_dim(Field f, const std::vector<Mat>& maps)
{
    if (maps.empty())
        return 0;
    const std::size_t n = maps.front().rows() * maps.front().cols();
    if (n == 0)
        return 0;
    RowEchelon ech(f, n);
    for (const auto& m : maps) {
        Vec v;
        v.reserve(n);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                v.push_back(m(r, c));
        ech.add(std::move(v));
    }
    return ech.rank();
}

namespace {

/// dim Ext^1(x, n) from the cover 0 -> Omega x -> P -> x -> 0.
std::size_t ext1(const Module& x, const Module& n)
{
    if (x.is_zero() || n.is_zero())
        return 0;
    const Cover c = projective_cover(x);
    const ModuleMap incl = kernel_of(c.map);
    if (incl.source.is_zero())
        return 0;
    const std::size_t all = hom_basis(incl.source, n).size();
    std::vector<Mat> restricted;
    for (const auto& f : hom_basis(c.map.source, n))
        restricted.push_back(f * incl.matrix);
    return all - span_dim(x.algebra().field(), restricted);
}

}  // namespace

std::optional<std::size_t> ext_dim(const Module& m, const Module& n, std::size_t i, std::size_t bound)
{
    require_same_algebra(m.algebra(), n.algebra(), "ext_dim");
    if (i == 0)
        return hom_basis(m, n).size();
    if (i > bound)
        return std::nullopt;
    const auto chain = reduced_syzygies(m, i);
    if (chain.size() < i)
        return 0;
    return ext1(chain[i - 1], n);
}

namespace {

DimResult combine(const std::vector<DimResult>& parts, std::size_t bound, std::size_t* which)
{
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].is_infinite()) {
            *which = i;
            return parts[i];
        }
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].is_unknown()) {
            *which = i;
            return DimResult::unknown(bound);
        }
    std::size_t best = 0;
    *which = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].value > best) {
            best = parts[i].value;
            *which = i;
        }
    return DimResult::finite(best);
}

}  // namespace

std::string GorensteinVerdict::to_string() const
{
    switch (kind) {
    case Kind::gorenstein:
        return "Gorenstein(" + std::to_string(gdim) + ")";
    case Kind::not_gorenstein:
        return "NotGorenstein";
    case Kind::unknown:
        break;
    }
    return "Unknown";
}

GorensteinVerdict gorenstein(const AlgebraPtr& a, const SearchOptions& opt)
{
    GorensteinVerdict g;
    for (std::size_t i = 0; i < a->num_prims(); ++i) {
        g.left_parts.push_back(inj_dim(projective(a, i), opt));
        g.right_parts.push_back(proj_dim(injective(a, i), opt));
    }
    std::size_t li = 0, ri = 0;
    g.left = combine(g.left_parts, opt.bound, &li);
    g.right = combine(g.right_parts, opt.bound, &ri);
    const auto& names = a->prim_names();
    if (g.right.is_infinite()) {
        g.kind = GorensteinVerdict::Kind::not_gorenstein;
        g.witness = "proj.dim I(" + names[ri] + ") is infinite: " + g.right.to_string();
    } else if (g.left.is_infinite()) {
        g.kind = GorensteinVerdict::Kind::not_gorenstein;
        g.witness = "inj.dim P(" + names[li] + ") is infinite: " + g.left.to_string();
    } else if (g.left.is_finite() && g.right.is_finite()) {
        if (g.left.value != g.right.value)
            throw ConsistencyError("left and right self-injective dimensions of '" + a->name() + "' differ: " +
                                   g.left.to_string() + " vs " + g.right.to_string());
        g.kind = GorensteinVerdict::Kind::gorenstein;
        g.gdim = g.left.value;
    } else {
        g.kind = GorensteinVerdict::Kind::unknown;
        g.witness = "no decision within bound " + std::to_string(opt.bound);
    }
    return g;
}

McmVerdict is_mcm(const Module& m, const SearchOptions& opt)
{
    return is_mcm(m, gorenstein(m.algebra_ptr(), opt), opt);
}

McmVerdict is_mcm(const Module& m, const GorensteinVerdict& g, const SearchOptions& opt)
{
    McmVerdict v;
    const bool certified = g.kind == GorensteinVerdict::Kind::gorenstein;
    const std::size_t upto = certified ? g.gdim : opt.bound;
    const Module reg = regular_module(m.algebra_ptr());
    const auto chain = reduced_syzygies(m, upto);
    v.checked_up_to = upto;
    for (std::size_t i = 1; i <= upto; ++i) {
        if (i > chain.size())
            break;
        if (ext1(chain[i - 1], reg) != 0) {
            v.kind = McmVerdict::Kind::no;
            v.witness = i;
            v.certified = true;
            return v;
        }
    }
    v.kind = certified ? McmVerdict::Kind::yes : McmVerdict::Kind::unknown;
    v.certified = certified;
    // the reduced syzygies ran out, so every higher Ext vanishes too
    if (!certified && chain.size() < upto) {
        v.kind = McmVerdict::Kind::yes;
        v.certified = true;
    }
    return v;
}

std::size_t stable_hom_dim(const Module& m, const Module& n)
{
    require_same_algebra(m.algebra(), n.algebra(), "stable_hom_dim");
    if (m.is_zero() || n.is_zero())
        return 0;
    const std::size_t all = hom_basis(m, n).size();
    const Cover c = projective_cover(n);
    std::vector<Mat> through;
    for (const auto& g : hom_basis(m, c.map.source))
        through.push_back(c.map.matrix * g);
    return all - span_dim(m.algebra().field(), through);
}

}  // namespace singcat
