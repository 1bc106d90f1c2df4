// Shared test helpers: the fixture algebras built in code, and brute-force
// oracles that avoid the library's own solvers.
#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <tuple>

#include "singcat/commands.hpp"

namespace testsupport {

using namespace singcat;

inline std::filesystem::path fixture(const std::string& name)
{
    return std::filesystem::path(SINGCAT_FIXTURE_DIR) / name;
}

inline Field gf101() { return Field::prime(101); }

using ArrowSpec = std::tuple<std::string, std::string, std::string>;

inline Quiver quiver(const std::vector<std::string>& vertices, const std::vector<ArrowSpec>& arrows)
{
    Quiver q;
    q.vertices = vertices;
    for (const auto& [n, s, t] : arrows)
        q.arrows.push_back({n, q.vertex_index(s), q.vertex_index(t)});
    q.validate();
    return q;
}

inline AlgebraPtr make(const std::vector<std::string>& vertices, const std::vector<ArrowSpec>& arrows,
                       const std::vector<std::string>& rels, const std::string& name, Field f = {})
{
    const Quiver q = quiver(vertices, arrows);
    std::vector<Relation> rs;
    for (const auto& r : rels)
        rs.push_back(parse_relation(q, f, r));
    return build_path_algebra(q, rs, f, default_degree_bound, name);
}

inline AlgebraPtr fix_K(Field f = {}) { return make({"1"}, {}, {}, "K", f); }
inline AlgebraPtr fix_D(Field f = {}) { return make({"1"}, {{"x", "1", "1"}}, {"x*x"}, "dualnum", f); }
inline AlgebraPtr fix_A(Field f = {})
{
    return make({"1", "2"}, {{"a", "1", "1"}, {"b", "1", "2"}, {"g", "2", "1"}}, {"a*a", "g*b", "b*a"}, "A", f);
}
inline AlgebraPtr fix_Ap(Field f = {})
{
    return make({"1", "2"}, {{"a", "1", "1"}, {"b", "1", "2"}}, {"a*a", "b*a"}, "A'", f);
}
inline AlgebraPtr fix_App(Field f = {})
{
    return make({"1", "2"}, {{"a", "1", "1"}, {"b", "2", "1"}, {"g", "2", "1"}}, {"a*a"}, "A''", f);
}

inline std::vector<AlgebraPtr> all_fixtures(Field f = {})
{
    return {fix_K(f), fix_D(f), fix_A(f), fix_Ap(f), fix_App(f)};
}

/// Every simple, indecomposable projective and indecomposable injective.
inline std::vector<Module> standard_modules(const AlgebraPtr& a)
{
    std::vector<Module> out;
    for (auto kind : {StandardKind::simple, StandardKind::projective, StandardKind::injective})
        for (std::size_t i = 0; i < a->num_prims(); ++i)
            out.push_back(standard_module(a, kind, i));
    return out;
}

inline std::vector<Module> random_modules(const AlgebraPtr& a, std::size_t count, std::uint64_t seed0 = 1)
{
    std::vector<Module> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(random_module(a, seed0 + k));
    return out;
}

/// Upper triangular data of A' from its own corners, and lower data of A''.
inline TriangularData corner_triangular(const AlgebraPtr& a, Orientation o)
{
    const Idempotent e1 = Idempotent::of(*a, {0}), e2 = Idempotent::of(*a, {1});
    const AlgebraPtr c1 = corner(*a, e1).algebra, c2 = corner(*a, e2).algebra;
    if (o == Orientation::upper)
        return build_triangular(c2, c1, corner_bimodule(*a, e2, e1, c2, c1), o);
    return build_triangular(c2, c1, corner_bimodule(*a, e1, e2, c1, c2), o);
}

/// Same data read from the fixture files.
inline TriangularData file_triangular(Orientation o, std::optional<std::uint64_t> field = std::nullopt)
{
    const AlgebraPtr r = load_algebra(fixture("K.alg"), field).algebra;
    const AlgebraPtr s = load_algebra(fixture("dualnum.alg"), field).algebra;
    if (o == Orientation::upper)
        return build_triangular(r, s, load_bimodule(r, s, fixture("Aprime_M.bim")), o);
    return build_triangular(r, s, load_bimodule(s, r, fixture("Adoubleprime_N.bim")), o);
}

/// Opposite of a triangular algebra as a triangular algebra of the other orientation.
inline TriangularData opposite_triangular(const TriangularData& t)
{
    return build_triangular(opposite(*t.r), opposite(*t.s), t.m.flip(),
                            t.orientation == Orientation::upper ? Orientation::lower : Orientation::upper);
}

// ---------------------------------------------------------------- oracles

inline std::size_t oracle_rank(Field f, const std::vector<Vec>& rows, std::size_t cols)
{
    if (rows.empty() || cols == 0)
        return 0;
    Mat m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    return rank(m);
}

/// All composable words of the given length (word[0] is traversed last).
inline std::vector<PathWord> paths_of_length(const Quiver& q, std::size_t len)
{
    std::vector<PathWord> out;
    if (len == 0)
        return out;
    std::vector<PathWord> cur;
    for (std::uint32_t a = 0; a < q.arrows.size(); ++a)
        cur.push_back({a});
    for (std::size_t l = 1; l < len; ++l) {
        std::vector<PathWord> next;
        for (const auto& w : cur)
            for (std::uint32_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].target == q.arrows[w.back()].source) {
                    PathWord v = w;
                    v.push_back(a);
                    next.push_back(std::move(v));
                }
        cur = std::move(next);
    }
    return cur;
}

/// Dimension of KQ/I by enumerating paths degree by degree and spanning the
/// ideal by u*r*v. Relations must be homogeneous in path length.
inline std::size_t brute_path_dim(const Quiver& q, const std::vector<Relation>& rels, Field f,
                                  std::size_t max_degree = 24)
{
    std::size_t total = q.vertices.size();
    for (std::size_t d = 1; d <= max_degree; ++d) {
        const auto paths = paths_of_length(q, d);
        std::map<PathWord, std::size_t> index;
        for (std::size_t i = 0; i < paths.size(); ++i)
            index[paths[i]] = i;
        std::vector<Vec> gens;
        for (const auto& r : rels) {
            const std::size_t dr = r.terms.front().first.size();
            if (dr > d)
                continue;
            for (std::size_t lu = 0; lu <= d - dr; ++lu) {
                const std::size_t lv = d - dr - lu;
                std::vector<PathWord> us = lu ? paths_of_length(q, lu) : std::vector<PathWord>{PathWord{}};
                std::vector<PathWord> vs = lv ? paths_of_length(q, lv) : std::vector<PathWord>{PathWord{}};
                for (const auto& u : us)
                    for (const auto& v : vs) {
                        Vec g = zero_vec(f, paths.size());
                        bool any = false;
                        for (const auto& [w, c] : r.terms) {
                            PathWord full = u;
                            full.insert(full.end(), w.begin(), w.end());
                            full.insert(full.end(), v.begin(), v.end());
                            auto it = index.find(full);
                            if (it == index.end())
                                continue;
                            g[it->second] = g[it->second] + c;
                            any = true;
                        }
                        if (any)
                            gens.push_back(std::move(g));
                    }
            }
        }
        const std::size_t quotient = paths.size() - oracle_rank(f, gens, paths.size());
        if (quotient == 0)
            return total;
        total += quotient;
    }
    throw std::runtime_error("brute_path_dim: not finite-dimensional within the degree cap");
}

/// Hom(m, n) from the full intertwining system f act_m(b) = act_n(b) f.
inline std::vector<Mat> brute_hom(const Module& m, const Module& n)
{
    const Field f = m.algebra().field();
    const std::size_t dm = m.dim(), dn = n.dim(), unknowns = dm * dn;
    std::vector<Mat> out;
    if (unknowns == 0)
        return out;
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < m.algebra().dim(); ++b) {
        const Mat& am = m.action(b);
        const Mat& an = n.action(b);
        // entry (i, j) of an*F - F*am, with F(r, c) at index r*dm + c
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t j = 0; j < dm; ++j) {
                Vec row = zero_vec(f, unknowns);
                for (std::size_t k = 0; k < dn; ++k)
                    row[k * dm + j] = row[k * dm + j] + an(i, k);
                for (std::size_t k = 0; k < dm; ++k)
                    row[i * dm + k] = row[i * dm + k] - am(k, j);
                rows.push_back(std::move(row));
            }
    }
    Mat sys(f, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c)
            sys(r, c) = rows[r][c];
    const Mat ker = kernel_basis(sys);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Mat h(f, dn, dm);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t k = 0; k < dm; ++k)
                h(r, k) = ker(r * dm + k, c);
        out.push_back(std::move(h));
    }
    return out;
}

inline Vec flatten(const Mat& m)
{
    Vec v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            v.push_back(m(r, c));
    return v;
}

/// Stable Hom dimension: Hom(m, n) modulo the span of all composites
/// m -> P(i) -> n over every indecomposable projective P(i).
inline std::size_t stable_hom_oracle(const Module& m, const Module& n)
{
    const auto all = brute_hom(m, n);
    const AlgebraPtr a = m.algebra_ptr();
    std::vector<Vec> through;
    for (std::size_t i = 0; i < a->num_prims(); ++i) {
        const Module p = projective(a, i);
        const auto in = brute_hom(m, p);
        const auto out = brute_hom(p, n);
        for (const auto& x : in)
            for (const auto& y : out)
                through.push_back(flatten(y * x));
    }
    return all.size() - oracle_rank(a->field(), through, m.dim() * n.dim());
}

/// Both verdicts decisive implies they agree; Unknown never contradicts.
inline bool compatible(const DimResult& x, const DimResult& y)
{
    if (x.is_unknown() || y.is_unknown())
        return true;
    if (x.is_finite() != y.is_finite())
        return false;
    return !x.is_finite() || x.value == y.value;
}

}  // namespace testsupport
