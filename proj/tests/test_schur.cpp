#include <doctest.h>

#include "support.hpp"

using namespace singcat;
using namespace testsupport;

namespace {

bool has(const std::vector<std::string>& xs, const std::string& needle)
{
    for (const auto& x : xs)
        if (x.find(needle) != std::string::npos)
            return true;
    return false;
}

std::vector<Idempotent> all_idempotents(const Algebra& a)
{
    std::vector<Idempotent> out;
    const std::size_t n = a.num_prims();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s.push_back(i);
        out.push_back(Idempotent::of(a, s));
    }
    return out;
}

}  // namespace

TEST_SUITE("schur") {

TEST_CASE("Schur functor examples")
{
    const auto a = fix_A();
    const Idempotent e1 = Idempotent::of(*a, {0});
    CHECK(schur_apply(*a, e1, simple(a, 1)).is_zero());
    const Module p2 = projective(a, 1);
    const Module sp2 = schur_apply(*a, e1, p2);
    CHECK(sp2.dim() == p2.peirce()[0]);
    CHECK(sp2.dim() == 2);  // g and a*g end at vertex 1
    for (const auto& alg : all_fixtures()) {
        const Idempotent one = Idempotent::of(*alg, [&] {
            std::vector<std::size_t> s(alg->num_prims());
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] = i;
            return s;
        }());
        const Corner c = corner(*alg, one);
        CHECK(c.algebra->dim() == alg->dim());
        for (const auto& m : standard_modules(alg)) {
            const Module image = schur_apply(c, one, m).module;
            CHECK(image.dim() == m.dim());
            // e = 1 leaves the action unchanged up to the corner basis
            const auto phi = find_basis_alignment(*c.algebra, *alg);
            REQUIRE(phi);
        }
    }
}

TEST_CASE("kernel membership examples")
{
    const auto a = fix_A();
    const Idempotent e1 = Idempotent::of(*a, {0});
    CHECK(in_kernel(*a, e1, simple(a, 1)));
    CHECK_FALSE(in_kernel(*a, e1, projective(a, 0)));
    CHECK(in_kernel(*a, e1, Module::zero(a)));
    CHECK_FALSE(in_kernel(*a, Idempotent::of(*a, {1}), projective(a, 0)));
}

TEST_CASE("kernel membership matches a zero image")
{
    for (const auto& alg : all_fixtures())
        for (const auto& e : all_idempotents(*alg)) {
            if (e.support.empty())
                continue;
            auto ms = standard_modules(alg);
            for (auto& r : random_modules(alg, 4))
                ms.push_back(r);
            for (const auto& m : ms)
                CHECK(in_kernel(*alg, e, m) == schur_apply(*alg, e, m).is_zero());
        }
}

TEST_CASE("idempotent classification examples")
{
    const auto a = fix_A();
    const IdempotentClass c1 = classify_idempotent(a, Idempotent::of(*a, {0}));
    CHECK(c1.singularly_complete == Tri::yes);
    REQUIRE(c1.complete_evidence.size() == 1);
    CHECK(c1.complete_evidence[0].pd.to_string() == "Finite(1)");
    CHECK(c1.regular == Tri::no);
    CHECK(c1.regular_witness == std::optional<std::size_t>(0));

    const IdempotentClass c2 = classify_idempotent(a, Idempotent::of(*a, {1}));
    CHECK(c2.singularly_complete == Tri::no);
    CHECK(c2.complete_witness == std::optional<std::size_t>(0));
    REQUIRE(c2.complete_evidence.size() == 1);
    CHECK(c2.complete_evidence[0].pd.is_infinite());
    CHECK(c2.complete_evidence[0].pd.verify());
    CHECK(c2.regular == Tri::yes);

    const IdempotentClass full = classify_idempotent(a, Idempotent::of(*a, {0, 1}));
    CHECK(full.singularly_complete == Tri::yes);
    CHECK(full.complete_evidence.empty());

    SearchOptions tiny;
    tiny.bound = 1;
    CHECK(classify_idempotent(a, Idempotent::of(*a, {1}), tiny).singularly_complete == Tri::unknown);
}

TEST_CASE("classification is invariant under relabeling the vertices")
{
    const auto a = fix_A();
    // same quiver with the vertices listed in the other order
    const auto b = make({"2", "1"}, {{"a", "1", "1"}, {"b", "1", "2"}, {"g", "2", "1"}}, {"a*a", "g*b", "b*a"}, "A");
    for (const std::string v : {"1", "2"}) {
        const IdempotentClass x = classify_idempotent(a, Idempotent::from_names(*a, {v}));
        const IdempotentClass y = classify_idempotent(b, Idempotent::from_names(*b, {v}));
        CHECK(x.regular == y.regular);
        CHECK(x.singularly_complete == y.singularly_complete);
    }
    CHECK(find_basis_alignment(*a, *b));
}

TEST_CASE("Schur functor is exact and keeps projectives on the support")
{
    for (Field f : {Field::rationals(), gf101()})
        for (const auto& alg : all_fixtures(f))
            for (const auto& e : all_idempotents(*alg)) {
                if (e.support.empty())
                    continue;
                const Corner c = corner(*alg, e);
                for (auto j : e.support) {
                    const Module pj = schur_apply(c, e, projective(alg, j)).module;
                    CHECK(is_projective(pj));
                }
                auto ms = standard_modules(alg);
                for (auto& r : random_modules(alg, 3))
                    ms.push_back(r);
                for (const auto& m : ms) {
                    if (m.is_zero())
                        continue;
                    const Cover cov = projective_cover(m);
                    const ModuleMap k = kernel_of(cov.map);
                    REQUIRE(is_short_exact(k, cov.map));
                    const ModuleMap ek = schur_apply(c, e, k);
                    const ModuleMap ep = schur_apply(c, e, cov.map);
                    std::string why;
                    CHECK_MESSAGE(is_short_exact(ek, ep, &why), why);
                    CHECK(ek.source.dim() + ep.target.dim() == ep.source.dim());
                }
            }
}

TEST_CASE("corner reduction reports")
{
    const auto a = fix_A();
    const EquivalenceReport r = theorem21_report(a, Idempotent::of(*a, {0}));
    CHECK(r.established());
    REQUIRE(r.hypotheses.size() == 2);
    CHECK(r.hypotheses[1].evidence.find("Finite(0)") != std::string::npos);
    CHECK(r.hypotheses[1].evidence.find("free of rank 2") != std::string::npos);
    REQUIRE(r.target_algebra);
    CHECK(find_basis_alignment(*r.target_algebra, *fix_D()));
    CHECK(has(r.decorations, "K-mod-like"));
    CHECK(has(r.decorations, "stable module category"));
    REQUIRE(r.target);
    CHECK(r.target->omega_periods[0] == std::optional<std::size_t>(1));
    CHECK(r.target->stable_end_dims[0] == 1);

    const auto app = fix_App();
    const EquivalenceReport r2 = theorem21_report(app, Idempotent::of(*app, {0}));
    CHECK(r2.established());
    CHECK(r2.hypotheses[1].evidence.find("free of rank 3") != std::string::npos);
    CHECK(find_basis_alignment(*r2.target_algebra, *fix_D()));

    const EquivalenceReport r3 = theorem21_report(a, Idempotent::of(*a, {1}));
    CHECK_FALSE(r3.established());
    CHECK(r3.failing.find("singularly-complete") != std::string::npos);
    CHECK(r3.hypotheses[0].evidence.find("witness S_1") != std::string::npos);
    CHECK(r3.conclusion.empty());
    CHECK(r3.decorations.empty());
}

TEST_CASE("triangular reduction reports")
{
    const EquivalenceReport up = theorem41_report(file_triangular(Orientation::upper));
    CHECK(up.established());
    CHECK(up.tag == "triangular-upper");
    CHECK(up.conclusion.find("D_sg(dualnum)") != std::string::npos);
    CHECK(has(up.decorations, "K-mod-like"));

    const EquivalenceReport lo = theorem41_report(file_triangular(Orientation::lower));
    CHECK(lo.established());
    CHECK(lo.hypotheses.size() == 3);
    CHECK(has(lo.decorations, "stable MCM(dualnum)"));

    const auto d = fix_D();
    const EquivalenceReport bad = theorem41_report(build_triangular(d, fix_D(), zero_bimodule(d, fix_D()),
                                                                    Orientation::upper));
    CHECK_FALSE(bad.established());
    CHECK(bad.failing.find("global dimension") != std::string::npos);
}

TEST_CASE("the two reductions name the same corner")
{
    for (auto o : {Orientation::upper, Orientation::lower}) {
        const TriangularData t = file_triangular(o);
        const EquivalenceReport a = theorem41_report(t);
        const EquivalenceReport b = theorem21_report(t.algebra, t.s_idempotent());
        REQUIRE(a.established());
        REQUIRE(b.established());
        const auto phi = find_basis_alignment(*a.target_algebra, *b.target_algebra);
        REQUIRE(phi);
        CHECK(verify_algebra_isomorphism(*a.target_algebra, *b.target_algebra, *phi));
    }
}

TEST_CASE("global dimension")
{
    CHECK(global_dimension(fix_K()).finite == Tri::yes);
    CHECK(global_dimension(fix_D()).finite == Tri::no);
    const GlobalDim ap = global_dimension(fix_Ap());
    CHECK(ap.finite == Tri::no);
    const auto path = make({"1", "2", "3"}, {{"p", "1", "2"}, {"q", "2", "3"}}, {}, "A3");
    const GlobalDim g = global_dimension(path);
    CHECK(g.finite == Tri::yes);
    CHECK(g.value == 1);
}

}
