// Finite-dimensional left modules given by action matrices.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singcat/algebra.hpp"

namespace singcat {

/// A left module: one square action matrix per algebra basis element.
///
/// The constructor requires the sum of the primitive idempotents to act as
/// the identity; the remaining module axioms are checked by check().
class Module {
public:
    Module() = default;
    Module(AlgebraPtr algebra, std::vector<Mat> action);

    static Module zero(AlgebraPtr algebra);

    const Algebra& algebra() const { return *d_->algebra; }
    const AlgebraPtr& algebra_ptr() const { return d_->algebra; }
    std::size_t dim() const { return d_->dim; }
    bool is_zero() const { return d_->dim == 0; }
    const Mat& action(std::size_t basis_index) const { return d_->action.at(basis_index); }
    const std::vector<Mat>& actions() const { return d_->action; }
    /// Action of an arbitrary algebra element.
    Mat act(const Vec& x) const;

    /// dim e_i M for every primitive idempotent.
    const std::vector<std::size_t>& peirce() const { return d_->peirce; }
    /// Columns form a basis of e_i M.
    const Mat& peirce_basis(std::size_t i) const { return d_->peirce_basis.at(i); }

    /// Module axioms: action(x*y) = action(x) action(y) on basis pairs and the unit acts trivially.
    std::vector<std::string> check() const;

    /// Peirce-adapted coordinates used by the hom solver: basis change C
    /// (columns = concatenated peirce bases), its inverse, block offsets and
    /// the generator actions in adapted coordinates.
    struct Adapted {
        Mat basis;
        Mat inverse;
        std::vector<std::size_t> offsets;
        std::vector<Mat> generators;
    };
    const Adapted& adapted() const { return d_->adapted; }

private:
    struct Data {
        AlgebraPtr algebra;
        std::size_t dim = 0;
        std::vector<Mat> action;
        std::vector<std::size_t> peirce;
        std::vector<Mat> peirce_basis;
        Adapted adapted;
    };
    std::shared_ptr<const Data> d_;
};

struct ModuleMap {
    Module source;
    Module target;
    Mat matrix;  // target.dim() x source.dim()

    /// Intertwines every algebra basis action.
    bool is_homomorphism() const;
};

enum class StandardKind { simple, projective, injective };

Module regular_module(AlgebraPtr a);
/// Columns are the algebra elements forming the basis of A e_i.
Mat projective_basis(const Algebra& a, std::size_t i);
Module projective(AlgebraPtr a, std::size_t i);
Module simple(AlgebraPtr a, std::size_t i);
Module injective(AlgebraPtr a, std::size_t i);
Module standard_module(AlgebraPtr a, StandardKind kind, std::size_t i);

/// Basis of Hom_A(m, n) as matrices (n.dim() x m.dim()).
std::vector<Mat> hom_basis(const Module& m, const Module& n);
std::vector<ModuleMap> hom_space(const Module& m, const Module& n);

Module direct_sum(const std::vector<Module>& parts);

struct Submodule {
    Module module;
    Mat inclusion;  // ambient.dim() x module.dim()
};
struct Quotient {
    Module module;
    Mat projection;  // module.dim() x ambient.dim()
    Mat section;     // ambient.dim() x module.dim(), a linear splitting of the projection
};

/// Columns of `basis` must be independent and span an invariant subspace.
Submodule submodule(const Module& m, const Mat& basis);
/// Smallest submodule containing the given vectors.
Submodule generated_submodule(const Module& m, const std::vector<Vec>& vectors);
Quotient quotient(const Module& m, const Mat& basis);

ModuleMap kernel_of(const ModuleMap& f);
ModuleMap image_of(const ModuleMap& f);
ModuleMap cokernel_of(const ModuleMap& f);

/// Basis of rad(A) * m.
Mat radical_submodule_basis(const Module& m);
/// Basis of {x in m : rad(A) x = 0}.
Mat socle_basis(const Module& m);
/// Multiplicity of each simple in top(m) = m / rad m.
std::vector<std::size_t> top_multiplicities(const Module& m);
std::vector<std::size_t> socle_multiplicities(const Module& m);

struct Cover {
    ModuleMap map;  // P -> M, surjective, kernel inside rad P
    std::vector<std::size_t> multiplicities;
};

Cover projective_cover(const Module& m);
/// Kernel of the projective cover.
Module syzygy(const Module& m);

/// Module over opposite(algebra) with transposed actions.
Module dual(const Module& m);
/// Same as dual, but over a caller-supplied opposite algebra.
Module dual(const Module& m, AlgebraPtr opposite_algebra);

struct IsoVerdict {
    enum class Kind { iso, not_iso, unknown };
    Kind kind = Kind::unknown;
    std::optional<Mat> certificate;  // n.dim() x m.dim()
    std::string witness;
    std::size_t attempts = 0;
};

inline constexpr std::size_t default_iso_attempts = 64;

/// Randomized isomorphism search with certificate. NotIso only from a
/// structural invariant; an exhausted search is Unknown.
IsoVerdict is_isomorphic(const Module& m, const Module& n, std::size_t attempts = default_iso_attempts,
                         std::uint64_t seed = 0);
bool verify_isomorphism(const Module& m, const Module& n, const Mat& f);

/// Deterministic invariants compared before any randomized search.
struct ModuleInvariants {
    std::size_t dim = 0;
    std::vector<std::size_t> peirce;
    std::vector<std::size_t> top;
    std::vector<std::size_t> socle;
    std::vector<std::size_t> radical_layers;

    friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
    std::string to_string() const;
};
ModuleInvariants module_invariants(const Module& m);

/// m with every indecomposable projective direct summand split off.
struct ProjectiveSplit {
    Module rest;
    Mat rest_inclusion;                      // m.dim() x rest.dim()
    std::vector<std::size_t> multiplicities;  // number of P(i) summands removed
};
ProjectiveSplit split_projective_summands(const Module& m);
bool is_projective(const Module& m);

/// Random finite-dimensional module: a quotient of a sum of one or two
/// indecomposable projectives by a submodule generated by random radical
/// vectors. Deterministic in the seed.
Module random_module(AlgebraPtr a, std::uint64_t seed);

/// Checks 0 -> A -f-> B -g-> C -> 0 for exactness: both maps are
/// homomorphisms, f injective, g surjective, g f = 0 and rank f = nullity g.
bool is_short_exact(const ModuleMap& f, const ModuleMap& g, std::string* why = nullptr);

}  // namespace singcat
