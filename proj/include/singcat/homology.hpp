// Minimal projective resolutions and tri-state homological dimensions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singcat/module.hpp"

namespace singcat {

inline constexpr std::size_t default_bound = 20;

/// Knobs shared by every bounded search.
struct SearchOptions {
    std::size_t bound = default_bound;
    std::uint64_t seed = 0;
    std::size_t attempts = default_iso_attempts;
};

/// Prefix of the minimal projective resolution of a module.
///
/// syzygies[0] is the module itself, syzygies[k] = Omega^k. covers[k] maps
/// onto syzygies[k]; its kernel is syzygies[k+1]. Every consecutive pair is
/// verified exact when the resolution is built.
struct Resolution {
    Module module;
    std::vector<Module> syzygies;
    std::vector<Cover> covers;
    std::vector<ModuleMap> inclusions;  // syzygies[k+1] -> domain of covers[k]
    std::size_t bound = 0;
    bool terminated = false;  // a zero syzygy was reached

    /// Number of projective terms needed so far (the length when terminated).
    std::size_t length() const;
};

Resolution resolve(const Module& m, std::size_t bound);

/// Finite(n): Omega^n is projective and Omega^{n-1} is not (Finite(0) for
/// projective or zero modules). InfiniteCertified(j, k): the non-projective
/// parts of Omega^j and Omega^k are isomorphic with j < k and nonzero, which
/// forces every later syzygy to be nonzero. Unknown(bound): no decision.
struct DimResult {
    enum class Kind { finite, infinite_certified, unknown };
    Kind kind = Kind::unknown;
    std::size_t value = 0;  // n for finite, the bound for unknown
    std::size_t j = 0;
    std::size_t k = 0;
    std::optional<Module> from;  // non-projective part of Omega^j
    std::optional<Module> to;    // non-projective part of Omega^k
    std::optional<Mat> certificate;  // iso from -> to

    static DimResult finite(std::size_t n);
    static DimResult unknown(std::size_t bound);

    bool is_finite() const { return kind == Kind::finite; }
    bool is_infinite() const { return kind == Kind::infinite_certified; }
    bool is_unknown() const { return kind == Kind::unknown; }
    /// Re-checks the periodicity certificate (always true for the other kinds).
    bool verify() const;
    std::string to_string() const;
};

DimResult proj_dim(const Module& m, const SearchOptions& opt = {});
/// Computed as proj_dim of the dual over the opposite algebra.
DimResult inj_dim(const Module& m, const SearchOptions& opt = {});

/// Non-projective part of each reduced syzygy: entry k is np(Omega^k m).
/// Stops after `count` entries or at the first zero entry.
std::vector<Module> reduced_syzygies(const Module& m, std::size_t count);

/// dim Ext^i(m, n); nullopt when i exceeds the bound.
std::optional<std::size_t> ext_dim(const Module& m, const Module& n, std::size_t i,
                                   std::size_t bound = default_bound);

struct GorensteinVerdict {
    enum class Kind { gorenstein, not_gorenstein, unknown };
    Kind kind = Kind::unknown;
    std::size_t gdim = 0;
    DimResult left;   // inj.dim of A as a left module
    DimResult right;  // inj.dim of A as a right module
    std::vector<DimResult> left_parts;   // inj.dim of each A e_i
    std::vector<DimResult> right_parts;  // proj.dim of each injective I(i)
    std::string witness;

    std::string to_string() const;
};

/// Throws ConsistencyError when both sides are finite and differ.
GorensteinVerdict gorenstein(const AlgebraPtr& a, const SearchOptions& opt = {});

struct McmVerdict {
    enum class Kind { yes, no, unknown };
    Kind kind = Kind::unknown;
    bool certified = false;   // range bounded by a finite Gorenstein dimension
    std::size_t checked_up_to = 0;
    std::size_t witness = 0;  // i with Ext^i(M, A) != 0
};

McmVerdict is_mcm(const Module& m, const SearchOptions& opt = {});
/// Same, reusing a verdict already computed for the algebra.
McmVerdict is_mcm(const Module& m, const GorensteinVerdict& g, const SearchOptions& opt = {});

/// dim of Hom(m, n) modulo maps factoring through a projective.
std::size_t stable_hom_dim(const Module& m, const Module& n);

/// Span dimension of the given same-shape matrices.
std::size_t span_dim(Field f, const std::vector<Mat>& maps);

}  // namespace singcat
