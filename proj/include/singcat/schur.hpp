// Schur functor M -> eM, idempotent classification and equivalence reports.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singcat/triangular.hpp"

namespace singcat {

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

/// eM as a module over the corner eAe.
struct SchurImage {
    Module module;
    Mat inclusion;  // m.dim() x module.dim(), columns span eM
};
SchurImage schur_apply(const Corner& c, const Idempotent& e, const Module& m);
Module schur_apply(const Algebra& a, const Idempotent& e, const Module& m);
/// Restriction of f to eM -> eN.
ModuleMap schur_apply(const Corner& c, const Idempotent& e, const ModuleMap& f);

/// eM = 0, cross-checked against (1-e)M = M.
bool in_kernel(const Algebra& a, const Idempotent& e, const Module& m);

struct SimpleEvidence {
    std::size_t vertex = 0;
    DimResult pd;
};

struct IdempotentClass {
    Tri regular = Tri::unknown;
    std::optional<std::size_t> regular_witness;  // simple with certified infinite pd
    std::vector<SimpleEvidence> regular_evidence;
    Tri singularly_complete = Tri::unknown;
    std::optional<std::size_t> complete_witness;
    std::vector<SimpleEvidence> complete_evidence;
};

/// regular(e) from the simples on supp(e); singularly complete = regular(1 - e).
IdempotentClass classify_idempotent(const AlgebraPtr& a, const Idempotent& e, const SearchOptions& opt = {});

struct HypothesisItem {
    std::string name;
    Tri status = Tri::unknown;
    std::string evidence;
};

/// Invariants of an algebra that is expected to carry the singularity category.
struct CornerInvariants {
    std::string name;
    std::size_t dim = 0;
    std::size_t simples = 0;
    bool semisimple = false;
    GorensteinVerdict gorenstein;
    std::vector<std::optional<std::size_t>> omega_periods;  // per simple
    std::vector<std::size_t> stable_end_dims;               // per simple
};
CornerInvariants corner_invariants(const AlgebraPtr& c, const SearchOptions& opt = {});

struct EquivalenceReport {
    enum class Status { established, inconclusive };
    std::string tag;
    Status status = Status::inconclusive;
    std::vector<HypothesisItem> hypotheses;
    std::string conclusion;
    std::vector<std::string> decorations;
    std::string failing;  // first hypothesis that is not a verified yes
    std::string scope;
    std::optional<CornerInvariants> target;
    AlgebraPtr target_algebra;

    bool established() const { return status == Status::established; }
};

/// Hypotheses: e singularly complete, eA of finite projective dimension over eAe.
EquivalenceReport theorem21_report(const AlgebraPtr& a, const Idempotent& e, const SearchOptions& opt = {});
/// Upper: r of finite global dimension. Lower: r regular, s Gorenstein, and
/// the bimodule of finite projective dimension over s. Conclusion D_sg(T) ~ D_sg(s).
EquivalenceReport theorem41_report(const TriangularData& t, const SearchOptions& opt = {});

/// Maximum projective dimension over the simples (tri-state).
struct GlobalDim {
    Tri finite = Tri::unknown;
    std::size_t value = 0;
    std::optional<std::size_t> witness;  // simple with infinite pd
    std::vector<DimResult> simples;
};
GlobalDim global_dimension(const AlgebraPtr& a, const SearchOptions& opt = {});

}  // namespace singcat
