// Finite-dimensional algebras with a chosen basis.
//
// An Algebra stores, for every basis element b_i, the matrix of left
// multiplication by b_i. It also carries a complete list of primitive
// orthogonal idempotents and a basis of its Jacobson radical. Both are
// known for path algebras (vertices, arrow ideal) and are propagated
// through corner, opposite and triangular constructions; singcat never
// computes them from scratch.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singcat/exactla.hpp"

namespace singcat {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(const std::string& name) const;
    std::optional<std::size_t> arrow_index(const std::string& name) const;
    /// Throws InputError on duplicate names or dangling endpoints.
    void validate() const;
};

/// A word of arrow indices as written. In "p*q" the factor q is traversed
/// first, so word[0] is the last arrow traversed.
using PathWord = std::vector<std::uint32_t>;

struct Relation {
    std::vector<std::pair<PathWord, Scalar>> terms;
};

/// Parses "a*a", "g*b - 2*a*g", "3/2*x*y + y*x" against a quiver.
Relation parse_relation(const Quiver& q, Field f, const std::string& text);
std::string word_to_string(const Quiver& q, const PathWord& w);

/// Path data retained for algebras built from a quiver: the word of every
/// basis element (empty word plus vertex for the trivial paths).
struct PathPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<PathWord> words;
    std::vector<std::size_t> word_vertex;  // only meaningful for empty words
};

enum class Provenance { path_algebra, corner, triangular, opposite, custom };
std::string to_string(Provenance p);

struct AlgebraData {
    Field field;
    std::string name;
    std::vector<std::string> labels;
    /// left_mult[i] is the matrix of x -> b_i * x.
    std::vector<Mat> left_mult;
    std::vector<Vec> prims;
    std::vector<std::string> prim_names;
    std::vector<Vec> radical;
    Provenance provenance = Provenance::custom;
    std::optional<PathPresentation> presentation;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    explicit Algebra(AlgebraData data);

    static AlgebraPtr make(AlgebraData data) { return std::make_shared<const Algebra>(std::move(data)); }

    Field field() const { return d_.field; }
    const std::string& name() const { return d_.name; }
    std::size_t dim() const { return d_.labels.size(); }
    const std::vector<std::string>& labels() const { return d_.labels; }
    const Mat& left_mult(std::size_t i) const { return d_.left_mult.at(i); }
    const std::vector<Mat>& left_mults() const { return d_.left_mult; }
    const std::vector<Vec>& prims() const { return d_.prims; }
    std::size_t num_prims() const { return d_.prims.size(); }
    const std::vector<std::string>& prim_names() const { return d_.prim_names; }
    const std::vector<Vec>& radical() const { return d_.radical; }
    Provenance provenance() const { return d_.provenance; }
    const std::optional<PathPresentation>& presentation() const { return d_.presentation; }
    const AlgebraData& data() const { return d_; }

    const Vec& unit() const { return unit_; }
    Vec basis_vec(std::size_t i) const { return unit_vec(d_.field, dim(), i); }
    Vec mult(const Vec& x, const Vec& y) const;
    /// Matrix of left multiplication by an arbitrary element.
    Mat left_mult_by(const Vec& x) const;
    Mat right_mult_by(const Vec& x) const;

    /// Radical elements whose classes span rad/rad^2. Together with the
    /// primitive idempotents they generate the algebra when it is basic.
    const std::vector<Vec>& radical_generators() const { return rad_generators_; }
    /// True when A = span(prims) + rad, i.e. every simple is one-dimensional.
    bool is_basic() const { return basic_; }

    std::size_t prim_index(const std::string& name) const;

private:
    AlgebraData d_;
    Vec unit_;
    std::vector<Vec> rad_generators_;
    bool basic_ = false;
};

/// Equal field, structure constants and primitive idempotents.
bool same_structure(const Algebra& a, const Algebra& b);
void require_same_algebra(const Algebra& a, const Algebra& b, const char* where);

/// Default bound on path length for Groebner completion.
inline constexpr std::size_t default_degree_bound = 32;

AlgebraPtr build_path_algebra(const Quiver& q, const std::vector<Relation>& rels, Field f,
                              std::size_t degree_bound = default_degree_bound, std::string name = "A");

AlgebraPtr opposite(const Algebra& a);

/// Sum of a subset of the primitive idempotents.
struct Idempotent {
    std::vector<std::size_t> support;
    Vec element;

    static Idempotent of(const Algebra& a, std::vector<std::size_t> support);
    static Idempotent from_names(const Algebra& a, const std::vector<std::string>& names);
    Idempotent complement(const Algebra& a) const;
    bool contains(std::size_t i) const;
};

struct Corner {
    AlgebraPtr algebra;
    /// Columns are the ambient coordinates of the corner basis elements.
    Mat embedding;
};

Corner corner(const Algebra& a, const Idempotent& e);

struct Diagnostic {
    std::string check;
    bool passed = false;
    std::string detail;
};

struct AlgebraDiagnostics {
    std::vector<Diagnostic> items;
    std::size_t nilpotency_index = 0;  // smallest k with rad^k = 0 (0 if not nilpotent)
    bool all_passed() const;
};

AlgebraDiagnostics check_algebra(const Algebra& a);

/// Looks for a permutation of basis elements that matches the structure
/// constants of `a` and `b` exactly and sends the unit to the unit. The
/// returned matrix (ambient coords of b as columns indexed by a's basis) is
/// verified to be an algebra isomorphism before it is returned.
std::optional<Mat> find_basis_alignment(const Algebra& a, const Algebra& b);
/// True when `phi` (dim b x dim a) is a unital, multiplicative linear bijection A -> B.
bool verify_algebra_isomorphism(const Algebra& a, const Algebra& b, const Mat& phi);

/// Linear span of all products x*y with x, y in the given lists.
Mat product_span(const Algebra& a, const std::vector<Vec>& xs, const std::vector<Vec>& ys);

/// Length-then-lexicographic order on words.
struct DegLexLess {
    bool operator()(const PathWord& a, const PathWord& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// Normal-form reduction engine exposed for confluence testing.
class GroebnerSystem {
public:
    GroebnerSystem(const Quiver& q, const std::vector<Relation>& rels, Field f, std::size_t degree_bound);

    using Poly = std::map<PathWord, Scalar, DegLexLess>;
    /// Reduces `p` to normal form applying rules in the given order (all rules when empty).
    Poly reduce(Poly p, const std::vector<std::size_t>& rule_order = {}) const;
    std::size_t num_rules() const { return rules_.size(); }
    /// Normal paths of length >= 1, ordered by length then lexicographically.
    std::vector<PathWord> normal_paths() const;
    bool composable(const PathWord& w) const;

private:
    Quiver quiver_;
    Field field_;
    std::size_t bound_;
    std::vector<Poly> rules_;
};

}  // namespace singcat
