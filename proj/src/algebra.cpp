#include <algorithm>
#include <functional>
#include <sstream>

#include "singcat/algebra.hpp"

namespace singcat {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::path_algebra:
        return "path-algebra";
    case Provenance::corner:
        return "corner";
    case Provenance::triangular:
        return "triangular";
    case Provenance::opposite:
        return "opposite";
    case Provenance::custom:
        return "custom";
    }
    return "custom";
}

Algebra::Algebra(AlgebraData data) : d_(std::move(data))
{
    const std::size_t n = d_.labels.size();
    if (d_.left_mult.size() != n)
        throw InputError("algebra '" + d_.name + "': one multiplication matrix per basis element required");
    for (const auto& m : d_.left_mult)
        if (m.rows() != n || m.cols() != n || !(m.field() == d_.field))
            throw InputError("algebra '" + d_.name + "': multiplication matrix has the wrong shape or field");
    if (d_.prims.empty())
        throw InputError("algebra '" + d_.name + "': empty list of primitive idempotents");
    if (d_.prim_names.size() != d_.prims.size()) {
        d_.prim_names.clear();
        for (std::size_t i = 0; i < d_.prims.size(); ++i)
            d_.prim_names.push_back(std::to_string(i + 1));
    }
    for (const auto& v : d_.prims)
        if (v.size() != n)
            throw InputError("algebra '" + d_.name + "': idempotent vector has the wrong length");
    for (const auto& v : d_.radical)
        if (v.size() != n)
            throw InputError("algebra '" + d_.name + "': radical vector has the wrong length");

    unit_ = zero_vec(d_.field, n);
    for (const auto& e : d_.prims)
        unit_ = add(unit_, e);

    basic_ = d_.prims.size() + d_.radical.size() == n;
    const Mat rad2 = product_span(*this, d_.radical, d_.radical);
    Mat span = rad2;
    for (const auto& r : d_.radical) {
        const Mat col = Mat::from_columns(d_.field, n, {r});
        const Mat parts[] = {span, col};
        Mat bigger = hstack(d_.field, n, parts);
        if (rank(bigger) > span.cols()) {
            rad_generators_.push_back(r);
            span = std::move(bigger);
        }
    }
}

Vec Algebra::mult(const Vec& x, const Vec& y) const
{
    return left_mult_by(x).apply(y);
}

Mat Algebra::left_mult_by(const Vec& x) const
{
    const std::size_t n = dim();
    if (x.size() != n)
        throw Error("element has the wrong length");
    Mat out(d_.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero())
            out = out + x[i] * d_.left_mult[i];
    return out;
}

Mat Algebra::right_mult_by(const Vec& x) const
{
    const std::size_t n = dim();
    Mat out(d_.field, n, n);
    for (std::size_t j = 0; j < n; ++j)
        out.set_column(j, d_.left_mult[j].apply(x));
    return out;
}

std::size_t Algebra::prim_index(const std::string& name) const
{
    for (std::size_t i = 0; i < d_.prim_names.size(); ++i)
        if (d_.prim_names[i] == name)
            return i;
    // accept 1-based positions as a fallback
    try {
        std::size_t pos = 0;
        const unsigned long k = std::stoul(name, &pos);
        if (pos == name.size() && k >= 1 && k <= d_.prims.size())
            return k - 1;
    } catch (const std::exception&) {
    }
    throw InputError("algebra '" + d_.name + "' has no primitive idempotent named '" + name + "'");
}

bool same_structure(const Algebra& a, const Algebra& b)
{
    if (&a == &b)
        return true;
    return a.field() == b.field() && a.dim() == b.dim() && a.left_mults() == b.left_mults() &&
           a.prims() == b.prims();
}

void require_same_algebra(const Algebra& a, const Algebra& b, const char* where)
{
    if (!same_structure(a, b))
        throw InputError(std::string(where) + ": modules live over different algebras ('" + a.name() + "' vs '" +
                         b.name() + "')");
}

Mat product_span(const Algebra& a, const std::vector<Vec>& xs, const std::vector<Vec>& ys)
{
    std::vector<Vec> prods;
    for (const auto& x : xs) {
        const Mat lx = a.left_mult_by(x);
        for (const auto& y : ys) {
            Vec p = lx.apply(y);
            if (!is_zero(p))
                prods.push_back(std::move(p));
        }
    }
    if (prods.empty())
        return Mat(a.field(), a.dim(), 0);
    return column_space(Mat::from_columns(a.field(), a.dim(), prods));
}

AlgebraPtr opposite(const Algebra& a)
{
    AlgebraData d;
    d.field = a.field();
    const std::string& nm = a.name();
    if (nm.size() > 3 && nm.ends_with("^op"))
        d.name = nm.substr(0, nm.size() - 3);
    else
        d.name = nm + "^op";
    d.labels = a.labels();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Mat r(a.field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            r.set_column(j, a.left_mult(j).column(i));
        d.left_mult.push_back(std::move(r));
    }
    d.prims = a.prims();
    d.prim_names = a.prim_names();
    d.radical = a.radical();
    d.provenance = a.provenance() == Provenance::opposite ? Provenance::custom : Provenance::opposite;
    return Algebra::make(std::move(d));
}

Idempotent Idempotent::of(const Algebra& a, std::vector<std::size_t> support)
{
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    Idempotent e;
    e.element = zero_vec(a.field(), a.dim());
    for (auto i : support) {
        if (i >= a.num_prims())
            throw InputError("idempotent index out of range");
        e.element = add(e.element, a.prims()[i]);
    }
    e.support = std::move(support);
    return e;
}

Idempotent Idempotent::from_names(const Algebra& a, const std::vector<std::string>& names)
{
    std::vector<std::size_t> idx;
    for (const auto& n : names)
        idx.push_back(a.prim_index(n));
    return of(a, std::move(idx));
}

Idempotent Idempotent::complement(const Algebra& a) const
{
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < a.num_prims(); ++i)
        if (!contains(i))
            rest.push_back(i);
    return of(a, std::move(rest));
}

bool Idempotent::contains(std::size_t i) const
{
    return std::binary_search(support.begin(), support.end(), i);
}

Corner corner(const Algebra& a, const Idempotent& e)
{
    if (e.support.empty())
        throw InputError("corner algebra of the zero idempotent is the zero algebra");
    const Field f = a.field();
    const std::size_t n = a.dim();
    const Mat proj = a.left_mult_by(e.element) * a.right_mult_by(e.element);
    const auto rr = rref(proj);
    const Mat emb = proj.select_columns(rr.pivots);
    const std::size_t m = emb.cols();

    auto coords = [&](const std::vector<Vec>& vs) {
        if (vs.empty())
            return std::vector<Vec>{};
        auto x = solve(emb, Mat::from_columns(f, n, vs));
        if (!x)
            throw ConsistencyError("element outside the corner e A e");
        return x->columns();
    };

    AlgebraData d;
    d.field = f;
    std::string sup;
    for (auto i : e.support)
        sup += (sup.empty() ? "" : ",") + a.prim_names()[i];
    d.name = "e{" + sup + "}" + a.name() + "e{" + sup + "}";
    for (std::size_t k = 0; k < m; ++k) {
        const Vec col = emb.column(k);
        std::string label = "c" + std::to_string(k);
        for (std::size_t i = 0; i < n; ++i)
            if (col == a.basis_vec(i))
                label = a.labels()[i];
        d.labels.push_back(label);
    }
    const auto basis = emb.columns();
    for (std::size_t k = 0; k < m; ++k) {
        const Mat lk = a.left_mult_by(basis[k]);
        auto prod = solve(emb, lk * emb);
        if (!prod)
            throw ConsistencyError("corner is not closed under multiplication");
        d.left_mult.push_back(*prod);
    }
    std::vector<Vec> ps;
    for (auto i : e.support) {
        ps.push_back(a.prims()[i]);
        d.prim_names.push_back(a.prim_names()[i]);
    }
    d.prims = coords(ps);
    const Mat erad = [&] {
        std::vector<Vec> v;
        for (const auto& r : a.radical()) {
            Vec x = a.mult(a.mult(e.element, r), e.element);
            if (!is_zero(x))
                v.push_back(std::move(x));
        }
        if (v.empty())
            return Mat(f, n, 0);
        return column_space(Mat::from_columns(f, n, v));
    }();
    d.radical = coords(erad.columns());
    d.provenance = Provenance::corner;
    return Corner{Algebra::make(std::move(d)), emb};
}

bool AlgebraDiagnostics::all_passed() const
{
    return std::all_of(items.begin(), items.end(), [](const Diagnostic& d) { return d.passed; });
}

AlgebraDiagnostics check_algebra(const Algebra& a)
{
    AlgebraDiagnostics out;
    const Field f = a.field();
    const std::size_t n = a.dim();
    auto add_item = [&](std::string name, bool ok, std::string detail) {
        out.items.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                const Vec prod = a.left_mult(i).column(j);
                if (!(a.left_mult_by(prod) == a.left_mult(i) * a.left_mult(j))) {
                    ok = false;
                    detail = "(" + a.labels()[i] + "*" + a.labels()[j] + ")*x != " + a.labels()[i] + "*(" +
                             a.labels()[j] + "*x)";
                }
            }
        add_item("associativity", ok, ok ? "all basis triples" : detail);
    }
    {
        const bool ok = a.left_mult_by(a.unit()).is_identity() && a.right_mult_by(a.unit()).is_identity();
        add_item("unit", ok, ok ? "sum of primitive idempotents is a two-sided unit" : "sum of idempotents is not a unit");
    }
    {
        bool ok = true;
        std::string detail = "orthogonal idempotents";
        const auto& ps = a.prims();
        for (std::size_t i = 0; i < ps.size() && ok; ++i) {
            if (is_zero(ps[i])) {
                ok = false;
                detail = "idempotent " + a.prim_names()[i] + " is zero";
            }
            for (std::size_t j = 0; j < ps.size() && ok; ++j) {
                const Vec prod = a.mult(ps[i], ps[j]);
                const Vec expect = i == j ? ps[i] : zero_vec(f, n);
                if (!(prod == expect)) {
                    ok = false;
                    detail = "e_" + a.prim_names()[i] + " * e_" + a.prim_names()[j] + " is wrong";
                }
            }
        }
        add_item("idempotents", ok, detail);
    }
    const Mat rad = a.radical().empty() ? Mat(f, n, 0) : Mat::from_columns(f, n, a.radical());
    {
        bool ok = rank(rad) == rad.cols();
        std::string detail = ok ? "radical basis is independent" : "radical vectors are dependent";
        for (std::size_t i = 0; i < n && ok; ++i)
            for (const auto& r : a.radical()) {
                const Vec left = a.left_mult(i).apply(r);
                const Vec right = a.right_mult_by(a.basis_vec(i)).apply(r);
                if (!solve(rad, Mat::from_columns(f, n, {left, right}))) {
                    ok = false;
                    detail = "radical is not a two-sided ideal (multiplication by " + a.labels()[i] + ")";
                    break;
                }
            }
        add_item("radical ideal", ok, detail);
    }
    {
        std::vector<Vec> power = a.radical();
        std::size_t k = 1;
        while (!power.empty() && k <= n + 1) {
            power = product_span(a, power, a.radical()).columns();
            ++k;
        }
        const bool ok = power.empty();
        out.nilpotency_index = ok ? (a.radical().empty() ? 1 : k) : 0;
        add_item("radical nilpotent", ok, ok ? "rad^" + std::to_string(out.nilpotency_index) + " = 0" : "rad is not nilpotent");
    }
    {
        std::vector<Vec> cols = a.radical();
        cols.insert(cols.end(), a.prims().begin(), a.prims().end());
        const bool ok = a.dim() == a.radical().size() + a.num_prims() &&
                        rank(Mat::from_columns(f, n, cols)) == n;
        add_item("semisimple quotient", ok,
                 ok ? "A/rad is spanned by the images of the primitive idempotents"
                    : "A/rad is not spanned by the primitive idempotents (not certified semisimple)");
    }
    return out;
}

bool verify_algebra_isomorphism(const Algebra& a, const Algebra& b, const Mat& phi)
{
    if (!(a.field() == b.field()) || a.dim() != b.dim())
        return false;
    if (phi.rows() != b.dim() || phi.cols() != a.dim() || rank(phi) != a.dim())
        return false;
    if (!(phi.apply(a.unit()) == b.unit()))
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Mat lhs = phi * a.left_mult(i);
        const Mat rhs = b.left_mult_by(phi.column(i)) * phi;
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

std::optional<Mat> find_basis_alignment(const Algebra& a, const Algebra& b)
{
    if (!(a.field() == b.field()) || a.dim() != b.dim())
        return std::nullopt;
    const std::size_t n = a.dim();
    const Field f = a.field();

    auto signature = [](const Algebra& alg, std::size_t i) {
        const Vec sq = alg.left_mult(i).column(i);
        std::ostringstream os;
        os << rank(alg.left_mult(i)) << "/" << rank(alg.right_mult_by(alg.basis_vec(i))) << "/"
           << (sq == alg.basis_vec(i)) << "/" << is_zero(sq);
        return os.str();
    };
    std::vector<std::string> sa(n), sb(n);
    for (std::size_t i = 0; i < n; ++i) {
        sa[i] = signature(a, i);
        sb[i] = signature(b, i);
    }

    std::vector<std::size_t> sigma(n);
    std::vector<bool> used(n, false);
    std::optional<Mat> found;

    auto consistent = [&](std::size_t t) {
        for (std::size_t i = 0; i <= t; ++i)
            for (std::size_t j = 0; j <= t; ++j) {
                if (i != t && j != t)
                    continue;
                for (std::size_t k = 0; k <= t; ++k)
                    if (!(a.left_mult(i)(k, j) == b.left_mult(sigma[i])(sigma[k], sigma[j])))
                        return false;
            }
        return true;
    };

    std::function<void(std::size_t)> search = [&](std::size_t t) {
        if (found)
            return;
        if (t == n) {
            Mat phi(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                phi(sigma[i], i) = Scalar(f, 1);
            if (verify_algebra_isomorphism(a, b, phi))
                found = phi;
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || sa[t] != sb[c])
                continue;
            sigma[t] = c;
            if (!consistent(t))
                continue;
            used[c] = true;
            search(t + 1);
            used[c] = false;
            if (found)
                return;
        }
    };
    search(0);
    return found;
}

}  // namespace singcat
