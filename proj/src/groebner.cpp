#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "singcat/algebra.hpp"

namespace singcat {

std::size_t Quiver::vertex_index(const std::string& name) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name)
            return i;
    throw InputError("unknown vertex '" + name + "'");
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const
{
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name)
            return i;
    return std::nullopt;
}

void Quiver::validate() const
{
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second)
            throw InputError("duplicate vertex name '" + v + "'");
    for (const auto& a : arrows) {
        if (!seen.insert(a.name).second)
            throw InputError("duplicate name '" + a.name + "'");
        if (a.source >= vertices.size() || a.target >= vertices.size())
            throw InputError("arrow '" + a.name + "' has an undeclared endpoint");
    }
}

std::string word_to_string(const Quiver& q, const PathWord& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += "*";
        s += q.arrows.at(w[i]).name;
    }
    return s;
}

namespace {

std::string trim(std::string s)
{
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

bool looks_numeric(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
            return false;
    return true;
}

std::size_t word_source(const Quiver& q, const PathWord& w)
{
    return q.arrows.at(w.back()).source;
}

std::size_t word_target(const Quiver& q, const PathWord& w)
{
    return q.arrows.at(w.front()).target;
}

PathWord concat(const PathWord& a, const PathWord& b)
{
    PathWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

/// Position of the first occurrence of `needle` in `hay`, if any.
std::optional<std::size_t> find_subword(const PathWord& hay, const PathWord& needle)
{
    if (needle.size() > hay.size())
        return std::nullopt;
    auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
    if (it == hay.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - hay.begin());
}

}  // namespace

Relation parse_relation(const Quiver& q, Field f, const std::string& text)
{
    Relation rel;
    std::string body = trim(text);
    if (body.empty())
        throw InputError("empty relation");
    std::size_t pos = 0;
    while (pos < body.size()) {
        int sign = 1;
        while (pos < body.size() && (body[pos] == '+' || body[pos] == '-' || std::isspace(static_cast<unsigned char>(body[pos])))) {
            if (body[pos] == '-')
                sign = -sign;
            ++pos;
        }
        std::size_t end = pos;
        while (end < body.size() && body[end] != '+' && body[end] != '-')
            ++end;
        std::string term = trim(body.substr(pos, end - pos));
        if (term.empty())
            throw InputError("malformed relation '" + text + "'");
        std::vector<std::string> factors;
        std::size_t start = 0;
        while (true) {
            std::size_t star = term.find('*', start);
            factors.push_back(trim(term.substr(start, star == std::string::npos ? std::string::npos : star - start)));
            if (star == std::string::npos)
                break;
            start = star + 1;
        }
        Scalar coeff(f, sign);
        std::size_t k = 0;
        if (looks_numeric(factors[0])) {
            coeff *= Scalar::parse(f, factors[0]);
            k = 1;
        }
        PathWord w;
        for (; k < factors.size(); ++k) {
            auto idx = q.arrow_index(factors[k]);
            if (!idx)
                throw InputError("unknown arrow '" + factors[k] + "' in relation '" + text + "' (column " +
                                 std::to_string(body.find(factors[k], pos) + 1) + ")");
            w.push_back(static_cast<std::uint32_t>(*idx));
        }
        if (w.empty())
            throw InputError("relation term without a path in '" + text + "'");
        rel.terms.emplace_back(std::move(w), coeff);
        pos = end;
    }
    return rel;
}

GroebnerSystem::GroebnerSystem(const Quiver& q, const std::vector<Relation>& rels, Field f, std::size_t degree_bound)
    : quiver_(q), field_(f), bound_(degree_bound)
{
    auto make_monic = [](Poly& p) {
        const Scalar inv = p.rbegin()->second.inverse();
        for (auto& [w, c] : p)
            c *= inv;
    };

    std::deque<Poly> pending;
    for (const auto& r : rels) {
        Poly p;
        for (const auto& [w, c] : r.terms) {
            auto [it, inserted] = p.emplace(w, c);
            if (!inserted)
                it->second += c;
        }
        std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
        if (!p.empty())
            pending.push_back(std::move(p));
    }

    auto leading = [](const Poly& p) -> const PathWord& { return p.rbegin()->first; };

    while (!pending.empty()) {
        Poly f0 = reduce(std::move(pending.front()));
        pending.pop_front();
        if (f0.empty())
            continue;
        make_monic(f0);
        const PathWord lw = leading(f0);
        if (lw.size() > bound_)
            continue;
        // Rules whose leading word now reduces are re-queued.
        for (std::size_t i = 0; i < rules_.size();) {
            if (find_subword(leading(rules_[i]), lw)) {
                pending.push_back(std::move(rules_[i]));
                rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        rules_.push_back(f0);
        const Poly& fnew = rules_.back();
        for (const auto& g : rules_) {
            for (int order = 0; order < 2; ++order) {
                const Poly& a = order == 0 ? fnew : g;
                const Poly& b = order == 0 ? g : fnew;
                const PathWord& la = leading(a);
                const PathWord& lb = leading(b);
                // la = u v, lb = v w with u, v, w nonempty
                for (std::size_t vlen = 1; vlen < la.size() && vlen < lb.size(); ++vlen) {
                    if (!std::equal(la.end() - static_cast<std::ptrdiff_t>(vlen), la.end(), lb.begin()))
                        continue;
                    if (la.size() + lb.size() - vlen > bound_)
                        continue;
                    PathWord u(la.begin(), la.end() - static_cast<std::ptrdiff_t>(vlen));
                    PathWord w(lb.begin() + static_cast<std::ptrdiff_t>(vlen), lb.end());
                    Poly s;
                    for (const auto& [word, c] : a)
                        s.emplace(concat(word, w), c);
                    for (const auto& [word, c] : b) {
                        auto key = concat(u, word);
                        auto it = s.find(key);
                        if (it == s.end())
                            s.emplace(key, -c);
                        else
                            it->second -= c;
                    }
                    std::erase_if(s, [](const auto& kv) { return kv.second.is_zero(); });
                    if (!s.empty())
                        pending.push_back(std::move(s));
                }
                if (&a == &b)
                    break;
            }
        }
    }
}

GroebnerSystem::Poly GroebnerSystem::reduce(Poly p, const std::vector<std::size_t>& rule_order) const
{
    std::vector<std::size_t> order = rule_order;
    if (order.empty())
        for (std::size_t i = 0; i < rules_.size(); ++i)
            order.push_back(i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            const PathWord word = it->first;
            for (std::size_t ri : order) {
                const Poly& rule = rules_.at(ri);
                const PathWord& lw = rule.rbegin()->first;
                auto at = find_subword(word, lw);
                if (!at)
                    continue;
                const Scalar c = it->second;
                PathWord u(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(*at));
                PathWord w(word.begin() + static_cast<std::ptrdiff_t>(*at + lw.size()), word.end());
                p.erase(word);
                for (const auto& [rw, rc] : rule) {
                    if (rw == lw)
                        continue;
                    auto key = concat(concat(u, rw), w);
                    auto [pos, inserted] = p.emplace(key, -(c * rc));
                    if (!inserted) {
                        pos->second -= c * rc;
                        if (pos->second.is_zero())
                            p.erase(pos);
                    }
                }
                changed = true;
                break;
            }
            if (changed)
                break;
        }
    }
    return p;
}

bool GroebnerSystem::composable(const PathWord& w) const
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (quiver_.arrows.at(w[i]).source != quiver_.arrows.at(w[i + 1]).target)
            return false;
    return true;
}

std::vector<PathWord> GroebnerSystem::normal_paths() const
{
    auto is_prefix_reducible = [&](const PathWord& w) {
        for (const auto& r : rules_) {
            const PathWord& lw = r.rbegin()->first;
            if (lw.size() <= w.size() && std::equal(lw.begin(), lw.end(), w.begin()))
                return true;
        }
        return false;
    };
    std::vector<PathWord> out;
    std::vector<PathWord> layer;
    for (std::uint32_t a = 0; a < quiver_.arrows.size(); ++a)
        layer.push_back({a});
    std::size_t len = 1;
    while (!layer.empty()) {
        if (len >= bound_)
            throw InputError("algebra not certified finite-dimensional: a normal path of length " +
                             std::to_string(len) + " survives the degree bound " + std::to_string(bound_) +
                             " (e.g. " + word_to_string(quiver_, layer.front()) + ")");
        std::sort(layer.begin(), layer.end(), DegLexLess{});
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<PathWord> next;
        for (const auto& w : layer)
            for (std::uint32_t a = 0; a < quiver_.arrows.size(); ++a) {
                if (quiver_.arrows[a].source != word_target(quiver_, w))
                    continue;
                PathWord nw;
                nw.reserve(w.size() + 1);
                nw.push_back(a);
                nw.insert(nw.end(), w.begin(), w.end());
                if (!is_prefix_reducible(nw))
                    next.push_back(std::move(nw));
            }
        layer = std::move(next);
        ++len;
    }
    return out;
}

AlgebraPtr build_path_algebra(const Quiver& q, const std::vector<Relation>& rels, Field f, std::size_t degree_bound,
                              std::string name)
{
    q.validate();
    for (const auto& r : rels) {
        if (r.terms.empty())
            throw InputError("empty relation");
        std::optional<std::pair<std::size_t, std::size_t>> ends;
        for (const auto& [w, c] : r.terms) {
            if (w.size() < 2)
                throw InputError("non-admissible relation: term '" + word_to_string(q, w) + "' has length < 2");
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (q.arrows.at(w[i]).source != q.arrows.at(w[i + 1]).target)
                    throw InputError("relation term '" + word_to_string(q, w) + "' is not a path");
            std::pair<std::size_t, std::size_t> e{word_source(q, w), word_target(q, w)};
            if (ends && *ends != e)
                throw InputError("relation terms are not parallel paths");
            ends = e;
        }
    }

    GroebnerSystem gb(q, rels, f, degree_bound);
    const auto paths = gb.normal_paths();
    const std::size_t nv = q.vertices.size();
    const std::size_t n = nv + paths.size();

    std::map<PathWord, std::size_t, DegLexLess> index;
    for (std::size_t i = 0; i < paths.size(); ++i)
        index.emplace(paths[i], nv + i);

    AlgebraData d;
    d.field = f;
    d.name = std::move(name);
    d.provenance = Provenance::path_algebra;
    PathPresentation pres;
    pres.quiver = q;
    pres.relations = rels;
    for (std::size_t v = 0; v < nv; ++v) {
        d.labels.push_back("e" + q.vertices[v]);
        pres.words.push_back({});
        pres.word_vertex.push_back(v);
    }
    for (const auto& p : paths) {
        d.labels.push_back(word_to_string(q, p));
        pres.words.push_back(p);
        pres.word_vertex.push_back(word_target(q, p));
    }

    // source / target vertex of every basis element
    std::vector<std::size_t> src(n), tgt(n);
    for (std::size_t v = 0; v < nv; ++v)
        src[v] = tgt[v] = v;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        src[nv + i] = word_source(q, paths[i]);
        tgt[nv + i] = word_target(q, paths[i]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        Mat L(f, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (src[i] != tgt[j])
                continue;
            if (i < nv) {
                L(j, j) = Scalar(f, 1);
                continue;
            }
            if (j < nv) {
                L(i, j) = Scalar(f, 1);
                continue;
            }
            GroebnerSystem::Poly prod;
            prod.emplace(concat(paths[i - nv], paths[j - nv]), Scalar(f, 1));
            for (const auto& [w, c] : gb.reduce(std::move(prod))) {
                auto it = index.find(w);
                if (it == index.end())
                    throw ConsistencyError("normal form outside the basis: " + word_to_string(q, w));
                L(it->second, j) += c;
            }
        }
        d.left_mult.push_back(std::move(L));
    }
    for (std::size_t v = 0; v < nv; ++v) {
        d.prims.push_back(unit_vec(f, n, v));
        d.prim_names.push_back(q.vertices[v]);
    }
    for (std::size_t i = nv; i < n; ++i)
        d.radical.push_back(unit_vec(f, n, i));
    d.presentation = std::move(pres);
    return Algebra::make(std::move(d));
}

}  // namespace singcat
