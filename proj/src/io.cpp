#include <cctype>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "singcat/io.hpp"

namespace singcat {

namespace {

class TomlParser {
public:
    TomlParser(std::string_view text, std::string origin) : text_(text), origin_(std::move(origin)) {}

    json parse()
    {
        json root = json::object();
        json* section = &root;
        while (!at_end()) {
            skip_blank_and_comments();
            if (at_end())
                break;
            if (peek() == '[') {
                ++pos_;
                skip_spaces();
                const std::string name = parse_key();
                skip_spaces();
                expect(']');
                if (root.contains(name))
                    fail("duplicate section [" + name + "]");
                root[name] = json::object();
                section = &root[name];
                end_of_line();
                continue;
            }
            const std::string key = parse_key();
            skip_spaces();
            expect('=');
            skip_spaces();
            if (section->contains(key))
                fail("duplicate key '" + key + "'");
            (*section)[key] = parse_value();
            end_of_line();
        }
        return root;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_spaces()
    {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
            ++pos_;
    }

    void skip_comment()
    {
        if (peek() == '#')
            while (!at_end() && peek() != '\n')
                ++pos_;
    }

    void skip_blank_and_comments()
    {
        for (;;) {
            skip_spaces();
            skip_comment();
            if (peek() == '\n') {
                ++pos_;
                continue;
            }
            return;
        }
    }

    void end_of_line()
    {
        skip_spaces();
        skip_comment();
        if (at_end())
            return;
        if (peek() != '\n')
            fail("unexpected trailing characters");
        ++pos_;
    }

    std::string parse_key()
    {
        if (peek() == '"')
            return parse_string();
        std::string key;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
            key += text_[pos_++];
        if (key.empty())
            fail("expected a key");
        return key;
    }

    std::string parse_string()
    {
        expect('"');
        std::string out;
        while (!at_end() && peek() != '"') {
            char c = text_[pos_++];
            if (c == '\n')
                fail("unterminated string");
            if (c == '\\') {
                if (at_end())
                    fail("unterminated escape");
                const char e = text_[pos_++];
                switch (e) {
                case 'n':
                    c = '\n';
                    break;
                case 't':
                    c = '\t';
                    break;
                case '"':
                case '\\':
                    c = e;
                    break;
                default:
                    fail(std::string("unsupported escape \\") + e);
                }
            }
            out += c;
        }
        expect('"');
        return out;
    }

    json parse_value()
    {
        const char c = peek();
        if (c == '"')
            return parse_string();
        if (c == '[')
            return parse_array();
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            if (c == '-' || c == '+')
                num += text_[pos_++];
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_'))
                if (text_[pos_++] != '_')
                    num += text_[pos_ - 1];
            if (num.empty() || num == "-" || num == "+")
                fail("malformed integer");
            try {
                return std::stoll(num);
            } catch (const std::exception&) {
                fail("integer out of range");
            }
        }
        if (text_.substr(pos_, 4) == "true") {
            pos_ += 4;
            return true;
        }
        if (text_.substr(pos_, 5) == "false") {
            pos_ += 5;
            return false;
        }
        fail("unsupported value");
    }

    json parse_array()
    {
        expect('[');
        json arr = json::array();
        for (;;) {
            skip_blank_and_comments();
            if (peek() == ']') {
                ++pos_;
                return arr;
            }
            arr.push_back(parse_value());
            skip_blank_and_comments();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                return arr;
            }
            fail("expected ',' or ']' in array");
        }
    }

    std::string_view text_;
    std::string origin_;
    std::size_t pos_ = 0;
};

std::string as_name(const json& j, const std::string& origin, const std::string& what)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw InputError(origin + ": " + what + " must be a string or an integer");
}

const json& section(const json& spec, const std::string& name, const std::string& origin)
{
    if (!spec.contains(name) || !spec[name].is_object())
        throw InputError(origin + ": missing [" + name + "] section");
    return spec[name];
}

Scalar scalar_from_json(Field f, const json& j, const std::string& what)
{
    if (j.is_number_integer())
        return Scalar(f, mpq_class(std::to_string(j.get<long long>())));
    if (j.is_string())
        return Scalar::parse(f, j.get<std::string>());
    throw InputError(what + ": entries must be integers or \"num/den\" strings");
}

}  // namespace

json parse_toml_subset(std::string_view text, const std::string& origin)
{
    return TomlParser(text, origin).parse();
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + p.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

AlgebraPtr algebra_from_json(const json& spec, const std::string& default_name,
                             std::optional<std::uint64_t> field_override, const std::string& origin)
{
    std::uint64_t p = 0;
    if (spec.contains("field")) {
        const json& fs = section(spec, "field", origin);
        if (fs.contains("characteristic")) {
            if (!fs["characteristic"].is_number_integer() || fs["characteristic"].get<long long>() < 0)
                throw InputError(origin + ": characteristic must be a nonnegative integer");
            p = fs["characteristic"].get<std::uint64_t>();
        }
    }
    if (field_override)
        p = *field_override;
    const Field f = p == 0 ? Field::rationals() : Field::prime(p);

    const json& qs = section(spec, "quiver", origin);
    Quiver q;
    if (!qs.contains("vertices") || !qs["vertices"].is_array() || qs["vertices"].empty())
        throw InputError(origin + ": [quiver] needs a nonempty 'vertices' array");
    for (const auto& v : qs["vertices"])
        q.vertices.push_back(as_name(v, origin, "vertex name"));
    if (qs.contains("arrows")) {
        if (!qs["arrows"].is_array())
            throw InputError(origin + ": 'arrows' must be an array");
        for (const auto& a : qs["arrows"]) {
            if (!a.is_array() || a.size() != 3)
                throw InputError(origin + ": every arrow is [name, source, target]");
            Arrow arr;
            arr.name = as_name(a[0], origin, "arrow name");
            arr.source = q.vertex_index(as_name(a[1], origin, "arrow source"));
            arr.target = q.vertex_index(as_name(a[2], origin, "arrow target"));
            q.arrows.push_back(std::move(arr));
        }
    }
    q.validate();

    std::vector<Relation> rels;
    if (spec.contains("relations")) {
        const json& rs = section(spec, "relations", origin);
        if (rs.contains("relations")) {
            if (!rs["relations"].is_array())
                throw InputError(origin + ": 'relations' must be an array of strings");
            std::size_t k = 0;
            for (const auto& r : rs["relations"]) {
                ++k;
                if (!r.is_string())
                    throw InputError(origin + ": relation " + std::to_string(k) + " is not a string");
                try {
                    rels.push_back(parse_relation(q, f, r.get<std::string>()));
                } catch (const InputError& e) {
                    throw InputError(origin + ": relation " + std::to_string(k) + " \"" + r.get<std::string>() +
                                     "\": " + e.what());
                }
            }
        }
    }
    std::size_t bound = default_degree_bound;
    if (spec.contains("options")) {
        const json& os = section(spec, "options", origin);
        if (os.contains("degree_bound")) {
            if (!os["degree_bound"].is_number_integer() || os["degree_bound"].get<long long>() < 1)
                throw InputError(origin + ": degree_bound must be a positive integer");
            bound = os["degree_bound"].get<std::size_t>();
        }
    }
    std::string name = default_name;
    if (spec.contains("name"))
        name = as_name(spec["name"], origin, "name");
    try {
        return build_path_algebra(q, rels, f, bound, name);
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
}

LoadedAlgebra load_algebra(const std::filesystem::path& p, std::optional<std::uint64_t> field_override)
{
    const std::string text = read_file(p);
    const json spec = parse_toml_subset(text, p.string());
    LoadedAlgebra out;
    out.algebra = algebra_from_json(spec, p.stem().string(), field_override, p.string());
    out.file = {p.string(), sha256_hex(text)};
    return out;
}

namespace {

const PathPresentation& require_presentation(const Algebra& a, const std::string& what)
{
    if (!a.presentation())
        throw InputError(what + " needs an algebra given by a quiver with relations");
    return *a.presentation();
}

/// Action of every basis element from the action of the arrows.
std::vector<Mat> actions_from_arrows(const Algebra& a, const PathPresentation& pres, const std::vector<Mat>& vertex,
                                     const std::vector<Mat>& arrow, bool right)
{
    std::vector<Mat> out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const PathWord& w = pres.words[i];
        if (w.empty()) {
            out.push_back(vertex[pres.word_vertex[i]]);
            continue;
        }
        Mat acc = arrow[w[0]];
        for (std::size_t k = 1; k < w.size(); ++k)
            acc = right ? arrow[w[k]] * acc : acc * arrow[w[k]];
        out.push_back(std::move(acc));
    }
    return out;
}

std::map<std::string, Mat> matrices_from_json(Field f, const json& sec, const std::string& origin)
{
    std::map<std::string, Mat> out;
    for (auto it = sec.begin(); it != sec.end(); ++it)
        out.emplace(it.key(), mat_from_json(f, it.value(), origin + ": matrix '" + it.key() + "'"));
    return out;
}

}  // namespace

Module module_from_representation(const AlgebraPtr& a, const std::map<std::string, std::size_t>& dims,
                                  const std::map<std::string, Mat>& arrows)
{
    const PathPresentation& pres = require_presentation(*a, "a module file");
    const Quiver& q = pres.quiver;
    const Field f = a->field();
    for (const auto& [name, d] : dims)
        (void)q.vertex_index(name);
    std::vector<std::size_t> off(q.vertices.size() + 1, 0), dv(q.vertices.size(), 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        auto it = dims.find(q.vertices[v]);
        dv[v] = it == dims.end() ? 0 : it->second;
        off[v + 1] = off[v] + dv[v];
    }
    const std::size_t n = off.back();
    std::vector<Mat> vertex;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        Mat e(f, n, n);
        for (std::size_t k = off[v]; k < off[v + 1]; ++k)
            e(k, k) = Scalar(f, 1);
        vertex.push_back(std::move(e));
    }
    for (const auto& [name, m] : arrows)
        if (!q.arrow_index(name))
            throw InputError("unknown arrow '" + name + "' in module data");
    std::vector<Mat> arrow;
    for (const auto& ar : q.arrows) {
        Mat full(f, n, n);
        auto it = arrows.find(ar.name);
        if (it != arrows.end()) {
            const Mat& m = it->second;
            if (m.rows() != dv[ar.target] || m.cols() != dv[ar.source])
                throw InputError("matrix for arrow '" + ar.name + "' must be " + std::to_string(dv[ar.target]) + "x" +
                                 std::to_string(dv[ar.source]));
            full.set_block(off[ar.target], off[ar.source], m);
        }
        arrow.push_back(std::move(full));
    }
    Module mod(a, actions_from_arrows(*a, pres, vertex, arrow, false));
    const auto bad = mod.check();
    if (!bad.empty())
        throw InputError("module data violates the relations: " + bad.front());
    return mod;
}

Module module_from_json(const AlgebraPtr& a, const json& spec, const std::string& origin)
{
    const json& ds = section(spec, "dims", origin);
    std::map<std::string, std::size_t> dims;
    for (auto it = ds.begin(); it != ds.end(); ++it) {
        if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
            throw InputError(origin + ": dimension at vertex '" + it.key() + "' must be a nonnegative integer");
        dims[it.key()] = it.value().get<std::size_t>();
    }
    std::map<std::string, Mat> arrows;
    if (spec.contains("arrows"))
        arrows = matrices_from_json(a->field(), section(spec, "arrows", origin), origin);
    try {
        return module_from_representation(a, dims, arrows);
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
}

Module load_module(const AlgebraPtr& a, const std::filesystem::path& p, InputFile* file,
                   std::optional<std::uint64_t> field_override)
{
    const std::string text = read_file(p);
    const json spec = parse_toml_subset(text, p.string());
    if (spec.contains("algebra")) {
        const std::filesystem::path ref = p.parent_path() / as_name(spec["algebra"], p.string(), "algebra");
        const auto other = load_algebra(ref, field_override.value_or(a->field().characteristic()));
        if (!same_structure(*other.algebra, *a))
            throw InputError(p.string() + ": module is declared over '" + ref.string() +
                             "', which differs from the given algebra");
    }
    if (file)
        *file = {p.string(), sha256_hex(text)};
    return module_from_json(a, spec, p.string());
}

Bimodule bimodule_from_arrows(const AlgebraPtr& left, const AlgebraPtr& right, std::size_t dim,
                              const std::vector<std::pair<std::string, std::string>>& peirce,
                              const std::map<std::string, Mat>& left_arrows,
                              const std::map<std::string, Mat>& right_arrows)
{
    const PathPresentation& lp = require_presentation(*left, "a bimodule file");
    const PathPresentation& rp = require_presentation(*right, "a bimodule file");
    const Field f = left->field();
    if (peirce.size() != dim)
        throw InputError("bimodule 'peirce' must list one (left, right) vertex pair per basis vector");
    std::vector<Mat> lv(lp.quiver.vertices.size(), Mat(f, dim, dim));
    std::vector<Mat> rv(rp.quiver.vertices.size(), Mat(f, dim, dim));
    for (std::size_t k = 0; k < dim; ++k) {
        lv[lp.quiver.vertex_index(peirce[k].first)](k, k) = Scalar(f, 1);
        rv[rp.quiver.vertex_index(peirce[k].second)](k, k) = Scalar(f, 1);
    }
    auto arrows = [&](const PathPresentation& pres, const std::map<std::string, Mat>& given, const char* side) {
        for (const auto& [name, m] : given) {
            if (!pres.quiver.arrow_index(name))
                throw InputError(std::string("unknown ") + side + " arrow '" + name + "'");
            if (m.rows() != dim || m.cols() != dim)
                throw InputError(std::string(side) + " arrow '" + name + "' needs a " + std::to_string(dim) + "x" +
                                 std::to_string(dim) + " matrix");
        }
        std::vector<Mat> out;
        for (const auto& ar : pres.quiver.arrows) {
            auto it = given.find(ar.name);
            out.push_back(it == given.end() ? Mat(f, dim, dim) : it->second);
        }
        return out;
    };
    Bimodule b;
    b.left = left;
    b.right = right;
    b.dim = dim;
    b.left_action = actions_from_arrows(*left, lp, lv, arrows(lp, left_arrows, "left"), false);
    b.right_action = actions_from_arrows(*right, rp, rv, arrows(rp, right_arrows, "right"), true);
    for (std::size_t k = 0; k < dim; ++k)
        b.labels.push_back("m" + std::to_string(k + 1));
    const auto bad = b.check();
    if (!bad.empty())
        throw InputError("bimodule data is inconsistent: " + bad.front());
    return b;
}

Bimodule bimodule_from_json(const AlgebraPtr& left, const AlgebraPtr& right, const json& spec,
                            const std::string& origin)
{
    if (!spec.contains("dim") || !spec["dim"].is_number_integer() || spec["dim"].get<long long>() < 0)
        throw InputError(origin + ": bimodule needs a nonnegative integer 'dim'");
    const std::size_t dim = spec["dim"].get<std::size_t>();
    std::vector<std::pair<std::string, std::string>> peirce;
    if (spec.contains("peirce")) {
        if (!spec["peirce"].is_array())
            throw InputError(origin + ": 'peirce' must be an array of [left vertex, right vertex] pairs");
        for (const auto& pr : spec["peirce"]) {
            if (!pr.is_array() || pr.size() != 2)
                throw InputError(origin + ": 'peirce' entries are [left vertex, right vertex]");
            peirce.emplace_back(as_name(pr[0], origin, "vertex"), as_name(pr[1], origin, "vertex"));
        }
    }
    const Field f = left->field();
    std::map<std::string, Mat> la, ra;
    if (spec.contains("left_arrows"))
        la = matrices_from_json(f, section(spec, "left_arrows", origin), origin);
    if (spec.contains("right_arrows"))
        ra = matrices_from_json(f, section(spec, "right_arrows", origin), origin);
    try {
        Bimodule b = bimodule_from_arrows(left, right, dim, peirce, la, ra);
        if (spec.contains("labels") && spec["labels"].is_array() && spec["labels"].size() == dim) {
            b.labels.clear();
            for (const auto& l : spec["labels"])
                b.labels.push_back(as_name(l, origin, "label"));
        }
        return b;
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
}

Bimodule load_bimodule(const AlgebraPtr& left, const AlgebraPtr& right, const std::filesystem::path& p,
                       InputFile* file)
{
    const std::string text = read_file(p);
    const json spec = parse_toml_subset(text, p.string());
    if (file)
        *file = {p.string(), sha256_hex(text)};
    return bimodule_from_json(left, right, spec, p.string());
}

json to_json(const Mat& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat mat_from_json(Field f, const json& j, const std::string& what)
{
    const json* entries = &j;
    std::size_t rows = 0, cols = 0;
    if (j.is_object()) {
        if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
            throw InputError(what + ": expected rows, cols and entries");
        rows = j["rows"].get<std::size_t>();
        cols = j["cols"].get<std::size_t>();
        entries = &j["entries"];
    } else if (j.is_array()) {
        rows = j.size();
        cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
    } else {
        throw InputError(what + ": expected an array of rows");
    }
    if (!entries->is_array() || entries->size() != rows)
        throw InputError(what + ": row count mismatch");
    Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = (*entries)[r];
        if (!row.is_array() || row.size() != cols)
            throw InputError(what + ": rows must all have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(f, row[c], what);
    }
    return m;
}

json module_to_json(const Module& m)
{
    json acts = json::array();
    for (const auto& a : m.actions())
        acts.push_back(to_json(a));
    return json{{"dim", m.dim()}, {"actions", std::move(acts)}};
}

Module module_from_actions_json(const AlgebraPtr& a, const json& j)
{
    if (!j.contains("actions") || !j["actions"].is_array())
        throw InputError("serialized module lacks 'actions'");
    std::vector<Mat> acts;
    for (const auto& x : j["actions"])
        acts.push_back(mat_from_json(a->field(), x, "module action"));
    if (acts.size() != a->dim())
        throw InputError("serialized module has the wrong number of actions");
    Module m(a, std::move(acts));
    const auto bad = m.check();
    if (!bad.empty())
        throw InputError("serialized module violates the module axioms: " + bad.front());
    return m;
}

}  // namespace singcat
