// Text formats for algebras, modules and bimodules.
//
// Files use a small TOML-compatible subset: comments, [section] headers and
// `key = value` lines where a value is an integer, a boolean, a "string" or a
// (possibly nested, possibly multi-line) array of values.
//
// Path words compose like functions: in "p*q" the arrow q is traversed
// first, so "g*b" is b followed by g.
//
//   # algebra file
//   name = "A"
//   [field]
//   characteristic = 0
//   [quiver]
//   vertices = ["1", "2"]
//   arrows = [["a", "1", "1"], ["b", "1", "2"], ["g", "2", "1"]]
//   [relations]
//   relations = ["a*a", "g*b", "b*a"]
//   [options]
//   degree_bound = 32
//
//   # module file: one matrix per arrow, rows = dim at target, cols = dim at source
//   algebra = "A.alg"
//   [dims]
//   1 = 1
//   2 = 1
//   [arrows]
//   b = [[1]]
//
//   # bimodule file: full dim x dim matrices; peirce lists (left vertex, right vertex)
//   dim = 1
//   peirce = [["1", "1"]]
//   [left_arrows]
//   [right_arrows]
//   x = [[0]]
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "singcat/triangular.hpp"

namespace singcat {

using json = nlohmann::json;

/// Parses the TOML subset into a JSON object (sections become nested objects).
json parse_toml_subset(std::string_view text, const std::string& origin = "<input>");

std::string read_file(const std::filesystem::path& p);
std::string sha256_hex(std::string_view bytes);

struct InputFile {
    std::string path;
    std::string sha256;
};

struct LoadedAlgebra {
    AlgebraPtr algebra;
    InputFile file;
};

/// Builds an algebra from parsed file contents. A set `field_override`
/// replaces the characteristic given in the file.
AlgebraPtr algebra_from_json(const json& spec, const std::string& default_name,
                             std::optional<std::uint64_t> field_override = std::nullopt,
                             const std::string& origin = "<input>");
LoadedAlgebra load_algebra(const std::filesystem::path& p, std::optional<std::uint64_t> field_override = std::nullopt);

/// Representation data: dimension per vertex and one matrix per arrow.
/// Requires a path algebra; relations are verified through the module axioms.
Module module_from_representation(const AlgebraPtr& a, const std::map<std::string, std::size_t>& dims,
                                  const std::map<std::string, Mat>& arrows);
Module module_from_json(const AlgebraPtr& a, const json& spec, const std::string& origin = "<input>");
/// Loads a module file over `a`. An `algebra` key, when present, must name a
/// file whose algebra has the same structure constants.
Module load_module(const AlgebraPtr& a, const std::filesystem::path& p, InputFile* file = nullptr,
                   std::optional<std::uint64_t> field_override = std::nullopt);

Bimodule bimodule_from_arrows(const AlgebraPtr& left, const AlgebraPtr& right, std::size_t dim,
                              const std::vector<std::pair<std::string, std::string>>& peirce,
                              const std::map<std::string, Mat>& left_arrows,
                              const std::map<std::string, Mat>& right_arrows);
Bimodule bimodule_from_json(const AlgebraPtr& left, const AlgebraPtr& right, const json& spec,
                            const std::string& origin = "<input>");
Bimodule load_bimodule(const AlgebraPtr& left, const AlgebraPtr& right, const std::filesystem::path& p,
                       InputFile* file = nullptr);

/// Matrices as arrays of rows of exact strings.
json to_json(const Mat& m);
Mat mat_from_json(Field f, const json& j, const std::string& what = "matrix");
/// A module as its list of action matrices.
json module_to_json(const Module& m);
Module module_from_actions_json(const AlgebraPtr& a, const json& j);

}  // namespace singcat
