// Command implementations shared by the command-line tool and the Python module.
//
// Every command returns a JSON report and a process exit code:
// 0 decisive, 1 Unknown verdict, 2 input error, 3 consistency failure.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "singcat/io.hpp"
#include "singcat/schur.hpp"

namespace singcat {

inline constexpr const char* tool_name = "singcat";
inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int { exit_ok = 0, exit_unknown = 1, exit_input = 2, exit_consistency = 3 };

struct GlobalOptions {
    std::size_t bound = default_bound;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> field;  // characteristic override
    bool timing = false;

    SearchOptions search() const { return {bound, seed, default_iso_attempts}; }
};

struct CommandResult {
    int exit_code = exit_ok;
    json report;
    /// Human-readable rendering of the report.
    std::string text;
};

/// Which module `resolve` works on: a module file or a standard module.
struct ModuleSelector {
    std::optional<std::filesystem::path> file;
    std::optional<StandardKind> kind;
    std::string vertex;
};

CommandResult cmd_check(const std::filesystem::path& algebra, const GlobalOptions& g);
CommandResult cmd_resolve(const std::filesystem::path& algebra, const ModuleSelector& which, const GlobalOptions& g);
CommandResult cmd_gorenstein(const std::filesystem::path& algebra, const GlobalOptions& g);
/// `corner_ref`, when given, is matched against eAe by structure constants.
CommandResult cmd_schur(const std::filesystem::path& algebra, const std::vector<std::string>& idempotent,
                        const std::optional<std::filesystem::path>& corner_ref, const GlobalOptions& g);
/// `reference`, when given, is an algebra file matched against the triangular algebra.
CommandResult cmd_triangular(Orientation o, const std::filesystem::path& r, const std::filesystem::path& s,
                             const std::filesystem::path& bimodule,
                             const std::optional<std::filesystem::path>& reference, const GlobalOptions& g);
/// Rebuilds the algebras named by a saved report and re-checks every certificate in it.
CommandResult cmd_verify(const std::filesystem::path& report, const GlobalOptions& g);

/// Runs `body`, turning InputError into exit 2 and ConsistencyError into exit 3.
template <class F>
CommandResult guarded(const std::string& command, F&& body);

CommandResult guarded_error(const std::string& command, int code, const std::string& message);

template <class F>
CommandResult guarded(const std::string& command, F&& body)
{
    try {
        return body();
    } catch (const ConsistencyError& e) {
        return guarded_error(command, exit_consistency, e.what());
    } catch (const InputError& e) {
        return guarded_error(command, exit_input, e.what());
    } catch (const Error& e) {
        return guarded_error(command, exit_input, e.what());
    }
}

}  // namespace singcat
