#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "isolink/complexes.hpp"
#include "isolink/conncalc.hpp"
#include "isolink/errors.hpp"
#include "isolink/groups.hpp"
#include "isolink/strata.hpp"

namespace isolink {

struct SceneSquare {
    std::string zx, zy, xw, yw;
};

struct SceneCube {
    std::vector<std::string> edges;
};

/// A parsed and fully validated scene: one group, named spaces built from
/// constructor expressions, named equivariant maps, and named squares/cubes
/// of map names. Every space is rigid by the time parsing returns.
struct SceneFile {
    GroupPtr group;
    std::map<std::string, GSimplicialComplex> spaces;
    std::map<std::string, GSimplicialMap> maps;
    std::map<std::string, SceneSquare> squares;
    std::map<std::string, SceneCube> cubes;

    const GSimplicialComplex& space(const std::string& name) const;
    const GSimplicialMap& map(const std::string& name) const;
    const SceneSquare& square(const std::string& name) const;
    const SceneCube& cube(const std::string& name) const;
};

/// Reads and validates a scene file. ParseError carries the location of a
/// syntax problem; ValidationError names the offending entity.
SceneFile parse_scene(const std::string& path);
SceneFile parse_scene_text(const std::string& text, const std::string& origin);

struct RunFlags {
    LinkMode mode = LinkMode::Isovariant;
    /// Restrict to one chain ("--chain"); empty = canonical class set.
    std::string chain;
    int max_chain_length = 1;
    /// Suspension count for `suspend`.
    int times = 1;
    /// Cube arity and constant edge value for `cube-bm` without a named cube.
    int cube_n = 0;
    std::string cube_const;
    std::optional<std::uint64_t> seed;
};

struct RunResult {
    /// 0 = success, 1 = a verification failed, 2 = input error.
    int exit_code = 0;
    nlohmann::ordered_json document;
    std::string table;
};

RunResult run_links(const SceneFile& scene, const std::string& space, const RunFlags& flags);
RunResult run_conn(const SceneFile& scene, const std::string& map, const RunFlags& flags);
RunResult run_bm(const SceneFile& scene, const std::string& square, const RunFlags& flags);
RunResult run_cube_bm(const SceneFile& scene, const std::string& cube, const RunFlags& flags);
RunResult run_cocartesian(const SceneFile& scene, const std::string& square,
                          const RunFlags& flags);
RunResult run_suspend(const SceneFile& scene, const std::string& space, const RunFlags& flags);
RunResult run_freudenthal(const SceneFile& scene, const std::string& map_or_space,
                          const RunFlags& flags);
RunResult run_universe_check(const SceneFile& scene, const RunFlags& flags);

/// Dispatches a subcommand, turning library errors into exit code 2.
RunResult run_command(const SceneFile& scene, const std::string& command,
                      const std::string& target, const RunFlags& flags);

} // namespace isolink
