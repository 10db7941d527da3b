#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "isolink/scene.hpp"

namespace {

struct CommonOpts {
    std::string mode = "isvt";
    std::string chain;
    int max_chain_length = 1;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool with_chain) {
    sub->add_option("--mode", opts.mode, "link mode")
        ->check(CLI::IsMember({"isvt", "eqvt"}))
        ->capture_default_str();
    sub->add_option("--max-chain-len", opts.max_chain_length,
                    "maximum chain length for the canonical class set")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    if (with_chain) sub->add_option("--chain", opts.chain, "restrict to one chain, e.g. \"e<C2\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isovariant link models, homology, and connectivity calculus"};
    app.require_subcommand(1);

    std::string scene_path;
    std::string format = "table";
    std::uint64_t seed = 0;
    app.add_option("--scene", scene_path, "scene file (JSON)")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    CLI::Option* seed_opt =
        app.add_option("--seed", seed, "seed for the randomized sample suites");

    CommonOpts links_opts, conn_opts, bm_opts, cube_opts, coc_opts, susp_opts, freu_opts,
        uni_opts;
    std::string links_space, conn_map, bm_square, cube_name, coc_square, susp_space, freu_name;
    bool links_all = false;
    int cube_n = 0, susp_times = 1;
    std::string cube_const, pairs = "all";

    CLI::App* links = app.add_subcommand("links", "link models with homology and connectivity");
    links->fallthrough();
    links->add_option("space", links_space, "space name")->required();
    add_common(links, links_opts, true);
    links->add_flag("--all", links_all, "all chain classes up to --max-chain-len (default)");

    CLI::App* conn = app.add_subcommand("conn", "connectivity function of a map");
    conn->fallthrough();
    conn->add_option("map", conn_map, "map name")->required();
    add_common(conn, conn_opts, false);

    CLI::App* bm = app.add_subcommand("bm", "pushout connectivity estimate for a square");
    bm->fallthrough();
    bm->add_option("square", bm_square, "square name")->required();
    add_common(bm, bm_opts, false);

    CLI::App* cube = app.add_subcommand("cube-bm", "cubical connectivity estimate");
    cube->fallthrough();
    cube->add_option("cube", cube_name, "cube name");
    add_common(cube, cube_opts, false);
    cube->add_option("--n", cube_n, "cube arity when no named cube is given");
    cube->add_option("--const", cube_const, "constant edge value (integer, inf, -inf)");

    CLI::App* coc = app.add_subcommand("cocartesian", "homological cocartesian check per link");
    coc->fallthrough();
    coc->add_option("square", coc_square, "square name")->required();
    add_common(coc, coc_opts, true);

    CLI::App* susp = app.add_subcommand("suspend", "homology of suspended link models");
    susp->fallthrough();
    susp->add_option("space", susp_space, "space name")->required();
    susp->add_option("--times", susp_times, "suspension count")->required();
    add_common(susp, susp_opts, true);

    CLI::App* freu = app.add_subcommand("freudenthal", "suspension bounds from a measured map or space");
    freu->fallthrough();
    freu->add_option("target", freu_name, "map or space name")->required();
    add_common(freu, freu_opts, false);

    CLI::App* uni = app.add_subcommand("universe-check", "exact-arithmetic universe verification");
    uni->fallthrough();
    uni->add_option("--pairs", pairs, "which strict pairs to verify")
        ->check(CLI::IsMember({"all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    isolink::SceneFile scene;
    try {
        scene = isolink::parse_scene(scene_path);
    } catch (const isolink::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto flags_of = [&](const CommonOpts& opts) {
        isolink::RunFlags flags;
        flags.mode = opts.mode == "eqvt" ? isolink::LinkMode::Equivariant
                                         : isolink::LinkMode::Isovariant;
        flags.chain = opts.chain;
        flags.max_chain_length = opts.max_chain_length;
        if (seed_opt->count() > 0) flags.seed = seed;
        return flags;
    };

    std::string command, target;
    isolink::RunFlags flags;
    if (links->parsed()) {
        command = "links";
        target = links_space;
        flags = flags_of(links_opts);
    } else if (conn->parsed()) {
        command = "conn";
        target = conn_map;
        flags = flags_of(conn_opts);
    } else if (bm->parsed()) {
        command = "bm";
        target = bm_square;
        flags = flags_of(bm_opts);
    } else if (cube->parsed()) {
        command = "cube-bm";
        target = cube_name;
        flags = flags_of(cube_opts);
        flags.cube_n = cube_n;
        flags.cube_const = cube_const;
    } else if (coc->parsed()) {
        command = "cocartesian";
        target = coc_square;
        flags = flags_of(coc_opts);
    } else if (susp->parsed()) {
        command = "suspend";
        target = susp_space;
        flags = flags_of(susp_opts);
        flags.times = susp_times;
    } else if (freu->parsed()) {
        command = "freudenthal";
        target = freu_name;
        flags = flags_of(freu_opts);
    } else if (uni->parsed()) {
        command = "universe-check";
        flags = flags_of(uni_opts);
    }

    isolink::RunResult result = isolink::run_command(scene, command, target, flags);
    if (format == "json")
        std::cout << result.document.dump(2) << "\n";
    else
        std::cout << result.table;
    return result.exit_code;
}
