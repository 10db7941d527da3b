#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "isolink/errors.hpp"
#include "isolink/scene.hpp"

using namespace isolink;
using nlohmann::ordered_json;

namespace {

std::string scene_file(const char* name) {
    return std::string(ISOLINK_SCENE_DIR) + "/" + name;
}

bool mentions(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

template <typename E, typename F>
std::string error_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return "";
}

// Looks up a result row by its "chain" field.
const ordered_json& row_for(const ordered_json& rows, const std::string& chain) {
    for (const ordered_json& row : rows)
        if (row.at("chain").get<std::string>() == chain) return row;
    throw std::runtime_error("no row for chain " + chain);
}

} // namespace

TEST_SUITE_BEGIN("scene");

TEST_CASE("golden scene files parse with the expected inventory") {
    SceneFile disk = parse_scene(scene_file("c2_sign_disk.json"));
    CHECK(disk.group->order() == 2);
    CHECK(disk.spaces.size() == 1);
    CHECK(disk.space("D_sigma").complex().vertex_count() == 3);

    SceneFile pair = parse_scene(scene_file("c2_sign_pair.json"));
    CHECK(pair.space("S_sigma").complex().vertex_count() == 2);
    CHECK(pair.space("D_sigma").complex().vertex_count() == 3);
    CHECK(pair.maps.count("incl") == 1);
    CHECK(pair.map("incl").vertex_map == std::vector<int>{0, 1});

    SceneFile regular = parse_scene(scene_file("c2_regular_pair.json"));
    CHECK(regular.space("S_V").complex().vertex_count() == 4);
    CHECK(regular.space("D_V").complex().vertex_count() == 5);

    SceneFile comp = parse_scene(scene_file("c2_sign_compactification.json"));
    CHECK(comp.spaces.size() == 3);
    CHECK(comp.maps.size() == 3);
    CHECK(comp.space("Shat_sigma").complex().vertex_count() == 4);
    const SceneSquare& sq = comp.square("cylinder");
    CHECK(sq.zx == "equator");
    CHECK(sq.yw == "south");

    SceneFile plane = parse_scene(scene_file("c3_plane_compactification.json"));
    CHECK(plane.group->order() == 3);
    CHECK(plane.space("S_V").complex().vertex_count() == 7);
}

TEST_CASE("scene structural errors are reported with location") {
    CHECK(mentions(error_message<ParseError>([] { parse_scene("/nonexistent/nope.json"); }),
                   "cannot open scene file"));
    CHECK(mentions(error_message<ParseError>([] { parse_scene_text("{ nope", "inline-bad"); }),
                   "inline-bad"));
    CHECK(mentions(error_message<ParseError>([] { parse_scene_text("[1,2]", "arr"); }),
                   "JSON object"));
    CHECK(mentions(error_message<ValidationError>([] { parse_scene_text("{}", "empty"); }),
                   "group"));
    CHECK(mentions(error_message<ValidationError>([] {
                       parse_scene_text(R"({"group": {"kind": "frobenius", "n": 2}})", "g");
                   }),
                   "unknown kind \"frobenius\""));
}

TEST_CASE("dangling and cyclic references are named") {
    const char* dangling_map = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {"A": {"op": "rep_sphere", "rep": [["sign", 1]]}},
      "maps": {"f": {"kind": "inclusion", "from": "A", "to": "B"}}
    })";
    CHECK(mentions(error_message<ValidationError>(
                       [&] { parse_scene_text(dangling_map, "t"); }),
                   "undefined space: B"));

    const char* self_cycle = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {"A": {"op": "cone", "of": "A"}}
    })";
    CHECK(mentions(error_message<ValidationError>([&] { parse_scene_text(self_cycle, "t"); }),
                   "cyclic space definition: A"));

    const char* two_cycle = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {"A": {"op": "cone", "of": "B"}, "B": {"op": "suspension", "of": "A"}}
    })";
    CHECK(mentions(error_message<ValidationError>([&] { parse_scene_text(two_cycle, "t"); }),
                   "cyclic space definition"));

    const char* dangling_square = R"({
      "group": {"kind": "cyclic", "n": 2},
      "squares": {"s": {"zx": "f", "zy": "f", "xw": "f", "yw": "f"}}
    })";
    CHECK(mentions(error_message<ValidationError>(
                       [&] { parse_scene_text(dangling_square, "t"); }),
                   "undefined map: f"));

    const char* bad_op = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {"A": {"op": "frobnicate"}}
    })";
    CHECK(mentions(error_message<ValidationError>([&] { parse_scene_text(bad_op, "t"); }),
                   "space A: unknown op \"frobnicate\""));

    SceneFile parsed = parse_scene(scene_file("c2_sign_disk.json"));
    CHECK(mentions(error_message<ValidationError>([&] { parsed.space("nope"); }),
                   "undefined space: nope"));
    CHECK(mentions(error_message<ValidationError>([&] { parsed.map("nope"); }),
                   "undefined map: nope"));
    CHECK(mentions(error_message<ValidationError>([&] { parsed.square("nope"); }),
                   "undefined square: nope"));
    CHECK(mentions(error_message<ValidationError>([&] { parsed.cube("nope"); }),
                   "undefined cube: nope"));
}

TEST_CASE("map validation failures carry witnesses") {
    // Swapping the two free points of S(sigma) onto one of them breaks equivariance.
    const char* not_equivariant = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {"S": {"op": "rep_sphere", "rep": [["sign", 1]]}},
      "maps": {"f": {"kind": "vertices", "from": "S", "to": "S", "assign": [0, 0]}}
    })";
    std::string msg =
        error_message<ValidationError>([&] { parse_scene_text(not_equivariant, "t"); });
    CHECK(mentions(msg, "not equivariant"));
    CHECK(mentions(msg, "element 1"));
    CHECK(mentions(msg, "vertex 0"));

    // An edge cannot map onto two points with no edge between them.
    const char* not_simplicial = R"({
      "group": {"kind": "cyclic", "n": 1},
      "spaces": {
        "E": {"op": "explicit", "vertices": 2, "simplices": [[0, 1]], "action": [[0, 1]]},
        "P": {"op": "explicit", "vertices": 2, "simplices": [[0], [1]], "action": [[0, 1]]}
      },
      "maps": {"f": {"kind": "vertices", "from": "E", "to": "P", "assign": [0, 1]}}
    })";
    CHECK(mentions(error_message<ValidationError>(
                       [&] { parse_scene_text(not_simplicial, "t"); }),
                   "image of simplex"));

    // Inclusions require the source ids to exist in the target.
    const char* bad_inclusion = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {
        "S": {"op": "rep_sphere", "rep": [["sign", 1]]},
        "D": {"op": "rep_disk", "rep": [["sign", 1]]}
      },
      "maps": {"f": {"kind": "inclusion", "from": "D", "to": "S"}}
    })";
    CHECK(mentions(error_message<ValidationError>(
                       [&] { parse_scene_text(bad_inclusion, "t"); }),
                   "outside the target"));

    // Collapsing the free sphere onto the fixed origin is equivariant but not isovariant.
    const char* fake_isovariant = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {
        "S": {"op": "rep_sphere", "rep": [["sign", 1]]},
        "D": {"op": "rep_disk", "rep": [["sign", 1]]}
      },
      "maps": {"f": {"kind": "vertices", "from": "S", "to": "D", "assign": [2, 2],
                     "isovariant": true}}
    })";
    msg = error_message<ValidationError>([&] { parse_scene_text(fake_isovariant, "t"); });
    CHECK(mentions(msg, "map f"));
    CHECK(mentions(msg, "declared isovariant but is not"));
    CHECK(mentions(msg, "witness simplex {0}"));

    const char* bad_kind = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {"S": {"op": "rep_sphere", "rep": [["sign", 1]]}},
      "maps": {"f": {"kind": "teleport", "from": "S", "to": "S"}}
    })";
    CHECK(mentions(error_message<ValidationError>([&] { parse_scene_text(bad_kind, "t"); }),
                   "unknown kind \"teleport\""));

    const char* bad_square = R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {
        "S": {"op": "rep_sphere", "rep": [["sign", 1]]},
        "D": {"op": "rep_disk", "rep": [["sign", 1]]}
      },
      "maps": {"f": {"kind": "inclusion", "from": "S", "to": "D"}},
      "squares": {"s": {"zx": "f", "zy": "f", "xw": "f", "yw": "f"}}
    })";
    CHECK(mentions(error_message<ValidationError>([&] { parse_scene_text(bad_square, "t"); }),
                   "do not form a square"));
}

TEST_CASE("constructor expressions cover chains and eager rigidification") {
    SceneFile s3 = parse_scene_text(R"({
      "group": {"kind": "symmetric", "n": 3},
      "spaces": {
        "L": {"op": "linking_simplex", "chain": "e<G"},
        "B": {"op": "boundary_linking_simplex", "chain": "e<G"},
        "CL": {"op": "cone", "of": "L"}
      }
    })", "inline");
    CHECK(s3.space("L").complex().f_vector() == std::vector<int>{7, 6});
    CHECK(s3.space("B").complex().f_vector() == std::vector<int>{7});
    CHECK(s3.space("CL").complex().f_vector() == std::vector<int>{8, 13, 6});

    // An edge whose endpoints are swapped is not rigid; parsing subdivides it.
    SceneFile swap = parse_scene_text(R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {
        "E": {"op": "explicit", "vertices": 2, "simplices": [[0, 1]],
              "action": [[0, 1], [1, 0]]}
      }
    })", "inline");
    CHECK(swap.space("E").complex().f_vector() == std::vector<int>{3, 2});
    CHECK(swap.space("E").act(1, 2) == 2);
}

TEST_CASE("links report on the sign disk") {
    SceneFile scene = parse_scene(scene_file("c2_sign_disk.json"));
    RunFlags flags;
    RunResult r = run_links(scene, "D_sigma", flags);
    CHECK(r.exit_code == 0);
    CHECK(r.document.at("command") == "links");
    CHECK(r.document.at("mode") == "isvt");
    const ordered_json& rows = r.document.at("results");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].at("chain") == "C2");
    CHECK(rows[1].at("chain") == "e");
    CHECK(rows[2].at("chain") == "e<C2");

    // The fixed stratum is the origin, the free stratum two half-open rays,
    // and the holink one point per side.
    CHECK(row_for(rows, "C2").at("homology").at("betti") == ordered_json::array({1}));
    CHECK(row_for(rows, "e").at("homology").at("betti") == ordered_json::array({2, 0}));
    CHECK(row_for(rows, "e<C2").at("homology").at("betti") == ordered_json::array({2}));
    CHECK(row_for(rows, "C2").at("connectivity") == "inf");
    CHECK(row_for(rows, "e").at("connectivity") == -1);
    CHECK(row_for(rows, "e<C2").at("connectivity") == -1);
    for (const ordered_json& row : rows) {
        CHECK_FALSE(row.at("provisional").get<bool>());
        CHECK_FALSE(row.at("intermediate_strata").get<bool>());
    }
    CHECK(mentions(r.table, "chain"));
    CHECK(mentions(r.table, "f_vector"));

    RunFlags eqvt;
    eqvt.mode = LinkMode::Equivariant;
    RunResult re = run_links(scene, "D_sigma", eqvt);
    CHECK(re.document.at("mode") == "eqvt");
    const ordered_json& erows = re.document.at("results");
    REQUIRE(erows.size() == 2);
    CHECK(erows[0].at("chain") == "C2");
    CHECK(erows[1].at("chain") == "e");
    CHECK(row_for(erows, "C2").at("homology").at("betti") == ordered_json::array({1}));
    CHECK(row_for(erows, "e").at("homology").at("betti") == ordered_json::array({1, 0}));
    // The full fixed-point body is contractible of dimension 1, so only a caveat
    // keeps it from being declared infinitely connected outright.
    CHECK(row_for(erows, "e").at("connectivity") == "inf");
    CHECK(row_for(erows, "e").at("homological_caveat") == true);
    CHECK(mentions(re.table, "inf [caveat]"));
}

TEST_CASE("links report the torus holink of the plane compactification") {
    SceneFile scene = parse_scene(scene_file("c3_plane_compactification.json"));
    RunFlags flags;
    flags.chain = "e<C3";
    RunResult r = run_links(scene, "S_V", flags);
    const ordered_json& rows = r.document.at("results");
    REQUIRE(rows.size() == 1);
    const ordered_json& row = rows[0];
    CHECK(row.at("chain") == "e<C3");
    CHECK(row.at("dimension") == 2);
    CHECK(row.at("f_vector") == ordered_json::array({480, 1440, 960}));
    CHECK(row.at("homology").at("betti") == ordered_json::array({1, 2, 1}));
    CHECK(row.at("homology").at("torsion") ==
          ordered_json::array({ordered_json::array(), ordered_json::array(),
                               ordered_json::array()}));
    CHECK(row.at("connectivity") == 0);
    CHECK_FALSE(row.at("provisional").get<bool>());
}

TEST_CASE("conn table of the sign pair inclusion") {
    SceneFile scene = parse_scene(scene_file("c2_sign_pair.json"));
    RunFlags flags;
    RunResult r = run_conn(scene, "incl", flags);
    CHECK(r.exit_code == 0);
    const ordered_json& rows = r.document.at("table");
    REQUIRE(rows.size() == 3);
    CHECK(row_for(rows, "e").at("connectivity") == "inf");
    CHECK(row_for(rows, "e").at("homological_caveat") == true);
    CHECK(row_for(rows, "C2").at("connectivity") == -1);
    CHECK(row_for(rows, "C2").at("homological_caveat") == false);
    CHECK(row_for(rows, "e<C2").at("connectivity") == -1);
    CHECK(mentions(r.table, "inf [caveat]"));
}

TEST_CASE("bm bound and freudenthal suite through the dispatcher") {
    SceneFile scene = parse_scene_text(R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {
        "S_V": {"op": "rep_sphere", "rep": [["trivial", 1], ["sign", 1]]},
        "D_V": {"op": "rep_disk", "rep": [["trivial", 1], ["sign", 1]]}
      },
      "maps": {
        "incl": {"kind": "inclusion", "from": "S_V", "to": "D_V", "isovariant": true},
        "idD": {"kind": "inclusion", "from": "D_V", "to": "D_V"}
      },
      "squares": {"sq": {"zx": "incl", "zy": "incl", "xw": "idD", "yw": "idD"}}
    })", "inline");

    RunFlags flags;
    RunResult rb = run_bm(scene, "sq", flags);
    CHECK(rb.exit_code == 0);
    const ordered_json& bound = rb.document.at("bound");
    CHECK(row_for(bound, "e").at("connectivity") == "inf");
    CHECK(row_for(bound, "C2").at("connectivity") == -1);
    CHECK(row_for(bound, "e<C2").at("connectivity") == -1);
    const ordered_json& zx_table = rb.document.at("inputs").at("zx").at("table");
    CHECK(row_for(zx_table, "C2").at("connectivity") == 0);
    CHECK(row_for(zx_table, "e<C2").at("connectivity") == 0);

    RunResult rf = run_freudenthal(scene, "incl", flags);
    CHECK(rf.document.at("kind") == "map");
    CHECK(row_for(rf.document.at("universe"), "C2").at("connectivity") == 1);
    CHECK(row_for(rf.document.at("freudenthal"), "C2").at("connectivity") == 1);
    CHECK(row_for(rf.document.at("freudenthal"), "e").at("connectivity") == "inf");

    RunResult rs = run_freudenthal(scene, "S_V", flags);
    CHECK(rs.document.at("kind") == "space");

    CHECK(mentions(error_message<ValidationError>(
                       [&] { run_freudenthal(scene, "Q", flags); }),
                   "undefined map or space: Q"));
}

TEST_CASE("cube-bm runs on constant and named edges") {
    SceneFile scene = parse_scene(scene_file("c2_sign_pair.json"));
    RunFlags flags;
    flags.cube_n = 3;
    flags.cube_const = "1";
    RunResult r = run_cube_bm(scene, "", flags);
    CHECK(r.document.at("n") == 3);
    CHECK(r.document.at("constant") == 1);
    for (const ordered_json& row : r.document.at("bound"))
        CHECK(row.at("connectivity") == 1);

    RunFlags bad;
    bad.cube_n = 1;
    bad.cube_const = "0";
    CHECK(mentions(error_message<ValidationError>([&] { run_cube_bm(scene, "", bad); }),
                   "at least 2"));
    RunFlags noconst;
    noconst.cube_n = 2;
    CHECK(mentions(error_message<ValidationError>([&] { run_cube_bm(scene, "", noconst); }),
                   "--const"));

    SceneFile named = parse_scene_text(R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {
        "S": {"op": "rep_sphere", "rep": [["sign", 1]]},
        "D": {"op": "rep_disk", "rep": [["sign", 1]]}
      },
      "maps": {"incl": {"kind": "inclusion", "from": "S", "to": "D", "isovariant": true}},
      "cubes": {"c": {"edges": ["incl", "incl"]}}
    })", "inline");
    RunFlags none;
    RunResult rn = run_cube_bm(named, "c", none);
    CHECK(rn.document.at("n") == 2);
    // Both edges measure (-1, inf, -1), and the square estimate doubles the deficit.
    CHECK(row_for(rn.document.at("bound"), "C2").at("connectivity") == -3);
    CHECK(row_for(rn.document.at("bound"), "e").at("connectivity") == "inf");
    CHECK(row_for(rn.document.at("bound"), "e<C2").at("connectivity") == -3);
}

TEST_CASE("suspend reports suspended link homology") {
    SceneFile scene = parse_scene(scene_file("c2_sign_pair.json"));
    RunFlags flags;
    flags.chain = "e";
    flags.times = 2;
    RunResult r = run_suspend(scene, "S_sigma", flags);
    const ordered_json& rows = r.document.at("results");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].at("times") == 2);
    // Two points suspended twice form a 2-sphere.
    CHECK(rows[0].at("homology").at("betti") == ordered_json::array({1, 0, 1}));
    CHECK(rows[0].at("homology").at("reduced_betti") == ordered_json::array({0, 0, 1}));

    RunFlags bad;
    bad.times = -1;
    CHECK(mentions(error_message<ValidationError>([&] { run_suspend(scene, "S_sigma", bad); }),
                   "nonnegative"));
}

TEST_CASE("cocartesian verdicts set exit codes") {
    SceneFile comp = parse_scene(scene_file("c2_sign_compactification.json"));
    RunFlags eflags;
    eflags.chain = "e";
    RunResult pass = run_cocartesian(comp, "cylinder", eflags);
    CHECK(pass.exit_code == 0);
    CHECK(pass.document.at("pass") == true);
    CHECK(mentions(pass.table, "yes"));
    CHECK(mentions(pass.table, "PASS"));

    // Gluing two points along two points cannot produce two points again;
    // the genuine pushout is a circle.
    SceneFile perturbed = parse_scene_text(R"({
      "group": {"kind": "cyclic", "n": 1},
      "spaces": {
        "Z": {"op": "explicit", "vertices": 2, "simplices": [[0], [1]], "action": [[0, 1]]},
        "P": {"op": "explicit", "vertices": 1, "simplices": [[0]], "action": [[0]]},
        "W": {"op": "explicit", "vertices": 2, "simplices": [[0], [1]], "action": [[0, 1]]}
      },
      "maps": {
        "zp": {"kind": "vertices", "from": "Z", "to": "P", "assign": [0, 0]},
        "pw": {"kind": "vertices", "from": "P", "to": "W", "assign": [0]}
      },
      "squares": {"bad": {"zx": "zp", "zy": "zp", "xw": "pw", "yw": "pw"}}
    })", "inline");
    RunFlags flags;
    RunResult fail = run_cocartesian(perturbed, "bad", flags);
    CHECK(fail.exit_code == 1);
    CHECK(fail.document.at("pass") == false);
    CHECK(mentions(fail.table, "NO"));
    CHECK(mentions(fail.table, "FAIL"));

    // A square that does not even commute is an input error, not a verdict.
    SceneFile twisted = parse_scene_text(R"({
      "group": {"kind": "cyclic", "n": 2},
      "spaces": {
        "S": {"op": "rep_sphere", "rep": [["sign", 1]]},
        "D": {"op": "rep_disk", "rep": [["sign", 1]]},
        "Shat": {"op": "rep_compactification", "rep": [["sign", 1]]}
      },
      "maps": {
        "equator": {"kind": "inclusion", "from": "S", "to": "D", "isovariant": true},
        "north": {"kind": "inclusion", "from": "D", "to": "Shat", "isovariant": true},
        "flip": {"kind": "vertices", "from": "D", "to": "Shat", "assign": [1, 0, 3],
                 "isovariant": true}
      },
      "squares": {"tw": {"zx": "equator", "zy": "equator", "xw": "north", "yw": "flip"}}
    })", "inline");
    CHECK(mentions(error_message<NonCommuting>([&] { run_cocartesian(twisted, "tw", flags); }),
                   "vertex 0"));
}

TEST_CASE("provisional models are marked in both outputs") {
    // Every point of this circle has isotropy of order two that the chain skips,
    // so the holink model is empty and both advisory flags fire.
    SceneFile scene = parse_scene_text(R"({
      "group": {"kind": "cyclic", "n": 4},
      "spaces": {"S_half": {"op": "rep_sphere", "rep": [["rotation", 1, 2]]}}
    })", "inline");
    RunFlags flags;
    flags.chain = "e<C4";
    RunResult r = run_links(scene, "S_half", flags);
    const ordered_json& row = r.document.at("results").at(0);
    CHECK(row.at("provisional") == true);
    CHECK(row.at("intermediate_strata") == true);
    CHECK(row.at("dimension") == -1);
    CHECK(mentions(r.table, "provisional"));
    CHECK(mentions(r.table, "intermediate-strata"));
}

TEST_CASE("universe-check verifies the sign scene and echoes its samples") {
    SceneFile scene = parse_scene(scene_file("c2_sign_pair.json"));
    RunFlags flags;
    RunResult r = run_universe_check(scene, flags);
    CHECK(r.exit_code == 0);
    CHECK(r.document.at("pass") == true);
    CHECK(r.document.at("order") == 2);
    CHECK(r.document.at("samples").size() == 5);
    const ordered_json& sums = r.document.at("sums");
    REQUIRE(sums.size() == 2);
    for (const ordered_json& row : sums) CHECK(row.at("pass") == true);
    const ordered_json& pairs = r.document.at("pairs");
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].at("pair") == "e<C2");
    CHECK(pairs[0].at("gamma_pass") == true);
    CHECK(pairs[0].at("lift_pass") == true);
    CHECK(pairs[0].at("gamma_witnesses").empty());
    CHECK(pairs[0].at("lift_witnesses").empty());
    CHECK(mentions(r.table, "overall: PASS"));

    RunFlags seeded;
    seeded.seed = 7;
    RunResult s1 = run_universe_check(scene, seeded);
    RunResult s2 = run_universe_check(scene, seeded);
    CHECK(s1.document.at("seed") == 7);
    CHECK(s1.document.at("extra_samples").size() == 8);
    CHECK(s1.document.at("samples").size() == 13);
    CHECK(s1.document.dump(2) == s2.document.dump(2));
    CHECK(s1.exit_code == 0);
}

TEST_CASE("run_command wraps input errors in the machine document") {
    SceneFile scene = parse_scene(scene_file("c2_sign_disk.json"));
    RunFlags flags;

    RunResult unknown = run_command(scene, "frobnicate", "D_sigma", flags);
    CHECK(unknown.exit_code == 2);
    CHECK(mentions(unknown.document.at("error").get<std::string>(), "unknown command"));
    CHECK(mentions(unknown.table, "error:"));

    RunResult missing = run_command(scene, "links", "Q", flags);
    CHECK(missing.exit_code == 2);
    CHECK(mentions(missing.document.at("error").get<std::string>(), "undefined space: Q"));

    RunFlags badchain;
    badchain.chain = "C5";
    RunResult chainerr = run_command(scene, "links", "D_sigma", badchain);
    CHECK(chainerr.exit_code == 2);
    CHECK(mentions(chainerr.document.at("error").get<std::string>(), "order 5"));

    RunResult ok = run_command(scene, "links", "D_sigma", flags);
    CHECK(ok.exit_code == 0);
}

TEST_CASE("reports round trip bit for bit and rerun identically") {
    SceneFile disk = parse_scene(scene_file("c2_sign_disk.json"));
    SceneFile pair = parse_scene(scene_file("c2_sign_pair.json"));
    RunFlags flags;
    RunFlags seeded;
    seeded.seed = 20260815;

    std::vector<std::string> dumps;
    dumps.push_back(run_links(disk, "D_sigma", flags).document.dump(2));
    dumps.push_back(run_conn(pair, "incl", flags).document.dump(2));
    dumps.push_back(run_universe_check(pair, seeded).document.dump(2));
    for (const std::string& text : dumps) {
        ordered_json reparsed = ordered_json::parse(text);
        CHECK(reparsed.dump(2) == text);
    }
    CHECK(run_links(disk, "D_sigma", flags).document.dump(2) == dumps[0]);
    CHECK(run_conn(pair, "incl", flags).document.dump(2) == dumps[1]);
}

TEST_SUITE_END();
