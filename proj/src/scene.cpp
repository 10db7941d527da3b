#include "isolink/scene.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "isolink/homology.hpp"
#include "isolink/universe.hpp"

namespace isolink {

using nlohmann::json;
using nlohmann::ordered_json;

const GSimplicialComplex& SceneFile::space(const std::string& name) const {
    auto it = spaces.find(name);
    if (it == spaces.end()) throw ValidationError("undefined space: " + name);
    return it->second;
}

const GSimplicialMap& SceneFile::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw ValidationError("undefined map: " + name);
    return it->second;
}

const SceneSquare& SceneFile::square(const std::string& name) const {
    auto it = squares.find(name);
    if (it == squares.end()) throw ValidationError("undefined square: " + name);
    return it->second;
}

const SceneCube& SceneFile::cube(const std::string& name) const {
    auto it = cubes.find(name);
    if (it == cubes.end()) throw ValidationError("undefined cube: " + name);
    return it->second;
}

// ---------------------------------------------------------------------------
// Parsing

static const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError(where + ": missing field \"" + key + "\"");
    return obj.at(key);
}

static std::string str_field(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_string()) throw ValidationError(where + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

static int int_field(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_integer())
        throw ValidationError(where + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

static std::vector<std::vector<int>> int_table(const json& v, const std::string& where) {
    if (!v.is_array()) throw ValidationError(where + ": expected an array of integer rows");
    std::vector<std::vector<int>> out;
    for (const json& row : v) {
        if (!row.is_array()) throw ValidationError(where + ": expected an array of integer rows");
        std::vector<int> r;
        for (const json& x : row) {
            if (!x.is_number_integer()) throw ValidationError(where + ": non-integer entry");
            r.push_back(x.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

static GroupPtr parse_group(const json& def) {
    std::string kind = str_field(def, "kind", "group");
    if (kind == "table")
        return std::make_shared<FiniteGroup>(
            FiniteGroup::from_table(int_table(field(def, "table", "group"), "group table")));
    int n = int_field(def, "n", "group");
    if (kind == "cyclic") return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n));
    if (kind == "dihedral") return std::make_shared<FiniteGroup>(FiniteGroup::dihedral(n));
    if (kind == "symmetric") return std::make_shared<FiniteGroup>(FiniteGroup::symmetric(n));
    throw ValidationError("group: unknown kind \"" + kind + "\"");
}

static std::vector<RepGenerator> parse_rep(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty())
        throw ValidationError(where + ": \"rep\" must be a nonempty array of summands");
    std::vector<RepGenerator> out;
    for (const json& entry : arr) {
        if (!entry.is_array() || entry.size() < 2 || !entry[0].is_string() ||
            !entry[1].is_number_integer())
            throw ValidationError(where + ": each summand is [kind, multiplicity(, k)]");
        std::string kind = entry[0].get<std::string>();
        int mult = entry[1].get<int>();
        if (mult < 0) throw ValidationError(where + ": negative multiplicity");
        RepGenerator g;
        if (kind == "trivial") {
            g.kind = RepGenerator::Kind::Trivial;
        } else if (kind == "sign") {
            g.kind = RepGenerator::Kind::Sign;
        } else if (kind == "rotation") {
            g.kind = RepGenerator::Kind::Rotation;
            if (entry.size() < 3 || !entry[2].is_number_integer())
                throw ValidationError(where + ": rotation summands are [\"rotation\", mult, k]");
            g.rotation_k = entry[2].get<int>();
        } else {
            throw ValidationError(where + ": unknown summand kind \"" + kind + "\"");
        }
        for (int i = 0; i < mult; ++i) out.push_back(g);
    }
    return out;
}

namespace {

class SpaceResolver {
  public:
    SpaceResolver(const json& defs, GroupPtr group) : defs_(defs), group_(std::move(group)) {}

    const GSimplicialComplex& resolve(const std::string& name) {
        auto it = done_.find(name);
        if (it != done_.end()) return it->second;
        if (!defs_.contains(name)) throw ValidationError("undefined space: " + name);
        if (!visiting_.insert(name).second)
            throw ValidationError("cyclic space definition: " + name);
        GSimplicialComplex built = build(defs_.at(name), name);
        visiting_.erase(name);
        return done_.emplace(name, make_rigid(built)).first->second;
    }

    std::map<std::string, GSimplicialComplex> take() { return std::move(done_); }

  private:
    GSimplicialComplex build(const json& def, const std::string& name) {
        std::string where = "space " + name;
        std::string op = str_field(def, "op", where);
        try {
            if (op == "linking_simplex" || op == "boundary_linking_simplex") {
                SubgroupChain chain = parse_chain(*group_, str_field(def, "chain", where));
                return op == "linking_simplex" ? linking_simplex(group_, chain)
                                               : boundary_linking_simplex(group_, chain);
            }
            if (op == "rep_sphere" || op == "rep_disk" || op == "rep_compactification") {
                auto rep = parse_rep(field(def, "rep", where), where);
                if (op == "rep_sphere") return rep_sphere(group_, rep);
                if (op == "rep_disk") return rep_disk(group_, rep);
                return rep_compactification(group_, rep);
            }
            if (op == "cone") return cone(resolve(str_field(def, "of", where)));
            if (op == "suspension") return suspension(resolve(str_field(def, "of", where)));
            if (op == "join")
                return join(resolve(str_field(def, "of", where)),
                            resolve(str_field(def, "with", where)));
            if (op == "subdivide")
                return barycentric_subdivision(resolve(str_field(def, "of", where)));
            if (op == "make_rigid") return make_rigid(resolve(str_field(def, "of", where)));
            if (op == "explicit") {
                int vertices = int_field(def, "vertices", where);
                auto simplices = int_table(field(def, "simplices", where), where);
                std::vector<Simplex> simps;
                for (auto& s : simplices) simps.push_back(Simplex(s.begin(), s.end()));
                auto action = int_table(field(def, "action", where), where);
                return GSimplicialComplex(
                    group_, SimplicialComplex::from_simplices(vertices, std::move(simps)),
                    std::move(action));
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            throw ValidationError(where + ": " + e.what());
        }
        throw ValidationError(where + ": unknown op \"" + op + "\"");
    }

    const json& defs_;
    GroupPtr group_;
    std::map<std::string, GSimplicialComplex> done_;
    std::set<std::string> visiting_;
};

} // namespace

static bool same_complex(const GSimplicialComplex& a, const GSimplicialComplex& b) {
    return a.complex().id_space() == b.complex().id_space() &&
           a.complex().simplices() == b.complex().simplices() && a.action() == b.action();
}

SceneFile parse_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scene_text(buf.str(), path);
}

SceneFile parse_scene_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(origin + ": scene must be a JSON object");

    SceneFile scene;
    scene.group = parse_group(field(doc, "group", "scene"));

    static const json empty_object = json::object();
    const json& space_defs = doc.contains("spaces") ? doc.at("spaces") : empty_object;
    if (!space_defs.is_object()) throw ValidationError("\"spaces\" must be an object");
    SpaceResolver resolver(space_defs, scene.group);
    for (auto it = space_defs.begin(); it != space_defs.end(); ++it) resolver.resolve(it.key());
    scene.spaces = resolver.take();

    const json& map_defs = doc.contains("maps") ? doc.at("maps") : empty_object;
    if (!map_defs.is_object()) throw ValidationError("\"maps\" must be an object");
    for (auto it = map_defs.begin(); it != map_defs.end(); ++it) {
        const std::string where = "map " + it.key();
        const json& def = it.value();
        std::string kind = str_field(def, "kind", where);
        const GSimplicialComplex& from = scene.space(str_field(def, "from", where));
        const GSimplicialComplex& to = scene.space(str_field(def, "to", where));
        try {
            if (kind == "inclusion") {
                scene.maps.emplace(it.key(), inclusion_map(from, to));
            } else if (kind == "vertices") {
                const json& arr = field(def, "assign", where);
                if (!arr.is_array()) throw ValidationError(where + ": \"assign\" must be an array");
                std::vector<int> vm;
                for (const json& x : arr) {
                    if (!x.is_number_integer())
                        throw ValidationError(where + ": non-integer vertex assignment");
                    vm.push_back(x.get<int>());
                }
                scene.maps.emplace(it.key(), GSimplicialMap(from, to, std::move(vm)));
            } else {
                throw ValidationError(where + ": unknown kind \"" + kind + "\"");
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            throw ValidationError(where + ": " + e.what());
        }
        if (def.contains("isovariant") && def.at("isovariant").is_boolean() &&
            def.at("isovariant").get<bool>()) {
            IsovarianceCheck check = is_isovariant(scene.maps.at(it.key()));
            if (!check.isovariant) {
                std::string witness;
                if (check.witness) {
                    witness = " witness simplex {";
                    for (size_t i = 0; i < check.witness->size(); ++i)
                        witness += (i ? "," : "") + std::to_string((*check.witness)[i]);
                    witness += "}";
                }
                throw ValidationError(where + ": declared isovariant but is not;" + witness);
            }
        }
    }

    const json& square_defs = doc.contains("squares") ? doc.at("squares") : empty_object;
    if (!square_defs.is_object()) throw ValidationError("\"squares\" must be an object");
    for (auto it = square_defs.begin(); it != square_defs.end(); ++it) {
        const std::string where = "square " + it.key();
        SceneSquare sq;
        sq.zx = str_field(it.value(), "zx", where);
        sq.zy = str_field(it.value(), "zy", where);
        sq.xw = str_field(it.value(), "xw", where);
        sq.yw = str_field(it.value(), "yw", where);
        const GSimplicialMap& zx = scene.map(sq.zx);
        const GSimplicialMap& zy = scene.map(sq.zy);
        const GSimplicialMap& xw = scene.map(sq.xw);
        const GSimplicialMap& yw = scene.map(sq.yw);
        if (!same_complex(zx.source, zy.source) || !same_complex(zx.target, xw.source) ||
            !same_complex(zy.target, yw.source) || !same_complex(xw.target, yw.target))
            throw ValidationError(where + ": map endpoints do not form a square");
        scene.squares.emplace(it.key(), std::move(sq));
    }

    const json& cube_defs = doc.contains("cubes") ? doc.at("cubes") : empty_object;
    if (!cube_defs.is_object()) throw ValidationError("\"cubes\" must be an object");
    for (auto it = cube_defs.begin(); it != cube_defs.end(); ++it) {
        const std::string where = "cube " + it.key();
        const json& arr = field(it.value(), "edges", where);
        if (!arr.is_array()) throw ValidationError(where + ": \"edges\" must be an array");
        SceneCube cube;
        for (const json& x : arr) {
            if (!x.is_string()) throw ValidationError(where + ": edge names must be strings");
            cube.edges.push_back(x.get<std::string>());
            scene.map(cube.edges.back());
        }
        scene.cubes.emplace(it.key(), std::move(cube));
    }

    return scene;
}

// ---------------------------------------------------------------------------
// Report helpers

static ordered_json ext_json(const ExtInt& v) {
    if (v.is_finite()) return v.value;
    return v.to_string();
}

static std::string conn_text(const Connectivity& c) {
    return c.value.to_string() + (c.homological_caveat ? " [caveat]" : "");
}

static ordered_json connfn_json(const ConnFn& f) {
    ordered_json rows = ordered_json::array();
    for (const auto& [key, c] : f.values) {
        ordered_json row;
        row["chain"] = key;
        row["connectivity"] = ext_json(c.value);
        row["homological_caveat"] = c.homological_caveat;
        rows.push_back(std::move(row));
    }
    return rows;
}

static ordered_json homology_json(const HomologyResult& h, bool empty_complex) {
    ordered_json betti = ordered_json::array();
    ordered_json torsion = ordered_json::array();
    ordered_json reduced = ordered_json::array();
    for (size_t d = 0; d < h.degrees.size(); ++d) {
        betti.push_back(h.degrees[d].betti);
        ordered_json t = ordered_json::array();
        for (const Int& x : h.degrees[d].torsion) t.push_back(x.str());
        torsion.push_back(std::move(t));
        reduced.push_back(h.reduced_betti(static_cast<int>(d), empty_complex));
    }
    ordered_json out;
    out["betti"] = std::move(betti);
    out["torsion"] = std::move(torsion);
    out["reduced_betti"] = std::move(reduced);
    return out;
}

static std::string join_items(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

static std::string betti_string(const HomologyResult& h) {
    std::vector<std::string> parts;
    for (const auto& d : h.degrees) parts.push_back(std::to_string(d.betti));
    return parts.empty() ? "-" : join_items(parts, ",");
}

static std::string torsion_string(const HomologyResult& h) {
    std::vector<std::string> parts;
    for (size_t d = 0; d < h.degrees.size(); ++d) {
        if (h.degrees[d].torsion.empty()) continue;
        std::vector<std::string> fs;
        for (const Int& x : h.degrees[d].torsion) fs.push_back(x.str());
        parts.push_back(std::to_string(d) + ":" + join_items(fs, "*"));
    }
    return parts.empty() ? "-" : join_items(parts, " ");
}

static std::string render_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths(header.size());
    for (size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(header);
    std::vector<std::string> rule;
    for (size_t w : widths) rule.push_back(std::string(w, '-'));
    emit(rule);
    for (const auto& row : rows) emit(row);
    return out.str();
}

static std::vector<SubgroupChain> requested_chains(const FiniteGroup& g, const RunFlags& flags) {
    if (!flags.chain.empty()) return {parse_chain(g, flags.chain)};
    return class_representatives(g, flags.mode, flags.max_chain_length);
}

static LinkComplex model_for(const GSimplicialComplex& x, const SubgroupChain& chain,
                             LinkMode mode, const std::string& space_id) {
    if (mode == LinkMode::Isovariant) return chain_link_model(x, chain, space_id);
    if (chain.length() != 0)
        throw ModeMismatch("equivariant links take a single subgroup, got a chain of length " +
                           std::to_string(chain.length()));
    return fixed_point_link(x, chain.top(), space_id);
}

// ---------------------------------------------------------------------------
// Subcommands

RunResult run_links(const SceneFile& scene, const std::string& space, const RunFlags& flags) {
    const GSimplicialComplex& x = scene.space(space);
    const FiniteGroup& g = x.group();
    RunResult r;
    ordered_json results = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (const SubgroupChain& chain : requested_chains(g, flags)) {
        LinkComplex model = model_for(x, chain, flags.mode, space);
        HomologyResult h = homology_of(model);
        Connectivity c = connectivity_of(model.complex);
        std::string key = chain_key(g, chain);

        ordered_json entry;
        entry["chain"] = key;
        entry["dimension"] = model.complex.dimension();
        entry["f_vector"] = model.complex.f_vector();
        entry["homology"] = homology_json(h, model.complex.is_empty());
        entry["connectivity"] = ext_json(c.value);
        entry["homological_caveat"] = c.homological_caveat;
        entry["provisional"] = model.provisional;
        entry["intermediate_strata"] = model.intermediate_strata;
        results.push_back(std::move(entry));

        std::vector<std::string> fv;
        for (int n : model.complex.f_vector()) fv.push_back(std::to_string(n));
        std::vector<std::string> flags_text;
        if (model.provisional) flags_text.push_back("provisional");
        if (model.intermediate_strata) flags_text.push_back("intermediate-strata");
        rows.push_back({key, std::to_string(model.complex.dimension()),
                        fv.empty() ? "-" : join_items(fv, ","), betti_string(h),
                        torsion_string(h), conn_text(c),
                        flags_text.empty() ? "-" : join_items(flags_text, ",")});
    }
    r.document["command"] = "links";
    r.document["space"] = space;
    r.document["mode"] = mode_name(flags.mode);
    r.document["results"] = std::move(results);
    r.table = "links " + space + " (" + mode_name(flags.mode) + ")\n\n" +
              render_table({"chain", "dim", "f_vector", "betti", "torsion", "conn", "flags"},
                           rows);
    return r;
}

static std::vector<std::vector<std::string>> connfn_rows(const ConnFn& f) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, c] : f.values) rows.push_back({key, conn_text(c)});
    return rows;
}

RunResult run_conn(const SceneFile& scene, const std::string& map, const RunFlags& flags) {
    ConnFn f = measure_conn_fn(scene.map(map), flags.mode, flags.max_chain_length);
    RunResult r;
    r.document["command"] = "conn";
    r.document["map"] = map;
    r.document["mode"] = mode_name(flags.mode);
    r.document["table"] = connfn_json(f);
    r.table = "conn " + map + " (" + mode_name(flags.mode) + ")\n\n" +
              render_table({"chain", "connectivity"}, connfn_rows(f));
    return r;
}

RunResult run_bm(const SceneFile& scene, const std::string& square, const RunFlags& flags) {
    const SceneSquare& sq = scene.square(square);
    ConnFn a = measure_conn_fn(scene.map(sq.zx), flags.mode, flags.max_chain_length);
    ConnFn b = measure_conn_fn(scene.map(sq.zy), flags.mode, flags.max_chain_length);
    ConnFn bound = bm_pushout(a, b);
    RunResult r;
    r.document["command"] = "bm";
    r.document["square"] = square;
    r.document["mode"] = mode_name(flags.mode);
    r.document["inputs"] = ordered_json{{"zx", ordered_json{{"map", sq.zx}, {"table", connfn_json(a)}}},
                                        {"zy", ordered_json{{"map", sq.zy}, {"table", connfn_json(b)}}}};
    r.document["bound"] = connfn_json(bound);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, c] : bound.values)
        rows.push_back({key, conn_text(a.values.at(key)), conn_text(b.values.at(key)),
                        conn_text(c)});
    r.table = "bm " + square + " (" + mode_name(flags.mode) + ")\n\n" +
              render_table({"chain", sq.zx, sq.zy, "bound"}, rows);
    return r;
}

RunResult run_cube_bm(const SceneFile& scene, const std::string& cube, const RunFlags& flags) {
    RunResult r;
    r.document["command"] = "cube-bm";
    std::vector<ConnFn> edges;
    std::vector<std::string> edge_names;
    if (!cube.empty()) {
        const SceneCube& c = scene.cube(cube);
        for (const std::string& name : c.edges) {
            edges.push_back(measure_conn_fn(scene.map(name), flags.mode, flags.max_chain_length));
            edge_names.push_back(name);
        }
        r.document["cube"] = cube;
    } else {
        if (flags.cube_n < 2)
            throw ValidationError("cube-bm needs a named cube, or --n at least 2 with --const");
        if (flags.cube_const.empty())
            throw ValidationError("cube-bm with --n needs --const for the edge value");
        ExtInt value = parse_ext(flags.cube_const);
        ConnFn edge = constant_conn_fn(*scene.group, flags.mode, flags.max_chain_length, value);
        for (int i = 0; i < flags.cube_n; ++i) {
            edges.push_back(edge);
            edge_names.push_back("const " + value.to_string());
        }
        r.document["constant"] = ext_json(value);
    }
    int n = static_cast<int>(edges.size());
    ConnFn bound = bm_cube(n, edges);
    r.document["n"] = n;
    r.document["mode"] = mode_name(flags.mode);
    ordered_json edocs = ordered_json::array();
    for (int i = 0; i < n; ++i)
        edocs.push_back(ordered_json{{"edge", edge_names[i]}, {"table", connfn_json(edges[i])}});
    r.document["edges"] = std::move(edocs);
    r.document["bound"] = connfn_json(bound);
    std::vector<std::string> header{"chain"};
    for (const std::string& name : edge_names) header.push_back(name);
    header.push_back("bound");
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, c] : bound.values) {
        std::vector<std::string> row{key};
        for (const ConnFn& e : edges) row.push_back(conn_text(e.values.at(key)));
        row.push_back(conn_text(c));
        rows.push_back(std::move(row));
    }
    r.table = "cube-bm n=" + std::to_string(n) + " (" + mode_name(flags.mode) + ")\n\n" +
              render_table(header, rows);
    return r;
}

RunResult run_cocartesian(const SceneFile& scene, const std::string& square,
                          const RunFlags& flags) {
    const SceneSquare& sq = scene.square(square);
    const GSimplicialMap& zx = scene.map(sq.zx);
    const GSimplicialMap& zy = scene.map(sq.zy);
    const GSimplicialMap& xw = scene.map(sq.xw);
    const GSimplicialMap& yw = scene.map(sq.yw);
    for (int v : zx.source.complex().vertices())
        if (xw.vertex_map[zx.vertex_map[v]] != yw.vertex_map[zy.vertex_map[v]])
            throw NonCommuting("square " + square + " does not commute at vertex " +
                               std::to_string(v));

    const FiniteGroup& g = zx.source.group();
    RunResult r;
    ordered_json results = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    bool all_pass = true;
    for (const SubgroupChain& chain : requested_chains(g, flags)) {
        LinkMap mzx = induced_link_map(zx, chain, flags.mode);
        LinkMap mzy = induced_link_map(zy, chain, flags.mode);
        LinkMap mxw = induced_link_map(xw, chain, flags.mode);
        LinkMap myw = induced_link_map(yw, chain, flags.mode);
        CommutingSquare cs{mzx.source.complex, mzx.target.complex,
                           mzy.target.complex, mxw.target.complex,
                           mzx.vertex_map,     mzy.vertex_map,
                           mxw.vertex_map,     myw.vertex_map};
        bool ok = pushout_cone_check(cs);
        all_pass = all_pass && ok;
        std::string key = chain_key(g, chain);
        results.push_back(ordered_json{{"chain", key}, {"cocartesian", ok}});
        rows.push_back({key, ok ? "yes" : "NO"});
    }
    r.document["command"] = "cocartesian";
    r.document["square"] = square;
    r.document["mode"] = mode_name(flags.mode);
    r.document["results"] = std::move(results);
    r.document["pass"] = all_pass;
    r.exit_code = all_pass ? 0 : 1;
    r.table = "cocartesian " + square + " (" + mode_name(flags.mode) + ")\n\n" +
              render_table({"chain", "cocartesian"}, rows) + "\noverall: " +
              (all_pass ? "PASS" : "FAIL") + "\n";
    return r;
}

RunResult run_suspend(const SceneFile& scene, const std::string& space, const RunFlags& flags) {
    if (flags.times < 0) throw ValidationError("--times must be nonnegative");
    const GSimplicialComplex& x = scene.space(space);
    const FiniteGroup& g = x.group();
    RunResult r;
    ordered_json results = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (const SubgroupChain& chain : requested_chains(g, flags)) {
        LinkComplex model = model_for(x, chain, flags.mode, space);
        LinkComplex susp = link_suspension(model, flags.times);
        HomologyResult h = homology_of(susp);
        std::string key = chain_key(g, chain);
        ordered_json entry;
        entry["chain"] = key;
        entry["times"] = flags.times;
        entry["homology"] = homology_json(h, susp.complex.is_empty());
        entry["provisional"] = susp.provisional;
        results.push_back(std::move(entry));
        rows.push_back({key, std::to_string(flags.times), betti_string(h), torsion_string(h),
                        susp.provisional ? "provisional" : "-"});
    }
    r.document["command"] = "suspend";
    r.document["space"] = space;
    r.document["mode"] = mode_name(flags.mode);
    r.document["results"] = std::move(results);
    r.table = "suspend " + space + " x" + std::to_string(flags.times) + " (" +
              mode_name(flags.mode) + ")\n\n" +
              render_table({"chain", "times", "betti", "torsion", "flags"}, rows);
    return r;
}

RunResult run_freudenthal(const SceneFile& scene, const std::string& map_or_space,
                          const RunFlags& flags) {
    ConnFn base;
    std::string kind;
    if (scene.maps.count(map_or_space)) {
        base = measure_conn_fn(scene.map(map_or_space), flags.mode, flags.max_chain_length);
        kind = "map";
    } else if (scene.spaces.count(map_or_space)) {
        base = measure_space_conn(scene.space(map_or_space), flags.mode, flags.max_chain_length);
        kind = "space";
    } else {
        throw ValidationError("undefined map or space: " + map_or_space);
    }
    FreudenthalBounds bounds = freudenthal_suite(base);
    RunResult r;
    r.document["command"] = "freudenthal";
    r.document["target"] = map_or_space;
    r.document["kind"] = kind;
    r.document["mode"] = mode_name(flags.mode);
    r.document["conn"] = connfn_json(base);
    r.document["universe"] = connfn_json(bounds.universe_bound);
    r.document["freudenthal"] = connfn_json(bounds.freudenthal_bound);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, c] : base.values)
        rows.push_back({key, conn_text(c), conn_text(bounds.universe_bound.values.at(key)),
                        conn_text(bounds.freudenthal_bound.values.at(key))});
    r.table = "freudenthal " + map_or_space + " (" + kind + ", " + mode_name(flags.mode) +
              ")\n\n" + render_table({"chain", "conn", "universe", "freudenthal"}, rows);
    return r;
}

RunResult run_universe_check(const SceneFile& scene, const RunFlags& flags) {
    const FiniteGroup& g = *scene.group;
    RunResult r;
    bool all_pass = true;

    std::vector<Rational> samples{Rational(0), Rational(1, 10), Rational(1, 2), Rational(9, 10),
                                  Rational(1)};
    ordered_json extra = ordered_json::array();
    if (flags.seed) {
        std::mt19937_64 rng(*flags.seed);
        for (int i = 0; i < 8; ++i) {
            int q = 2 + static_cast<int>(rng() % 63);
            int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(q - 1));
            Rational s(p, q);
            samples.push_back(s);
            extra.push_back(s.str());
        }
    }

    std::vector<Subgroup> subgroups = enumerate_subgroups(g);
    ordered_json sums = ordered_json::array();
    std::vector<std::vector<std::string>> sum_rows;
    for (const Subgroup& h : subgroups) {
        Subgroup actual = isotropy_of_vector(g, subgroup_sum(g, h));
        bool ok = actual == h;
        all_pass = all_pass && ok;
        ordered_json entry;
        entry["subgroup"] = subgroup_name(g, h);
        entry["pass"] = ok;
        if (!ok) entry["actual"] = subgroup_name(g, actual);
        sums.push_back(std::move(entry));
        sum_rows.push_back({subgroup_name(g, h), ok ? "yes" : "NO"});
    }

    ordered_json pairs = ordered_json::array();
    std::vector<std::vector<std::string>> pair_rows;
    std::vector<std::string> witness_lines;
    for (const Subgroup& h : subgroups) {
        for (const Subgroup& k : subgroups) {
            if (!(h.subset_of(k)) || h == k) continue;
            SubgroupChain pair({h, k});
            std::string key = chain_key(g, pair);
            GammaReport gamma = gamma_path(g, h, k, samples);
            LiftReport lift = lifting_extension(g, constant_gamma_family(g, h, k),
                                                standard_disk_samples(), standard_s_samples());
            all_pass = all_pass && gamma.pass && lift.pass;
            ordered_json entry;
            entry["pair"] = key;
            entry["gamma_pass"] = gamma.pass;
            ordered_json gw = ordered_json::array();
            for (const GammaWitness& w : gamma.witnesses) {
                gw.push_back(ordered_json{{"s", w.s.str()},
                                          {"expected", subgroup_name(g, w.expected)},
                                          {"actual", subgroup_name(g, w.actual)}});
                witness_lines.push_back("  " + key + " gamma s=" + w.s.str() + ": expected " +
                                        subgroup_name(g, w.expected) + ", got " +
                                        subgroup_name(g, w.actual));
            }
            entry["gamma_witnesses"] = std::move(gw);
            entry["lift_pass"] = lift.pass;
            ordered_json lw = ordered_json::array();
            for (const LiftWitness& w : lift.witnesses) {
                lw.push_back(ordered_json{{"condition", w.condition},
                                          {"t", w.t.str()},
                                          {"s", w.s.str()},
                                          {"detail", w.detail}});
                witness_lines.push_back("  " + key + " lift " + w.condition + " t=" + w.t.str() +
                                        " s=" + w.s.str() + ": " + w.detail);
            }
            entry["lift_witnesses"] = std::move(lw);
            pairs.push_back(std::move(entry));
            pair_rows.push_back({key, gamma.pass ? "yes" : "NO", lift.pass ? "yes" : "NO"});
        }
    }

    r.document["command"] = "universe-check";
    r.document["group"] = subgroup_name(g, full_subgroup(g));
    r.document["order"] = g.order();
    ordered_json sample_list = ordered_json::array();
    for (const Rational& s : samples) sample_list.push_back(s.str());
    r.document["samples"] = std::move(sample_list);
    if (flags.seed) {
        r.document["seed"] = *flags.seed;
        r.document["extra_samples"] = std::move(extra);
    }
    r.document["sums"] = std::move(sums);
    r.document["pairs"] = std::move(pairs);
    r.document["pass"] = all_pass;
    r.exit_code = all_pass ? 0 : 1;

    std::ostringstream t;
    t << "universe-check " << subgroup_name(g, full_subgroup(g)) << " (order " << g.order()
      << ")\n\nsubgroup sums:\n"
      << render_table({"subgroup", "isotropy ok"}, sum_rows) << "\nstrict pairs:\n"
      << render_table({"pair", "gamma", "lift"}, pair_rows);
    if (!witness_lines.empty()) {
        t << "\nwitnesses:\n";
        for (const std::string& line : witness_lines) t << line << "\n";
    }
    t << "\noverall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    r.table = t.str();
    return r;
}

RunResult run_command(const SceneFile& scene, const std::string& command,
                      const std::string& target, const RunFlags& flags) {
    try {
        if (command == "links") return run_links(scene, target, flags);
        if (command == "conn") return run_conn(scene, target, flags);
        if (command == "bm") return run_bm(scene, target, flags);
        if (command == "cube-bm") return run_cube_bm(scene, target, flags);
        if (command == "cocartesian") return run_cocartesian(scene, target, flags);
        if (command == "suspend") return run_suspend(scene, target, flags);
        if (command == "freudenthal") return run_freudenthal(scene, target, flags);
        if (command == "universe-check") return run_universe_check(scene, flags);
        throw ValidationError("unknown command: " + command);
    } catch (const Error& e) {
        RunResult r;
        r.exit_code = 2;
        r.document = ordered_json{{"error", e.what()}};
        r.table = std::string("error: ") + e.what() + "\n";
        return r;
    }
}

} // namespace isolink
