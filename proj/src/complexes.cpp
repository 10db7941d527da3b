#include "isolink/complexes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace isolink {

namespace {

std::string simplex_text(const Simplex& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s[i];
    }
    os << "}";
    return os.str();
}

bool strict_subset(const Simplex& a, const Simplex& b) {
    return a.size() < b.size() &&
           std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool groups_equal(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) {
        return false;
    }
    for (int x = 0; x < a.order(); ++x) {
        for (int y = 0; y < a.order(); ++y) {
            if (a.mul(x, y) != b.mul(x, y)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

size_t SimplicialComplex::SimplexHash::operator()(const Simplex& s) const {
    size_t h = 1469598103934665603ull;
    for (int v : s) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

SimplicialComplex SimplicialComplex::from_simplices(int id_space, std::vector<Simplex> simplices) {
    SimplicialComplex out;
    out.id_space_ = id_space;
    std::set<Simplex> closed;
    std::queue<Simplex> todo;
    for (Simplex& s : simplices) {
        if (s.empty()) {
            throw ValidationError("empty simplex is not allowed");
        }
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw ValidationError("simplex is not strictly sorted: " + simplex_text(s));
        }
        if (s.front() < 0 || s.back() >= id_space) {
            throw ValidationError("vertex id out of range in " + simplex_text(s));
        }
        if (closed.insert(s).second) {
            todo.push(s);
        }
    }
    while (!todo.empty()) {
        Simplex s = todo.front();
        todo.pop();
        if (s.size() == 1) {
            continue;
        }
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (size_t j = 0; j < s.size(); ++j) {
                if (j != i) {
                    face.push_back(s[j]);
                }
            }
            if (closed.insert(face).second) {
                todo.push(face);
            }
        }
    }
    out.simplices_.assign(closed.begin(), closed.end());
    std::sort(out.simplices_.begin(), out.simplices_.end(), simplex_less);
    for (int i = 0; i < static_cast<int>(out.simplices_.size()); ++i) {
        out.index_[out.simplices_[i]] = i;
    }
    return out;
}

int SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

int SimplicialComplex::dimension() const {
    if (simplices_.empty()) {
        return -1;
    }
    return static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f(dimension() + 1, 0);
    for (const Simplex& s : simplices_) {
        ++f[s.size() - 1];
    }
    return f;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::vector<int> out;
    for (const Simplex& s : simplices_) {
        if (s.size() != 1) {
            break;
        }
        out.push_back(s[0]);
    }
    return out;
}

int SimplicialComplex::vertex_count() const {
    int n = 0;
    for (const Simplex& s : simplices_) {
        if (s.size() != 1) {
            break;
        }
        ++n;
    }
    return n;
}

SimplicialComplex cone(const SimplicialComplex& x) {
    const int apex = x.id_space();
    std::vector<Simplex> simplices = x.simplices();
    simplices.push_back({apex});
    for (const Simplex& s : x.simplices()) {
        Simplex c = s;
        c.push_back(apex);
        simplices.push_back(c);
    }
    return SimplicialComplex::from_simplices(apex + 1, std::move(simplices));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
    const int north = x.id_space();
    const int south = north + 1;
    std::vector<Simplex> simplices = x.simplices();
    simplices.push_back({north});
    simplices.push_back({south});
    for (const Simplex& s : x.simplices()) {
        Simplex a = s;
        a.push_back(north);
        simplices.push_back(a);
        Simplex b = s;
        b.push_back(south);
        simplices.push_back(b);
    }
    return SimplicialComplex::from_simplices(south + 1, std::move(simplices));
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
    const int shift = x.id_space();
    std::vector<Simplex> simplices = x.simplices();
    std::vector<Simplex> shifted;
    shifted.reserve(y.simplices().size());
    for (const Simplex& s : y.simplices()) {
        Simplex t = s;
        for (int& v : t) {
            v += shift;
        }
        shifted.push_back(t);
        simplices.push_back(t);
    }
    for (const Simplex& a : x.simplices()) {
        for (const Simplex& b : shifted) {
            Simplex u = a;
            u.insert(u.end(), b.begin(), b.end());
            simplices.push_back(u);
        }
    }
    return SimplicialComplex::from_simplices(shift + y.id_space(), std::move(simplices));
}

IndexedSubdivision subdivision_indexed(const SimplicialComplex& x) {
    IndexedSubdivision out;
    out.barycenter_source = x.simplices();
    const int m = static_cast<int>(out.barycenter_source.size());
    // Strict face relations; canonical order puts faces before cofaces.
    std::vector<std::vector<int>> successors(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (strict_subset(out.barycenter_source[i], out.barycenter_source[j])) {
                successors[i].push_back(j);
            }
        }
    }
    std::vector<Simplex> chains;
    Simplex current;
    auto grow = [&](auto&& self, int last) -> void {
        for (int next : successors[last]) {
            current.push_back(next);
            chains.push_back(current);
            self(self, next);
            current.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) {
        current.assign(1, i);
        chains.push_back(current);
        grow(grow, i);
    }
    out.complex = SimplicialComplex::from_simplices(m, std::move(chains));
    return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x) {
    return subdivision_indexed(x).complex;
}

SimplicialComplex standard_simplex(int n) {
    Simplex top(n + 1);
    std::iota(top.begin(), top.end(), 0);
    return SimplicialComplex::from_simplices(n + 1, {top});
}

GSimplicialComplex::GSimplicialComplex(GroupPtr group, SimplicialComplex complex,
                                       std::vector<std::vector<int>> action)
    : group_(std::move(group)), complex_(std::move(complex)), action_(std::move(action)) {
    if (!group_) {
        throw ValidationError("complex needs a group");
    }
    const int n = group_->order();
    const int ids = complex_.id_space();
    if (static_cast<int>(action_.size()) != n) {
        throw ValidationError("action must have one row per group element");
    }
    for (int g = 0; g < n; ++g) {
        if (static_cast<int>(action_[g].size()) != ids) {
            throw ValidationError("action row " + std::to_string(g) + " has wrong length");
        }
        std::vector<bool> seen(ids, false);
        for (int v = 0; v < ids; ++v) {
            int w = action_[g][v];
            if (w < 0 || w >= ids || seen[w]) {
                throw ValidationError("action row " + std::to_string(g) +
                                      " is not a permutation");
            }
            seen[w] = true;
        }
    }
    for (int v = 0; v < ids; ++v) {
        if (action_[0][v] != v) {
            throw ValidationError("identity must act trivially");
        }
    }
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            int gh = group_->mul(g, h);
            for (int v = 0; v < ids; ++v) {
                if (action_[g][action_[h][v]] != action_[gh][v]) {
                    throw ValidationError("action is not a homomorphism at elements " +
                                          std::to_string(g) + "," + std::to_string(h));
                }
            }
        }
    }
    for (int g = 0; g < n; ++g) {
        for (const Simplex& s : complex_.simplices()) {
            if (!complex_.contains(act_simplex(g, s))) {
                throw ValidationError("element " + std::to_string(g) +
                                      " does not preserve simplex " + simplex_text(s));
            }
        }
    }
    rigid_ = !rigidity_witness().has_value();
}

Simplex GSimplicialComplex::act_simplex(int g, const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) {
        out.push_back(action_[g][v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Simplex> GSimplicialComplex::rigidity_witness() const {
    for (int g = 1; g < group_->order(); ++g) {
        for (const Simplex& s : complex_.simplices()) {
            if (s.size() == 1) {
                continue;
            }
            if (act_simplex(g, s) == s) {
                for (int v : s) {
                    if (action_[g][v] != v) {
                        return s;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

Subgroup GSimplicialComplex::vertex_stabilizer(int v) const {
    std::vector<int> members;
    for (int g = 0; g < group_->order(); ++g) {
        if (action_[g][v] == v) {
            members.push_back(g);
        }
    }
    return Subgroup{members};
}

Subgroup GSimplicialComplex::simplex_isotropy(const Simplex& s) const {
    if (!rigid_) {
        throw NotRigid("isotropy labels need a rigid action");
    }
    std::vector<int> members;
    for (int g = 0; g < group_->order(); ++g) {
        bool fixes = true;
        for (int v : s) {
            if (action_[g][v] != v) {
                fixes = false;
                break;
            }
        }
        if (fixes) {
            members.push_back(g);
        }
    }
    return Subgroup{members};
}

namespace {

/// Vertices of the coset order complex: (chain level, sorted coset members).
struct CosetVertex {
    int level;
    std::vector<int> members;

    bool operator<(const CosetVertex& other) const {
        if (level != other.level) {
            return level < other.level;
        }
        return members < other.members;
    }
    bool operator==(const CosetVertex& other) const {
        return level == other.level && members == other.members;
    }
};

std::vector<int> coset_of(const FiniteGroup& g, const Subgroup& h, int rep) {
    std::vector<int> members;
    members.reserve(h.members.size());
    for (int x : h.members) {
        members.push_back(g.mul(rep, x));
    }
    std::sort(members.begin(), members.end());
    return members;
}

GSimplicialComplex coset_order_complex(const GroupPtr& group, const SubgroupChain& chain,
                                       bool boundary_only) {
    const FiniteGroup& g = *group;
    const int n = chain.length();
    std::vector<CosetVertex> verts;
    for (int level = 0; level <= n; ++level) {
        std::set<std::vector<int>> cosets;
        for (int rep = 0; rep < g.order(); ++rep) {
            cosets.insert(coset_of(g, chain.subgroups[level], rep));
        }
        for (const auto& members : cosets) {
            verts.push_back(CosetVertex{level, members});
        }
    }
    std::sort(verts.begin(), verts.end());
    std::map<CosetVertex, int> vertex_id;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        vertex_id[verts[i]] = i;
    }
    const int m = static_cast<int>(verts.size());
    std::vector<std::vector<int>> successors(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (verts[i].level < verts[j].level &&
                std::includes(verts[j].members.begin(), verts[j].members.end(),
                              verts[i].members.begin(), verts[i].members.end())) {
                successors[i].push_back(j);
            }
        }
    }
    std::vector<Simplex> chains;
    Simplex current;
    std::vector<bool> levels_used(n + 1, false);
    auto emit = [&]() {
        if (!boundary_only) {
            chains.push_back(current);
            return;
        }
        for (int level = 0; level <= n; ++level) {
            if (!levels_used[level]) {
                chains.push_back(current);
                return;
            }
        }
    };
    auto grow = [&](auto&& self, int last) -> void {
        for (int next : successors[last]) {
            current.push_back(next);
            levels_used[verts[next].level] = true;
            emit();
            self(self, next);
            levels_used[verts[next].level] = false;
            current.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) {
        current.assign(1, i);
        levels_used[verts[i].level] = true;
        emit();
        grow(grow, i);
        levels_used[verts[i].level] = false;
    }
    SimplicialComplex complex = SimplicialComplex::from_simplices(m, std::move(chains));
    std::vector<std::vector<int>> action(g.order(), std::vector<int>(m));
    for (int x = 0; x < g.order(); ++x) {
        for (int i = 0; i < m; ++i) {
            std::vector<int> translated;
            translated.reserve(verts[i].members.size());
            for (int c : verts[i].members) {
                translated.push_back(g.mul(x, c));
            }
            std::sort(translated.begin(), translated.end());
            action[x][i] = vertex_id.at(CosetVertex{verts[i].level, translated});
        }
    }
    return GSimplicialComplex(group, std::move(complex), std::move(action));
}

} // namespace

GSimplicialComplex linking_simplex(const GroupPtr& group, const SubgroupChain& chain) {
    return coset_order_complex(group, chain, false);
}

GSimplicialComplex boundary_linking_simplex(const GroupPtr& group, const SubgroupChain& chain) {
    return coset_order_complex(group, chain, true);
}

GSimplicialComplex barycentric_subdivision(const GSimplicialComplex& x) {
    IndexedSubdivision sd = subdivision_indexed(x.complex());
    const int m = static_cast<int>(sd.barycenter_source.size());
    std::vector<std::vector<int>> action(x.group().order(), std::vector<int>(m));
    for (int g = 0; g < x.group().order(); ++g) {
        for (int i = 0; i < m; ++i) {
            action[g][i] = x.complex().index_of(x.act_simplex(g, sd.barycenter_source[i]));
        }
    }
    return GSimplicialComplex(x.group_ptr(), std::move(sd.complex), std::move(action));
}

GSimplicialComplex make_rigid(const GSimplicialComplex& x) {
    if (x.rigid()) {
        return x;
    }
    GSimplicialComplex sd = barycentric_subdivision(x);
    if (!sd.rigid()) {
        throw NotRigid("subdivision failed to produce a rigid action");
    }
    return sd;
}

namespace {

GSimplicialComplex with_fixed_apexes(const GSimplicialComplex& x, int apex_count,
                                     SimplicialComplex grown) {
    std::vector<std::vector<int>> action(x.group().order());
    for (int g = 0; g < x.group().order(); ++g) {
        action[g] = x.action()[g];
        for (int a = 0; a < apex_count; ++a) {
            action[g].push_back(x.complex().id_space() + a);
        }
    }
    return GSimplicialComplex(x.group_ptr(), std::move(grown), std::move(action));
}

} // namespace

GSimplicialComplex cone(const GSimplicialComplex& x) {
    return with_fixed_apexes(x, 1, cone(x.complex()));
}

GSimplicialComplex suspension(const GSimplicialComplex& x) {
    return with_fixed_apexes(x, 2, suspension(x.complex()));
}

GSimplicialComplex join(const GSimplicialComplex& x, const GSimplicialComplex& y) {
    if (x.group_ptr() != y.group_ptr() && !groups_equal(x.group(), y.group())) {
        throw ValidationError("join requires complexes over the same group");
    }
    SimplicialComplex joined = join(x.complex(), y.complex());
    const int shift = x.complex().id_space();
    std::vector<std::vector<int>> action(x.group().order());
    for (int g = 0; g < x.group().order(); ++g) {
        action[g] = x.action()[g];
        for (int v : y.action()[g]) {
            action[g].push_back(v + shift);
        }
    }
    return GSimplicialComplex(x.group_ptr(), std::move(joined), std::move(action));
}

namespace {

GSimplicialComplex summand_sphere(const GroupPtr& group, const RepGenerator& summand) {
    const FiniteGroup& g = *group;
    const int n = g.order();
    const int gen = g.cyclic_generator();
    // Discrete log along the chosen generator.
    std::vector<int> power_index(n, -1);
    {
        int x = 0;
        for (int j = 0; j < n; ++j) {
            power_index[x] = j;
            x = g.mul(x, gen);
        }
    }
    switch (summand.kind) {
    case RepGenerator::Kind::Trivial: {
        SimplicialComplex two = SimplicialComplex::from_simplices(2, {{0}, {1}});
        std::vector<std::vector<int>> action(n, {0, 1});
        return GSimplicialComplex(group, std::move(two), std::move(action));
    }
    case RepGenerator::Kind::Sign: {
        if (n % 2 != 0) {
            throw UnsupportedRepresentation("sign summand needs a group of even order");
        }
        SimplicialComplex two = SimplicialComplex::from_simplices(2, {{0}, {1}});
        std::vector<std::vector<int>> action(n);
        for (int a = 0; a < n; ++a) {
            action[a] = (power_index[a] % 2 == 0) ? std::vector<int>{0, 1}
                                                  : std::vector<int>{1, 0};
        }
        return GSimplicialComplex(group, std::move(two), std::move(action));
    }
    case RepGenerator::Kind::Rotation: {
        int k = ((summand.rotation_k % n) + n) % n;
        if (k == 0) {
            throw UnsupportedRepresentation(
                "rotation speed 0 is a pair of trivial summands; use those instead");
        }
        const int d = n / std::gcd(k, n);
        if (d < 2) {
            throw UnsupportedRepresentation("rotation must act nontrivially");
        }
        int sides = d;
        while (sides < 3) {
            sides += d;
        }
        std::vector<Simplex> edges;
        for (int i = 0; i < sides; ++i) {
            Simplex e{i, (i + 1) % sides};
            std::sort(e.begin(), e.end());
            edges.push_back(e);
        }
        SimplicialComplex polygon = SimplicialComplex::from_simplices(sides, std::move(edges));
        const int step = k * sides / n;
        std::vector<std::vector<int>> action(n, std::vector<int>(sides));
        for (int a = 0; a < n; ++a) {
            int shift = (power_index[a] * step) % sides;
            for (int v = 0; v < sides; ++v) {
                action[a][v] = (v + shift) % sides;
            }
        }
        return GSimplicialComplex(group, std::move(polygon), std::move(action));
    }
    }
    throw UnsupportedRepresentation("unknown summand kind");
}

} // namespace

GSimplicialComplex rep_sphere(const GroupPtr& group, const std::vector<RepGenerator>& summands) {
    if (!group->is_cyclic()) {
        throw UnsupportedRepresentation("representation spheres are built for cyclic groups");
    }
    if (summands.empty()) {
        throw UnsupportedRepresentation("representation must have dimension at least 1");
    }
    GSimplicialComplex sphere = summand_sphere(group, summands[0]);
    for (size_t i = 1; i < summands.size(); ++i) {
        sphere = join(sphere, summand_sphere(group, summands[i]));
    }
    return sphere;
}

GSimplicialComplex rep_disk(const GroupPtr& group, const std::vector<RepGenerator>& summands) {
    return cone(rep_sphere(group, summands));
}

GSimplicialComplex rep_compactification(const GroupPtr& group,
                                        const std::vector<RepGenerator>& summands) {
    return suspension(rep_sphere(group, summands));
}

namespace {

bool fixed_by_all(const GSimplicialComplex& x, const Subgroup& h, const Simplex& s) {
    for (int g : h.members) {
        for (int v : s) {
            if (x.act(g, v) != v) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

SimplicialComplex fixed_subcomplex_plain(const GSimplicialComplex& x, const Subgroup& h) {
    if (!x.rigid()) {
        throw NotRigid("fixed subcomplexes need a rigid action");
    }
    std::vector<Simplex> kept;
    for (const Simplex& s : x.complex().simplices()) {
        if (fixed_by_all(x, h, s)) {
            kept.push_back(s);
        }
    }
    return SimplicialComplex::from_simplices(x.complex().id_space(), std::move(kept));
}

GSimplicialComplex fixed_subcomplex(const GSimplicialComplex& x, const Subgroup& h) {
    SimplicialComplex sub = fixed_subcomplex_plain(x, h);
    const Subgroup norm = normalizer(x.group(), h);
    const int m = norm.order();
    std::map<int, int> reindex;
    for (int i = 0; i < m; ++i) {
        reindex[norm.members[i]] = i;
    }
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            table[i][j] = reindex.at(x.group().mul(norm.members[i], norm.members[j]));
        }
    }
    auto residual = std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(table)));
    std::vector<std::vector<int>> action(m);
    for (int i = 0; i < m; ++i) {
        action[i] = x.action()[norm.members[i]];
    }
    return GSimplicialComplex(residual, std::move(sub), std::move(action));
}

GSimplicialMap::GSimplicialMap(GSimplicialComplex src, GSimplicialComplex dst,
                               std::vector<int> vm)
    : source(std::move(src)), target(std::move(dst)), vertex_map(std::move(vm)) {
    if (source.group_ptr() != target.group_ptr() &&
        !groups_equal(source.group(), target.group())) {
        throw ValidationError("map endpoints live over different groups");
    }
    if (static_cast<int>(vertex_map.size()) != source.complex().id_space()) {
        throw ValidationError("vertex map must cover the source id space");
    }
    for (int v : source.complex().vertices()) {
        int w = vertex_map[v];
        if (w < 0 || w >= target.complex().id_space() || !target.complex().contains({w})) {
            throw ValidationError("vertex " + std::to_string(v) +
                                  " maps outside the target complex");
        }
    }
    for (const Simplex& s : source.complex().simplices()) {
        if (!target.complex().contains(image(s))) {
            throw ValidationError("image of simplex " + simplex_text(s) +
                                  " is not a simplex of the target");
        }
    }
    for (int g = 0; g < source.group().order(); ++g) {
        for (int v : source.complex().vertices()) {
            if (vertex_map[source.act(g, v)] != target.act(g, vertex_map[v])) {
                throw ValidationError("map is not equivariant at element " + std::to_string(g) +
                                      ", vertex " + std::to_string(v));
            }
        }
    }
}

Simplex GSimplicialMap::image(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) {
        out.push_back(vertex_map[v]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GSimplicialMap identity_map(const GSimplicialComplex& x) {
    std::vector<int> vm(x.complex().id_space());
    std::iota(vm.begin(), vm.end(), 0);
    return GSimplicialMap(x, x, std::move(vm));
}

GSimplicialMap compose(const GSimplicialMap& g, const GSimplicialMap& f) {
    if (f.target.complex().simplices() != g.source.complex().simplices()) {
        throw ValidationError("maps are not composable");
    }
    std::vector<int> vm(f.source.complex().id_space(), 0);
    for (int v : f.source.complex().vertices()) {
        vm[v] = g.vertex_map[f.vertex_map[v]];
    }
    return GSimplicialMap(f.source, g.target, std::move(vm));
}

GSimplicialMap inclusion_map(const GSimplicialComplex& sub, const GSimplicialComplex& whole) {
    std::vector<int> vm(sub.complex().id_space());
    std::iota(vm.begin(), vm.end(), 0);
    return GSimplicialMap(sub, whole, std::move(vm));
}

GSimplicialMap subdivision_map(const GSimplicialMap& f) {
    GSimplicialComplex sd_src = barycentric_subdivision(f.source);
    GSimplicialComplex sd_dst = barycentric_subdivision(f.target);
    const auto& sources = f.source.complex().simplices();
    std::vector<int> vm(sources.size());
    for (size_t i = 0; i < sources.size(); ++i) {
        vm[i] = f.target.complex().index_of(f.image(sources[i]));
    }
    return GSimplicialMap(std::move(sd_src), std::move(sd_dst), std::move(vm));
}

IsovarianceCheck is_isovariant(const GSimplicialMap& f) {
    if (!f.source.rigid() || !f.target.rigid()) {
        throw NotRigid("isovariance is checked on rigid complexes");
    }
    for (const Simplex& s : f.source.complex().simplices()) {
        if (!(f.source.simplex_isotropy(s) == f.target.simplex_isotropy(f.image(s)))) {
            return IsovarianceCheck{false, s};
        }
    }
    return IsovarianceCheck{true, std::nullopt};
}

SimplicialComplex orbit_space(const GSimplicialComplex& x) {
    if (!x.rigid()) {
        throw NotRigid("orbit spaces need a rigid action");
    }
    const int ids = x.complex().id_space();
    std::vector<int> root(ids);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    for (int g = 0; g < x.group().order(); ++g) {
        for (int v : x.complex().vertices()) {
            int a = find(v), b = find(x.act(g, v));
            if (a != b) {
                root[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::map<int, int> orbit_id;
    for (int v : x.complex().vertices()) {
        int r = find(v);
        if (!orbit_id.count(r)) {
            int next = static_cast<int>(orbit_id.size());
            orbit_id[r] = next;
        }
    }
    std::set<Simplex> images;
    for (const Simplex& s : x.complex().simplices()) {
        Simplex img;
        img.reserve(s.size());
        for (int v : s) {
            img.push_back(orbit_id.at(find(v)));
        }
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        images.insert(img);
    }
    return SimplicialComplex::from_simplices(static_cast<int>(orbit_id.size()),
                                             std::vector<Simplex>(images.begin(), images.end()));
}

} // namespace isolink
