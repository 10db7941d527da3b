#include "isolink/conncalc.hpp"

#include <algorithm>
#include <set>

namespace isolink {

namespace {

/// Canonical class representatives: minimal chains under simultaneous
/// conjugation, deduplicated, sorted by their display key.
std::vector<SubgroupChain> representatives(const FiniteGroup& g, LinkMode mode,
                                           int max_chain_length) {
    const int max_len = mode == LinkMode::Isovariant ? max_chain_length : 0;
    std::set<SubgroupChain> classes;
    for (const SubgroupChain& chain : enumerate_chains(g, max_len)) {
        classes.insert(chain_class(g, chain).canonical);
    }
    std::vector<SubgroupChain> out(classes.begin(), classes.end());
    std::sort(out.begin(), out.end(), [&](const SubgroupChain& a, const SubgroupChain& b) {
        return chain_key(g, a) < chain_key(g, b);
    });
    return out;
}

void require_same_shape(const ConnFn& a, const ConnFn& b, const char* what) {
    if (a.mode != b.mode) {
        throw ModeMismatch(std::string(what) + " needs matching modes");
    }
    if (a.values.size() != b.values.size() ||
        !std::equal(a.values.begin(), a.values.end(), b.values.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; })) {
        throw ModeMismatch(std::string(what) + " needs matching class keys");
    }
}

} // namespace

std::vector<SubgroupChain> class_representatives(const FiniteGroup& g, LinkMode mode,
                                                 int max_chain_length) {
    return representatives(g, mode, max_chain_length);
}

std::vector<std::string> class_keys(const FiniteGroup& g, LinkMode mode, int max_chain_length) {
    std::vector<std::string> keys;
    for (const SubgroupChain& chain : representatives(g, mode, max_chain_length)) {
        keys.push_back(chain_key(g, chain));
    }
    return keys;
}

ConnFn constant_conn_fn(const FiniteGroup& g, LinkMode mode, int max_chain_length,
                        const ExtInt& value) {
    ConnFn out;
    out.mode = mode;
    for (const std::string& key : class_keys(g, mode, max_chain_length)) {
        out.values[key] = Connectivity{value, false};
    }
    return out;
}

ConnFn measure_conn_fn(const GSimplicialMap& f, LinkMode mode, int max_chain_length) {
    ConnFn out;
    out.mode = mode;
    const FiniteGroup& g = f.source.group();
    for (const SubgroupChain& chain : representatives(g, mode, max_chain_length)) {
        LinkMap link = induced_link_map(f, chain, mode);
        Connectivity conn = map_connectivity(link);
        conn.homological_caveat = conn.homological_caveat || link.source.provisional ||
                                  link.target.provisional;
        out.values[chain_key(g, chain)] = conn;
    }
    return out;
}

ConnFn measure_space_conn(const GSimplicialComplex& x, LinkMode mode, int max_chain_length) {
    ConnFn out;
    out.mode = mode;
    const FiniteGroup& g = x.group();
    for (const SubgroupChain& chain : representatives(g, mode, max_chain_length)) {
        LinkComplex link = mode == LinkMode::Isovariant
                               ? chain_link_model(x, chain)
                               : fixed_point_link(x, chain.bottom());
        Connectivity conn = connectivity_of(link.complex);
        conn.homological_caveat = conn.homological_caveat || link.provisional;
        out.values[chain_key(g, chain)] = conn;
    }
    return out;
}

ConnFn bm_pushout(const ConnFn& n, const ConnFn& m) {
    require_same_shape(n, m, "pushout estimate");
    ConnFn out;
    out.mode = n.mode;
    for (const auto& [key, a] : n.values) {
        const Connectivity& b = m.values.at(key);
        out.values[key] = Connectivity{ext_add(ext_add(a.value, b.value), -1),
                                       a.homological_caveat || b.homological_caveat};
    }
    return out;
}

ConnFn bm_cube(int n, const std::vector<ConnFn>& edges) {
    if (n < 2) {
        throw WrongArity("cube estimate needs dimension at least 2");
    }
    if (static_cast<int>(edges.size()) != n) {
        throw WrongArity("cube estimate for dimension " + std::to_string(n) + " needs " +
                         std::to_string(n) + " edge functions, got " +
                         std::to_string(edges.size()));
    }
    for (size_t i = 1; i < edges.size(); ++i) {
        require_same_shape(edges[0], edges[i], "cube estimate");
    }
    ConnFn out;
    out.mode = edges[0].mode;
    for (const auto& [key, first] : edges[0].values) {
        ExtInt total = ExtInt::finite(1 - n);
        bool caveat = false;
        for (const ConnFn& edge : edges) {
            const Connectivity& c = edge.values.at(key);
            total = ext_add(total, c.value);
            caveat = caveat || c.homological_caveat;
        }
        (void)first;
        out.values[key] = Connectivity{total, caveat};
    }
    return out;
}

FreudenthalBounds freudenthal_suite(const ConnFn& n) {
    if (n.mode != LinkMode::Isovariant) {
        throw ModeMismatch("suspension bounds are stated for isovariant connectivity");
    }
    FreudenthalBounds out;
    out.universe_bound.mode = n.mode;
    for (const auto& [key, c] : n.values) {
        out.universe_bound.values[key] =
            Connectivity{ext_add(c.value, 1), c.homological_caveat};
    }
    out.freudenthal_bound = bm_pushout(out.universe_bound, out.universe_bound);
    return out;
}

} // namespace isolink
