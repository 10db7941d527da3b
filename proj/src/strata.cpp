#include "isolink/strata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isolink {

std::string mode_name(LinkMode mode) {
    return mode == LinkMode::Isovariant ? "isvt" : "eqvt";
}

namespace {

struct StratumData {
    /// Simplices of X fixed by H, in canonical order (= barycenters of Sd(X^H)).
    std::vector<Simplex> fixed;
    /// Exact isotropy of each fixed simplex, as an index into `levels`, or -1
    /// when the isotropy is not a chain level.
    std::vector<int> level_of;
    bool off_chain_stratum = false;
};

StratumData classify_fixed_part(const GSimplicialComplex& x, const SubgroupChain& chain) {
    if (!x.rigid()) {
        throw NotRigid("link models need a rigid action");
    }
    StratumData out;
    SimplicialComplex fixed = fixed_subcomplex_plain(x, chain.bottom());
    out.fixed = fixed.simplices();
    out.level_of.assign(out.fixed.size(), -1);
    for (size_t i = 0; i < out.fixed.size(); ++i) {
        Subgroup iso = x.simplex_isotropy(out.fixed[i]);
        for (size_t level = 0; level < chain.subgroups.size(); ++level) {
            if (iso == chain.subgroups[level]) {
                out.level_of[i] = static_cast<int>(level);
                break;
            }
        }
        if (out.level_of[i] < 0) {
            out.off_chain_stratum = true;
        }
    }
    return out;
}

} // namespace

LinkComplex stratum_model(const GSimplicialComplex& x, const Subgroup& h,
                          const std::string& space_id) {
    SubgroupChain chain({h});
    StratumData data = classify_fixed_part(x, chain);
    // Barycenters with exact isotropy H, compactly renumbered.
    std::vector<int> model_id(data.fixed.size(), -1);
    LinkComplex out;
    out.space_id = space_id;
    out.chain = chain;
    out.mode = LinkMode::Isovariant;
    int next = 0;
    for (size_t i = 0; i < data.fixed.size(); ++i) {
        if (data.level_of[i] == 0) {
            model_id[i] = next++;
            out.vertex_elements.push_back({data.fixed[i]});
        }
    }
    // Chains of exactly-H simplices are the simplices of the full subcomplex.
    std::vector<std::vector<int>> successors(data.fixed.size());
    for (size_t i = 0; i < data.fixed.size(); ++i) {
        if (model_id[i] < 0) {
            continue;
        }
        for (size_t j = i + 1; j < data.fixed.size(); ++j) {
            if (model_id[j] >= 0 && data.fixed[i].size() < data.fixed[j].size() &&
                std::includes(data.fixed[j].begin(), data.fixed[j].end(), data.fixed[i].begin(),
                              data.fixed[i].end())) {
                successors[i].push_back(static_cast<int>(j));
            }
        }
    }
    std::vector<Simplex> simplices;
    Simplex current;
    auto grow = [&](auto&& self, int last) -> void {
        for (int nxt : successors[last]) {
            current.push_back(model_id[nxt]);
            simplices.push_back(current);
            self(self, nxt);
            current.pop_back();
        }
    };
    for (size_t i = 0; i < data.fixed.size(); ++i) {
        if (model_id[i] < 0) {
            continue;
        }
        current.assign(1, model_id[i]);
        simplices.push_back(current);
        grow(grow, static_cast<int>(i));
    }
    out.complex = SimplicialComplex::from_simplices(next, std::move(simplices));
    return out;
}

LinkComplex chain_link_model(const GSimplicialComplex& x, const SubgroupChain& chain,
                             const std::string& space_id) {
    if (chain.length() == 0) {
        return stratum_model(x, chain.bottom(), space_id);
    }
    StratumData data = classify_fixed_part(x, chain);
    const int levels = chain.length() + 1;
    const int m = static_cast<int>(data.fixed.size());

    // Poset elements: chains of fixed simplices whose exact isotropies stay
    // on the subgroup chain and realize every level. Isotropy only drops
    // along a face chain, so levels are visited in decreasing order.
    std::vector<std::vector<int>> successors(m);
    for (int i = 0; i < m; ++i) {
        if (data.level_of[i] < 0) {
            continue;
        }
        for (int j = i + 1; j < m; ++j) {
            if (data.level_of[j] >= 0 && data.fixed[i].size() < data.fixed[j].size() &&
                data.level_of[j] <= data.level_of[i] &&
                std::includes(data.fixed[j].begin(), data.fixed[j].end(), data.fixed[i].begin(),
                              data.fixed[i].end())) {
                successors[i].push_back(j);
            }
        }
    }
    std::vector<std::vector<int>> elements;
    std::vector<int> current;
    std::vector<int> level_count(levels, 0);
    int levels_hit = 0;
    auto emit = [&]() {
        if (levels_hit == levels) {
            elements.push_back(current);
        }
    };
    auto push_level = [&](int level) {
        if (level_count[level]++ == 0) {
            ++levels_hit;
        }
    };
    auto pop_level = [&](int level) {
        if (--level_count[level] == 0) {
            --levels_hit;
        }
    };
    auto grow = [&](auto&& self, int last) -> void {
        for (int nxt : successors[last]) {
            current.push_back(nxt);
            push_level(data.level_of[nxt]);
            emit();
            self(self, nxt);
            pop_level(data.level_of[nxt]);
            current.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) {
        if (data.level_of[i] < 0) {
            continue;
        }
        current.assign(1, i);
        push_level(data.level_of[i]);
        emit();
        grow(grow, i);
        pop_level(data.level_of[i]);
    }
    // Elements sorted by (size, lex) give deterministic model vertex ids.
    std::sort(elements.begin(), elements.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });

    LinkComplex out;
    out.space_id = space_id;
    out.chain = chain;
    out.mode = LinkMode::Isovariant;
    out.intermediate_strata = data.off_chain_stratum;
    out.provisional = data.off_chain_stratum || chain.length() >= 2;
    const int p = static_cast<int>(elements.size());
    for (int i = 0; i < p; ++i) {
        std::vector<Simplex> member;
        member.reserve(elements[i].size());
        for (int idx : elements[i]) {
            member.push_back(data.fixed[idx]);
        }
        out.vertex_elements.push_back(std::move(member));
    }
    // Order complex of the element poset under componentwise containment
    // (equivalently containment of the underlying barycenter chains).
    std::vector<std::vector<int>> order_successors(p);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            if (elements[i].size() < elements[j].size() &&
                std::includes(elements[j].begin(), elements[j].end(), elements[i].begin(),
                              elements[i].end())) {
                order_successors[i].push_back(j);
            }
        }
    }
    std::vector<Simplex> simplices;
    Simplex flag;
    auto grow_flags = [&](auto&& self, int last) -> void {
        for (int nxt : order_successors[last]) {
            flag.push_back(nxt);
            simplices.push_back(flag);
            self(self, nxt);
            flag.pop_back();
        }
    };
    for (int i = 0; i < p; ++i) {
        flag.assign(1, i);
        simplices.push_back(flag);
        grow_flags(grow_flags, i);
    }
    out.complex = SimplicialComplex::from_simplices(p, std::move(simplices));
    return out;
}

LinkComplex fixed_point_link(const GSimplicialComplex& x, const Subgroup& h,
                             const std::string& space_id) {
    SimplicialComplex fixed = fixed_subcomplex_plain(x, h);
    LinkComplex out;
    out.space_id = space_id;
    out.chain = SubgroupChain({h});
    out.mode = LinkMode::Equivariant;
    std::map<int, int> compact;
    for (int v : fixed.vertices()) {
        int next = static_cast<int>(compact.size());
        compact[v] = next;
        out.vertex_elements.push_back({Simplex{v}});
    }
    std::vector<Simplex> simplices;
    simplices.reserve(fixed.simplices().size());
    for (const Simplex& s : fixed.simplices()) {
        Simplex t;
        t.reserve(s.size());
        for (int v : s) {
            t.push_back(compact.at(v));
        }
        simplices.push_back(t);
    }
    out.complex =
        SimplicialComplex::from_simplices(static_cast<int>(compact.size()), std::move(simplices));
    return out;
}

LinkComplex link_suspension(const LinkComplex& link, int times) {
    if (times < 0) {
        throw ValidationError("suspension count must be nonnegative");
    }
    LinkComplex out = link;
    for (int i = 0; i < times; ++i) {
        out.complex = suspension(out.complex);
    }
    out.vertex_elements.clear();
    return out;
}

HomologyResult homology_of(const LinkComplex& link) {
    return homology_of(link.complex);
}

namespace {

std::vector<Simplex> map_element(const GSimplicialMap& f, const std::vector<Simplex>& element) {
    std::vector<Simplex> images;
    images.reserve(element.size());
    for (const Simplex& s : element) {
        images.push_back(f.image(s));
    }
    // Keep the canonical (dimension, lexicographic) order used by the models.
    std::sort(images.begin(), images.end(), simplex_less);
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

} // namespace

LinkMap induced_link_map(const GSimplicialMap& f, const SubgroupChain& chain, LinkMode mode) {
    if (mode == LinkMode::Isovariant) {
        IsovarianceCheck check = is_isovariant(f);
        if (!check.isovariant) {
            std::string detail = "map changes isotropy";
            if (check.witness) {
                detail += " on a simplex of dimension " +
                          std::to_string(check.witness->size() - 1);
            }
            throw NotIsovariant(detail);
        }
    }
    LinkMap out;
    if (mode == LinkMode::Isovariant) {
        out.source = chain_link_model(f.source, chain);
        out.target = chain_link_model(f.target, chain);
    } else {
        if (chain.length() != 0) {
            throw ModeMismatch("equivariant links are indexed by single subgroups");
        }
        out.source = fixed_point_link(f.source, chain.bottom());
        out.target = fixed_point_link(f.target, chain.bottom());
    }
    std::map<std::vector<Simplex>, int> target_index;
    for (size_t i = 0; i < out.target.vertex_elements.size(); ++i) {
        target_index[out.target.vertex_elements[i]] = static_cast<int>(i);
    }
    out.vertex_map.resize(out.source.vertex_elements.size());
    for (size_t i = 0; i < out.source.vertex_elements.size(); ++i) {
        auto it = target_index.find(map_element(f, out.source.vertex_elements[i]));
        if (it == target_index.end()) {
            throw NotIsovariant("image of a model vertex is missing from the target model");
        }
        out.vertex_map[i] = it->second;
    }
    return out;
}

Connectivity map_connectivity(const LinkMap& m) {
    return map_connectivity(m.source.complex, m.target.complex, m.vertex_map);
}

} // namespace isolink
