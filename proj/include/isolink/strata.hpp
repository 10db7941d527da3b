#pragma once

#include <string>
#include <vector>

#include "isolink/complexes.hpp"
#include "isolink/groups.hpp"
#include "isolink/homology.hpp"

namespace isolink {

enum class LinkMode { Isovariant, Equivariant };

std::string mode_name(LinkMode mode);

/// A finite model of a link, remembering where it came from. Model vertex i
/// corresponds to vertex_elements[i], a set of simplices of the source
/// complex (a single barycenter for stratum models, a coset-pure chain of
/// barycenters for chain models, a plain vertex for equivariant links).
struct LinkComplex {
    SimplicialComplex complex;
    std::string space_id;
    SubgroupChain chain;
    LinkMode mode = LinkMode::Isovariant;
    /// Set when the model is heuristic: intermediate strata were present or
    /// the chain has length >= 2.
    bool provisional = false;
    /// Some barycenter of the ambient subdivision sits in a stratum strictly
    /// between two chain levels.
    bool intermediate_strata = false;
    std::vector<std::vector<Simplex>> vertex_elements;
};

/// Exact-stratum model: the full subcomplex of the subdivided fixed complex
/// Sd(X^H) spanned by barycenters of simplices with isotropy exactly H.
LinkComplex stratum_model(const GSimplicialComplex& x, const Subgroup& h,
                          const std::string& space_id = "");

/// Link model for a subgroup chain. Length 0 delegates to stratum_model. For
/// longer chains the model is the order complex of componentwise-ordered
/// tuples of exact-stratum simplices whose union is a simplex of Sd(X^H0);
/// equivalently, of chains in Sd(X^H0) whose barycenters realize every chain
/// level and nothing else. Length >= 2 results are always provisional.
LinkComplex chain_link_model(const GSimplicialComplex& x, const SubgroupChain& chain,
                             const std::string& space_id = "");

/// Equivariant-mode link: the fixed subcomplex X^H itself (compactly
/// re-numbered), used when strict isotropy preservation is not requested.
LinkComplex fixed_point_link(const GSimplicialComplex& x, const Subgroup& h,
                             const std::string& space_id = "");

/// Iterated unreduced suspension of the model's underlying complex.
LinkComplex link_suspension(const LinkComplex& link, int times);

HomologyResult homology_of(const LinkComplex& link);

/// A simplicial map between two link models.
struct LinkMap {
    LinkComplex source;
    LinkComplex target;
    std::vector<int> vertex_map;
};

/// Functorial map of link models induced by an equivariant map. In
/// isovariant mode the map must be isovariant (throws NotIsovariant).
LinkMap induced_link_map(const GSimplicialMap& f, const SubgroupChain& chain,
                         LinkMode mode = LinkMode::Isovariant);

Connectivity map_connectivity(const LinkMap& m);

} // namespace isolink
