#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isolink/errors.hpp"
#include "isolink/groups.hpp"

namespace isolink {

/// A simplex is a strictly sorted list of vertex ids.
using Simplex = std::vector<int>;

/// A finite abstract simplicial complex. Vertex ids live in 0..id_space()-1
/// but need not all be present (subcomplexes keep their parent's ids, so
/// inclusion maps stay the identity). Simplices are closed under faces and
/// stored sorted by (dimension, lexicographic).
class SimplicialComplex {
  public:
    SimplicialComplex() = default;
    /// Builds from any family of simplices, closing under faces.
    static SimplicialComplex from_simplices(int id_space, std::vector<Simplex> simplices);

    int id_space() const { return id_space_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    bool contains(const Simplex& s) const { return index_.count(s) > 0; }
    /// Position in the canonical simplex order; -1 if absent.
    int index_of(const Simplex& s) const;
    bool is_empty() const { return simplices_.empty(); }
    /// -1 for the empty complex.
    int dimension() const;
    /// Counts per dimension, f_vector()[k] = number of k-simplices.
    std::vector<int> f_vector() const;
    /// Present vertex ids, sorted.
    std::vector<int> vertices() const;
    int vertex_count() const;

  private:
    struct SimplexHash {
        size_t operator()(const Simplex& s) const;
    };

    int id_space_ = 0;
    std::vector<Simplex> simplices_;
    std::unordered_map<Simplex, int, SimplexHash> index_;
};

/// Canonical simplex order: by dimension, then lexicographic.
bool simplex_less(const Simplex& a, const Simplex& b);

SimplicialComplex cone(const SimplicialComplex& x);
SimplicialComplex suspension(const SimplicialComplex& x);
/// Join with the second factor's vertex ids shifted by x.id_space().
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x);

/// Subdivision together with the simplex each barycenter came from.
/// Barycenter i refines barycenter_source[i]; ids follow the canonical
/// simplex order of the input.
struct IndexedSubdivision {
    SimplicialComplex complex;
    std::vector<Simplex> barycenter_source;
};
IndexedSubdivision subdivision_indexed(const SimplicialComplex& x);

/// The standard full simplex on n+1 vertices (used as an orbit-space oracle).
SimplicialComplex standard_simplex(int n);

/// A finite group acting simplicially on a complex. The action is stored as
/// one vertex permutation per group element and is validated to be a
/// homomorphism preserving the simplex set. `rigid()` reports whether every
/// element mapping a simplex onto itself fixes it vertexwise.
class GSimplicialComplex {
  public:
    GSimplicialComplex(GroupPtr group, SimplicialComplex complex,
                       std::vector<std::vector<int>> action);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const SimplicialComplex& complex() const { return complex_; }
    int act(int g, int v) const { return action_[g][v]; }
    Simplex act_simplex(int g, const Simplex& s) const;
    const std::vector<std::vector<int>>& action() const { return action_; }

    bool rigid() const { return rigid_; }
    /// Simplex witnessing non-rigidity, if any.
    std::optional<Simplex> rigidity_witness() const;

    /// Elements fixing vertex v.
    Subgroup vertex_stabilizer(int v) const;
    /// Exact isotropy of a simplex; requires rigidity (throws NotRigid).
    Subgroup simplex_isotropy(const Simplex& s) const;

  private:
    GroupPtr group_;
    SimplicialComplex complex_;
    std::vector<std::vector<int>> action_;
    bool rigid_ = false;
};

/// Order complex of the poset of cosets g H_i of the chain's subgroups under
/// inclusion, with G acting by left translation. Vertices are numbered by
/// (chain level, sorted coset members).
GSimplicialComplex linking_simplex(const GroupPtr& group, const SubgroupChain& chain);
/// Subcomplex of coset chains that omit at least one chain index.
GSimplicialComplex boundary_linking_simplex(const GroupPtr& group, const SubgroupChain& chain);

/// Returns the complex unchanged when already rigid, else its barycentric
/// subdivision (one subdivision always suffices).
GSimplicialComplex make_rigid(const GSimplicialComplex& x);
GSimplicialComplex barycentric_subdivision(const GSimplicialComplex& x);

/// Cone with a fixed apex at id_space(); suspension with fixed apexes at
/// id_space(), id_space()+1. suspension of the empty complex is two points.
GSimplicialComplex cone(const GSimplicialComplex& x);
GSimplicialComplex suspension(const GSimplicialComplex& x);
/// Join with the diagonal action; both factors must share one group object.
GSimplicialComplex join(const GSimplicialComplex& x, const GSimplicialComplex& y);

/// One real summand of a representation of a cyclic group.
struct RepGenerator {
    enum class Kind { Trivial, Sign, Rotation };
    Kind kind = Kind::Trivial;
    /// Rotation speed: the generator acts on the plane by 2*pi*k/|G|.
    int rotation_k = 1;
};

/// Unit sphere S(V) as an iterated join of the summand spheres: two fixed
/// points for a trivial summand, two swapped points for a sign summand, and a
/// polygon with rotation action for a plane summand (the polygon size is the
/// smallest multiple of the rotation order that is at least 3).
GSimplicialComplex rep_sphere(const GroupPtr& group, const std::vector<RepGenerator>& summands);
/// Unit disk D(V) = cone on S(V).
GSimplicialComplex rep_disk(const GroupPtr& group, const std::vector<RepGenerator>& summands);
/// One-point compactification S^V = unreduced suspension of S(V).
GSimplicialComplex rep_compactification(const GroupPtr& group,
                                        const std::vector<RepGenerator>& summands);

/// Subcomplex of simplices whose isotropy contains H, carrying the residual
/// action of the normalizer of H (re-indexed as its own group).
GSimplicialComplex fixed_subcomplex(const GSimplicialComplex& x, const Subgroup& h);
/// Same subcomplex, without any action attached.
SimplicialComplex fixed_subcomplex_plain(const GSimplicialComplex& x, const Subgroup& h);

/// An equivariant simplicial map; validated at construction.
struct GSimplicialMap {
    GSimplicialComplex source;
    GSimplicialComplex target;
    /// vertex_map[v] for every v < source.complex().id_space().
    std::vector<int> vertex_map;

    GSimplicialMap(GSimplicialComplex src, GSimplicialComplex dst, std::vector<int> vm);
    Simplex image(const Simplex& s) const;
};

GSimplicialMap identity_map(const GSimplicialComplex& x);
GSimplicialMap compose(const GSimplicialMap& g, const GSimplicialMap& f);
/// Inclusion of a subcomplex sharing the target's vertex ids.
GSimplicialMap inclusion_map(const GSimplicialComplex& sub, const GSimplicialComplex& whole);
/// Functorial map of subdivisions induced by f (barycenter of s goes to the
/// barycenter of f(s)).
GSimplicialMap subdivision_map(const GSimplicialMap& f);

struct IsovarianceCheck {
    bool isovariant = false;
    /// A simplex whose isotropy changes, when not isovariant.
    std::optional<Simplex> witness;
};
/// Checks Iso(f(s)) == Iso(s) for every simplex; both sides must be rigid.
IsovarianceCheck is_isovariant(const GSimplicialMap& f);

/// Quotient complex: vertices are vertex orbits, simplices are images of
/// simplices. Requires rigidity. Orbit ids are numbered by smallest member.
SimplicialComplex orbit_space(const GSimplicialComplex& x);

} // namespace isolink
