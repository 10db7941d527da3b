#pragma once

#include <map>
#include <string>
#include <vector>

#include "isolink/complexes.hpp"
#include "isolink/groups.hpp"
#include "isolink/homology.hpp"
#include "isolink/strata.hpp"

namespace isolink {

/// A connectivity function: one extended-integer value per conjugacy class of
/// subgroup chains (isovariant mode) or subgroups (equivariant mode), keyed
/// by the canonical class name.
struct ConnFn {
    LinkMode mode = LinkMode::Isovariant;
    std::map<std::string, Connectivity> values;

    bool operator==(const ConnFn& other) const {
        return mode == other.mode && values == other.values;
    }
};

/// Canonical key set: chain classes of length <= max_chain_length in
/// isovariant mode, subgroup conjugacy classes in equivariant mode.
std::vector<std::string> class_keys(const FiniteGroup& g, LinkMode mode, int max_chain_length);

/// Representative chain for each canonical key, in key order.
std::vector<SubgroupChain> class_representatives(const FiniteGroup& g, LinkMode mode,
                                                 int max_chain_length);

/// Constant connectivity function on the canonical key set.
ConnFn constant_conn_fn(const FiniteGroup& g, LinkMode mode, int max_chain_length,
                        const ExtInt& value);

/// Measured connectivity of an equivariant map: per chain class the
/// connectivity of the induced map of link models (isovariant mode, requires
/// an isovariant map) or of fixed subcomplexes (equivariant mode).
ConnFn measure_conn_fn(const GSimplicialMap& f, LinkMode mode, int max_chain_length);

/// Measured connectivity of a space: per class the connectivity of its link
/// model (isovariant) or fixed subcomplex (equivariant).
ConnFn measure_space_conn(const GSimplicialComplex& x, LinkMode mode, int max_chain_length);

/// Pushout estimate n + m - 1, classwise, with (+inf) + x = +inf.
ConnFn bm_pushout(const ConnFn& n, const ConnFn& m);

/// Cubical estimate 1 - n + sum of the edge values, classwise; n >= 2 and
/// exactly n edge functions are required (WrongArity otherwise).
ConnFn bm_cube(int n, const std::vector<ConnFn>& edges);

struct FreudenthalBounds {
    /// Connectivity gained by one complete-universe suspension: n + 1.
    ConnFn universe_bound;
    /// Stable-range bound for the suspension comparison: 2n + 1.
    ConnFn freudenthal_bound;
};

/// Both suspension bounds for an isovariant connectivity function; the
/// Freudenthal bound is the pushout estimate of the universe bound with
/// itself. Throws ModeMismatch on equivariant input.
FreudenthalBounds freudenthal_suite(const ConnFn& n);

} // namespace isolink
