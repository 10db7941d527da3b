#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <vector>

#include "isolink/errors.hpp"
#include "isolink/groups.hpp"

namespace isolink {

using Rational = boost::multiprecision::cpp_rational;

/// A vector in finitely many copies of the regular representation, with exact
/// rational coordinates in the basis chi_g. The group permutes coordinates by
/// g' . chi_g = chi_{g'g} in every copy.
struct RationalVector {
    int copies = 0;
    int group_order = 0;
    std::vector<Rational> coords;

    Rational& coord(int copy, int g) { return coords[copy * group_order + g]; }
    const Rational& coord(int copy, int g) const { return coords[copy * group_order + g]; }
    bool operator==(const RationalVector& other) const {
        return copies == other.copies && group_order == other.group_order &&
               coords == other.coords;
    }
    std::string to_string() const;
};

RationalVector zero_vector(int copies, int group_order);
RationalVector basis_chi(int copies, int group_order, int copy, int g);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& c, const RationalVector& v);
/// Concatenation into copies(a) + copies(b) copies.
RationalVector concat(const RationalVector& a, const RationalVector& b);
RationalVector act(const FiniteGroup& g, int element, const RationalVector& v);

/// Exact isotropy {g : g.v = v}, computed by exhausting the group.
Subgroup isotropy_of_vector(const FiniteGroup& g, const RationalVector& v);

/// Sum of chi_h over a subgroup, in one copy; its isotropy is exactly H.
RationalVector subgroup_sum(const FiniteGroup& g, const Subgroup& h);

/// gamma(s) = s * sum_H chi + (1 - s) * sum_K chi, a path whose isotropy is
/// K at s = 0 and exactly H for s > 0. Requires H strictly inside K.
RationalVector gamma_point(const FiniteGroup& g, const Subgroup& h, const Subgroup& k,
                           const Rational& s);

struct GammaWitness {
    Rational s;
    Subgroup expected;
    Subgroup actual;
};

struct GammaReport {
    Subgroup h, k;
    bool pass = true;
    std::vector<GammaWitness> witnesses;
};

/// Verifies the isotropy of gamma at each sample in [0, 1]. Samples must be
/// rationals in [0, 1]; throws NotAStrictPair unless H < K strictly.
GammaReport gamma_path(const FiniteGroup& g, const Subgroup& h, const Subgroup& k,
                       const std::vector<Rational>& samples);

/// A point of the unit disk with exact data: y = (1 - t) * direction, where
/// direction lies on the unit sphere, so |y| = 1 - t exactly.
struct DiskSample {
    Rational t;
    std::vector<Rational> direction;
};

/// A sampled family f(y)(s) landing in `v_copies` copies of the regular
/// representation, with f(y)(0) fixed by exactly K and f(y)(s) by exactly H
/// for s > 0.
struct LiftFamily {
    int v_copies = 1;
    Subgroup h, k;
    std::function<RationalVector(const std::vector<Rational>& direction, const Rational& s)>
        eval;
};

struct LiftWitness {
    std::string condition;
    Rational t, s;
    std::string detail;
};

struct LiftReport {
    bool pass = true;
    std::vector<LiftWitness> witnesses;
};

/// Evaluates the extension
///   t <= 1/2 : (f(y0)(s), 2t * gamma(s))
///   t >= 1/2 : ((2 - 2t) * f(y0)(s), gamma(s))
///   t  = 1   : (0, gamma(s))
/// over the sample grid and asserts: the two branches agree at t = 1/2, the
/// boundary restriction is (f(y)(s), 0), the center is (0, gamma(s)), and the
/// output isotropy is exactly K at s = 0 and exactly H for s > 0. The
/// family's own contract is asserted at every evaluation (ContractViolation).
LiftReport lifting_extension(const FiniteGroup& g, const LiftFamily& family,
                             const std::vector<DiskSample>& disk_samples,
                             const std::vector<Rational>& s_samples);

/// The constant family f(y)(s) = gamma(s) in one copy.
LiftFamily constant_gamma_family(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// t in {0, 1/4, 1/2, 3/4, 1} along a fixed unit direction.
std::vector<DiskSample> standard_disk_samples();
/// s in {0, 1/3, 1/2, 1}.
std::vector<Rational> standard_s_samples();

} // namespace isolink
