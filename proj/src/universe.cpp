#include "isolink/universe.hpp"

#include <algorithm>
#include <sstream>

namespace isolink {

std::string RationalVector::to_string() const {
    std::ostringstream out;
    out << "[";
    bool first_copy = true;
    for (int c = 0; c < copies; ++c) {
        if (!first_copy) out << "; ";
        first_copy = false;
        out << "c" << c << ":";
        bool any = false;
        for (int g = 0; g < group_order; ++g) {
            const Rational& a = coord(c, g);
            if (a == 0) continue;
            out << (any ? ", " : " ") << "chi" << g << "=" << a;
            any = true;
        }
        if (!any) out << " 0";
    }
    out << "]";
    return out.str();
}

RationalVector zero_vector(int copies, int group_order) {
    RationalVector v;
    v.copies = copies;
    v.group_order = group_order;
    v.coords.assign(static_cast<size_t>(copies) * group_order, Rational(0));
    return v;
}

RationalVector basis_chi(int copies, int group_order, int copy, int g) {
    RationalVector v = zero_vector(copies, group_order);
    v.coord(copy, g) = 1;
    return v;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
    if (a.copies != b.copies || a.group_order != b.group_order)
        throw Error("cannot add vectors from different representations");
    RationalVector v = a;
    for (size_t i = 0; i < v.coords.size(); ++i) v.coords[i] += b.coords[i];
    return v;
}

RationalVector scale(const Rational& c, const RationalVector& v) {
    RationalVector w = v;
    for (auto& x : w.coords) x *= c;
    return w;
}

RationalVector concat(const RationalVector& a, const RationalVector& b) {
    if (a.group_order != b.group_order)
        throw Error("cannot concatenate vectors over different groups");
    RationalVector v = zero_vector(a.copies + b.copies, a.group_order);
    for (int c = 0; c < a.copies; ++c)
        for (int g = 0; g < a.group_order; ++g) v.coord(c, g) = a.coord(c, g);
    for (int c = 0; c < b.copies; ++c)
        for (int g = 0; g < b.group_order; ++g) v.coord(a.copies + c, g) = b.coord(c, g);
    return v;
}

RationalVector act(const FiniteGroup& g, int element, const RationalVector& v) {
    if (v.group_order != g.order())
        throw Error("vector is over a group of a different order");
    // element . chi_x = chi_{element * x}, so the new coefficient of chi_x is
    // the old coefficient of chi_{element^-1 * x}.
    int inv = g.inv(element);
    RationalVector w = zero_vector(v.copies, v.group_order);
    for (int c = 0; c < v.copies; ++c)
        for (int x = 0; x < v.group_order; ++x) w.coord(c, x) = v.coord(c, g.mul(inv, x));
    return w;
}

Subgroup isotropy_of_vector(const FiniteGroup& g, const RationalVector& v) {
    std::vector<int> members;
    for (int e = 0; e < g.order(); ++e)
        if (act(g, e, v) == v) members.push_back(e);
    return Subgroup{members};
}

RationalVector subgroup_sum(const FiniteGroup& g, const Subgroup& h) {
    RationalVector v = zero_vector(1, g.order());
    for (int e : h.members) v.coord(0, e) = 1;
    return v;
}

static void require_strict_pair(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    if (!h.subset_of(k) || h.order() == k.order())
        throw NotAStrictPair("gamma path needs " + subgroup_name(g, h) +
                             " strictly inside " + subgroup_name(g, k));
}

RationalVector gamma_point(const FiniteGroup& g, const Subgroup& h, const Subgroup& k,
                           const Rational& s) {
    require_strict_pair(g, h, k);
    return add(scale(s, subgroup_sum(g, h)), scale(Rational(1) - s, subgroup_sum(g, k)));
}

GammaReport gamma_path(const FiniteGroup& g, const Subgroup& h, const Subgroup& k,
                       const std::vector<Rational>& samples) {
    require_strict_pair(g, h, k);
    GammaReport report;
    report.h = h;
    report.k = k;
    for (const Rational& s : samples) {
        if (s < 0 || s > 1)
            throw ValidationError("gamma sample outside [0, 1]: " + s.str());
        Subgroup expected = (s == 0) ? k : h;
        Subgroup actual = isotropy_of_vector(g, gamma_point(g, h, k, s));
        if (!(actual == expected)) {
            report.pass = false;
            report.witnesses.push_back({s, expected, actual});
        }
    }
    return report;
}

static RationalVector eval_family(const FiniteGroup& g, const LiftFamily& family,
                                  const std::vector<Rational>& direction, const Rational& s) {
    RationalVector f = family.eval(direction, s);
    if (f.copies != family.v_copies || f.group_order != g.order())
        throw ContractViolation("family value has the wrong shape");
    Subgroup expected = (s == 0) ? family.k : family.h;
    Subgroup actual = isotropy_of_vector(g, f);
    if (!(actual == expected))
        throw ContractViolation("family value at s=" + s.str() + " has isotropy " +
                                subgroup_name(g, actual) + ", expected " +
                                subgroup_name(g, expected));
    return f;
}

/// The extension value at radius parameter t (t = 0 boundary, t = 1 center).
static RationalVector extension_value(const FiniteGroup& g, const LiftFamily& family,
                                      const RationalVector& f, const RationalVector& gamma,
                                      const Rational& t) {
    if (t == 1) return concat(zero_vector(family.v_copies, g.order()), gamma);
    if (t <= Rational(1, 2)) return concat(f, scale(2 * t, gamma));
    return concat(scale(2 - 2 * t, f), gamma);
}

LiftReport lifting_extension(const FiniteGroup& g, const LiftFamily& family,
                             const std::vector<DiskSample>& disk_samples,
                             const std::vector<Rational>& s_samples) {
    require_strict_pair(g, family.h, family.k);
    LiftReport report;
    auto fail = [&](const std::string& condition, const Rational& t, const Rational& s,
                    const std::string& detail) {
        report.pass = false;
        report.witnesses.push_back({condition, t, s, detail});
    };
    for (const DiskSample& d : disk_samples) {
        if (d.t < 0 || d.t > 1)
            throw ValidationError("disk sample outside [0, 1]: t=" + d.t.str());
        for (const Rational& s : s_samples) {
            if (s < 0 || s > 1)
                throw ValidationError("family sample outside [0, 1]: s=" + s.str());
            RationalVector f = eval_family(g, family, d.direction, s);
            RationalVector gamma = gamma_point(g, family.h, family.k, s);
            RationalVector value = extension_value(g, family, f, gamma, d.t);

            if (d.t == Rational(1, 2)) {
                RationalVector inner = concat(f, scale(2 * d.t, gamma));
                RationalVector outer = concat(scale(2 - 2 * d.t, f), gamma);
                if (!(inner == outer))
                    fail("seam", d.t, s, "the two halves disagree at t=1/2");
            }
            if (d.t == 0 && !(value == concat(f, zero_vector(1, g.order()))))
                fail("boundary", d.t, s, "t=0 restriction is not (f(y)(s), 0)");
            if (d.t == 1 && !(value == concat(zero_vector(family.v_copies, g.order()), gamma)))
                fail("center", d.t, s, "t=1 value is not (0, gamma(s))");

            Subgroup expected = (s == 0) ? family.k : family.h;
            Subgroup actual = isotropy_of_vector(g, value);
            if (!(actual == expected))
                fail("isotropy", d.t, s,
                     "got " + subgroup_name(g, actual) + ", expected " +
                         subgroup_name(g, expected));
        }
    }
    return report;
}

LiftFamily constant_gamma_family(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    require_strict_pair(g, h, k);
    LiftFamily family;
    family.v_copies = 1;
    family.h = h;
    family.k = k;
    FiniteGroup group = g;
    family.eval = [group, h, k](const std::vector<Rational>&, const Rational& s) {
        return gamma_point(group, h, k, s);
    };
    return family;
}

std::vector<DiskSample> standard_disk_samples() {
    std::vector<DiskSample> out;
    for (const Rational& t :
         {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)})
        out.push_back({t, {Rational(1)}});
    return out;
}

std::vector<Rational> standard_s_samples() {
    return {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)};
}

} // namespace isolink
