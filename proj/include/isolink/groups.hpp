#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isolink/errors.hpp"

namespace isolink {

/// A finite group of order <= 24 given by its multiplication table.
/// Elements are 0..order-1 and 0 is always the identity.
class FiniteGroup {
  public:
    static constexpr int kMaxOrder = 24;

    /// Z/n under addition.
    static FiniteGroup cyclic(int n);
    /// Dihedral group of order 2n (symmetries of the n-gon).
    static FiniteGroup dihedral(int n);
    /// Symmetric group on n letters, n <= 4, in lexicographic permutation order.
    static FiniteGroup symmetric(int n);
    /// Arbitrary table; throws AxiomViolation with a witness if invalid.
    static FiniteGroup from_table(std::vector<std::vector<int>> table);

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    /// g x g^-1.
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int a) const;
    bool is_abelian() const;
    bool is_cyclic() const;
    /// Smallest generator when the group is cyclic.
    int cyclic_generator() const;

  private:
    explicit FiniteGroup(std::vector<std::vector<int>> table);
    void validate() const;

    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup stored as its sorted member list (always contains 0).
struct Subgroup {
    std::vector<int> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
    bool subset_of(const Subgroup& other) const;
    bool operator==(const Subgroup& other) const { return members == other.members; }
    bool operator!=(const Subgroup& other) const { return members != other.members; }
    /// Order by (size, lexicographic members); used for all canonical orderings.
    bool operator<(const Subgroup& other) const;
};

Subgroup trivial_subgroup();
Subgroup full_subgroup(const FiniteGroup& g);
/// Closure of a generating set.
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);
/// Throws AxiomViolation if the member set is not a subgroup.
Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<int> members);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int by);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
/// Intersection of two subgroups.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// All subgroups, sorted by (order, lexicographic members).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

/// A strictly increasing chain H_0 < H_1 < ... < H_n; length() == n.
struct SubgroupChain {
    std::vector<Subgroup> subgroups;

    SubgroupChain() = default;
    explicit SubgroupChain(std::vector<Subgroup> parts);
    int length() const { return static_cast<int>(subgroups.size()) - 1; }
    const Subgroup& bottom() const { return subgroups.front(); }
    const Subgroup& top() const { return subgroups.back(); }
    bool operator==(const SubgroupChain& other) const { return subgroups == other.subgroups; }
    bool operator<(const SubgroupChain& other) const;
};

/// All strictly increasing chains of length <= max_length (length 0 = single subgroups).
std::vector<SubgroupChain> enumerate_chains(const FiniteGroup& g, int max_length);

/// Conjugacy class of a chain under simultaneous conjugation, keyed by its
/// lexicographically minimal representative.
struct ChainClass {
    SubgroupChain canonical;

    bool operator==(const ChainClass& other) const { return canonical == other.canonical; }
    bool operator<(const ChainClass& other) const { return canonical < other.canonical; }
};

ChainClass chain_class(const FiniteGroup& g, const SubgroupChain& chain);
SubgroupChain conjugate_chain(const FiniteGroup& g, const SubgroupChain& chain, int by);

/// Canonical display name: "e" for trivial, "G" for the whole group ("Cn" when
/// the group is cyclic of order n), "Cd" inside a cyclic group, otherwise a
/// minimal generator list like "(3,4)".
std::string subgroup_name(const FiniteGroup& g, const Subgroup& h);
/// Chain rendered as subgroup names joined by '<'.
std::string chain_key(const FiniteGroup& g, const SubgroupChain& chain);
/// Inverse of subgroup_name; also accepts explicit generator lists.
Subgroup parse_subgroup(const FiniteGroup& g, const std::string& name);
/// Inverse of chain_key.
SubgroupChain parse_chain(const FiniteGroup& g, const std::string& text);

} // namespace isolink
