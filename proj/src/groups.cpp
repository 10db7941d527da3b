#include "isolink/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace isolink {

namespace {

std::string triple(int a, int b, int c) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : mul_(std::move(table)) {
    validate();
    const int n = order();
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul_[a][b] == 0) {
                inv_[a] = b;
            }
        }
    }
}

void FiniteGroup::validate() const {
    const int n = static_cast<int>(mul_.size());
    if (n < 1 || n > kMaxOrder) {
        throw AxiomViolation("group order must be between 1 and 24, got " + std::to_string(n));
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(mul_[a].size()) != n) {
            throw AxiomViolation("row " + std::to_string(a) + " has wrong length");
        }
        for (int b = 0; b < n; ++b) {
            int p = mul_[a][b];
            if (p < 0 || p >= n) {
                throw AxiomViolation("entry out of range at " + triple(a, b, p));
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        if (mul_[0][a] != a || mul_[a][0] != a) {
            throw AxiomViolation("element 0 is not an identity, witness " + std::to_string(a));
        }
    }
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n; ++b) {
            if (mul_[a][b] == 0 && mul_[b][a] == 0) {
                has_inverse = true;
            }
        }
        if (!has_inverse) {
            throw AxiomViolation("element " + std::to_string(a) + " has no two-sided inverse");
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
                    throw AxiomViolation("associativity fails at " + triple(a, b, c));
                }
            }
        }
    }
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1 || n > kMaxOrder) {
        throw AxiomViolation("cyclic order out of range: " + std::to_string(n));
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            table[a][b] = (a + b) % n;
        }
    }
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1 || 2 * n > kMaxOrder) {
        throw AxiomViolation("dihedral parameter out of range: " + std::to_string(n));
    }
    // Element b*n + i encodes s^b r^i; s r^i s = r^-i.
    const int order = 2 * n;
    auto encode = [n](int b, int i) { return b * n + ((i % n + n) % n); };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int x = 0; x < order; ++x) {
        int bx = x / n, ix = x % n;
        for (int y = 0; y < order; ++y) {
            int by = y / n, iy = y % n;
            int b = (bx + by) % 2;
            int i = (by == 0) ? ix + iy : -ix + iy;
            table[x][y] = encode(b, i);
        }
    }
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 4) {
        throw AxiomViolation("symmetric group supported for n <= 4, got " + std::to_string(n));
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) {
        index[perms[i]] = i;
    }
    const int order = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            std::vector<int> composed(n);
            for (int x = 0; x < n; ++x) {
                composed[x] = perms[a][perms[b][x]];
            }
            table[a][b] = index[composed];
        }
    }
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    return FiniteGroup(std::move(table));
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a) {
        for (int b = a + 1; b < order(); ++b) {
            if (mul(a, b) != mul(b, a)) {
                return false;
            }
        }
    }
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (int a = 0; a < order(); ++a) {
        if (element_order(a) == order()) {
            return true;
        }
    }
    return false;
}

int FiniteGroup::cyclic_generator() const {
    for (int a = 0; a < order(); ++a) {
        if (element_order(a) == order()) {
            return a;
        }
    }
    throw AxiomViolation("group is not cyclic");
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

bool Subgroup::subset_of(const Subgroup& other) const {
    return std::includes(other.members.begin(), other.members.end(), members.begin(),
                         members.end());
}

bool Subgroup::operator<(const Subgroup& other) const {
    if (members.size() != other.members.size()) {
        return members.size() < other.members.size();
    }
    return members < other.members;
}

Subgroup trivial_subgroup() {
    return Subgroup{{0}};
}

Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{all};
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
    std::set<int> seen{0};
    std::queue<int> todo;
    todo.push(0);
    for (int x : generators) {
        if (seen.insert(x).second) {
            todo.push(x);
        }
    }
    while (!todo.empty()) {
        int a = todo.front();
        todo.pop();
        std::vector<int> snapshot(seen.begin(), seen.end());
        for (int b : snapshot) {
            for (int p : {g.mul(a, b), g.mul(b, a), g.inv(a)}) {
                if (seen.insert(p).second) {
                    todo.push(p);
                }
            }
        }
    }
    return Subgroup{std::vector<int>(seen.begin(), seen.end())};
}

Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h{members};
    if (members.empty() || members.front() != 0) {
        throw AxiomViolation("subgroup must contain the identity");
    }
    for (int a : members) {
        if (a < 0 || a >= g.order()) {
            throw AxiomViolation("subgroup member out of range: " + std::to_string(a));
        }
        if (!h.contains(g.inv(a))) {
            throw AxiomViolation("member set not closed under inverse at " + std::to_string(a));
        }
        for (int b : members) {
            if (!h.contains(g.mul(a, b))) {
                throw AxiomViolation("member set not closed under product at " +
                                     std::to_string(a) + "*" + std::to_string(b));
            }
        }
    }
    return h;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int by) {
    std::vector<int> members;
    members.reserve(h.members.size());
    for (int x : h.members) {
        members.push_back(g.conj(by, x));
    }
    std::sort(members.begin(), members.end());
    return Subgroup{members};
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
        if (conjugate_subgroup(g, h, x) == h) {
            members.push_back(x);
        }
    }
    return Subgroup{members};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> members;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(members));
    return Subgroup{members};
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    std::queue<Subgroup> todo;
    Subgroup e = trivial_subgroup();
    found.insert(e.members);
    todo.push(e);
    while (!todo.empty()) {
        Subgroup h = todo.front();
        todo.pop();
        for (int x = 0; x < g.order(); ++x) {
            if (h.contains(x)) {
                continue;
            }
            std::vector<int> gens = h.members;
            gens.push_back(x);
            Subgroup bigger = subgroup_closure(g, gens);
            if (found.insert(bigger.members).second) {
                todo.push(bigger);
            }
        }
    }
    std::vector<Subgroup> result;
    result.reserve(found.size());
    for (const auto& members : found) {
        result.push_back(Subgroup{members});
    }
    std::sort(result.begin(), result.end());
    return result;
}

SubgroupChain::SubgroupChain(std::vector<Subgroup> parts) : subgroups(std::move(parts)) {
    if (subgroups.empty()) {
        throw InvalidChain("chain must contain at least one subgroup");
    }
    for (size_t i = 0; i + 1 < subgroups.size(); ++i) {
        if (!(subgroups[i].subset_of(subgroups[i + 1])) ||
            subgroups[i].order() >= subgroups[i + 1].order()) {
            throw InvalidChain("chain is not strictly increasing at position " +
                               std::to_string(i));
        }
    }
}

bool SubgroupChain::operator<(const SubgroupChain& other) const {
    return subgroups < other.subgroups;
}

std::vector<SubgroupChain> enumerate_chains(const FiniteGroup& g, int max_length) {
    if (max_length < 0) {
        throw InvalidChain("max_length must be nonnegative");
    }
    std::vector<Subgroup> all = enumerate_subgroups(g);
    std::vector<SubgroupChain> result;
    std::vector<Subgroup> current;
    // Subgroups are sorted by size, so extensions only need to look forward.
    auto extend = [&](auto&& self, size_t from) -> void {
        for (size_t i = from; i < all.size(); ++i) {
            if (!current.empty()) {
                const Subgroup& last = current.back();
                if (all[i].order() <= last.order() || !last.subset_of(all[i])) {
                    continue;
                }
            }
            current.push_back(all[i]);
            result.push_back(SubgroupChain(current));
            if (static_cast<int>(current.size()) - 1 < max_length) {
                self(self, i + 1);
            }
            current.pop_back();
        }
    };
    extend(extend, 0);
    std::sort(result.begin(), result.end());
    return result;
}

SubgroupChain conjugate_chain(const FiniteGroup& g, const SubgroupChain& chain, int by) {
    std::vector<Subgroup> parts;
    parts.reserve(chain.subgroups.size());
    for (const Subgroup& h : chain.subgroups) {
        parts.push_back(conjugate_subgroup(g, h, by));
    }
    return SubgroupChain(std::move(parts));
}

ChainClass chain_class(const FiniteGroup& g, const SubgroupChain& chain) {
    SubgroupChain best = chain;
    for (int x = 1; x < g.order(); ++x) {
        SubgroupChain candidate = conjugate_chain(g, chain, x);
        if (candidate < best) {
            best = candidate;
        }
    }
    return ChainClass{best};
}

std::string subgroup_name(const FiniteGroup& g, const Subgroup& h) {
    if (h.order() == 1) {
        return "e";
    }
    if (g.is_cyclic()) {
        return "C" + std::to_string(h.order());
    }
    if (h.order() == g.order()) {
        return "G";
    }
    // Smallest generating set, preferring low element ids.
    for (int a : h.members) {
        if (a != 0 && subgroup_closure(g, {a}) == h) {
            return "(" + std::to_string(a) + ")";
        }
    }
    for (int a : h.members) {
        for (int b : h.members) {
            if (a != 0 && b > a && subgroup_closure(g, {a, b}) == h) {
                return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        }
    }
    std::string out = "(";
    for (size_t i = 1; i < h.members.size(); ++i) {
        if (i > 1) {
            out += ",";
        }
        out += std::to_string(h.members[i]);
    }
    return out + ")";
}

std::string chain_key(const FiniteGroup& g, const SubgroupChain& chain) {
    std::string out;
    for (size_t i = 0; i < chain.subgroups.size(); ++i) {
        if (i > 0) {
            out += "<";
        }
        out += subgroup_name(g, chain.subgroups[i]);
    }
    return out;
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& name) {
    if (name == "e") {
        return trivial_subgroup();
    }
    if (name == "G") {
        return full_subgroup(g);
    }
    if (!name.empty() && name.front() == 'C') {
        int target = std::stoi(name.substr(1));
        std::optional<Subgroup> found;
        for (const Subgroup& h : enumerate_subgroups(g)) {
            bool cyclic_of_target = h.order() == target &&
                                    std::any_of(h.members.begin(), h.members.end(), [&](int a) {
                                        return g.element_order(a) == target;
                                    });
            if (cyclic_of_target) {
                if (found && *found != h) {
                    throw ValidationError("subgroup name '" + name + "' is ambiguous here");
                }
                found = h;
            }
        }
        if (!found) {
            throw ValidationError("no cyclic subgroup of order " + std::to_string(target));
        }
        return *found;
    }
    if (name.size() >= 2 && name.front() == '(' && name.back() == ')') {
        std::vector<int> gens;
        std::string body = name.substr(1, name.size() - 2);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            gens.push_back(std::stoi(tok));
        }
        for (int x : gens) {
            if (x < 0 || x >= g.order()) {
                throw ValidationError("generator out of range in '" + name + "'");
            }
        }
        return subgroup_closure(g, gens);
    }
    throw ValidationError("cannot parse subgroup name '" + name + "'");
}

SubgroupChain parse_chain(const FiniteGroup& g, const std::string& text) {
    std::vector<Subgroup> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '<')) {
        parts.push_back(parse_subgroup(g, tok));
    }
    if (parts.empty()) {
        throw InvalidChain("empty chain expression");
    }
    return SubgroupChain(std::move(parts));
}

} // namespace isolink
