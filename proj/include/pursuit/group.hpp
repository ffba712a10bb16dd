#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/common.hpp"

namespace pursuit {

using Elem = int;

/// Finite group as an indexed element set with composition and inverse tables.
/// Element 0 is the identity for every built-in family; explicit tables may
/// put it elsewhere. Immutable after construction, safe to share.
class Group {
public:
    static Group cyclic(int n);
    static Group dihedral(int n);   // order 2n; index a in [0,n) is r^a, n+a is r^a f
    static Group symmetric(int k);  // order k!; one-line permutations in lexicographic order
    static Group quaternion8();
    static Group product(const Group& a, const Group& b);  // index = ia * |b| + ib

    /// Explicit Cayley table. Validates identity/inverse/Latin-square and
    /// associativity (full scan for n <= 64, sampled triples above).
    static Group from_table(std::vector<std::vector<Elem>> table, std::string name);

    /// Closure of permutation generators acting on {0..degree-1}; elements are
    /// indexed in BFS discovery order (identity first). Throws SizeError when
    /// the closure exceeds max_order.
    static Group from_permutations(const std::vector<std::vector<int>>& generators,
                                   int max_order = 5040);

    int order() const { return n_; }
    Elem identity() const { return identity_; }
    Elem compose(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inverse(Elem a) const { return inverse_[a]; }
    Elem conjugate(Elem g, Elem by) const {  // by^-1 * g * by
        return compose(compose(inverse(by), g), by);
    }
    Elem power(Elem g, long long e) const;

    int element_order(Elem g) const;
    /// e, g, g^2, ... up to (but excluding) the wrap back to e.
    const std::vector<Elem>& cyclic_subgroup(Elem g) const;
    /// Smallest j >= 0 with g^j == x, or nullopt when x is outside <g>.
    std::optional<int> power_index(Elem g, Elem x) const;
    std::vector<Elem> conjugacy_class(Elem g) const;
    bool is_abelian() const;

    const std::string& name() const { return name_; }
    const std::string& element_name(Elem g) const { return element_names_[g]; }

    /// Cayley-table file format: first line n, then n rows of n indices.
    std::string to_table_file() const;
    static Group from_table_file(const std::string& text, std::string name = "table");

private:
    Group(int n, std::vector<Elem> table, std::string name, std::vector<std::string> element_names);
    void validate() const;

    int n_ = 0;
    Elem identity_ = 0;
    std::vector<Elem> table_;    // n*n row-major
    std::vector<Elem> inverse_;
    std::string name_;
    std::vector<std::string> element_names_;
    mutable std::vector<std::vector<Elem>> cyclic_cache_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Nonempty subset of a group, kept sorted and deduplicated.
struct GenSet {
    GroupPtr group;
    std::vector<Elem> members;

    GenSet(GroupPtr g, std::vector<Elem> elems);
    bool contains(Elem g) const;
    int size() const { return static_cast<int>(members.size()); }
};

bool is_symmetric(const GenSet& s);
bool is_conjugation_closed(const GenSet& s);
bool generates(const GenSet& s);

/// Minimal number of S-factors expressing each element (identity -> 0),
/// by BFS over right multiplication. Throws ValidationError listing the
/// unreachable elements when S does not generate.
std::vector<int> word_lengths(const GenSet& s);

struct TailPower {
    int tail = 0;                    // k: factors in the minimal word
    std::optional<int> power;        // smallest i >= 0 with g = s^i; only when tail == 0
    std::vector<Elem> witness_word;  // length == tail, lexicographically smallest
    int witness_exponent = 0;        // the i used by the witness: product(word) * s^i == g
};

/// Precomputed BFS word machinery for one generating set: distances and,
/// per element, the lexicographically smallest minimal word.
class WordMetric {
public:
    explicit WordMetric(GenSet s);

    const GenSet& genset() const { return genset_; }
    const std::vector<int>& distances() const { return dist_; }
    int distance(Elem g) const { return dist_[g]; }
    std::vector<Elem> min_word(Elem g) const;

    /// Decompose g = w * s^i with |w| minimal over all integers i.
    TailPower tail_and_power(Elem g, Elem s) const;

private:
    GenSet genset_;
    std::vector<int> dist_;
    std::vector<Elem> pred_;      // chosen predecessor for the lex-min word
    std::vector<Elem> pred_gen_;  // generator used on the last step
    std::vector<int> lex_rank_;   // rank of the lex-min word within its BFS layer
};

/// Convenience wrapper matching the one-shot operation shape.
TailPower tail_and_power(Elem g, Elem s, const GenSet& set);

/// Verified group automorphism with its multiplicative order.
class Automorphism {
public:
    static Automorphism from_map(GroupPtr g, std::vector<Elem> images);
    static Automorphism identity(GroupPtr g);
    static Automorphism negation(GroupPtr g);  // g -> g^-1; requires abelian

    Elem apply(Elem g) const { return map_[g]; }
    Elem apply_inverse(Elem g) const { return inverse_map_[g]; }
    Elem apply_squared(Elem g) const { return map_[map_[g]]; }
    int order() const { return order_; }
    const std::vector<Elem>& images() const { return map_; }
    const GroupPtr& group() const { return group_; }
    bool is_identity() const { return order_ == 1; }

private:
    Automorphism(GroupPtr g, std::vector<Elem> map, std::vector<Elem> inv, int order);
    GroupPtr group_;
    std::vector<Elem> map_, inverse_map_;
    int order_;
};

/// All automorphisms with sigma^2 = id (the identity automorphism included),
/// in a deterministic order.
std::vector<Automorphism> involutory_automorphisms(const Group& g, GroupPtr handle);

/// Permutation-generator file format: one permutation per line in cycle
/// notation, e.g. "(0 1 2)(3 4)".
std::vector<std::vector<int>> parse_cycle_notation(const std::string& text, int degree = -1);
std::string to_cycle_notation(const std::vector<int>& perm);

}  // namespace pursuit
