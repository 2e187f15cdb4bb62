#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nucheck {

namespace limits {
// Per-relation cap: k^arity bits must fit in memory and stay exact.
inline constexpr std::uint64_t max_relation_bits = std::uint64_t{1} << 24;
inline constexpr int max_domain = 10;
} // namespace limits

/// A k-valued predicate of fixed arity, stored as a bit vector over all
/// k^arity tuples.  Tuple (a_1,...,a_n) has index sum a_i * k^(n-i), i.e.
/// a_1 is the most significant digit; this ordering is part of the on-disk
/// contract.  Arity-0 relations have exactly one bit (the 0-ary constants).
class Relation {
public:
    Relation() = default;
    Relation(int k, int arity, bool fill = false);

    static Relation empty(int k, int arity) { return Relation(k, arity, false); }
    static Relation full(int k, int arity) { return Relation(k, arity, true); }

    int k() const { return k_; }
    int arity() const { return arity_; }
    std::uint64_t size() const { return size_; } // k^arity

    bool test(std::uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(std::uint64_t index, bool value = true) {
        if (value)
            words_[index >> 6] |= std::uint64_t{1} << (index & 63);
        else
            words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
    }

    bool contains(std::span<const int> tuple) const { return test(index_of(tuple)); }
    std::uint64_t index_of(std::span<const int> tuple) const;
    std::vector<int> tuple_at(std::uint64_t index) const;
    /// All member tuples in index order.
    std::vector<std::vector<int>> tuples() const;

    std::uint64_t count() const;
    bool is_empty() const { return count() == 0; }
    bool is_full() const { return count() == size_; }

    bool operator==(const Relation& other) const = default;
    /// Total order on (k, arity, bit vector); used for canonical sorting.
    bool operator<(const Relation& other) const;

    /// Bitwise AND/OR with a relation of identical shape.
    Relation operator&(const Relation& other) const;
    Relation operator|(const Relation& other) const;

    std::uint64_t hash() const;

private:
    void check_shape(const Relation& other) const;

    int k_ = 0;
    int arity_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct RelationHash {
    std::size_t operator()(const Relation& r) const { return static_cast<std::size_t>(r.hash()); }
};

/// A named finite set of relations over a common domain E_k.
class Structure {
public:
    Structure() = default;
    Structure(int k, std::vector<std::pair<std::string, Relation>> relations);

    int k() const { return k_; }
    const std::vector<std::pair<std::string, Relation>>& relations() const { return relations_; }
    bool has(const std::string& name) const;
    const Relation& at(const std::string& name) const;
    /// Max member arity; 0 for the empty list.
    int max_arity() const;
    std::size_t count() const { return relations_.size(); }

    void add(const std::string& name, Relation r);

private:
    int k_ = 2;
    std::vector<std::pair<std::string, Relation>> relations_;
};

/// True for atom names the formula evaluator resolves itself: "=", "false",
/// "const:a".
bool is_reserved_relation_name(const std::string& name);

Relation make_relation(int k, int arity, const std::vector<std::vector<int>>& tuples);
Relation eq_relation(int k);
Relation const_relation(int k, int a);
Relation subset_relation(int k, const std::vector<int>& members);

/// Existentially quantify coordinate i (1-based); result has arity-1.
Relation project_exists(const Relation& rho, int i);

/// sigma(x_1,...,x_m) = rho(x_{map[0]},...,x_{map[n-1]}) with 1-based target
/// indices; every index 1..m must occur.  Covers permutation as the bijective
/// case.
Relation identify(const Relation& rho, const std::vector<int>& map);

/// Tuple-set inclusion for same-shape relations.
bool leq(const Relation& lhs, const Relation& rhs);

/// Cylindrify: part applies to the listed (sorted, 1-based) coordinates of an
/// n-ary space, all other coordinates free.
Relation expand(const Relation& part, const std::vector<int>& coords, int arity);

std::uint64_t pow_u64(std::uint64_t base, int exp);

} // namespace nucheck
