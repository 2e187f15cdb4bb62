#include "nucheck/relation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nucheck {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

namespace {

std::uint64_t checked_size(int k, int arity) {
    if (k < 2 || k > limits::max_domain)
        throw std::invalid_argument("domain size k must be in [2, " +
                                    std::to_string(limits::max_domain) + "], got " + std::to_string(k));
    if (arity < 0) throw std::invalid_argument("arity must be nonnegative");
    std::uint64_t size = 1;
    for (int i = 0; i < arity; ++i) {
        size *= static_cast<std::uint64_t>(k);
        if (size > limits::max_relation_bits)
            throw std::invalid_argument("relation too large: k^arity exceeds " +
                                        std::to_string(limits::max_relation_bits) + " bits");
    }
    return size;
}

} // namespace

Relation::Relation(int k, int arity, bool fill)
    : k_(k), arity_(arity), size_(checked_size(k, arity)), words_((size_ + 63) / 64, 0) {
    if (fill) {
        for (auto& w : words_) w = ~std::uint64_t{0};
        // clear bits past size_
        if (std::uint64_t tail = size_ & 63; tail != 0)
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
}

std::uint64_t Relation::index_of(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw std::invalid_argument("tuple length " + std::to_string(tuple.size()) +
                                    " does not match arity " + std::to_string(arity_));
    std::uint64_t index = 0;
    for (int v : tuple) {
        if (v < 0 || v >= k_)
            throw std::invalid_argument("tuple entry " + std::to_string(v) + " out of range for k=" +
                                        std::to_string(k_));
        index = index * k_ + static_cast<std::uint64_t>(v);
    }
    return index;
}

std::vector<int> Relation::tuple_at(std::uint64_t index) const {
    std::vector<int> tuple(arity_);
    for (int i = arity_ - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(index % k_);
        index /= k_;
    }
    return tuple;
}

std::vector<std::vector<int>> Relation::tuples() const {
    std::vector<std::vector<int>> out;
    for (std::uint64_t i = 0; i < size_; ++i)
        if (test(i)) out.push_back(tuple_at(i));
    return out;
}

std::uint64_t Relation::count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

bool Relation::operator<(const Relation& other) const {
    if (k_ != other.k_) return k_ < other.k_;
    if (arity_ != other.arity_) return arity_ < other.arity_;
    return words_ < other.words_;
}

void Relation::check_shape(const Relation& other) const {
    if (k_ != other.k_ || arity_ != other.arity_)
        throw std::invalid_argument("relation shape mismatch (k or arity)");
}

Relation Relation::operator&(const Relation& other) const {
    check_shape(other);
    Relation out = *this;
    for (std::uint64_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
}

Relation Relation::operator|(const Relation& other) const {
    check_shape(other);
    Relation out = *this;
    for (std::uint64_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
    return out;
}

std::uint64_t Relation::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(k_) << 32) ^
                      static_cast<std::uint64_t>(arity_);
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Structure::Structure(int k, std::vector<std::pair<std::string, Relation>> relations)
    : k_(k), relations_(std::move(relations)) {
    if (k < 2 || k > limits::max_domain)
        throw std::invalid_argument("domain size k out of range");
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const auto& [name, rel] = relations_[i];
        if (name.empty()) throw std::invalid_argument("relation name must be nonempty");
        if (is_reserved_relation_name(name))
            throw std::invalid_argument("relation name '" + name + "' is reserved");
        if (rel.k() != k_)
            throw std::invalid_argument("relation '" + name + "' has mismatched domain size");
        for (std::size_t j = 0; j < i; ++j)
            if (relations_[j].first == name)
                throw std::invalid_argument("duplicate relation name '" + name + "'");
    }
}

bool Structure::has(const std::string& name) const {
    for (const auto& [n, r] : relations_)
        if (n == name) return true;
    return false;
}

const Relation& Structure::at(const std::string& name) const {
    for (const auto& [n, r] : relations_)
        if (n == name) return r;
    throw std::invalid_argument("unknown relation '" + name + "'");
}

int Structure::max_arity() const {
    int m = 0;
    for (const auto& [n, r] : relations_) m = std::max(m, r.arity());
    return m;
}

void Structure::add(const std::string& name, Relation r) {
    if (name.empty()) throw std::invalid_argument("relation name must be nonempty");
    if (is_reserved_relation_name(name))
        throw std::invalid_argument("relation name '" + name + "' is reserved");
    if (has(name)) throw std::invalid_argument("duplicate relation name '" + name + "'");
    if (r.k() != k_) throw std::invalid_argument("relation '" + name + "' has mismatched domain size");
    relations_.emplace_back(name, std::move(r));
}

bool is_reserved_relation_name(const std::string& name) {
    return name == "=" || name == "false" || name.rfind("const:", 0) == 0;
}

Relation make_relation(int k, int arity, const std::vector<std::vector<int>>& tuples) {
    Relation out(k, arity);
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != arity)
            throw std::invalid_argument("tuple of length " + std::to_string(t.size()) +
                                        " in relation of arity " + std::to_string(arity));
        out.set(out.index_of(t));
    }
    return out;
}

Relation eq_relation(int k) {
    Relation out(k, 2);
    for (int a = 0; a < k; ++a) out.set(static_cast<std::uint64_t>(a) * k + a);
    return out;
}

Relation const_relation(int k, int a) {
    if (a < 0 || a >= k) throw std::invalid_argument("element " + std::to_string(a) + " out of E_k");
    Relation out(k, 1);
    out.set(static_cast<std::uint64_t>(a));
    return out;
}

Relation subset_relation(int k, const std::vector<int>& members) {
    Relation out(k, 1);
    for (int a : members) {
        if (a < 0 || a >= k)
            throw std::invalid_argument("element " + std::to_string(a) + " out of E_k");
        out.set(static_cast<std::uint64_t>(a));
    }
    return out;
}

Relation project_exists(const Relation& rho, int i) {
    const int n = rho.arity();
    if (n < 1) throw std::invalid_argument("project_exists requires arity >= 1");
    if (i < 1 || i > n) throw std::invalid_argument("coordinate index out of range");
    const int k = rho.k();
    const std::uint64_t low = pow_u64(k, n - i); // weight of coordinate i
    Relation out(k, n - 1);
    for (std::uint64_t idx = 0; idx < rho.size(); ++idx) {
        if (!rho.test(idx)) continue;
        const std::uint64_t hi = idx / (low * k);
        const std::uint64_t lo = idx % low;
        out.set(hi * low + lo);
    }
    return out;
}

Relation identify(const Relation& rho, const std::vector<int>& map) {
    const int n = rho.arity();
    if (static_cast<int>(map.size()) != n)
        throw std::invalid_argument("identification map must cover every coordinate");
    int m = 0;
    for (int t : map) {
        if (t < 1) throw std::invalid_argument("target indices are 1-based");
        m = std::max(m, t);
    }
    std::vector<bool> seen(m, false);
    for (int t : map) seen[t - 1] = true;
    for (int j = 0; j < m; ++j)
        if (!seen[j])
            throw std::invalid_argument("gap in target indices: " + std::to_string(j + 1) + " unused");

    const int k = rho.k();
    Relation out(k, m);
    std::vector<int> target(m), source(n);
    for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
        std::uint64_t rest = idx;
        for (int j = m - 1; j >= 0; --j) {
            target[j] = static_cast<int>(rest % k);
            rest /= k;
        }
        for (int j = 0; j < n; ++j) source[j] = target[map[j] - 1];
        if (rho.contains(source)) out.set(idx);
    }
    return out;
}

bool leq(const Relation& lhs, const Relation& rhs) {
    if (lhs.k() != rhs.k() || lhs.arity() != rhs.arity())
        throw std::invalid_argument("leq requires equal k and arity");
    for (std::uint64_t i = 0; i < lhs.size(); ++i)
        if (lhs.test(i) && !rhs.test(i)) return false;
    return true;
}

Relation expand(const Relation& part, const std::vector<int>& coords, int arity) {
    if (static_cast<int>(coords.size()) != part.arity())
        throw std::invalid_argument("coordinate list does not match part arity");
    for (std::size_t j = 0; j + 1 < coords.size(); ++j)
        if (coords[j] >= coords[j + 1]) throw std::invalid_argument("coordinates must be strictly increasing");
    if (!coords.empty() && (coords.front() < 1 || coords.back() > arity))
        throw std::invalid_argument("coordinate out of range");

    const int k = part.k();
    Relation out(k, arity);
    std::vector<int> digits(arity), sub(coords.size());
    for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
        std::uint64_t rest = idx;
        for (int j = arity - 1; j >= 0; --j) {
            digits[j] = static_cast<int>(rest % k);
            rest /= k;
        }
        for (std::size_t j = 0; j < coords.size(); ++j) sub[j] = digits[coords[j] - 1];
        if (part.contains(sub)) out.set(idx);
    }
    return out;
}

} // namespace nucheck
