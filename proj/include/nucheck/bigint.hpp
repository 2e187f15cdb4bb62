#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nucheck {

/// Arbitrary-precision unsigned integer, enough for exact bound values
/// (multiply, power, compare, decimal rendering).
class BigUint {
public:
    BigUint() : words_{0} {}
    explicit BigUint(std::uint64_t value) : words_{value} { trim(); }

    static BigUint pow(std::uint64_t base, std::uint64_t exponent);

    BigUint operator*(const BigUint& other) const;
    bool operator==(const BigUint& other) const { return words_ == other.words_; }
    bool operator<(const BigUint& other) const;
    bool operator<=(const BigUint& other) const { return *this == other || *this < other; }

    bool is_zero() const { return words_.size() == 1 && words_[0] == 0; }
    /// Number of significant bits (0 for zero).
    std::uint64_t bit_length() const;

    std::string to_decimal() const;

private:
    void trim();
    // little-endian 64-bit limbs
    std::vector<std::uint64_t> words_;
};

} // namespace nucheck
