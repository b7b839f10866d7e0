#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hanoi {

// Arbitrary-precision unsigned integer. Move totals grow like 2^n, so fixed
// width is not an option; everything here is exact integer arithmetic.
class MoveCount {
public:
    MoveCount() = default;
    MoveCount(std::uint64_t value);

    // 2^exponent
    static MoveCount pow2(std::uint64_t exponent);

    MoveCount& operator+=(const MoveCount& rhs);
    // Throws std::underflow_error if rhs > *this.
    MoveCount& operator-=(const MoveCount& rhs);
    MoveCount& operator*=(std::uint64_t factor);

    friend MoveCount operator+(MoveCount lhs, const MoveCount& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend MoveCount operator-(MoveCount lhs, const MoveCount& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend MoveCount operator*(MoveCount lhs, std::uint64_t factor) {
        lhs *= factor;
        return lhs;
    }

    bool operator==(const MoveCount& rhs) const { return limbs_ == rhs.limbs_; }
    bool operator!=(const MoveCount& rhs) const { return !(*this == rhs); }
    bool operator<(const MoveCount& rhs) const;
    bool operator>(const MoveCount& rhs) const { return rhs < *this; }
    bool operator<=(const MoveCount& rhs) const { return !(rhs < *this); }
    bool operator>=(const MoveCount& rhs) const { return !(*this < rhs); }

    bool is_zero() const { return limbs_.empty(); }
    bool is_power_of_two() const;
    bool fits_uint64() const { return limbs_.size() <= 1; }
    // Throws std::overflow_error if the value needs more than 64 bits.
    std::uint64_t to_uint64() const;

    std::string str() const;

private:
    // Base 2^64 little-endian digits, no trailing zero limbs; empty means 0.
    std::vector<std::uint64_t> limbs_;

    void trim();
};

std::ostream& operator<<(std::ostream& os, const MoveCount& value);

}  // namespace hanoi
