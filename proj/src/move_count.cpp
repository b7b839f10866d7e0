#include "hanoi/move_count.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hanoi {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

MoveCount::MoveCount(u64 value) {
    if (value != 0) {
        limbs_.push_back(value);
    }
}

MoveCount MoveCount::pow2(u64 exponent) {
    MoveCount result;
    result.limbs_.assign(exponent / 64 + 1, 0);
    result.limbs_.back() = u64{1} << (exponent % 64);
    return result;
}

void MoveCount::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

MoveCount& MoveCount::operator+=(const MoveCount& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) {
        limbs_.resize(rhs.limbs_.size(), 0);
    }
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 sum = u128{limbs_[i]} + carry;
        if (i < rhs.limbs_.size()) {
            sum += rhs.limbs_[i];
        }
        limbs_[i] = static_cast<u64>(sum);
        carry = static_cast<u64>(sum >> 64);
        if (carry == 0 && i >= rhs.limbs_.size()) {
            break;
        }
    }
    if (carry != 0) {
        limbs_.push_back(carry);
    }
    return *this;
}

MoveCount& MoveCount::operator-=(const MoveCount& rhs) {
    if (*this < rhs) {
        throw std::underflow_error("MoveCount subtraction would go negative");
    }
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 sub = u128{borrow};
        if (i < rhs.limbs_.size()) {
            sub += rhs.limbs_[i];
        } else if (borrow == 0) {
            break;
        }
        if (u128{limbs_[i]} >= sub) {
            limbs_[i] = static_cast<u64>(u128{limbs_[i]} - sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<u64>((u128{1} << 64) + limbs_[i] - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

MoveCount& MoveCount::operator*=(u64 factor) {
    if (factor == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 product = u128{limb} * factor + carry;
        limb = static_cast<u64>(product);
        carry = static_cast<u64>(product >> 64);
    }
    if (carry != 0) {
        limbs_.push_back(carry);
    }
    return *this;
}

bool MoveCount::operator<(const MoveCount& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) {
        return limbs_.size() < rhs.limbs_.size();
    }
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) {
            return limbs_[i] < rhs.limbs_[i];
        }
    }
    return false;
}

bool MoveCount::is_power_of_two() const {
    if (limbs_.empty()) {
        return false;
    }
    u64 top = limbs_.back();
    if ((top & (top - 1)) != 0) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
        if (limbs_[i] != 0) {
            return false;
        }
    }
    return true;
}

u64 MoveCount::to_uint64() const {
    if (limbs_.size() > 1) {
        throw std::overflow_error("MoveCount does not fit in 64 bits");
    }
    return limbs_.empty() ? 0 : limbs_[0];
}

std::string MoveCount::str() const {
    if (limbs_.empty()) {
        return "0";
    }
    // Repeatedly divide by 10^19 (the largest power of ten below 2^64) and
    // stitch the 19-digit chunks together.
    constexpr u64 chunk = 10000000000000000000ull;
    std::vector<u64> work = limbs_;
    std::string out;
    while (!work.empty()) {
        u64 remainder = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            u128 cur = (u128{remainder} << 64) | work[i];
            work[i] = static_cast<u64>(cur / chunk);
            remainder = static_cast<u64>(cur % chunk);
        }
        while (!work.empty() && work.back() == 0) {
            work.pop_back();
        }
        std::string digits = std::to_string(remainder);
        if (work.empty()) {
            out.insert(0, digits);
        } else {
            out.insert(0, std::string(19 - digits.size(), '0') + digits);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MoveCount& value) {
    return os << value.str();
}

}  // namespace hanoi
