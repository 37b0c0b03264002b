#pragma once

// Exact nonnegative dyadic rationals p / 2^e with an arbitrary-precision numerator.
//
// Canonical form: either e == 0 or p is odd. Zero is 0 / 2^0.

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace expind {

class Dyadic {
public:
    using Limb = std::uint64_t;

    Dyadic() = default;

    /// numerator / 2^exponent, canonicalized.
    Dyadic(std::uint64_t numerator, std::uint64_t exponent) : exp_(exponent) {
        if (numerator) limbs_.push_back(numerator);
        normalize();
    }

    static Dyadic integer(std::uint64_t value) { return Dyadic(value, 0); }

    /// 2^power for any signed power.
    static Dyadic pow2(long long power) {
        Dyadic d;
        if (power >= 0) {
            d.limbs_ = shifted_left({1}, static_cast<std::uint64_t>(power));
        } else {
            d.limbs_ = {1};
            d.exp_ = static_cast<std::uint64_t>(-power);
        }
        return d;
    }

    /// sum over i of counts[i] * 2^(offset - i); exact, built by binary carrying.
    static Dyadic from_power_counts(const std::vector<std::uint64_t>& counts, long long offset) {
        Dyadic total;
        // Carry from the smallest weights upward so every count collapses to one bit.
        std::vector<Limb> bits;  // bit j weighs 2^(offset - (size-1) + j)
        unsigned __int128 carry = 0;
        const std::size_t len = counts.size();
        for (std::size_t j = 0; j < len || carry; ++j) {
            unsigned __int128 cur = carry;
            if (j < len) cur += counts[len - 1 - j];
            if (j / 64 >= bits.size()) bits.push_back(0);
            if (cur & 1) bits[j / 64] |= Limb{1} << (j % 64);
            carry = cur >> 1;
        }
        total.limbs_ = std::move(bits);
        long long low_power = offset - static_cast<long long>(len) + 1;
        if (low_power >= 0) {
            total.limbs_ = shifted_left(total.limbs_, static_cast<std::uint64_t>(low_power));
            total.exp_ = 0;
        } else {
            total.exp_ = static_cast<std::uint64_t>(-low_power);
        }
        total.normalize();
        return total;
    }

    bool is_zero() const { return limbs_.empty(); }
    std::uint64_t exponent() const { return exp_; }

    Dyadic& operator+=(const Dyadic& rhs) {
        if (rhs.is_zero()) return *this;
        std::uint64_t e = std::max(exp_, rhs.exp_);
        auto a = shifted_left(limbs_, e - exp_);
        auto b = shifted_left(rhs.limbs_, e - rhs.exp_);
        add_into(a, b);
        limbs_ = std::move(a);
        exp_ = e;
        normalize();
        return *this;
    }
    friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }

    /// Multiply by 2^power.
    Dyadic scaled(long long power) const {
        Dyadic d = *this;
        if (d.is_zero()) return d;
        if (power >= 0) {
            auto up = static_cast<std::uint64_t>(power);
            std::uint64_t take = std::min(up, d.exp_);
            d.exp_ -= take;
            d.limbs_ = shifted_left(d.limbs_, up - take);
        } else {
            d.exp_ += static_cast<std::uint64_t>(-power);
        }
        d.normalize();
        return d;
    }

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        std::uint64_t e = std::max(a.exp_, b.exp_);
        return compare_limbs(shifted_left(a.limbs_, e - a.exp_), shifted_left(b.limbs_, e - b.exp_));
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

    /// Decimal digits of the numerator.
    std::string numerator_string() const {
        if (is_zero()) return "0";
        std::vector<Limb> n = limbs_;
        std::string digits;
        constexpr Limb kChunk = 10000000000000000000ULL;  // 10^19
        while (!n.empty()) {
            unsigned __int128 rem = 0;
            for (std::size_t i = n.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | n[i];
                n[i] = static_cast<Limb>(cur / kChunk);
                rem = cur % kChunk;
            }
            while (!n.empty() && n.back() == 0) n.pop_back();
            auto chunk = std::to_string(static_cast<Limb>(rem));
            if (!n.empty()) chunk.insert(0, 19 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return digits;
    }

    /// "p/2^e"
    std::string str() const { return numerator_string() + "/2^" + std::to_string(exp_); }

    /// Approximate value; display only.
    double to_double() const {
        double v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
        return std::ldexp(v, -static_cast<int>(std::min<std::uint64_t>(exp_, 100000)));
    }

    /// Fixed-point decimal rendering for display.
    std::string decimal(int digits = 6) const {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(digits);
        os << to_double();
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

private:
    std::vector<Limb> limbs_;  // little-endian, no leading zero limbs
    std::uint64_t exp_ = 0;

    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) {
            exp_ = 0;
            return;
        }
        std::uint64_t tz = 0;
        std::size_t i = 0;
        while (limbs_[i] == 0) {
            tz += 64;
            ++i;
        }
        tz += static_cast<std::uint64_t>(std::countr_zero(limbs_[i]));
        std::uint64_t drop = std::min(tz, exp_);
        if (drop) {
            limbs_ = shifted_right(limbs_, drop);
            exp_ -= drop;
        }
    }

    static std::vector<Limb> shifted_left(const std::vector<Limb>& v, std::uint64_t k) {
        if (v.empty()) return {};
        std::size_t whole = k / 64;
        unsigned part = static_cast<unsigned>(k % 64);
        std::vector<Limb> out(v.size() + whole + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i + whole] |= v[i] << part;
            if (part) out[i + whole + 1] |= v[i] >> (64 - part);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    static std::vector<Limb> shifted_right(const std::vector<Limb>& v, std::uint64_t k) {
        std::size_t whole = k / 64;
        unsigned part = static_cast<unsigned>(k % 64);
        if (whole >= v.size()) return {};
        std::vector<Limb> out(v.size() - whole, 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = v[i + whole] >> part;
            if (part && i + whole + 1 < v.size()) out[i] |= v[i + whole + 1] << (64 - part);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    static void add_into(std::vector<Limb>& a, const std::vector<Limb>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        Limb carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned __int128 s = static_cast<unsigned __int128>(a[i]) + (i < b.size() ? b[i] : 0) + carry;
            a[i] = static_cast<Limb>(s);
            carry = static_cast<Limb>(s >> 64);
            if (!carry && i >= b.size()) break;
        }
        if (carry) a.push_back(carry);
    }

    static std::strong_ordering compare_limbs(const std::vector<Limb>& a, const std::vector<Limb>& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }
};

inline const Dyadic& dyadic_one() {
    static const Dyadic one = Dyadic::integer(1);
    return one;
}

}  // namespace expind
