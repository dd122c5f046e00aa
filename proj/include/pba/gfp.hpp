#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pba {

/// Returns true if p is an odd prime (deterministic trial division, p < 2^31).
inline bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0 || p > INT32_MAX) return false;
    for (std::int64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

/// Element of the prime field GF(p), p an odd prime < 2^31.
///
/// The modulus travels with the value; combining elements with different
/// moduli is a usage error and throws.
class Gfp {
public:
    Gfp() : v_(0), p_(0) {}
    Gfp(std::int64_t v, std::uint32_t p) : p_(p) {
        if (p < 3) throw std::invalid_argument("Gfp: modulus must be an odd prime >= 3");
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        v_ = static_cast<std::uint32_t>(m);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Gfp operator+(const Gfp& a, const Gfp& b) {
        a.check(b);
        std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Gfp(s, a.p_, 0);
    }
    friend Gfp operator-(const Gfp& a, const Gfp& b) {
        a.check(b);
        std::uint64_t s = static_cast<std::uint64_t>(a.v_) + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return Gfp(s, a.p_, 0);
    }
    friend Gfp operator*(const Gfp& a, const Gfp& b) {
        a.check(b);
        return Gfp(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_, a.p_, 0);
    }
    Gfp operator-() const { return Gfp(v_ == 0 ? 0 : p_ - v_, p_, 0); }

    Gfp inv() const {
        if (v_ == 0) throw std::domain_error("Gfp: division by zero");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b) {
            std::int64_t q = a / b;
            std::int64_t tmp = a - q * b; a = b; b = tmp;
            tmp = x0 - q * x1; x0 = x1; x1 = tmp;
        }
        if (x0 < 0) x0 += p_;
        return Gfp(x0, p_, 0);
    }
    friend Gfp operator/(const Gfp& a, const Gfp& b) { return a * b.inv(); }

    Gfp& operator+=(const Gfp& o) { return *this = *this + o; }
    Gfp& operator-=(const Gfp& o) { return *this = *this - o; }
    Gfp& operator*=(const Gfp& o) { return *this = *this * o; }

    Gfp pow(std::uint64_t e) const {
        Gfp acc(1, p_, 0), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Gfp& a, const Gfp& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Gfp& a, const Gfp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    Gfp(std::uint64_t v, std::uint32_t p, int) : v_(static_cast<std::uint32_t>(v)), p_(p) {}
    void check(const Gfp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Gfp: mixed moduli");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

} // namespace pba
