#pragma once

// Prime-field arithmetic on least nonnegative residues.  Moduli up to 2^61
// are supported so a product of two residues always fits in 128 bits.

#include <cstdint>

#include "rabin/errors.hpp"

namespace rabin {

namespace fp {

inline constexpr std::uint64_t kMaxModulus = 1ULL << 61;

// All helpers assume a, b already reduced: 0 <= a, b < p.
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^62, no wraparound
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

// Inverse by extended Euclid; throws DivisionByZero on a == 0.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

}  // namespace fp

class PrimeModulus {
  public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const { return p_; }
    bool operator==(const PrimeModulus&) const = default;

  private:
    std::uint64_t p_;
};

class FieldElement {
  public:
    FieldElement(std::uint64_t v, const PrimeModulus& m)
        : v_(v % m.value()), p_(m.value()) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return raw(fp::add(v_, o.v_, p_), p_);
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return raw(fp::sub(v_, o.v_, p_), p_);
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return raw(fp::mul(v_, o.v_, p_), p_);
    }
    FieldElement operator/(const FieldElement& o) const {
        check(o);
        return raw(fp::mul(v_, fp::inv(o.v_, p_), p_), p_);
    }
    FieldElement operator-() const { return raw(fp::neg(v_, p_), p_); }

    FieldElement inverse() const { return raw(fp::inv(v_, p_), p_); }
    FieldElement pow(std::uint64_t e) const { return raw(fp::pow(v_, e, p_), p_); }

    bool operator==(const FieldElement&) const = default;

  private:
    static FieldElement raw(std::uint64_t v, std::uint64_t p) {
        FieldElement e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    FieldElement() : v_(0), p_(2) {}
    void check(const FieldElement& o) const {
        if (p_ != o.p_) throw ModulusMismatch("field elements from different moduli");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace rabin
