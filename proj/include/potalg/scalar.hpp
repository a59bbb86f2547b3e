#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "potalg/errors.hpp"

namespace potalg {

enum class FieldKind : std::uint8_t { Rationals, Cyclotomic72, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t modulus = 0;  // PrimeField only

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec cyclotomic72() { return {FieldKind::Cyclotomic72, 0}; }
    // Throws std::invalid_argument unless p is prime and p = 1 mod 72.
    static FieldSpec prime(std::uint32_t p = 1009);
    // Accepts "q", "cyclo72", "fp:<p>".
    static FieldSpec parse(const std::string& text);

    std::string to_string() const;
    bool operator==(const FieldSpec& o) const { return kind == o.kind && modulus == o.modulus; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

constexpr int kCycDegree = 24;  // phi(72)

// Exact field element. Immutable; copies share big-number storage.
// A default-constructed Scalar is an unbound zero that adopts the field of
// whatever it is combined with.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(const FieldSpec& spec) : spec_(spec), bound_(true) {}

    static Scalar from_int(const FieldSpec& spec, long v);
    static Scalar from_mpz(const FieldSpec& spec, const mpz_class& v);
    static Scalar from_mpq(const FieldSpec& spec, const mpq_class& v);
    // Power-basis coefficients c_0..c_23 of sum c_j zeta72^j (Cyclotomic72 only).
    static Scalar from_cyclotomic(const std::vector<mpq_class>& coeffs);
    static Scalar zero(const FieldSpec& spec) { return Scalar(spec); }
    static Scalar one(const FieldSpec& spec) { return from_int(spec, 1); }

    const FieldSpec& spec() const { return spec_; }
    bool bound() const { return bound_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(long e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Text that the polynomial parser reads back to the same value.
    std::string to_string() const;
    // True when to_string() needs parentheses inside a product.
    bool needs_parens() const;

    // Backend accessors.
    std::uint32_t fp_value() const { return fp_; }
    mpq_class rational() const;                  // Rationals, or rational-valued cyclotomic
    std::vector<mpq_class> cyclotomic() const;   // 24 coefficients
    bool is_rational() const;                    // value lies in the prime subfield image of Q

private:
    static FieldSpec join(const Scalar& a, const Scalar& b);

    FieldSpec spec_{};
    bool bound_ = false;
    std::uint32_t fp_ = 0;
    // Rationals: size 1. Cyclotomic72: size 24. Null means zero.
    std::shared_ptr<const std::vector<mpq_class>> big_;
};

// Least primitive root modulo a prime.
std::uint32_t least_primitive_root(std::uint32_t p);
bool is_prime(std::uint64_t n);

// Root of unity of exact order `order` (order divides 72). Deterministic.
Scalar make_root_of_unity(const FieldSpec& spec, int order);

// Named constants: theta, i, xi8, xi9, zeta72. Throws UnknownConstant for
// other names and UnsupportedOrder when the backend lacks the root.
Scalar named_constant(const FieldSpec& spec, const std::string& name);
bool is_constant_name(const std::string& name);

}  // namespace potalg
