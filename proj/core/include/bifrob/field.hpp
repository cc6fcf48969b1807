#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bifrob {

/// Ground field descriptor: characteristic 0 means the rationals,
/// a prime p means the residue field of p elements.
struct FieldSpec {
    std::uint64_t characteristic = 0;

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;
};

/// True iff n is prime (deterministic Miller-Rabin, valid for all 64-bit n).
bool is_prime_u64(std::uint64_t n);

/// Largest prime characteristic accepted by FieldSpec validation.
inline constexpr std::uint64_t kMaxCharacteristic = (std::uint64_t{1} << 61) - 1;

/// Throws std::invalid_argument unless characteristic is 0 or a prime < 2^61.
void validate_field(const FieldSpec& field);

/// An exact element of the ground field. Rationals are kept reduced with a
/// positive denominator; residues are kept in [0, p). Equal values always
/// have identical representations, so operator== is plain comparison.
class Scalar {
public:
    Scalar() = default;
    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar from_int(const FieldSpec& field, long long value);

    /// Parses "n", "-n" or "n/d" (d > 0, no whitespace). In a residue field
    /// the fraction is reduced via the inverse of d mod p; returns nullopt
    /// when the string is malformed, d = 0, or p divides d.
    static std::optional<Scalar> parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; nullopt for zero.
    std::optional<Scalar> inverse() const;
    /// Exact division; throws std::domain_error on division by zero.
    Scalar operator/(const Scalar& rhs) const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Canonical wire format: "n" or "n/d" with d > 1 (rationals),
    /// decimal residue (prime fields).
    std::string str() const;

    /// Rational payload; throws std::logic_error in prime characteristic.
    const mpq_class& rational() const;

private:
    FieldSpec field_{};
    mpq_class rational_{};      // payload when characteristic == 0
    std::uint64_t residue_ = 0; // payload when characteristic > 0

    void require_same_field(const Scalar& rhs) const;
};

} // namespace bifrob
