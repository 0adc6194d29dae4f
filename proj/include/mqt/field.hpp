#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mqt/errors.hpp"

namespace mqt {

class FieldElement;

/// Exact arithmetic in GF(p) and GF(p^k).
///
/// A Field is an immutable, cheap-to-copy handle. Elements are encoded as
/// integers in [0, q): the base-p digits of the encoded value are the
/// coefficients of the canonical polynomial representative, least-significant
/// digit = constant term. For prime fields the encoding is the residue itself.
///
/// Construction validates everything that arithmetic later relies on:
/// p is prime, the modulus (for k > 1) is monic and irreducible over GF(p),
/// and q = p^k fits in a machine word. Small fields precompute full
/// multiplication/addition tables; larger fields use polynomial arithmetic
/// directly.
///
/// All operations are pure; Field values are safe to share across threads.
class Field {
  public:
    /// Prime field GF(p). Throws DomainError unless p is prime.
    static Field prime(std::uint64_t p);

    /// Extension field GF(p^degree) with a monic modulus polynomial given by
    /// degree+1 coefficients, constant term first. The modulus must be
    /// irreducible over GF(p); a reducible modulus is rejected with the factor
    /// found.
    static Field extension(std::uint64_t p, unsigned degree, std::vector<std::uint64_t> modulus);

    /// Parses the field-spec string syntax:
    ///   "2", "3", "5"        prime fields
    ///   "2^2:1,1,1"          GF(4) with modulus x^2+x+1 (coefficients low to high)
    ///   "2^2", "2^3", "3^2"  built-in moduli for GF(4), GF(8), GF(9)
    static Field parse(std::string_view text);

    std::uint64_t characteristic() const;
    unsigned degree() const;
    std::uint64_t order() const;
    /// Modulus coefficients, constant term first; empty for prime fields.
    const std::vector<std::uint64_t>& modulus() const;

    /// Field-spec string understood by parse().
    std::string to_string() const;

    /// Structural equality: same characteristic, degree and modulus.
    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    // Arithmetic on encoded values in [0, order()).
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    /// Multiplicative inverse by extended Euclid (integers for k = 1,
    /// polynomials for k > 1). Throws DomainError for a = 0.
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// Canonical coefficient sequence of an encoded value, length degree().
    std::vector<std::uint64_t> coefficients(std::uint64_t a) const;
    /// Encodes a coefficient sequence (length degree()); entries are reduced
    /// mod p, negative inputs wrap.
    std::uint64_t encode(const std::vector<std::int64_t>& coeffs) const;

    FieldElement element(std::uint64_t encoded) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// Human-readable form of an encoded value: "2", "x+1", "x^2+2x".
    std::string format(std::uint64_t a) const;

  private:
    struct Rep;
    explicit Field(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

/// A field element as a value type: an encoded value plus its Field.
/// Equality is equality of canonical coefficient sequences within one field.
/// Mixing elements of different fields in arithmetic raises DomainError.
class FieldElement {
  public:
    FieldElement(Field field, std::uint64_t value);

    const Field& field() const { return field_; }
    std::uint64_t value() const { return value_; }
    std::vector<std::uint64_t> coefficients() const { return field_.coefficients(value_); }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& other) const {
        return field_ == other.field_ && value_ == other.value_;
    }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    std::string to_string() const { return field_.format(value_); }

  private:
    Field field_;
    std::uint64_t value_;
};

/// All q field elements exactly once, in canonical order: encoded values
/// 0, 1, ..., q-1, i.e. coefficient sequences ordered with the highest-degree
/// coefficient most significant. Guarded against absurd sizes.
std::vector<FieldElement> enumerate_elements(const Field& field);

}  // namespace mqt
