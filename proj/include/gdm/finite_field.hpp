#ifndef GDM_FINITE_FIELD_HPP
#define GDM_FINITE_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gdm/errors.hpp"
#include "gdm/gfp_poly.hpp"

namespace gdm {

class GaloisField;

/// Construction parameters for GF(p^m): a prime characteristic, an extension
/// degree and a monic degree-m reduction polynomial over GF(p). The root of
/// the polynomial becomes the field generator, so the polynomial must be
/// primitive, not merely irreducible.
struct FieldParams {
    int p = 2;
    int m = 1;
    GfpPoly poly; // ascending coefficients, size m+1, monic
};

/// An element of GF(p^m), stored as the power index of the field generator
/// with a distinguished zero. Coefficient vectors are derived views.
/// Elements keep a pointer to their field; the field must outlive them.
class FieldElement {
public:
    FieldElement() = default; // the zero element of no particular field

    bool is_zero() const noexcept { return log_ < 0; }

    /// Power index i such that this == alpha^i. Precondition: nonzero.
    std::int64_t power() const;

    /// Coefficients ascending by degree, length m.
    std::vector<int> coeffs() const;

    /// Base-p packed coefficient vector (digit j holds the coefficient of x^j).
    std::int64_t packed() const;

    /// True when all coefficients of degree >= 1 vanish, i.e. the element
    /// lies in the prime subfield GF(p). Zero counts as a base field element.
    bool in_base_field() const;

    /// The GF(p) digit of a base field element.
    int base_value() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement inv() const;
    FieldElement pow(std::int64_t k) const;

    /// Smallest t >= 1 with this^t = 1. Throws DivisionByZero for zero.
    std::int64_t multiplicative_order() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    const GaloisField* field() const noexcept { return field_; }

private:
    friend class GaloisField;
    FieldElement(const GaloisField* f, std::int32_t log) : field_(f), log_(log) {}

    const GaloisField* same_field_as(const FieldElement& rhs) const;

    const GaloisField* field_ = nullptr;
    std::int32_t log_ = -1; // -1 means zero
};

/// GF(p^m) with full exp/log tables. Immutable after construction and safe
/// for shared concurrent reads. Fields larger than 2^16 elements are
/// rejected; the table representation is meant for small fields.
class GaloisField {
public:
    /// Validates the parameters (p prime, poly monic irreducible primitive of
    /// degree m) and builds the tables. Errors: NotPrime, NotIrreducible,
    /// NotPrimitive, Unsupported (p^m > 65536).
    explicit GaloisField(FieldParams params);

    /// Constructs GF(p^m) from the built-in primitive polynomial catalog.
    static GaloisField with_default_poly(int p, int m);

    GaloisField(const GaloisField&) = delete;
    GaloisField& operator=(const GaloisField&) = delete;

    int p() const noexcept { return params_.p; }
    int m() const noexcept { return params_.m; }
    std::int64_t size() const noexcept { return size_; }          // p^m
    std::int64_t order() const noexcept { return size_ - 1; }      // p^m - 1
    const FieldParams& params() const noexcept { return params_; }

    FieldElement zero() const { return FieldElement(this, -1); }
    FieldElement one() const { return FieldElement(this, 0); }
    FieldElement generator() const { return FieldElement(this, static_cast<std::int32_t>(1 % order())); }

    /// alpha^i with i taken mod p^m - 1.
    FieldElement from_power(std::int64_t i) const;

    /// Element with the given coefficients (ascending by degree, length <= m).
    FieldElement from_coeffs(std::span<const int> coeffs) const;

    /// Element from a base-p packed coefficient vector in [0, p^m).
    FieldElement from_packed(std::int64_t packed) const;

    /// Field image of an integer: n mod p copies of 1 summed.
    FieldElement embed(std::int64_t n) const;

    /// alpha^((p^m-1)/N), of multiplicative order exactly N.
    /// Error OrderNotAvailable when N does not divide p^m - 1.
    FieldElement element_of_order(std::int64_t n) const;

    /// Monic minimal polynomial over GF(p); x for the zero element.
    GfpPoly minimal_polynomial(const FieldElement& a) const;

private:
    friend class FieldElement;

    FieldParams params_;
    std::int64_t size_ = 0;
    std::vector<std::uint32_t> exp_; // exp_[i] = packed coeff vector of alpha^i
    std::vector<std::int32_t> log_;  // log_[packed] = i; log_[0] = -1
};

/// Built-in primitive polynomial for GF(p^m). Covers p = 2 up to m = 16;
/// other characteristics are found by search for p^m <= 4096.
GfpPoly default_polynomial(int p, int m);

} // namespace gdm

#endif
