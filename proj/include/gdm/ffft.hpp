#ifndef GDM_FFFT_HPP
#define GDM_FFFT_HPP

#include <cstdint>
#include <vector>

#include "gdm/finite_field.hpp"

namespace gdm {

/// Length-N vector over GF(p^m). Frames of user symbols restrict the
/// components to the base field; the transform itself does not.
using TimeVector = std::vector<FieldElement>;
using Spectrum = std::vector<FieldElement>;

/// Precomputed context for transforms of length N | p^m - 1: the kernel
/// alpha of multiplicative order N, its powers, and the inverse-transform
/// scale 1/N, taken as the inverse of the field image of N (N mod p ones
/// summed). Immutable; transforms are pure and concurrency-safe.
class TransformPlan {
public:
    /// Picks alpha = g^((p^m-1)/N). Error OrderNotAvailable if N does not
    /// divide p^m - 1.
    TransformPlan(const GaloisField& field, std::int64_t n);

    /// Uses the given kernel; its multiplicative order must be exactly N.
    TransformPlan(const GaloisField& field, FieldElement alpha, std::int64_t n);

    const GaloisField& field() const noexcept { return *field_; }
    std::int64_t length() const noexcept { return n_; }
    FieldElement alpha() const { return alpha_powers_[1 % n_]; }
    FieldElement n_inv() const { return n_inv_; }

    /// alpha^e for any integer e (reduced mod N).
    FieldElement alpha_power(std::int64_t e) const {
        return alpha_powers_[static_cast<size_t>(((e % n_) + n_) % n_)];
    }

private:
    const GaloisField* field_;
    std::int64_t n_;
    std::vector<FieldElement> alpha_powers_; // alpha^0 .. alpha^(N-1)
    FieldElement n_inv_;
};

/// V_k = sum_i v_i alpha^(ik), evaluated directly in O(N^2) field
/// operations. The direct sum is the contract; nothing fancier is hiding
/// behind it.
Spectrum ffft(const TransformPlan& plan, const TimeVector& v);

/// v_i = (1/N) sum_k V_k alpha^(-ik). Inverse of ffft for every input.
TimeVector iffft(const TransformPlan& plan, const Spectrum& big_v);

/// True iff V_k^p = V_(pk mod N) for every k; such spectra are exactly the
/// transforms of base-field-valued vectors.
bool is_valid_base_field_spectrum(const TransformPlan& plan, const Spectrum& big_v);

} // namespace gdm

#endif
