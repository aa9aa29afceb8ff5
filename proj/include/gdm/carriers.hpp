#ifndef GDM_CARRIERS_HPP
#define GDM_CARRIERS_HPP

#include <cstdint>
#include <vector>

#include "gdm/ffft.hpp"

namespace gdm {

/// The N Galois-Fourier spreading carriers of a transform plan: row i holds
/// (alpha^(i*0), ..., alpha^(i*(N-1))). Rows and columns are orthogonal
/// under the synchronous in-field correlation. The full matrix is cached
/// for N <= 4096; larger sets generate rows on demand.
class CarrierSet {
public:
    /// Keeps its own copy of the plan, so the argument may be a temporary.
    explicit CarrierSet(TransformPlan plan);

    std::int64_t size() const noexcept { return plan_.length(); }
    const TransformPlan& plan() const noexcept { return plan_; }

    /// Entry (i, k) = alpha^(ik).
    FieldElement entry(std::int64_t i, std::int64_t k) const;

    /// Carrier row i. Error IndexOutOfRange unless 0 <= i < N.
    std::vector<FieldElement> carrier(std::int64_t i) const;

    /// R(i - t) = sum_k alpha^(ik) alpha^(-tk): the field image of N when
    /// i = t mod N, zero otherwise. Evaluated by direct summation.
    FieldElement correlation(std::int64_t i, std::int64_t t) const;

    /// All N^2 pairwise correlations, row-major.
    std::vector<std::vector<FieldElement>> correlation_matrix() const;

    /// Spread one user symbol: (symbol * alpha^(ik))_k. Summing over all
    /// users with their frame symbols reproduces the frame's spectrum.
    std::vector<FieldElement> spread_user(std::int64_t i, FieldElement symbol) const;

private:
    static constexpr std::int64_t kMaterializeLimit = 4096;

    void check_index(std::int64_t i) const;

    TransformPlan plan_;
    std::vector<FieldElement> matrix_; // row-major N*N when materialized
};

} // namespace gdm

#endif
