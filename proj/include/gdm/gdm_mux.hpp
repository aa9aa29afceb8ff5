#ifndef GDM_GDM_MUX_HPP
#define GDM_GDM_MUX_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gdm/ffft.hpp"

namespace gdm {

/// Partition of {0..N-1} into orbits under multiplication by p. Each coset
/// is stored in cycle order (s, sp, sp^2, ... mod N) starting at its leader,
/// the smallest member; cosets are listed by ascending leader.
struct CyclotomicStructure {
    std::int64_t n = 0;
    int p = 0;
    std::vector<std::vector<std::int64_t>> cosets;
    std::vector<std::int64_t> leaders;

    std::int64_t coset_count() const noexcept {
        return static_cast<std::int64_t>(cosets.size());
    }
};

/// Error NotCoprime unless gcd(N, p) = 1.
CyclotomicStructure cyclotomic_cosets(std::int64_t n, int p);

/// Number of distinct monic irreducible polynomials of degree k over GF(p),
/// by the Moebius sum (1/k) sum_{d|k} mu(d) p^(k/d).
std::int64_t count_irreducible(int k, int p);

/// Exact ratio, reduced, denominator positive.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
    std::string to_string() const;
};

/// Bandwidth compactness factor N / v of a coset structure.
Rational compactness_factor(const CyclotomicStructure& s);

/// Spectrum values at the coset leaders only, ascending by leader. The
/// conjugacy constraint makes the remaining components redundant.
struct CompressedSpectrum {
    std::vector<FieldElement> leader_values;
};

/// Keep only the leader components. The full conjugacy constraint is
/// verified first; error InvalidSpectrum when it fails.
CompressedSpectrum compress(const TransformPlan& plan, const CyclotomicStructure& s,
                            const Spectrum& big_v);

/// Rebuild the full spectrum: along each coset cycle, V_(s p^j) = V_s^(p^j).
/// Error InconsistentLeader when a leader value does not close its cycle,
/// i.e. V_s^(p^|C(s)|) != V_s.
Spectrum decompress(const TransformPlan& plan, const CyclotomicStructure& s,
                    const CompressedSpectrum& c);

/// N binary-or-p-ary users multiplexed through the length-N transform over
/// GF(p^m), with coset compression and bandwidth accounting. The symbol
/// duration and single-user bandwidth are abstract scalars used only by the
/// accounting formulas.
class GdmMux {
public:
    /// Error OrderNotAvailable unless N divides p^m - 1.
    GdmMux(const GaloisField& field, std::int64_t n_users);

    const TransformPlan& plan() const noexcept { return plan_; }
    const CyclotomicStructure& structure() const noexcept { return structure_; }
    std::int64_t users() const noexcept { return plan_.length(); }

    /// Spread a frame of GF(p) digits: exactly the FFFT of the frame.
    /// Errors: LengthMismatch; NonBaseFieldSymbol for digits outside [0, p).
    Spectrum multiplex(const std::vector<int>& frame) const;

    /// Inverse transform back to user digits. Error NonBaseFieldResult when
    /// a component lands outside GF(p), which signals a corrupted spectrum.
    std::vector<int> demultiplex(const Spectrum& big_v) const;

    CompressedSpectrum compress(const Spectrum& big_v) const;
    Spectrum decompress(const CompressedSpectrum& c) const;

    Rational compactness_factor() const { return gdm::compactness_factor(structure_); }

    /// N*B1 uncompressed; v*B1 (= N*B1 / gamma_cc) with coset compression.
    double bandwidth_requirement(double b1, bool compressed) const;

private:
    TransformPlan plan_;
    CyclotomicStructure structure_;
};

} // namespace gdm

#endif
