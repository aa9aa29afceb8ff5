#ifndef GDM_MODEM_HPP
#define GDM_MODEM_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gdm/gdm_mux.hpp"

namespace gdm {

using cplx = std::complex<double>;

enum class ConstellationKind { bpsk, qpsk, psk8, qam16 };

const char* constellation_name(ConstellationKind k) noexcept;
ConstellationKind constellation_from_name(const std::string& name);

/// A digital constellation with unit average symbol energy, indexed by bit
/// label. Labelings are Gray: axis-adjacent 16-QAM points and circle-adjacent
/// PSK points differ in exactly one bit. The 16-QAM labeling splits the four
/// bits (b3 b2 | b1 b0) into I and Q pairs, each Gray-coded
/// {00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3} before scaling.
class Constellation {
public:
    static Constellation make(ConstellationKind kind);

    ConstellationKind kind() const noexcept { return kind_; }
    int bits_per_symbol() const noexcept { return bits_; }
    size_t size() const noexcept { return points_.size(); }

    /// Point carrying the given bit label.
    cplx point(unsigned label) const { return points_.at(label); }
    const std::vector<cplx>& points() const noexcept { return points_; }

    /// Minimum-Euclidean-distance decision.
    unsigned nearest(cplx received) const;

private:
    Constellation(ConstellationKind kind, int bits, std::vector<cplx> points)
        : kind_(kind), bits_(bits), points_(std::move(points)) {}

    ConstellationKind kind_;
    int bits_;
    std::vector<cplx> points_; // index = label
};

/// How frames of GF(2^m) symbols ride on a constellation: each field symbol
/// contributes m bits (coefficient vector, highest degree first); the bit
/// stream is zero-padded up to a whole number of constellation symbols and
/// the padding is stripped again on demap. Only characteristic 2 maps;
/// other fields raise Unsupported.
class FrameModulation {
public:
    FrameModulation(const GaloisField& field, ConstellationKind kind);

    const Constellation& constellation() const noexcept { return constellation_; }
    const GaloisField& field() const noexcept { return *field_; }
    int bits_per_field_symbol() const noexcept { return field_->m(); }

    /// Modulation symbols needed for a frame of the given field-symbol count
    /// (N uncompressed, the coset count v compressed).
    std::int64_t symbols_per_frame(std::int64_t n_field_symbols) const;

    /// symbols_per_frame * B1 -- the frame's bandwidth in the accounting
    /// model where one modulation symbol per signalling interval costs B1.
    double bandwidth(std::int64_t n_field_symbols, double b1) const;

private:
    const GaloisField* field_;
    Constellation constellation_;
};

/// Field symbols -> bit stream -> constellation points. Each symbol must
/// belong to the given field (or be a plain zero).
std::vector<cplx> map_spectrum(const std::vector<FieldElement>& symbols, const Constellation& c,
                               const GaloisField& field);

/// Nearest-point decisions -> bit stream -> field symbols. The expected
/// element count resolves the padding; it must satisfy
/// symbols_per_frame(n_elements) == received.size().
std::vector<FieldElement> demap(const std::vector<cplx>& received, const Constellation& c,
                                const GaloisField& field, size_t n_elements);

/// Nearest-point label per received sample.
std::vector<unsigned> hard_decisions(const std::vector<cplx>& received, const Constellation& c);

/// Reproducible noise source: std::mt19937_64 (a fully specified engine)
/// drives uniforms u = (x >> 11) * 2^-53 in [0,1), and Gaussians come from
/// the Box-Muller transform z = sqrt(-2 ln u1) * {cos, sin}(2 pi u2) with
/// u1 taken from (0,1]. No library distribution objects are involved, so a
/// seed pins the exact sample sequence on every platform.
class NoiseRng {
public:
    explicit NoiseRng(std::uint64_t seed) : engine_(seed) {}

    double uniform(); // [0, 1)
    double gaussian();
    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Substream seed for a (master seed, stream index) pair, via the splitmix64
/// mixer. Streams indexed per frame make results independent of how frames
/// are divided among worker threads.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

/// AWGN at a symbol SNR. Es is assumed normalized to 1, so the noise is
/// circular complex Gaussian with per-component variance 10^(-es_n0_db/10)/2.
/// An infinite es_n0_db disables the noise entirely.
struct ChannelModel {
    double es_n0_db = 0.0;
    std::uint64_t rng_seed = 0;
};

std::vector<cplx> awgn_channel(const std::vector<cplx>& symbols, const ChannelModel& ch);
void add_awgn(std::vector<cplx>& symbols, double es_n0_db, NoiseRng& rng);

/// Gaussian tail probability Q(x) = erfc(x / sqrt 2) / 2.
double q_function(double x);

/// Per-symbol error probability of coherent detection over AWGN at the given
/// Es/N0. The formula set, with g = 10^(es_n0_db/10):
///   BPSK        exact   Q(sqrt(2 g))
///   QPSK        exact   2 Q(sqrt g) - Q(sqrt g)^2
///   8-PSK       approx  2 Q(sqrt(2 g) sin(pi/8))   (nearest-neighbour)
///   16-QAM      exact   2 q - q^2, q = (3/2) Q(sqrt(g/5))  (per-axis 4-PAM)
double analytical_symbol_error(ConstellationKind kind, double es_n0_db);

/// Eb/N0 in dB for the same operating point, dividing Es by the bits per
/// symbol. Provided for cross-constellation comparisons.
double es_n0_to_eb_n0_db(ConstellationKind kind, double es_n0_db);

/// 1 - (1 - p_m)^exponent. Error DomainError outside [0, 1].
double frame_error_probability(double p_m, std::int64_t exponent);

struct SerPoint {
    double es_n0_db = 0.0;
    double p_m = 0.0;
    double p_e = 0.0;
};

/// Analytical sweep for one constellation and one frame exponent (N
/// uncompressed, the coset count v compressed).
struct SerCurve {
    ConstellationKind kind = ConstellationKind::bpsk;
    std::int64_t exponent = 1;
    std::vector<SerPoint> points;
};

SerCurve ser_curve(ConstellationKind kind, std::int64_t exponent,
                   const std::vector<double>& es_n0_db_grid);

/// Measured rates from the full chain mux -> [compress] -> map -> AWGN ->
/// demap -> [decompress] -> demux on random frames.
struct McResult {
    std::int64_t frames = 0;
    std::int64_t symbols = 0;       // modulation symbols transmitted
    std::int64_t symbol_errors = 0; // wrong nearest-point decisions
    std::int64_t frame_errors = 0;  // recovered frame != sent frame

    double p_m() const { return symbols ? static_cast<double>(symbol_errors) / symbols : 0.0; }
    double p_e() const { return frames ? static_cast<double>(frame_errors) / frames : 0.0; }

    /// Three binomial standard errors of the symbol error rate.
    double p_m_ci_radius() const;
};

struct McConfig {
    ConstellationKind kind = ConstellationKind::bpsk;
    bool compressed = false;
    std::int64_t n_frames = 1000;
    std::uint64_t seed = 1;
    int n_workers = 1; // results are identical for any worker count
};

/// Deterministic under a fixed seed: frame f draws everything from substream
/// substream_seed(seed, f), so the partition of frames among workers cannot
/// change any count.
McResult monte_carlo_ser(const GdmMux& mux, const McConfig& cfg, double es_n0_db);

} // namespace gdm

#endif
