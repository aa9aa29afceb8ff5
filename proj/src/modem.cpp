#include "gdm/modem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace gdm {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

const char* constellation_name(ConstellationKind k) noexcept {
    switch (k) {
        case ConstellationKind::bpsk: return "bpsk";
        case ConstellationKind::qpsk: return "qpsk";
        case ConstellationKind::psk8: return "8psk";
        case ConstellationKind::qam16: return "16qam";
    }
    return "?";
}

ConstellationKind constellation_from_name(const std::string& name) {
    if (name == "bpsk") return ConstellationKind::bpsk;
    if (name == "qpsk") return ConstellationKind::qpsk;
    if (name == "8psk" || name == "psk8") return ConstellationKind::psk8;
    if (name == "16qam" || name == "qam16") return ConstellationKind::qam16;
    throw Error(Errc::parse_error, "unknown constellation '" + name + "'");
}

Constellation Constellation::make(ConstellationKind kind) {
    switch (kind) {
        case ConstellationKind::bpsk:
            return Constellation(kind, 1, {cplx(1.0, 0.0), cplx(-1.0, 0.0)});
        case ConstellationKind::qpsk: {
            // MSB on I, LSB on Q, bit 0 -> positive axis.
            const double s = 1.0 / std::sqrt(2.0);
            std::vector<cplx> pts(4);
            for (unsigned label = 0; label < 4; ++label) {
                double i = (label & 2u) ? -s : s;
                double q = (label & 1u) ? -s : s;
                pts[label] = cplx(i, q);
            }
            return Constellation(kind, 2, std::move(pts));
        }
        case ConstellationKind::psk8: {
            // Position k on the unit circle carries the reflected binary
            // label k ^ (k >> 1), so neighbours differ in one bit.
            std::vector<cplx> pts(8);
            for (unsigned k = 0; k < 8; ++k) {
                unsigned label = k ^ (k >> 1);
                double a = 2.0 * kPi * k / 8.0;
                pts[label] = cplx(std::cos(a), std::sin(a));
            }
            return Constellation(kind, 3, std::move(pts));
        }
        case ConstellationKind::qam16: {
            // Bits b3 b2 pick I, b1 b0 pick Q, each pair Gray-coded onto
            // the 4-PAM levels; 1/sqrt(10) normalizes the mean energy.
            auto pam = [](unsigned two_bits) {
                switch (two_bits) {
                    case 0b00: return -3.0;
                    case 0b01: return -1.0;
                    case 0b11: return 1.0;
                    default: return 3.0; // 0b10
                }
            };
            const double s = 1.0 / std::sqrt(10.0);
            std::vector<cplx> pts(16);
            for (unsigned label = 0; label < 16; ++label)
                pts[label] = s * cplx(pam(label >> 2), pam(label & 3u));
            return Constellation(kind, 4, std::move(pts));
        }
    }
    throw Error(Errc::unsupported, "unknown constellation kind");
}

unsigned Constellation::nearest(cplx received) const {
    unsigned best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (unsigned label = 0; label < points_.size(); ++label) {
        double d = std::norm(received - points_[label]);
        if (d < best_d) {
            best_d = d;
            best = label;
        }
    }
    return best;
}

FrameModulation::FrameModulation(const GaloisField& field, ConstellationKind kind)
    : field_(&field), constellation_(Constellation::make(kind)) {
    if (field.p() != 2)
        throw Error(Errc::unsupported, "bit-level mapping needs characteristic 2");
}

std::int64_t FrameModulation::symbols_per_frame(std::int64_t n_field_symbols) const {
    if (n_field_symbols < 0)
        throw Error(Errc::domain_error, "negative symbol count");
    const std::int64_t bits = n_field_symbols * field_->m();
    const std::int64_t bps = constellation_.bits_per_symbol();
    return (bits + bps - 1) / bps;
}

double FrameModulation::bandwidth(std::int64_t n_field_symbols, double b1) const {
    return static_cast<double>(symbols_per_frame(n_field_symbols)) * b1;
}

std::vector<cplx> map_spectrum(const std::vector<FieldElement>& symbols, const Constellation& c,
                               const GaloisField& field) {
    if (field.p() != 2)
        throw Error(Errc::unsupported, "bit-level mapping needs characteristic 2");
    const int m = field.m();
    std::vector<int> bits;
    bits.reserve(symbols.size() * static_cast<size_t>(m));
    for (const FieldElement& s : symbols) {
        if (s.field() != nullptr && s.field() != &field)
            throw Error(Errc::field_mismatch, "symbol from a different field");
        if (s.is_zero()) {
            bits.insert(bits.end(), m, 0);
            continue;
        }
        std::vector<int> cf = s.coeffs();
        for (int j = m - 1; j >= 0; --j) bits.push_back(cf[static_cast<size_t>(j)]);
    }
    const size_t bps = static_cast<size_t>(c.bits_per_symbol());
    while (bits.size() % bps != 0) bits.push_back(0);

    std::vector<cplx> out;
    out.reserve(bits.size() / bps);
    for (size_t i = 0; i < bits.size(); i += bps) {
        unsigned label = 0;
        for (size_t j = 0; j < bps; ++j) label = (label << 1) | static_cast<unsigned>(bits[i + j]);
        out.push_back(c.point(label));
    }
    return out;
}

std::vector<unsigned> hard_decisions(const std::vector<cplx>& received, const Constellation& c) {
    std::vector<unsigned> out;
    out.reserve(received.size());
    for (cplx r : received) out.push_back(c.nearest(r));
    return out;
}

std::vector<FieldElement> demap(const std::vector<cplx>& received, const Constellation& c,
                                const GaloisField& field, size_t n_elements) {
    if (field.p() != 2)
        throw Error(Errc::unsupported, "bit-level mapping needs characteristic 2");
    const int m = field.m();
    const std::int64_t bps = c.bits_per_symbol();
    const std::int64_t needed_bits = static_cast<std::int64_t>(n_elements) * m;
    const std::int64_t needed_symbols = (needed_bits + bps - 1) / bps;
    if (static_cast<std::int64_t>(received.size()) != needed_symbols)
        throw Error(Errc::length_mismatch, "received length does not fit the element count");

    std::vector<int> bits;
    bits.reserve(received.size() * static_cast<size_t>(bps));
    for (cplx r : received) {
        unsigned label = c.nearest(r);
        for (std::int64_t j = bps - 1; j >= 0; --j)
            bits.push_back(static_cast<int>((label >> j) & 1u));
    }

    std::vector<FieldElement> out;
    out.reserve(n_elements);
    std::vector<int> cf(static_cast<size_t>(m));
    for (size_t i = 0; i < n_elements; ++i) {
        // Stream order is highest degree first.
        for (int j = 0; j < m; ++j)
            cf[static_cast<size_t>(m - 1 - j)] = bits[i * static_cast<size_t>(m) + static_cast<size_t>(j)];
        out.push_back(field.from_coeffs(cf));
    }
    return out;
}

double NoiseRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NoiseRng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform(); // (0, 1], keeps the log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void add_awgn(std::vector<cplx>& symbols, double es_n0_db, NoiseRng& rng) {
    if (std::isinf(es_n0_db) && es_n0_db > 0) return;
    const double sigma = std::sqrt(0.5 * std::pow(10.0, -es_n0_db / 10.0));
    for (cplx& s : symbols) {
        double re = rng.gaussian();
        double im = rng.gaussian();
        s += cplx(sigma * re, sigma * im);
    }
}

std::vector<cplx> awgn_channel(const std::vector<cplx>& symbols, const ChannelModel& ch) {
    NoiseRng rng(ch.rng_seed);
    std::vector<cplx> out = symbols;
    add_awgn(out, ch.es_n0_db, rng);
    return out;
}

double q_function(double x) {
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double analytical_symbol_error(ConstellationKind kind, double es_n0_db) {
    if (std::isinf(es_n0_db) && es_n0_db > 0) return 0.0;
    const double g = std::pow(10.0, es_n0_db / 10.0);
    switch (kind) {
        case ConstellationKind::bpsk:
            return q_function(std::sqrt(2.0 * g));
        case ConstellationKind::qpsk: {
            double q = q_function(std::sqrt(g));
            return 2.0 * q - q * q;
        }
        case ConstellationKind::psk8:
            return 2.0 * q_function(std::sqrt(2.0 * g) * std::sin(kPi / 8.0));
        case ConstellationKind::qam16: {
            double q = 1.5 * q_function(std::sqrt(g / 5.0));
            return 2.0 * q - q * q;
        }
    }
    throw Error(Errc::unsupported, "unknown constellation kind");
}

double es_n0_to_eb_n0_db(ConstellationKind kind, double es_n0_db) {
    const int bits = Constellation::make(kind).bits_per_symbol();
    return es_n0_db - 10.0 * std::log10(static_cast<double>(bits));
}

double frame_error_probability(double p_m, std::int64_t exponent) {
    if (!(p_m >= 0.0 && p_m <= 1.0))
        throw Error(Errc::domain_error, "symbol error probability outside [0, 1]");
    if (exponent < 0)
        throw Error(Errc::domain_error, "negative exponent");
    if (p_m == 1.0) return exponent == 0 ? 0.0 : 1.0;
    return -std::expm1(static_cast<double>(exponent) * std::log1p(-p_m));
}

SerCurve ser_curve(ConstellationKind kind, std::int64_t exponent,
                   const std::vector<double>& es_n0_db_grid) {
    SerCurve curve;
    curve.kind = kind;
    curve.exponent = exponent;
    curve.points.reserve(es_n0_db_grid.size());
    for (double db : es_n0_db_grid) {
        SerPoint pt;
        pt.es_n0_db = db;
        pt.p_m = analytical_symbol_error(kind, db);
        pt.p_e = frame_error_probability(pt.p_m, exponent);
        curve.points.push_back(pt);
    }
    return curve;
}

double McResult::p_m_ci_radius() const {
    if (symbols <= 0) return 0.0;
    const double p = p_m();
    return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(symbols));
}

namespace {

// One frame end to end. Decode failures of any kind count as a frame error.
void run_frame(const GdmMux& mux, const McConfig& cfg, double es_n0_db,
               const Constellation& c, const GaloisField& field, std::uint64_t frame_index,
               McResult& acc) {
    NoiseRng rng(substream_seed(cfg.seed, frame_index));
    const std::int64_t n = mux.users();
    const int p = field.p();

    std::vector<int> frame(static_cast<size_t>(n));
    for (int& d : frame) d = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(p));

    Spectrum big_v = mux.multiplex(frame);
    std::vector<FieldElement> tx_elems =
        cfg.compressed ? mux.compress(big_v).leader_values : big_v;

    std::vector<cplx> tx = map_spectrum(tx_elems, c, field);
    std::vector<cplx> rx = tx;
    add_awgn(rx, es_n0_db, rng);

    acc.symbols += static_cast<std::int64_t>(tx.size());
    for (size_t i = 0; i < tx.size(); ++i)
        if (c.nearest(rx[i]) != c.nearest(tx[i])) ++acc.symbol_errors;

    bool frame_error;
    try {
        std::vector<FieldElement> rx_elems = demap(rx, c, field, tx_elems.size());
        Spectrum full = cfg.compressed ? mux.decompress(CompressedSpectrum{std::move(rx_elems)})
                                       : Spectrum(std::move(rx_elems));
        frame_error = (mux.demultiplex(full) != frame);
    } catch (const Error&) {
        frame_error = true; // InconsistentLeader or NonBaseFieldResult
    }
    if (frame_error) ++acc.frame_errors;
    ++acc.frames;
}

} // namespace

McResult monte_carlo_ser(const GdmMux& mux, const McConfig& cfg, double es_n0_db) {
    if (cfg.n_frames < 0)
        throw Error(Errc::domain_error, "negative frame count");
    const GaloisField& field = mux.plan().field();
    FrameModulation fm(field, cfg.kind);
    const Constellation& c = fm.constellation();

    int workers = std::max(1, cfg.n_workers);
    if (static_cast<std::int64_t>(workers) > std::max<std::int64_t>(1, cfg.n_frames))
        workers = static_cast<int>(std::max<std::int64_t>(1, cfg.n_frames));

    // Per-frame substreams make the totals independent of this partition.
    std::vector<McResult> parts(static_cast<size_t>(workers));
    auto run_block = [&](std::int64_t lo, std::int64_t hi, McResult& out) {
        for (std::int64_t f = lo; f < hi; ++f)
            run_frame(mux, cfg, es_n0_db, c, field, static_cast<std::uint64_t>(f), out);
    };

    if (workers == 1) {
        run_block(0, cfg.n_frames, parts[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(workers));
        const std::int64_t per = cfg.n_frames / workers;
        const std::int64_t extra = cfg.n_frames % workers;
        std::int64_t lo = 0;
        for (int w = 0; w < workers; ++w) {
            std::int64_t hi = lo + per + (w < extra ? 1 : 0);
            threads.emplace_back(run_block, lo, hi, std::ref(parts[static_cast<size_t>(w)]));
            lo = hi;
        }
        for (std::thread& t : threads) t.join();
    }

    McResult total;
    for (const McResult& part : parts) {
        total.frames += part.frames;
        total.symbols += part.symbols;
        total.symbol_errors += part.symbol_errors;
        total.frame_errors += part.frame_errors;
    }
    return total;
}

} // namespace gdm
