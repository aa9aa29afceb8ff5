#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gdm/carriers.hpp"
#include "gdm/ffft.hpp"
#include "gdm/finite_field.hpp"
#include "gdm/gdm_mux.hpp"
#include "gdm/modem.hpp"
#include "gdm/notation.hpp"
#include "gdm/svg_plot.hpp"

namespace {

using namespace gdm;

struct FieldFlags {
    int p = 2;
    int m = 0; // 0 = infer
    std::string poly;
};

void add_field_flags(CLI::App* cmd, FieldFlags& ff) {
    cmd->add_option("--p", ff.p, "Field characteristic (prime)")->capture_default_str();
    cmd->add_option("--m", ff.m, "Extension degree");
    cmd->add_option("--poly", ff.poly,
                    "Reduction polynomial, highest degree first (e.g. 10011 for x^4+x+1)");
}

// Smallest m with N | p^m - 1, i.e. the order of p modulo N.
int infer_degree(std::int64_t p, std::int64_t n) {
    if (n <= 1 || std::gcd(p, n) != 1)
        throw Error(Errc::not_coprime, "cannot infer a field degree for N=" + std::to_string(n));
    std::int64_t v = p % n;
    int k = 1;
    while (v != 1) {
        v = (v * p) % n;
        if (++k > 32) throw Error(Errc::unsupported, "field degree for this N is out of range");
    }
    return k;
}

std::unique_ptr<GaloisField> make_field(const FieldFlags& ff, std::int64_t n = 0) {
    if (!ff.poly.empty()) {
        GfpPoly poly = parse_polynomial(ff.poly, ff.p);
        const int deg = gfp::degree(poly);
        if (ff.m != 0 && ff.m != deg)
            throw Error(Errc::parse_error, "--m disagrees with the polynomial degree");
        return std::make_unique<GaloisField>(FieldParams{ff.p, deg, std::move(poly)});
    }
    int m = ff.m;
    if (m == 0) {
        if (n <= 0)
            throw Error(Errc::parse_error, "need --m or --poly (or --n to infer the degree)");
        m = infer_degree(ff.p, n);
    }
    return std::make_unique<GaloisField>(FieldParams{ff.p, m, default_polynomial(ff.p, m)});
}

std::string output_dir() {
    const char* d = std::getenv("GDM_OUTPUT_DIR");
    return (d && *d) ? d : ".";
}

void write_file(const std::string& path, const std::string& content) {
    std::filesystem::path fp(path);
    if (fp.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(fp.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error(Errc::io_error, "write failed for '" + path + "'");
    std::cout << "wrote " << path << "\n";
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

// ser output path for one constellation: the explicit --out (with the
// constellation name spliced in when several were requested), or a default
// name under the output directory.
std::string ser_path(const std::string& out_opt, const std::string& prefix,
                     const std::string& mod, bool multi, const std::string& ext) {
    if (out_opt.empty()) return output_dir() + "/" + prefix + "_" + mod + ext;
    if (!multi) return out_opt;
    std::filesystem::path p(out_opt);
    std::filesystem::path withmod = p.parent_path() / (p.stem().string() + "_" + mod + p.extension().string());
    return withmod.string();
}

std::vector<ConstellationKind> parse_mods(const std::string& text) {
    std::vector<ConstellationKind> mods;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ','))
        mods.push_back(constellation_from_name(cur));
    if (mods.empty()) throw Error(Errc::parse_error, "empty constellation list");
    return mods;
}

// ---- field ----

void cmd_field(const FieldFlags& ff, const std::string& out_path) {
    std::unique_ptr<GaloisField> field = make_field(ff);
    std::string csv = "i,power,coeff_vector,order,minimal_poly\n";
    csv += "-,0,\"" + format_coeff_vector(field->zero()) + "\",-," +
           gfp::to_string(field->minimal_polynomial(field->zero())) + "\n";
    for (std::int64_t i = 0; i < field->order(); ++i) {
        FieldElement a = field->from_power(i);
        csv += std::to_string(i) + "," + format_element(a) + ",\"" + format_coeff_vector(a) +
               "\"," + std::to_string(a.multiplicative_order()) + "," +
               gfp::to_string(field->minimal_polynomial(a)) + "\n";
    }
    emit(out_path, csv);
}

// ---- carriers ----

void cmd_carriers(const FieldFlags& ff, std::int64_t n, const std::string& out_path) {
    std::unique_ptr<GaloisField> field = make_field(ff, n);
    TransformPlan plan(*field, n);
    CarrierSet carriers(plan);
    std::string out = "# carrier matrix\n";
    for (std::int64_t i = 0; i < n; ++i)
        out += format_element_list(carriers.carrier(i)) + "\n";
    out += "# correlation matrix\n";
    for (const auto& row : carriers.correlation_matrix())
        out += format_element_list(row) + "\n";
    emit(out_path, out);
}

// ---- mux / demux ----

void cmd_mux(const FieldFlags& ff, const std::string& frame_text, bool compress) {
    FieldFlags ff2 = ff;
    std::vector<int> frame = parse_digits(frame_text, ff.p);
    std::unique_ptr<GaloisField> field = make_field(ff2, static_cast<std::int64_t>(frame.size()));
    GdmMux mux(*field, static_cast<std::int64_t>(frame.size()));
    Spectrum big_v = mux.multiplex(frame);
    if (compress)
        std::cout << format_element_list(mux.compress(big_v).leader_values) << "\n";
    else
        std::cout << format_element_list(big_v) << "\n";
}

void cmd_demux(const FieldFlags& ff, std::int64_t n, const std::string& spectrum_text,
               bool compressed) {
    std::unique_ptr<GaloisField> field = make_field(ff, n);
    GdmMux mux(*field, n);
    std::vector<FieldElement> values = parse_element_list(*field, spectrum_text);
    Spectrum big_v;
    if (compressed) {
        big_v = mux.decompress(CompressedSpectrum{std::move(values)});
    } else {
        big_v = std::move(values);
    }
    std::cout << format_digits(mux.demultiplex(big_v)) << "\n";
}

// ---- roundtrip ----

void cmd_roundtrip(const FieldFlags& ff, std::int64_t n, const std::string& frame_text,
                   std::uint64_t seed, int corrupt_index) {
    std::unique_ptr<GaloisField> field = make_field(ff, n);
    GdmMux mux(*field, n);

    std::vector<int> frame;
    if (!frame_text.empty()) {
        frame = parse_digits(frame_text, ff.p);
        if (static_cast<std::int64_t>(frame.size()) != n)
            throw Error(Errc::length_mismatch, "frame length does not match --n");
    } else {
        NoiseRng rng(seed);
        frame.resize(static_cast<size_t>(n));
        for (int& d : frame)
            d = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(ff.p));
    }

    Spectrum big_v = mux.multiplex(frame);
    CompressedSpectrum comp = mux.compress(big_v);
    std::cout << "frame:      " << format_digits(frame) << "\n";
    std::cout << "spectrum:   " << format_element_list(big_v) << "\n";
    std::cout << "compressed: " << format_element_list(comp.leader_values) << "\n";

    if (corrupt_index >= 0) {
        if (static_cast<size_t>(corrupt_index) >= comp.leader_values.size())
            throw Error(Errc::index_out_of_range, "corrupt index exceeds the coset count");
        comp.leader_values[static_cast<size_t>(corrupt_index)] = field->generator();
        std::cout << "corrupted:  " << format_element_list(comp.leader_values) << "\n";
    }

    Spectrum restored = mux.decompress(comp);
    std::vector<int> recovered = mux.demultiplex(restored);
    std::cout << "recovered:  " << format_digits(recovered) << "\n";
    if (recovered != frame)
        throw Error(Errc::domain_error, "roundtrip mismatch: recovered frame differs");
    std::cout << "roundtrip:  ok\n";
}

// ---- ser-analytic / ser-mc ----

struct SerFlags {
    std::string mods = "bpsk";
    std::int64_t n = 15;
    bool compressed = false;
    std::string snr;
    std::string out;
    bool plot = false;
};

std::int64_t frame_exponent(const SerFlags& sf, int p) {
    if (!sf.compressed) return sf.n;
    CyclotomicStructure s = cyclotomic_cosets(sf.n, p);
    return static_cast<std::int64_t>(s.cosets.size());
}

void cmd_ser_analytic(const FieldFlags& ff, const SerFlags& sf) {
    std::vector<ConstellationKind> mods = parse_mods(sf.mods);
    std::vector<double> grid = parse_snr_grid(sf.snr.empty() ? "0:12:1" : sf.snr);
    const std::int64_t exponent = frame_exponent(sf, ff.p);

    std::vector<PlotSeries> series;
    for (ConstellationKind kind : mods) {
        SerCurve curve = ser_curve(kind, exponent, grid);
        std::string csv = "snr_db,p_m,p_e\n";
        PlotSeries pm{std::string(constellation_name(kind)) + " p_m", {}, {}};
        PlotSeries pe{std::string(constellation_name(kind)) + " p_e", {}, {}};
        for (const SerPoint& pt : curve.points) {
            csv += format_snr(pt.es_n0_db) + "," + format_probability(pt.p_m) + "," +
                   format_probability(pt.p_e) + "\n";
            pm.x.push_back(pt.es_n0_db);
            pm.y.push_back(pt.p_m);
            pe.x.push_back(pt.es_n0_db);
            pe.y.push_back(pt.p_e);
        }
        write_file(ser_path(sf.out, "ser_analytic", constellation_name(kind), mods.size() > 1, ".csv"),
                   csv);
        series.push_back(std::move(pm));
        series.push_back(std::move(pe));
    }
    if (sf.plot) {
        std::filesystem::path base(sf.out.empty() ? output_dir() + "/ser_analytic.csv" : sf.out);
        std::string svg_path = (base.parent_path() / (base.stem().string() + ".svg")).string();
        write_file(svg_path, render_log_plot("Analytical symbol and frame error rates",
                                             "Es/N0 (dB)", "error rate", series));
    }
}

void cmd_ser_mc(const FieldFlags& ff, const SerFlags& sf, std::uint64_t seed,
                std::int64_t frames, int threads) {
    std::vector<ConstellationKind> mods = parse_mods(sf.mods);
    std::vector<double> grid = parse_snr_grid(sf.snr.empty() ? "0:12:2" : sf.snr);
    std::unique_ptr<GaloisField> field = make_field(ff, sf.n);
    GdmMux mux(*field, sf.n);

    std::vector<PlotSeries> series;
    for (ConstellationKind kind : mods) {
        McConfig cfg;
        cfg.kind = kind;
        cfg.compressed = sf.compressed;
        cfg.n_frames = frames;
        cfg.seed = seed;
        cfg.n_workers = threads;

        std::string csv = "snr_db,p_m,p_e,ci_radius\n";
        PlotSeries pm{std::string(constellation_name(kind)) + " p_m", {}, {}};
        PlotSeries pe{std::string(constellation_name(kind)) + " p_e", {}, {}};
        for (double db : grid) {
            McResult r = monte_carlo_ser(mux, cfg, db);
            csv += format_snr(db) + "," + format_probability(r.p_m()) + "," +
                   format_probability(r.p_e()) + "," + format_probability(r.p_m_ci_radius()) + "\n";
            pm.x.push_back(db);
            pm.y.push_back(r.p_m());
            pe.x.push_back(db);
            pe.y.push_back(r.p_e());
        }
        write_file(ser_path(sf.out, "ser_mc", constellation_name(kind), mods.size() > 1, ".csv"),
                   csv);
        series.push_back(std::move(pm));
        series.push_back(std::move(pe));
    }
    if (sf.plot) {
        std::filesystem::path base(sf.out.empty() ? output_dir() + "/ser_mc.csv" : sf.out);
        std::string svg_path = (base.parent_path() / (base.stem().string() + ".svg")).string();
        write_file(svg_path, render_log_plot("Measured symbol and frame error rates",
                                             "Es/N0 (dB)", "error rate", series));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois-field division multiplexing toolkit"};
    app.require_subcommand(1);

    // field
    FieldFlags field_ff;
    std::string field_out;
    CLI::App* c_field = app.add_subcommand("field", "Dump a field's element table as CSV");
    add_field_flags(c_field, field_ff);
    c_field->add_option("--out", field_out, "Output file (default: stdout)");

    // carriers
    FieldFlags car_ff;
    std::int64_t car_n = 15;
    std::string car_out;
    CLI::App* c_car = app.add_subcommand("carriers", "Print the carrier and correlation matrices");
    add_field_flags(c_car, car_ff);
    c_car->add_option("--n", car_n, "Number of users / transform length")->required();
    c_car->add_option("--out", car_out, "Output file (default: stdout)");

    // mux
    FieldFlags mux_ff;
    std::string mux_frame;
    bool mux_compress = false;
    CLI::App* c_mux = app.add_subcommand("mux", "Spread a frame of GF(p) digits");
    add_field_flags(c_mux, mux_ff);
    c_mux->add_option("--frame", mux_frame, "User digits, e.g. 011010001011001 or 0,1,1,...")
        ->required();
    c_mux->add_flag("--compress", mux_compress, "Emit the coset-compressed spectrum");

    // demux
    FieldFlags dmx_ff;
    std::int64_t dmx_n = 0;
    std::string dmx_spectrum;
    bool dmx_compressed = false;
    CLI::App* c_dmx = app.add_subcommand("demux", "Recover a frame from a spectrum");
    add_field_flags(c_dmx, dmx_ff);
    c_dmx->add_option("--n", dmx_n, "Number of users / transform length")->required();
    c_dmx->add_option("--spectrum", dmx_spectrum, "Power-index tokens, e.g. 1,0,a^10,...")
        ->required();
    c_dmx->add_flag("--compress,--compressed", dmx_compressed,
                    "Input is coset-compressed (leader values only)");

    // roundtrip
    FieldFlags rt_ff;
    std::int64_t rt_n = 15;
    std::string rt_frame;
    std::uint64_t rt_seed = 1;
    int rt_corrupt = -1;
    CLI::App* c_rt = app.add_subcommand(
        "roundtrip", "Run mux -> compress -> decompress -> demux and assert identity");
    add_field_flags(c_rt, rt_ff);
    c_rt->add_option("--n", rt_n, "Number of users / transform length")->capture_default_str();
    c_rt->add_option("--frame", rt_frame, "Frame digits (default: random from --seed)");
    c_rt->add_option("--seed", rt_seed, "Seed for the random frame")->capture_default_str();
    c_rt->add_option("--corrupt", rt_corrupt,
                     "Overwrite this leader with the generator before decompressing");

    // ser-analytic
    FieldFlags sa_ff;
    SerFlags sa;
    CLI::App* c_sa = app.add_subcommand("ser-analytic", "Analytical error-rate curves");
    c_sa->add_option("--p", sa_ff.p, "Field characteristic (prime)")->capture_default_str();
    c_sa->add_option("--mod", sa.mods, "Constellations, comma-separated: bpsk,qpsk,8psk,16qam")
        ->capture_default_str();
    c_sa->add_option("--n", sa.n, "Number of users / transform length")->capture_default_str();
    c_sa->add_flag("--compressed,--compress", sa.compressed,
                   "Frame exponent = coset count v instead of N");
    c_sa->add_option("--snr", sa.snr, "Es/N0 grid in dB: start:stop:step or a comma list")
        ->capture_default_str();
    c_sa->add_option("--out", sa.out, "Output CSV path");
    c_sa->add_flag("--plot", sa.plot, "Also write an SVG chart");

    // ser-mc
    FieldFlags sm_ff;
    SerFlags sm;
    std::uint64_t sm_seed = 1;
    std::int64_t sm_frames = 10000;
    int sm_threads = 1;
    CLI::App* c_sm = app.add_subcommand("ser-mc", "Monte Carlo error rates over the full chain");
    add_field_flags(c_sm, sm_ff);
    c_sm->add_option("--mod", sm.mods, "Constellations, comma-separated: bpsk,qpsk,8psk,16qam")
        ->capture_default_str();
    c_sm->add_option("--n", sm.n, "Number of users / transform length")->capture_default_str();
    c_sm->add_flag("--compressed,--compress", sm.compressed, "Transmit the compressed spectrum");
    c_sm->add_option("--snr", sm.snr, "Es/N0 grid in dB: start:stop:step or a comma list")
        ->capture_default_str();
    c_sm->add_option("--seed", sm_seed, "Master seed")->capture_default_str();
    c_sm->add_option("--frames", sm_frames, "Frames per SNR point")->capture_default_str();
    c_sm->add_option("--threads", sm_threads, "Worker threads (does not affect results)")
        ->capture_default_str();
    c_sm->add_option("--out", sm.out, "Output CSV path");
    c_sm->add_flag("--plot", sm.plot, "Also write an SVG chart");

    try {
        app.parse(argc, argv);
        if (c_field->parsed()) cmd_field(field_ff, field_out);
        if (c_car->parsed()) cmd_carriers(car_ff, car_n, car_out);
        if (c_mux->parsed()) cmd_mux(mux_ff, mux_frame, mux_compress);
        if (c_dmx->parsed()) cmd_demux(dmx_ff, dmx_n, dmx_spectrum, dmx_compressed);
        if (c_rt->parsed()) cmd_roundtrip(rt_ff, rt_n, rt_frame, rt_seed, rt_corrupt);
        if (c_sa->parsed()) cmd_ser_analytic(sa_ff, sa);
        if (c_sm->parsed()) cmd_ser_mc(sm_ff, sm, sm_seed, sm_frames, sm_threads);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const gdm::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
