#include "gdm/gdm_mux.hpp"

#include <algorithm>

namespace gdm {

CyclotomicStructure cyclotomic_cosets(std::int64_t n, int p) {
    if (n < 1) throw Error(Errc::domain_error, "N must be >= 1");
    if (std::gcd(n, static_cast<std::int64_t>(p)) != 1)
        throw Error(Errc::not_coprime,
                    "gcd(" + std::to_string(n) + ", " + std::to_string(p) + ") != 1");
    CyclotomicStructure s;
    s.n = n;
    s.p = p;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (std::int64_t leader = 0; leader < n; ++leader) {
        if (seen[static_cast<size_t>(leader)]) continue;
        std::vector<std::int64_t> coset;
        std::int64_t e = leader;
        do {
            coset.push_back(e);
            seen[static_cast<size_t>(e)] = true;
            e = (e * p) % n;
        } while (e != leader);
        s.leaders.push_back(leader);
        s.cosets.push_back(std::move(coset));
    }
    return s;
}

namespace {

int moebius(int n) {
    int mu = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0; // square factor
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace

std::int64_t count_irreducible(int k, int p) {
    if (k < 1) throw Error(Errc::domain_error, "degree must be >= 1");
    std::int64_t sum = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        std::int64_t pw = 1;
        for (int j = 0; j < k / d; ++j) pw *= p;
        sum += moebius(d) * pw;
    }
    return sum / k;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational compactness_factor(const CyclotomicStructure& s) {
    return Rational(s.n, s.coset_count());
}

CompressedSpectrum compress(const TransformPlan& plan, const CyclotomicStructure& s,
                            const Spectrum& big_v) {
    if (static_cast<std::int64_t>(big_v.size()) != s.n || s.n != plan.length())
        throw Error(Errc::length_mismatch, "spectrum length does not match the coset structure");
    if (!is_valid_base_field_spectrum(plan, big_v))
        throw Error(Errc::invalid_spectrum,
                    "conjugacy constraint V_k^p = V_(pk mod N) fails; not the spectrum of a "
                    "base-field vector");
    CompressedSpectrum c;
    c.leader_values.reserve(s.leaders.size());
    for (std::int64_t leader : s.leaders)
        c.leader_values.push_back(big_v[static_cast<size_t>(leader)]);
    return c;
}

Spectrum decompress(const TransformPlan& plan, const CyclotomicStructure& s,
                    const CompressedSpectrum& c) {
    if (c.leader_values.size() != s.cosets.size())
        throw Error(Errc::length_mismatch, "leader count does not match the coset structure");
    Spectrum big_v(static_cast<size_t>(s.n), plan.field().zero());
    const int p = s.p;
    for (size_t ci = 0; ci < s.cosets.size(); ++ci) {
        const auto& coset = s.cosets[ci];
        FieldElement val = c.leader_values[ci];
        for (std::int64_t k : coset) {
            big_v[static_cast<size_t>(k)] = val;
            val = val.pow(p);
        }
        // closing the cycle must return the leader value
        if (val != c.leader_values[ci])
            throw Error(Errc::inconsistent_leader,
                        "leader value of coset C(" + std::to_string(s.leaders[ci]) +
                            ") does not lie in GF(" + std::to_string(p) + "^" +
                            std::to_string(coset.size()) + ")");
    }
    return big_v;
}

GdmMux::GdmMux(const GaloisField& field, std::int64_t n_users)
    : plan_(field, n_users), structure_(cyclotomic_cosets(n_users, field.p())) {}

Spectrum GdmMux::multiplex(const std::vector<int>& frame) const {
    if (static_cast<std::int64_t>(frame.size()) != users())
        throw Error(Errc::length_mismatch, "frame length " + std::to_string(frame.size()) +
                                               " != user count " + std::to_string(users()));
    const GaloisField& f = plan_.field();
    TimeVector v;
    v.reserve(frame.size());
    for (int digit : frame) {
        if (digit < 0 || digit >= f.p())
            throw Error(Errc::non_base_field_symbol,
                        "user symbol " + std::to_string(digit) + " outside GF(" +
                            std::to_string(f.p()) + ")");
        v.push_back(f.embed(digit));
    }
    return ffft(plan_, v);
}

std::vector<int> GdmMux::demultiplex(const Spectrum& big_v) const {
    TimeVector v = iffft(plan_, big_v);
    std::vector<int> frame;
    frame.reserve(v.size());
    for (const FieldElement& e : v) {
        if (!e.in_base_field())
            throw Error(Errc::non_base_field_result,
                        "despread component outside GF(" + std::to_string(plan_.field().p()) +
                            "); spectrum is corrupted or invalid");
        frame.push_back(e.base_value());
    }
    return frame;
}

CompressedSpectrum GdmMux::compress(const Spectrum& big_v) const {
    return gdm::compress(plan_, structure_, big_v);
}

Spectrum GdmMux::decompress(const CompressedSpectrum& c) const {
    return gdm::decompress(plan_, structure_, c);
}

double GdmMux::bandwidth_requirement(double b1, bool compressed) const {
    if (compressed) return static_cast<double>(structure_.coset_count()) * b1;
    return static_cast<double>(users()) * b1;
}

} // namespace gdm
