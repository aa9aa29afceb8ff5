#include "gdm/notation.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace gdm {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) throw Error(Errc::parse_error, "empty integer");
    size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw Error(Errc::parse_error, "not an integer: '" + t + "'");
    }
    if (pos != t.size()) throw Error(Errc::parse_error, "not an integer: '" + t + "'");
    return v;
}

double parse_double(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) throw Error(Errc::parse_error, "empty number");
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw Error(Errc::parse_error, "not a number: '" + t + "'");
    }
    if (pos != t.size()) throw Error(Errc::parse_error, "not a number: '" + t + "'");
    return v;
}

} // namespace

std::string format_element(const FieldElement& a) {
    if (a.is_zero()) return "0";
    const std::int64_t k = a.power();
    if (k == 0) return "1";
    return "a^" + std::to_string(k);
}

FieldElement parse_element(const GaloisField& field, const std::string& token) {
    const std::string t = trim(token);
    if (t == "0") return field.zero();
    if (t == "1") return field.one();
    if (t == "a") return field.generator();
    if (t.size() > 2 && t[0] == 'a' && t[1] == '^')
        return field.from_power(parse_int(t.substr(2)));
    throw Error(Errc::parse_error, "bad field element token: '" + t + "'");
}

std::string format_element_list(const std::vector<FieldElement>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_element(v[i]);
    }
    return out;
}

std::vector<FieldElement> parse_element_list(const GaloisField& field, const std::string& text) {
    std::vector<FieldElement> out;
    for (const std::string& tok : split(text, ','))
        out.push_back(parse_element(field, tok));
    return out;
}

std::string format_coeff_vector(const FieldElement& a) {
    std::vector<int> cf = a.coeffs();
    std::string out = "(";
    for (size_t j = cf.size(); j-- > 0;) {
        out += std::to_string(cf[j]);
        if (j) out += ',';
    }
    out += ')';
    return out;
}

std::vector<int> parse_digits(const std::string& text, int p) {
    const std::string t = trim(text);
    if (t.empty()) throw Error(Errc::parse_error, "empty digit string");
    std::vector<int> out;
    if (t.find(',') != std::string::npos) {
        for (const std::string& tok : split(t, ',')) {
            std::int64_t v = parse_int(tok);
            if (v < 0 || v >= p)
                throw Error(Errc::parse_error, "digit " + std::to_string(v) + " outside [0, " +
                                                   std::to_string(p) + ")");
            out.push_back(static_cast<int>(v));
        }
    } else {
        if (p > 10)
            throw Error(Errc::parse_error, "contiguous digits need p <= 10; use a comma list");
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(Errc::parse_error, std::string("bad digit character '") + c + "'");
            int v = c - '0';
            if (v >= p)
                throw Error(Errc::parse_error, "digit " + std::to_string(v) + " outside [0, " +
                                                   std::to_string(p) + ")");
            out.push_back(v);
        }
    }
    return out;
}

std::string format_digits(const std::vector<int>& digits) {
    std::string out;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(digits[i]);
    }
    return out;
}

GfpPoly parse_polynomial(const std::string& text, int p) {
    std::vector<int> high_first = parse_digits(text, p);
    GfpPoly poly(high_first.rbegin(), high_first.rend());
    return gfp::trimmed(poly);
}

std::vector<double> parse_snr_grid(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw Error(Errc::parse_error, "empty SNR grid");
    std::vector<double> out;
    if (t.find(':') != std::string::npos) {
        std::vector<std::string> parts = split(t, ':');
        if (parts.size() != 3)
            throw Error(Errc::parse_error, "SNR range must be start:stop:step");
        const double start = parse_double(parts[0]);
        const double stop = parse_double(parts[1]);
        const double step = parse_double(parts[2]);
        if (step <= 0) throw Error(Errc::parse_error, "SNR step must be positive");
        if (stop < start) throw Error(Errc::parse_error, "SNR stop below start");
        const auto count = static_cast<std::int64_t>((stop - start) / step + 1e-9) + 1;
        for (std::int64_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    } else {
        for (const std::string& tok : split(t, ','))
            out.push_back(parse_double(tok));
    }
    if (out.empty()) throw Error(Errc::parse_error, "empty SNR grid");
    return out;
}

std::string format_probability(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string format_snr(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

} // namespace gdm
