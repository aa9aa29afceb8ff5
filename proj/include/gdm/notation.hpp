#ifndef GDM_NOTATION_HPP
#define GDM_NOTATION_HPP

#include <string>
#include <vector>

#include "gdm/finite_field.hpp"

namespace gdm {

/// Text forms used by the CLI and its CSV outputs. Field elements travel in
/// power-index notation: "0" for zero, "1" for alpha^0, "a^k" for alpha^k.
/// All formatting is locale-independent so equal inputs give byte-equal text.

std::string format_element(const FieldElement& a);

/// Accepts "0", "1", "a", "a^k" (k any integer, reduced mod p^m - 1).
FieldElement parse_element(const GaloisField& field, const std::string& token);

/// Comma-joined power-index tokens.
std::string format_element_list(const std::vector<FieldElement>& v);

std::vector<FieldElement> parse_element_list(const GaloisField& field, const std::string& text);

/// Coefficient vector printed highest degree first: "(0,0,1,1)".
std::string format_coeff_vector(const FieldElement& a);

/// GF(p) digits, either one character each ("01101", p <= 10) or
/// comma-separated ("0,1,1,0,1"). Errors: ParseError.
std::vector<int> parse_digits(const std::string& text, int p);

std::string format_digits(const std::vector<int>& digits);

/// Polynomial over GF(p), highest degree first, as a digit string ("10011")
/// or comma-separated coefficients; returns ascending coefficients.
GfpPoly parse_polynomial(const std::string& text, int p);

/// SNR grid in dB: "start:stop:step" (step > 0, stop inclusive) or a comma
/// list of values. Errors: ParseError, including on an empty grid.
std::vector<double> parse_snr_grid(const std::string& text);

/// Probabilities print with "%.10g", grid values with "%g"; both are
/// shortest-round-trip stable for the values the tool emits.
std::string format_probability(double x);
std::string format_snr(double x);

} // namespace gdm

#endif
