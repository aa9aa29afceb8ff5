#ifndef GDM_GFP_POLY_HPP
#define GDM_GFP_POLY_HPP

#include <string>
#include <vector>

namespace gdm {

/// Polynomial over GF(p), coefficients ascending by degree (coeffs[j] is the
/// coefficient of x^j), always kept in [0, p). The zero polynomial is {}.
using GfpPoly = std::vector<int>;

namespace gfp {

GfpPoly trimmed(GfpPoly a);
int degree(const GfpPoly& a); // -1 for the zero polynomial
bool is_monic(const GfpPoly& a);

GfpPoly add(const GfpPoly& a, const GfpPoly& b, int p);
GfpPoly sub(const GfpPoly& a, const GfpPoly& b, int p);
GfpPoly mul(const GfpPoly& a, const GfpPoly& b, int p);

/// Euclidean division by a nonzero divisor; returns the quotient and stores
/// the remainder (degree < degree(b)) in rem if non-null.
GfpPoly divmod(const GfpPoly& a, const GfpPoly& b, int p, GfpPoly* rem);

bool is_irreducible(const GfpPoly& a, int p);

/// x^n with coefficient 1.
GfpPoly monomial(int n);

/// Print like "x^4 + x + 1", highest degree first; "0" for the zero polynomial.
std::string to_string(const GfpPoly& a);

} // namespace gfp

bool is_prime(long long n);

} // namespace gdm

#endif
