#include "gdm/gfp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "gdm/errors.hpp"

namespace gdm {
namespace gfp {

GfpPoly trimmed(GfpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const GfpPoly& a) {
    for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j)
        if (a[j] != 0) return j;
    return -1;
}

bool is_monic(const GfpPoly& a) {
    int d = degree(a);
    return d >= 0 && a[d] == 1;
}

GfpPoly add(const GfpPoly& a, const GfpPoly& b, int p) {
    GfpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t j = 0; j < r.size(); ++j) {
        int c = (j < a.size() ? a[j] : 0) + (j < b.size() ? b[j] : 0);
        r[j] = c % p;
    }
    return trimmed(std::move(r));
}

GfpPoly sub(const GfpPoly& a, const GfpPoly& b, int p) {
    GfpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t j = 0; j < r.size(); ++j) {
        int c = (j < a.size() ? a[j] : 0) - (j < b.size() ? b[j] : 0);
        r[j] = ((c % p) + p) % p;
    }
    return trimmed(std::move(r));
}

GfpPoly mul(const GfpPoly& a, const GfpPoly& b, int p) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    GfpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return trimmed(std::move(r));
}

namespace {

// Inverse of a nonzero residue mod a prime p.
int inv_mod(int a, int p) {
    int r = 1, e = p - 2, base = ((a % p) + p) % p;
    while (e > 0) {
        if (e & 1) r = static_cast<int>(static_cast<long long>(r) * base % p);
        base = static_cast<int>(static_cast<long long>(base) * base % p);
        e >>= 1;
    }
    return r;
}

} // namespace

GfpPoly divmod(const GfpPoly& a, const GfpPoly& b, int p, GfpPoly* rem) {
    int db = degree(b);
    if (db < 0) throw Error(Errc::division_by_zero, "polynomial division by zero");
    GfpPoly r = trimmed(a);
    int da = degree(r);
    if (da < db) {
        if (rem) *rem = r;
        return {};
    }
    GfpPoly q(da - db + 1, 0);
    int lead_inv = inv_mod(b[db], p);
    for (int d = da; d >= db; --d) {
        int cd = d < static_cast<int>(r.size()) ? r[d] : 0;
        if (cd == 0) continue;
        int f = static_cast<int>(static_cast<long long>(cd) * lead_inv % p);
        q[d - db] = f;
        for (int j = 0; j <= db; ++j) {
            int k = d - db + j;
            r[k] = ((r[k] - f * b[j]) % p + p) % p;
        }
    }
    if (rem) *rem = trimmed(std::move(r));
    return trimmed(std::move(q));
}

bool is_irreducible(const GfpPoly& a, int p) {
    int d = degree(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int j = 0; j < dd; ++j) count *= p;
        GfpPoly div(dd + 1, 0);
        div[dd] = 1;
        for (long long idx = 0; idx < count; ++idx) {
            long long v = idx;
            for (int j = 0; j < dd; ++j) {
                div[j] = static_cast<int>(v % p);
                v /= p;
            }
            GfpPoly rem;
            divmod(a, div, p, &rem);
            if (degree(rem) < 0) return false;
        }
    }
    return true;
}

GfpPoly monomial(int n) {
    GfpPoly r(n + 1, 0);
    r[n] = 1;
    return r;
}

std::string to_string(const GfpPoly& a) {
    int d = degree(a);
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = d; j >= 0; --j) {
        int c = j < static_cast<int>(a.size()) ? a[j] : 0;
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "x";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

} // namespace gfp

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace gdm
