#include "gdm/finite_field.hpp"

#include <array>
#include <numeric>
#include <sstream>

namespace gdm {

namespace {

constexpr std::int64_t kMaxFieldSize = 1 << 16;

std::int64_t ipow(int p, int m) {
    std::int64_t r = 1;
    for (int j = 0; j < m; ++j) r *= p;
    return r;
}

std::vector<int> unpack_digits(std::int64_t v, int p, int m) {
    std::vector<int> d(m, 0);
    for (int j = 0; j < m && v > 0; ++j) {
        d[j] = static_cast<int>(v % p);
        v /= p;
    }
    return d;
}

std::int64_t pack_digits(std::span<const int> d, int p) {
    std::int64_t v = 0;
    for (int j = static_cast<int>(d.size()) - 1; j >= 0; --j) v = v * p + d[j];
    return v;
}

} // namespace

GaloisField::GaloisField(FieldParams params) : params_(std::move(params)) {
    const int p = params_.p;
    const int m = params_.m;
    if (!is_prime(p))
        throw Error(Errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::domain_error, "extension degree must be >= 1");
    GfpPoly poly = gfp::trimmed(params_.poly);
    for (int c : poly)
        if (c < 0 || c >= p)
            throw Error(Errc::domain_error, "reduction polynomial coefficient out of range");
    if (gfp::degree(poly) != m || !gfp::is_monic(poly))
        throw Error(Errc::domain_error, "reduction polynomial must be monic of degree m");
    params_.poly = poly;

    size_ = ipow(p, m);
    if (size_ > kMaxFieldSize)
        throw Error(Errc::unsupported,
                    "field size " + std::to_string(size_) + " exceeds the 2^16 table limit");
    if (!gfp::is_irreducible(poly, p))
        throw Error(Errc::not_irreducible, gfp::to_string(poly) + " is reducible over GF(" +
                                               std::to_string(p) + ")");

    const std::int64_t ord = size_ - 1;
    exp_.assign(static_cast<size_t>(ord), 0);
    log_.assign(static_cast<size_t>(size_), -1);

    // Walk alpha^0, alpha^1, ... by repeated multiplication by x mod poly.
    // A revisited value before the cycle closes means ord(alpha) < p^m - 1.
    std::vector<int> digits(m, 0);
    digits[0] = 1;
    for (std::int64_t i = 0; i < ord; ++i) {
        std::int64_t packed = pack_digits(digits, p);
        if (log_[packed] != -1)
            throw Error(Errc::not_primitive,
                        gfp::to_string(poly) + " is irreducible but its root has order " +
                            std::to_string(i) + " < " + std::to_string(ord));
        exp_[static_cast<size_t>(i)] = static_cast<std::uint32_t>(packed);
        log_[packed] = static_cast<std::int32_t>(i);

        // multiply by x: shift digits up, reduce the overflow via poly
        int carry = digits[m - 1];
        for (int j = m - 1; j > 0; --j) digits[j] = digits[j - 1];
        digits[0] = 0;
        if (carry != 0) {
            for (int j = 0; j < m; ++j)
                digits[j] = (digits[j] + carry * (p - poly[j])) % p;
        }
    }
    if (pack_digits(digits, p) != 1)
        throw Error(Errc::not_primitive, "generator cycle did not close at 1");
}

GaloisField GaloisField::with_default_poly(int p, int m) {
    return GaloisField(FieldParams{p, m, default_polynomial(p, m)});
}

FieldElement GaloisField::from_power(std::int64_t i) const {
    std::int64_t ord = order();
    return FieldElement(this, static_cast<std::int32_t>(((i % ord) + ord) % ord));
}

FieldElement GaloisField::from_packed(std::int64_t packed) const {
    if (packed < 0 || packed >= size_)
        throw Error(Errc::domain_error, "packed value out of range");
    if (packed == 0) return zero();
    return FieldElement(this, log_[packed]);
}

FieldElement GaloisField::from_coeffs(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) > params_.m)
        throw Error(Errc::domain_error, "coefficient vector longer than extension degree");
    for (int c : coeffs)
        if (c < 0 || c >= params_.p)
            throw Error(Errc::domain_error, "coefficient out of [0, p)");
    return from_packed(pack_digits(coeffs, params_.p));
}

FieldElement GaloisField::embed(std::int64_t n) const {
    int r = static_cast<int>(((n % params_.p) + params_.p) % params_.p);
    if (r == 0) return zero();
    return from_packed(r);
}

FieldElement GaloisField::element_of_order(std::int64_t n) const {
    if (n < 1 || order() % n != 0)
        throw Error(Errc::order_not_available,
                    std::to_string(n) + " does not divide " + std::to_string(order()));
    return from_power(order() / n);
}

GfpPoly GaloisField::minimal_polynomial(const FieldElement& a) const {
    if (a.is_zero()) return gfp::monomial(1); // x
    if (a.field() != this) throw Error(Errc::field_mismatch, "element of a different field");

    // Conjugates a, a^p, a^(p^2), ... until the orbit closes.
    std::vector<FieldElement> conj;
    FieldElement c = a;
    do {
        conj.push_back(c);
        c = c.pow(params_.p);
    } while (c != a);

    // Product of (x - c_j) over the extension; coefficients land in GF(p).
    std::vector<FieldElement> acc{one()};
    for (const FieldElement& root : conj) {
        std::vector<FieldElement> next(acc.size() + 1);
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = next[j + 1] + acc[j];
            next[j] = next[j] - acc[j] * root;
        }
        acc = std::move(next);
    }

    GfpPoly out(acc.size(), 0);
    for (size_t j = 0; j < acc.size(); ++j) {
        if (!acc[j].in_base_field())
            throw Error(Errc::domain_error, "minimal polynomial coefficient outside GF(p)");
        out[j] = acc[j].base_value();
    }
    return out;
}

// ---- FieldElement ----

std::int64_t FieldElement::power() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "zero has no power index");
    return log_;
}

std::vector<int> FieldElement::coeffs() const {
    if (field_ == nullptr) return {0};
    return unpack_digits(packed(), field_->p(), field_->m());
}

std::int64_t FieldElement::packed() const {
    if (is_zero()) return 0;
    return field_->exp_[static_cast<size_t>(log_)];
}

bool FieldElement::in_base_field() const {
    if (is_zero()) return true;
    return packed() < field_->p();
}

int FieldElement::base_value() const {
    if (!in_base_field())
        throw Error(Errc::non_base_field_result, "element lies outside GF(p)");
    return static_cast<int>(packed());
}

const GaloisField* FieldElement::same_field_as(const FieldElement& rhs) const {
    if (field_ == nullptr) return rhs.field_;
    if (rhs.field_ == nullptr || rhs.field_ == field_) return field_;
    throw Error(Errc::field_mismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const GaloisField* f = same_field_as(rhs);
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    const int p = f->p();
    const int m = f->m();
    std::vector<int> a = unpack_digits(packed(), p, m);
    std::vector<int> b = unpack_digits(rhs.packed(), p, m);
    for (int j = 0; j < m; ++j) a[j] = (a[j] + b[j]) % p;
    return f->from_packed(pack_digits(a, p));
}

FieldElement FieldElement::operator-() const {
    if (is_zero()) return *this;
    const int p = field_->p();
    if (p == 2) return *this;
    std::vector<int> a = coeffs();
    for (int& c : a) c = (p - c) % p;
    return field_->from_packed(pack_digits(a, p));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    return *this + (-rhs);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const GaloisField* f = same_field_as(rhs);
    if (is_zero() || rhs.is_zero()) return FieldElement(f, -1);
    std::int64_t ord = f->order();
    return FieldElement(f, static_cast<std::int32_t>((log_ + rhs.log_) % ord));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    std::int64_t ord = field_->order();
    return FieldElement(field_, static_cast<std::int32_t>((ord - log_) % ord));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    const GaloisField* f = same_field_as(rhs);
    if (rhs.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    if (is_zero()) return FieldElement(f, -1);
    std::int64_t ord = f->order();
    return FieldElement(f, static_cast<std::int32_t>(((log_ - rhs.log_) % ord + ord) % ord));
}

FieldElement FieldElement::pow(std::int64_t k) const {
    if (is_zero()) {
        if (k < 0) throw Error(Errc::division_by_zero, "negative power of zero");
        if (k == 0) {
            if (field_ == nullptr)
                throw Error(Errc::domain_error, "0^0 of a detached zero has no field for 1");
            return FieldElement(field_, 0); // 0^0 = 1 by convention
        }
        return *this;
    }
    std::int64_t ord = field_->order();
    std::int64_t kr = ((k % ord) + ord) % ord;
    return FieldElement(field_, static_cast<std::int32_t>(log_ * kr % ord));
}

std::int64_t FieldElement::multiplicative_order() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "zero has no multiplicative order");
    std::int64_t ord = field_->order();
    return ord / std::gcd(static_cast<std::int64_t>(log_), ord);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (is_zero() && rhs.is_zero()) return true;
    return field_ == rhs.field_ && log_ == rhs.log_;
}

// ---- default polynomial catalog ----

GfpPoly default_polynomial(int p, int m) {
    if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::domain_error, "extension degree must be >= 1");
    if (p == 2) {
        // Primitive polynomials over GF(2) as high-degree-first bitmasks.
        static const std::array<std::uint32_t, 17> kMask = {
            0,       0b11,     0b111,     0b1011,    0b10011,   0b100101,
            0b1000011, 0b10001001, 0b100011101, 0b1000010001, 0b10000001001,
            0b100000000101, 0b1000001010011, 0b10000000011011, 0b100010001000011,
            0b1000000000000011, 0b10001000000001011,
        };
        if (m <= 16) {
            GfpPoly poly(m + 1, 0);
            for (int j = 0; j <= m; ++j) poly[j] = (kMask[m] >> j) & 1u;
            return poly;
        }
        throw Error(Errc::unsupported, "no catalog polynomial for GF(2^" + std::to_string(m) + ")");
    }
    // Search the smallest primitive monic polynomial for small fields.
    std::int64_t size = ipow(p, m);
    if (size > 4096)
        throw Error(Errc::unsupported,
                    "no catalog polynomial for p=" + std::to_string(p) + ", m=" + std::to_string(m));
    std::int64_t count = size; // p^m choices of the lower coefficients
    for (std::int64_t idx = 0; idx < count; ++idx) {
        GfpPoly poly(m + 1, 0);
        poly[m] = 1;
        std::int64_t v = idx;
        for (int j = 0; j < m; ++j) {
            poly[j] = static_cast<int>(v % p);
            v /= p;
        }
        if (!gfp::is_irreducible(poly, p)) continue;
        try {
            GaloisField probe(FieldParams{p, m, poly});
            return poly;
        } catch (const Error& e) {
            if (e.code() != Errc::not_primitive) throw;
        }
    }
    throw Error(Errc::not_primitive, "no primitive polynomial found"); // unreachable for prime p
}

} // namespace gdm
