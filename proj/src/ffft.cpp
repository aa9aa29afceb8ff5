#include "gdm/ffft.hpp"

namespace gdm {

TransformPlan::TransformPlan(const GaloisField& field, std::int64_t n)
    : TransformPlan(field, field.element_of_order(n), n) {}

TransformPlan::TransformPlan(const GaloisField& field, FieldElement alpha, std::int64_t n)
    : field_(&field), n_(n) {
    if (n < 1) throw Error(Errc::domain_error, "transform length must be >= 1");
    if (alpha.field() != field_)
        throw Error(Errc::field_mismatch, "kernel element from a different field");
    if (alpha.is_zero() || alpha.multiplicative_order() != n)
        throw Error(Errc::order_not_available,
                    "kernel must have multiplicative order " + std::to_string(n));
    alpha_powers_.reserve(static_cast<size_t>(n));
    FieldElement acc = field.one();
    for (std::int64_t k = 0; k < n; ++k) {
        alpha_powers_.push_back(acc);
        acc = acc * alpha;
    }
    n_inv_ = field.embed(n).inv(); // N and p are coprime, so the image is nonzero
}

namespace {

void check_length(const TransformPlan& plan, size_t got) {
    if (static_cast<std::int64_t>(got) != plan.length())
        throw Error(Errc::length_mismatch, "vector length " + std::to_string(got) +
                                               " != transform length " +
                                               std::to_string(plan.length()));
}

} // namespace

Spectrum ffft(const TransformPlan& plan, const TimeVector& v) {
    check_length(plan, v.size());
    const std::int64_t n = plan.length();
    Spectrum big_v(static_cast<size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        FieldElement sum = plan.field().zero();
        for (std::int64_t i = 0; i < n; ++i)
            sum = sum + v[static_cast<size_t>(i)] * plan.alpha_power(i * k);
        big_v[static_cast<size_t>(k)] = sum;
    }
    return big_v;
}

TimeVector iffft(const TransformPlan& plan, const Spectrum& big_v) {
    check_length(plan, big_v.size());
    const std::int64_t n = plan.length();
    TimeVector v(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        FieldElement sum = plan.field().zero();
        for (std::int64_t k = 0; k < n; ++k)
            sum = sum + big_v[static_cast<size_t>(k)] * plan.alpha_power(-i * k);
        v[static_cast<size_t>(i)] = plan.n_inv() * sum;
    }
    return v;
}

bool is_valid_base_field_spectrum(const TransformPlan& plan, const Spectrum& big_v) {
    check_length(plan, big_v.size());
    const std::int64_t n = plan.length();
    const int p = plan.field().p();
    for (std::int64_t k = 0; k < n; ++k) {
        const FieldElement& vk = big_v[static_cast<size_t>(k)];
        if (vk.pow(p) != big_v[static_cast<size_t>((k * p) % n)]) return false;
    }
    return true;
}

} // namespace gdm
