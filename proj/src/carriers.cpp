#include "gdm/carriers.hpp"

#include <utility>

namespace gdm {

CarrierSet::CarrierSet(TransformPlan plan) : plan_(std::move(plan)) {
    const std::int64_t n = plan_.length();
    if (n <= kMaterializeLimit) {
        matrix_.reserve(static_cast<size_t>(n * n));
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t k = 0; k < n; ++k)
                matrix_.push_back(plan_.alpha_power(i * k));
    }
}

void CarrierSet::check_index(std::int64_t i) const {
    if (i < 0 || i >= size())
        throw Error(Errc::index_out_of_range,
                    "carrier index " + std::to_string(i) + " outside [0, " +
                        std::to_string(size()) + ")");
}

FieldElement CarrierSet::entry(std::int64_t i, std::int64_t k) const {
    check_index(i);
    check_index(k);
    if (!matrix_.empty()) return matrix_[static_cast<size_t>(i * size() + k)];
    return plan_.alpha_power(i * k);
}

std::vector<FieldElement> CarrierSet::carrier(std::int64_t i) const {
    check_index(i);
    const std::int64_t n = size();
    std::vector<FieldElement> row;
    row.reserve(static_cast<size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) row.push_back(entry(i, k));
    return row;
}

FieldElement CarrierSet::correlation(std::int64_t i, std::int64_t t) const {
    check_index(i);
    check_index(t);
    const std::int64_t n = size();
    FieldElement sum = plan_.field().zero();
    for (std::int64_t k = 0; k < n; ++k)
        sum = sum + plan_.alpha_power(i * k) * plan_.alpha_power(-t * k);
    return sum;
}

std::vector<std::vector<FieldElement>> CarrierSet::correlation_matrix() const {
    const std::int64_t n = size();
    std::vector<std::vector<FieldElement>> r(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        r[static_cast<size_t>(i)].reserve(static_cast<size_t>(n));
        for (std::int64_t t = 0; t < n; ++t)
            r[static_cast<size_t>(i)].push_back(correlation(i, t));
    }
    return r;
}

std::vector<FieldElement> CarrierSet::spread_user(std::int64_t i, FieldElement symbol) const {
    check_index(i);
    const std::int64_t n = size();
    std::vector<FieldElement> row;
    row.reserve(static_cast<size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) row.push_back(symbol * entry(i, k));
    return row;
}

} // namespace gdm
