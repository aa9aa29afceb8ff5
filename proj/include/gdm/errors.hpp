#ifndef GDM_ERRORS_HPP
#define GDM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gdm {

/// Error conditions raised by the library. Each maps to one failed
/// precondition or validation step; the message carries the details.
enum class Errc {
    not_prime,
    not_irreducible,
    not_primitive,
    field_mismatch,
    division_by_zero,
    order_not_available,
    not_coprime,
    length_mismatch,
    index_out_of_range,
    non_base_field_symbol,
    non_base_field_result,
    invalid_spectrum,
    inconsistent_leader,
    unsupported,
    domain_error,
    parse_error,
    io_error,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace gdm

#endif
