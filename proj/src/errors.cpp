#include "gdm/errors.hpp"

namespace gdm {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::not_irreducible: return "NotIrreducible";
        case Errc::not_primitive: return "NotPrimitive";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::order_not_available: return "OrderNotAvailable";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::non_base_field_symbol: return "NonBaseFieldSymbol";
        case Errc::non_base_field_result: return "NonBaseFieldResult";
        case Errc::invalid_spectrum: return "InvalidSpectrum";
        case Errc::inconsistent_leader: return "InconsistentLeader";
        case Errc::unsupported: return "Unsupported";
        case Errc::domain_error: return "DomainError";
        case Errc::parse_error: return "ParseError";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace gdm
