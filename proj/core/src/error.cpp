#include "toral/error.hpp"

namespace toral {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::ambient_mismatch: return "ambient_mismatch";
        case Errc::length_mismatch: return "length_mismatch";
        case Errc::out_of_range: return "out_of_range";
        case Errc::not_a_sublattice: return "not_a_sublattice";
        case Errc::infinite_group: return "infinite_group";
        case Errc::cap_exceeded: return "cap_exceeded";
        case Errc::non_abelian: return "non_abelian";
        case Errc::unbound_variable: return "unbound_variable";
        case Errc::constant_out_of_range: return "constant_out_of_range";
        case Errc::permutation_invalid: return "permutation_invalid";
        case Errc::transfer_not_close: return "transfer_not_close";
        case Errc::transfer_ambiguous: return "transfer_ambiguous";
        case Errc::transfer_too_far: return "transfer_too_far";
        case Errc::not_homomorphism: return "not_homomorphism";
        case Errc::not_surjective: return "not_surjective";
        case Errc::certificate_invalid: return "certificate_invalid";
        case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

}  // namespace toral
