#pragma once

#include <stdexcept>
#include <string>

namespace toral {

/// Machine-readable failure categories. Every throwing operation in the
/// library uses one of these so the CLI can map failures to stable error
/// codes without string matching.
enum class Errc {
    invalid_argument,
    ambient_mismatch,
    length_mismatch,
    out_of_range,
    not_a_sublattice,
    infinite_group,
    cap_exceeded,
    non_abelian,
    unbound_variable,
    constant_out_of_range,
    permutation_invalid,
    transfer_not_close,
    transfer_ambiguous,
    transfer_too_far,
    not_homomorphism,
    not_surjective,
    certificate_invalid,
    parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace toral
