#ifndef FCALG_ERRORS_HPP
#define FCALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcalg {

/// Every failure the library can signal, one code per condition.
/// Codes classified `input` reject malformed user input (CLI exit 2);
/// `domain` codes are mathematically meaningful negatives (CLI exit 1).
enum class ErrorCode {
    // input-class
    parse_error,
    schema_error,
    invalid_field,
    invalid_algebra,
    invalid_group_table,
    invalid_cocycle,
    storage_error,
    usage_error,
    // domain-class
    field_mismatch,
    algebra_mismatch,
    division_by_zero,
    unsupported_factorization,
    unsupported_characteristic,
    unsupported_field,
    not_an_ideal,
    not_a_unit,
    not_torsion,
    shift_not_unit,
    exhausted_field,
    not_nilpotent,
    not_commuting,
    enumeration_too_large,
    zero_commutator,
    commuting_pair,
    inconclusive_sandwich,
    internal_error,
};

enum class ErrorClass { input, domain };

const char* error_code_name(ErrorCode code);
ErrorClass error_code_class(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }
    ErrorClass klass() const { return error_code_class(code_); }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace fcalg

#endif
