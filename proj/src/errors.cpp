#include "fcalg/errors.hpp"

namespace fcalg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::schema_error: return "SchemaError";
        case ErrorCode::invalid_field: return "InvalidField";
        case ErrorCode::invalid_algebra: return "InvalidAlgebra";
        case ErrorCode::invalid_group_table: return "InvalidGroupTable";
        case ErrorCode::invalid_cocycle: return "InvalidCocycle";
        case ErrorCode::storage_error: return "StorageError";
        case ErrorCode::usage_error: return "UsageError";
        case ErrorCode::field_mismatch: return "FieldMismatch";
        case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
        case ErrorCode::division_by_zero: return "DivisionByZero";
        case ErrorCode::unsupported_factorization: return "UnsupportedFactorization";
        case ErrorCode::unsupported_characteristic: return "UnsupportedCharacteristic";
        case ErrorCode::unsupported_field: return "UnsupportedField";
        case ErrorCode::not_an_ideal: return "NotAnIdeal";
        case ErrorCode::not_a_unit: return "NotAUnit";
        case ErrorCode::not_torsion: return "NotTorsion";
        case ErrorCode::shift_not_unit: return "ShiftNotUnit";
        case ErrorCode::exhausted_field: return "ExhaustedField";
        case ErrorCode::not_nilpotent: return "NotNilpotent";
        case ErrorCode::not_commuting: return "NotCommuting";
        case ErrorCode::enumeration_too_large: return "EnumerationTooLarge";
        case ErrorCode::zero_commutator: return "ZeroCommutator";
        case ErrorCode::commuting_pair: return "CommutingPair";
        case ErrorCode::inconclusive_sandwich: return "InconclusiveSandwich";
        case ErrorCode::internal_error: return "InternalError";
    }
    return "UnknownError";
}

ErrorClass error_code_class(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error:
        case ErrorCode::schema_error:
        case ErrorCode::invalid_field:
        case ErrorCode::invalid_algebra:
        case ErrorCode::invalid_group_table:
        case ErrorCode::invalid_cocycle:
        case ErrorCode::storage_error:
        case ErrorCode::usage_error:
            return ErrorClass::input;
        default:
            return ErrorClass::domain;
    }
}

}  // namespace fcalg
