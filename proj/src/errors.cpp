// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/errors.hpp"

namespace hypersplit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ConstructionError: return "ConstructionError";
    case ErrorKind::LogOfZero: return "LogOfZero";
    case ErrorKind::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::NotASubfieldIndex: return "NotASubfieldIndex";
    case ErrorKind::NotDefinedOverQ: return "NotDefinedOverQ";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::DegenerateCharacters: return "DegenerateCharacters";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotPIntegral: return "NotPIntegral";
    case ErrorKind::WorkBoundExceeded: return "WorkBoundExceeded";
    case ErrorKind::NotIntegralAtF: return "NotIntegralAtF";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::NonRationalFValue: return "NonRationalFValue";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::BottomPole: return "BottomPole";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::GammaPole: return "GammaPole";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::SmallPrime: return "SmallPrime";
    case ErrorKind::DegenerateT: return "DegenerateT";
    case ErrorKind::DegenerateJ: return "DegenerateJ";
    case ErrorKind::NonIntegralLeadingPower: return "NonIntegralLeadingPower";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::ConfigParse: return "ConfigParse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hypersplit
