// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersplit {

enum class ErrorKind {
  NotPrime,
  FieldTooLarge,
  ConstructionError,
  LogOfZero,
  OrderDoesNotDivide,
  DivisionByZero,
  IndexMismatch,
  NotASubfieldIndex,
  NotDefinedOverQ,
  DomainViolation,
  DegenerateCharacters,
  PrecisionExhausted,
  NotPIntegral,
  WorkBoundExceeded,
  NotIntegralAtF,
  PreconditionViolated,
  EvenPrime,
  NonRationalFValue,
  Unsupported,
  BottomPole,
  NoConvergence,
  GammaPole,
  ConstraintViolated,
  BadReduction,
  SmallPrime,
  DegenerateT,
  DegenerateJ,
  NonIntegralLeadingPower,
  UnknownIdentity,
  ConfigParse,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hypersplit
