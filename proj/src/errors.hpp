#pragma once

#include <stdexcept>
#include <string>

namespace absinc {

enum class ErrKind {
  Parse,
  InvalidRule,
  InfiniteBasis,
  NonAssociative,
  NotPrime,
  RingMismatch,
  FieldMismatch,
  SizeMismatch,
  NotAUnit,
  EmptyGeneratorList,
  NotUnitIdeal,
  UnassignedVariable,
  NotDivisible,
  DivisionByZero,
  IndexOutOfRange,
  RepeatedIndex,
  HypothesisViolated,
  InternalInconsistency,
  InvalidStatement,
  InvalidTiling,
  CancellationFailure,
  Unknown,
};

constexpr const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::Parse: return "Parse";
    case ErrKind::InvalidRule: return "InvalidRule";
    case ErrKind::InfiniteBasis: return "InfiniteBasis";
    case ErrKind::NonAssociative: return "NonAssociative";
    case ErrKind::NotPrime: return "NotPrime";
    case ErrKind::RingMismatch: return "RingMismatch";
    case ErrKind::FieldMismatch: return "FieldMismatch";
    case ErrKind::SizeMismatch: return "SizeMismatch";
    case ErrKind::NotAUnit: return "NotAUnit";
    case ErrKind::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrKind::NotUnitIdeal: return "NotUnitIdeal";
    case ErrKind::UnassignedVariable: return "UnassignedVariable";
    case ErrKind::NotDivisible: return "NotDivisible";
    case ErrKind::DivisionByZero: return "DivisionByZero";
    case ErrKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrKind::RepeatedIndex: return "RepeatedIndex";
    case ErrKind::HypothesisViolated: return "HypothesisViolated";
    case ErrKind::InternalInconsistency: return "InternalInconsistency";
    case ErrKind::InvalidStatement: return "InvalidStatement";
    case ErrKind::InvalidTiling: return "InvalidTiling";
    case ErrKind::CancellationFailure: return "CancellationFailure";
    case ErrKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable kind plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrKind kind() const noexcept { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace absinc
