#include "hklab/errors.hpp"

namespace hklab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CharMismatch: return "CharMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::InfiniteLength: return "InfiniteLength";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NotFrobeniusPower: return "NotFrobeniusPower";
    case ErrorCode::NotPrimary: return "NotPrimary";
    case ErrorCode::ZeroDimensionalRing: return "ZeroDimensionalRing";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::BadDims: return "BadDims";
    case ErrorCode::NotLocalInput: return "NotLocalInput";
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "UnknownError";
}

bool is_resource_error(ErrorCode code) {
  return code == ErrorCode::ExponentOverflow || code == ErrorCode::ResourceLimit;
}

}  // namespace hklab
