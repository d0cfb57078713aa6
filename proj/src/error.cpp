#include "nillat/error.hpp"

namespace nillat {

const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroMatrix: return "ZeroMatrix";
    case Err::RankDeficient: return "RankDeficient";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::UnknownAlgebra: return "UnknownAlgebra";
    case Err::AlgebraMismatch: return "AlgebraMismatch";
    case Err::StepTooHigh: return "StepTooHigh";
    case Err::NotMalcevBasis: return "NotMalcevBasis";
    case Err::NotRational: return "NotRational";
    case Err::NotIdealChain: return "NotIdealChain";
    case Err::NotVerified: return "NotVerified";
    case Err::NoAbelianFactor: return "NoAbelianFactor";
    case Err::InvalidParams: return "InvalidParams";
    case Err::NotMember: return "NotMember";
    case Err::BadShape: return "BadShape";
    case Err::UnknownGroup: return "UnknownGroup";
    case Err::BadInput: return "BadInput";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace nillat
