#include "eqstop/errors.hpp"

namespace eqstop {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NegativeRate: return "NegativeRate";
    case Errc::RowSumViolation: return "RowSumViolation";
    case Errc::NegativeStateValue: return "NegativeStateValue";
    case Errc::EmptyContinuation: return "EmptyContinuation";
    case Errc::ToleranceUnreachable: return "ToleranceUnreachable";
    case Errc::NegativeTime: return "NegativeTime";
    case Errc::NonpositiveRate: return "NonpositiveRate";
    case Errc::StateNotInRegion: return "StateNotInRegion";
    case Errc::FirstOrderNotCritical: return "FirstOrderNotCritical";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NotMild: return "NotMild";
    case Errc::ParameterOrderViolation: return "ParameterOrderViolation";
    case Errc::TruncationTooNarrow: return "TruncationTooNarrow";
    case Errc::DegenerateThreshold: return "DegenerateThreshold";
    case Errc::SeriesDivergence: return "SeriesDivergence";
    case Errc::GridTooCoarse: return "GridTooCoarse";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace eqstop
