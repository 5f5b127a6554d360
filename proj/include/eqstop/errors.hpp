#ifndef EQSTOP_ERRORS_HPP
#define EQSTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqstop {

enum class Errc {
  NegativeRate,
  RowSumViolation,
  NegativeStateValue,
  EmptyContinuation,
  ToleranceUnreachable,
  NegativeTime,
  NonpositiveRate,
  StateNotInRegion,
  FirstOrderNotCritical,
  EnumerationTooLarge,
  NotMild,
  ParameterOrderViolation,
  TruncationTooNarrow,
  DegenerateThreshold,
  SeriesDivergence,
  GridTooCoarse,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace eqstop

#endif
