#ifndef MFP_ERROR_HPP
#define MFP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mfp {

enum class ErrorKind {
  ZeroPolynomial,
  NotSquare,
  NotSymmetric,
  VariableSetMismatch,
  InvalidArgument,
  NotZeroDimensional,
  RankTooLarge,
  DimensionUnknown,
  PointNotOnVariety,
  OriginNotOnVariety,
  DepthExceeded,
  IrrationalSingularFiberPoint,
  NotACurve,
  NoStabilization,
  InvalidParams,
  NotSingularFamily,
  SyntaxError,
  UnknownVariable,
  ZeroPolynomialLine,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one ErrorKind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parser failure with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(ErrorKind kind, const std::string& msg, int line, int column)
      : Error(kind, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace mfp

#endif
