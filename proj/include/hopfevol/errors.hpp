#pragma once

#include <stdexcept>
#include <string>

namespace hopfevol {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParamMismatch : Error {
  explicit ParamMismatch(const std::string& what) : Error("param-mismatch: " + what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("dimension-mismatch: " + what) {}
};

struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& what) : Error("unknown-symbol: " + what) {}
};

struct NonPrimitiveExponential : Error {
  explicit NonPrimitiveExponential(const std::string& what)
      : Error("non-primitive-exponential: " + what) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& what) : Error("not-hermitian: " + what) {}
};

struct InvalidState : Error {
  explicit InvalidState(const std::string& what) : Error("invalid-state: " + what) {}
};

struct StepTooLarge : Error {
  explicit StepTooLarge(const std::string& what) : Error("step-too-large: " + what) {}
};

struct InconsistentInput : Error {
  explicit InconsistentInput(const std::string& what) : Error("inconsistent-input: " + what) {}
};

struct NotOrthogonal : Error {
  explicit NotOrthogonal(const std::string& what) : Error("not-orthogonal: " + what) {}
};

struct EmptyGrid : Error {
  explicit EmptyGrid(const std::string& what) : Error("empty-grid: " + what) {}
};

struct UnsupportedDimension : Error {
  explicit UnsupportedDimension(const std::string& what)
      : Error("unsupported-dimension: " + what) {}
};

struct UnknownId : Error {
  explicit UnknownId(const std::string& what) : Error("unknown-id: " + what) {}
};

struct BadFile : Error {
  explicit BadFile(const std::string& what) : Error("bad-file: " + what) {}
};

}  // namespace hopfevol
