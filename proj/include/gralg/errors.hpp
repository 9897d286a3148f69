// Typed failures shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace gralg {

struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

#define GRALG_ERROR(NAME)                                              \
  struct NAME : Error {                                                \
    explicit NAME(const std::string& m) : Error(#NAME, m) {}           \
  }

GRALG_ERROR(MapNotWellDefined);
GRALG_ERROR(CompositionNotZero);
GRALG_ERROR(NotPointed);
GRALG_ERROR(UnboundedDecomposition);
GRALG_ERROR(NotHomogeneous);
GRALG_ERROR(RingMismatch);
GRALG_ERROR(NotPerfect);
GRALG_ERROR(NotStabilized);
GRALG_ERROR(PreconditionNotCertified);
GRALG_ERROR(MixedGeneratorImage);
GRALG_ERROR(AxiomViolation);
GRALG_ERROR(ParseError);
GRALG_ERROR(ValidationError);
GRALG_ERROR(TaskError);

#undef GRALG_ERROR

}  // namespace gralg
