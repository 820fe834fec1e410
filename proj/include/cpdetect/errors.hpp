#pragma once

#include <stdexcept>
#include <string>

namespace cpd {

// Base class for all toolkit failures. Subtypes exist so callers can
// distinguish failure modes without parsing messages.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CPD_ERROR_TYPE(NAME)       \
  class NAME : public Error {      \
   public:                         \
    using Error::Error;            \
  }

// core
CPD_ERROR_TYPE(DimensionMismatch);
CPD_ERROR_TYPE(ZeroVector);
CPD_ERROR_TYPE(InvalidEmbedding);
CPD_ERROR_TYPE(InvalidBank);
CPD_ERROR_TYPE(EmptyBank);
CPD_ERROR_TYPE(EmptyValidationSet);
CPD_ERROR_TYPE(NonPositiveTemperature);

// prompt bank / LLM client
CPD_ERROR_TYPE(TransportError);
CPD_ERROR_TYPE(MalformedResponse);
CPD_ERROR_TYPE(BudgetViolation);
CPD_ERROR_TYPE(AuthError);
CPD_ERROR_TYPE(EncoderFailure);

// file formats and remote encoders
CPD_ERROR_TYPE(IoError);
CPD_ERROR_TYPE(BadMagic);
CPD_ERROR_TYPE(UnsupportedVersion);
CPD_ERROR_TYPE(ChecksumMismatch);
CPD_ERROR_TYPE(TruncatedFile);
CPD_ERROR_TYPE(DuplicateId);
CPD_ERROR_TYPE(SchemaVersionMismatch);
CPD_ERROR_TYPE(CorruptSidecar);
CPD_ERROR_TYPE(DimMismatchWithDeclared);
CPD_ERROR_TYPE(ProtocolError);

// simulator
CPD_ERROR_TYPE(InvalidRatio);
CPD_ERROR_TYPE(Unreachable);

// evaluation
CPD_ERROR_TYPE(SingleClassInput);
CPD_ERROR_TYPE(IdMismatch);
CPD_ERROR_TYPE(EmptyInput);

// command line
CPD_ERROR_TYPE(ConfigError);

#undef CPD_ERROR_TYPE

}  // namespace cpd
