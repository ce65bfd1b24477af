#pragma once

#include <stdexcept>
#include <string>

namespace bicover {

enum class Errc {
  NotPrime,
  NoIrreducibleFound,
  DiscriminantIsSquare,
  DivisionByZero,
  FieldMismatch,
  CharTwoUnsupported,
  NotPowerOfTwo,
  NotSkewHadamard,
  OrderNot0Mod4,
  NotOddPrimePower,
  CongruenceViolated,
  PEven,
  NotSquareMatrix,
  NTooSmall,
  VertexOutOfRange,
  ExpansionTooLarge,
  NoSquareRootOfMinusOne,
  CharTwo,
  MissingSquareRoot,
  KZeroInField,
  NotHomogeneous,
  WrongField,
  NNot0Mod4,
  WrongGateArity,
  RTooLarge,
  InternalInconsistency,
  PreconditionViolated,
  SearchSpaceTooLarge,
  UnknownFamily,
  BadArgument,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Search/expansion budget violations. The CLI maps these to their own exit
// code, so they get a distinct type.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicover
