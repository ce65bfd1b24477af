#include "bicover/rational.hpp"

#include "bicover/errors.hpp"

namespace bicover {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoIrreducibleFound: return "NoIrreducibleFound";
    case Errc::DiscriminantIsSquare: return "DiscriminantIsSquare";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::CharTwoUnsupported: return "CharTwoUnsupported";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::NotSkewHadamard: return "NotSkewHadamard";
    case Errc::OrderNot0Mod4: return "OrderNot0Mod4";
    case Errc::NotOddPrimePower: return "NotOddPrimePower";
    case Errc::CongruenceViolated: return "CongruenceViolated";
    case Errc::PEven: return "PEven";
    case Errc::NotSquareMatrix: return "NotSquareMatrix";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::ExpansionTooLarge: return "ExpansionTooLarge";
    case Errc::NoSquareRootOfMinusOne: return "NoSquareRootOfMinusOne";
    case Errc::CharTwo: return "CharTwo";
    case Errc::MissingSquareRoot: return "MissingSquareRoot";
    case Errc::KZeroInField: return "KZeroInField";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::WrongField: return "WrongField";
    case Errc::NNot0Mod4: return "NNot0Mod4";
    case Errc::WrongGateArity: return "WrongGateArity";
    case Errc::RTooLarge: return "RTooLarge";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::BadArgument: return "BadArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  if (den < 0) return Rational(-num) / Rational(-den);
  return Rational(num) / Rational(den);
}

std::string rational_to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational rational_from_string(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    return make_rational(num, den);
  } catch (const std::runtime_error& e) {
    throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
  }
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  const Integer sn = sqrt(num);
  const Integer sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return make_rational(sn, sd);
}

}  // namespace bicover
