#include "cyclic_slope/rational.hpp"

#include <cctype>
#include <ostream>

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonIntegralR: return "NonIntegralR";
    case Errc::NotMultipleOfN: return "NotMultipleOfN";
    case Errc::NonPositiveR: return "NonPositiveR";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::InvalidType: return "InvalidType";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ModNViolation: return "ModNViolation";
    case Errc::InvalidGerm: return "InvalidGerm";
    case Errc::InconsistentModel: return "InconsistentModel";
    case Errc::NonHalfIntegralM: return "NonHalfIntegralM";
    case Errc::DegenerateExample: return "DegenerateExample";
    case Errc::LedgerIncomplete: return "LedgerIncomplete";
    case Errc::IdentityViolation: return "IdentityViolation";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::ParseError, "zero denominator");
  if (den < 0)
    q_ = boost::multiprecision::cpp_rational(-num, -den);
  else
    q_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw Error(Errc::ParseError, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += "/";
    s += denominator().str();
  }
  return s;
}

Rational Rational::parse(const std::string& text) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) throw Error(Errc::ParseError, "not a rational: '" + text + "'");
      return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      throw Error(Errc::ParseError, "not a rational: '" + text + "'");
    Int d(den);
    if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
    return Rational(Int(num), d);
  } catch (const std::runtime_error&) {
    throw Error(Errc::ParseError, "not a rational: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cyclic_slope
