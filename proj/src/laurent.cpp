#include "cellule/laurent.hpp"

#include <sstream>

namespace cellule {

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int exp = it->first;
    std::int64_t c = it->second;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (exp == 0) {
      out << a;
    } else {
      if (a != 1) out << a;
      out << "v";
      if (exp != 1) out << "^" << exp;
    }
  }
  return out.str();
}

LaurentPoly LaurentPoly::solve_antisymmetric(const LaurentPoly& a) {
  require(a.bar() == -a, ErrorCode::NotAntisymmetric,
          "bar(a) != -a, no strictly negative solution exists: a = " + a.str());
  // With a = sum_{n>0} a_n (v^n - v^-n), the solution p = sum_{n>0} a_n v^-n
  // satisfies bar(p) - p = a and lies in v^-1 Z[v^-1].
  LaurentPoly p;
  for (const auto& [e, c] : a.coeffs_)
    if (e > 0) p.add_term(c, -e);
  return p;
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::BallTooLarge: return "BallTooLarge";
    case ErrorCode::InfiniteParabolic: return "InfiniteParabolic";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::ContextInvalid: return "ContextInvalid";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::AmbiguousAssignment: return "AmbiguousAssignment";
    case ErrorCode::NoAssignment: return "NoAssignment";
    case ErrorCode::StabilizationUnknown: return "StabilizationUnknown";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cellule
