#include "artinian/error.hpp"

#include "artinian/integer.hpp"

namespace artinian {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kNegativeRemainder: return "NEGATIVE_REMAINDER";
    case ErrorCode::kNotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kImpossible: return "IMPOSSIBLE";
    case ErrorCode::kDegeneracyLimit: return "DEGENERACY_LIMIT";
    case ErrorCode::kNotAdmissible: return "NOT_ADMISSIBLE";
    case ErrorCode::kParse: return "PARSE_ERROR";
  }
  return "UNKNOWN_ERROR";
}

std::string to_tuple(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  out += ')';
  return out;
}

}  // namespace artinian
