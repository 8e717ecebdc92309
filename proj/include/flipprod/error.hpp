// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLIPPROD_ERROR_HPP_
#define FLIPPROD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace flipprod {

enum class ErrorCode {
  kExchangeAxiomViolated,
  kUnequalBasisSizes,
  kIndexOutOfRange,
  kRankOutOfRange,
  kSubsetOutOfRange,
  kNotCircuitHyperplane,
  kGroundSetMismatch,
  kSizeCapExceeded,
  kNotSimple,
  kHasLoop,
  kRankRegimeUnsupported,
  kDegeneracyRetriesExhausted,
  kNotFullRank,
  kWrongGroup,
  kEdgeNotFound,
  kNotMinimallyRigid,
  kInvalidInput,
  // Internal consistency failures. The CLI maps these to a distinct exit code.
  kGainRuleMismatch,
  kOddSelfProduct,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes that signal a broken internal invariant rather than bad
/// input.
inline bool is_consistency_failure(ErrorCode code) {
  return code == ErrorCode::kGainRuleMismatch ||
         code == ErrorCode::kOddSelfProduct || code == ErrorCode::kInternal;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case ErrorCode::kUnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kSubsetOutOfRange: return "SubsetOutOfRange";
    case ErrorCode::kNotCircuitHyperplane: return "NotCircuitHyperplane";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kHasLoop: return "HasLoop";
    case ErrorCode::kRankRegimeUnsupported: return "RankRegimeUnsupported";
    case ErrorCode::kDegeneracyRetriesExhausted:
      return "DegeneracyRetriesExhausted";
    case ErrorCode::kNotFullRank: return "NotFullRank";
    case ErrorCode::kWrongGroup: return "WrongGroup";
    case ErrorCode::kEdgeNotFound: return "EdgeNotFound";
    case ErrorCode::kNotMinimallyRigid: return "NotMinimallyRigid";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kGainRuleMismatch: return "GainRuleMismatch";
    case ErrorCode::kOddSelfProduct: return "OddSelfProduct";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace flipprod

#endif  // FLIPPROD_ERROR_HPP_
