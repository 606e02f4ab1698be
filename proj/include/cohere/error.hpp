// Copyright 2026 The Cohere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohere {

enum class ErrorCode {
    NonHermitianInput,
    NonUnitary,
    ConvergenceFailure,
    DimensionMismatch,
    InvalidDimension,
    InvalidEpsilon,
    NonUnitVector,
    BlochNormExceeded,
    InvalidRank,
    InvalidDensity,
    NonPrimeDimension,
    MalformedDistribution,
    InconsistentStatistics,
    InvalidSpectrum,
    NotQubit,
    NotApplicable,
    TooFewSamples,
};

inline std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianInput: return "NonHermitianInput";
        case ErrorCode::NonUnitary: return "NonUnitary";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
        case ErrorCode::NonUnitVector: return "NonUnitVector";
        case ErrorCode::BlochNormExceeded: return "BlochNormExceeded";
        case ErrorCode::InvalidRank: return "InvalidRank";
        case ErrorCode::InvalidDensity: return "InvalidDensity";
        case ErrorCode::NonPrimeDimension: return "NonPrimeDimension";
        case ErrorCode::MalformedDistribution: return "MalformedDistribution";
        case ErrorCode::InconsistentStatistics: return "InconsistentStatistics";
        case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
        case ErrorCode::NotQubit: return "NotQubit";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
    }
    return "Unknown";
}

/// Thrown by every library routine on a contract violation. The code lets
/// callers (and tests) distinguish failure kinds without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cohere
