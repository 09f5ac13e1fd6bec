// Copyright 2026 The qgc Authors
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

#include "qgc/error.h"

namespace qgc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CompositeModulus:
            return "CompositeModulus";
        case ErrorKind::InvalidSubset:
            return "InvalidSubset";
        case ErrorKind::InvalidGraph:
            return "InvalidGraph";
        case ErrorKind::TooManyErrors:
            return "TooManyErrors";
        case ErrorKind::DimensionOverflow:
            return "DimensionOverflow";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NotIsometry:
            return "NotIsometry";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotChannel:
            return "NotChannel";
        case ErrorKind::KLViolated:
            return "KLViolated";
        case ErrorKind::ParamOutOfRange:
            return "ParamOutOfRange";
        case ErrorKind::PreconditionViolated:
            return "PreconditionViolated";
        case ErrorKind::DeltaTooLarge:
            return "DeltaTooLarge";
        case ErrorKind::UnsupportedDimension:
            return "UnsupportedDimension";
    }
    return "Error";
}

}  // namespace qgc
