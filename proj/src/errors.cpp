// Copyright 2026 The vcbg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcbg/errors.hpp"

namespace vcbg {

std::string_view to_string(ErrorCategory c) noexcept
{
    switch (c) {
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Config: return "config";
    case ErrorCategory::Domain: return "domain";
    case ErrorCategory::Range: return "range";
    case ErrorCategory::Numeric: return "numeric";
    case ErrorCategory::InsufficientData: return "insufficient-data";
    case ErrorCategory::DegenerateDesign: return "degenerate-design";
    case ErrorCategory::Sign: return "sign";
    case ErrorCategory::Consistency: return "consistency";
    }
    return "unknown";
}

} // namespace vcbg
