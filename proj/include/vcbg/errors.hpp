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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcbg {

/// Coarse classification of failures; the CLI maps these onto exit codes.
enum class ErrorCategory
{
    Parse,
    Config,
    Domain,
    Range,
    Numeric,
    InsufficientData,
    DegenerateDesign,
    Sign,
    Consistency,
};

std::string_view to_string(ErrorCategory c) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category)
    {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory c, const std::string& what)
{
    throw Error(c, what);
}

} // namespace vcbg
