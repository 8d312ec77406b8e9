// Copyright 2026 The fdr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdr/context.h"
#include "fdr/term.h"
#include "fdr/type.h"

namespace fdr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span,
             std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

bool isReservedWord(std::string_view word);

// `scope` names type variables already bound, outermost first.
TypePtr parseType(std::string_view src, const std::vector<std::string>& scope = {});
TypePtr parseType(std::string_view src, const Context& ctx);

TermPtr parseTerm(std::string_view src, const std::vector<std::string>& scope = {});

// A `.fdr` program: `let x : T = t ;` definitions followed by one term. Each
// definition desugars to an immediately applied abstraction.
TermPtr parseProgram(std::string_view src, const std::vector<std::string>& scope = {});

// Comma-separated bindings `X <: T` and `x : T`; later bounds may mention
// earlier type variables only. The empty string is the empty context.
Context parseContext(std::string_view src);

}  // namespace fdr
