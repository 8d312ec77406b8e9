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

#include <string>
#include <vector>

#include "fdr/context.h"
#include "fdr/term.h"
#include "fdr/type.h"

namespace fdr {

// Canonical concrete syntax with minimal parentheses. `scope` names the free
// type variables, outermost first; unnamed free variables print as `?N`.
// Binder names that would capture are freshened, so the output always parses
// back to an equal AST.
std::string printType(const TypePtr& t, const std::vector<std::string>& scope = {});
std::string printType(const Context& ctx, const TypePtr& t);

std::string printTerm(const TermPtr& t, const std::vector<std::string>& scope = {});
std::string printTerm(const Context& ctx, const TermPtr& t);

// Comma-separated bindings in the `--ctx` flag syntax, e.g. `X <: B -> B`.
std::string printContext(const Context& ctx);

}  // namespace fdr
