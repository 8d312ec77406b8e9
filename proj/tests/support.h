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
#include "fdr/declarative.h"
#include "fdr/parser.h"
#include "fdr/subtype.h"
#include "fdr/type.h"

namespace fdr::testing {

inline TypePtr ty(const std::string& src, const Context& ctx = Context()) {
  return parseType(src, ctx);
}

inline Context ctxOf(const std::string& src) { return parseContext(src); }

// Accepted, and the certificate passes the independent checker.
inline bool certifiedSub(const Context& ctx, const TypePtr& s, const TypePtr& t) {
  SubtypeResult r = subtype(ctx, s, t);
  return r.accepted() && checkDerivation(*r.derivation).ok;
}

inline bool equivalent(const Context& ctx, const TypePtr& a, const TypePtr& b) {
  return certifiedSub(ctx, a, b) && certifiedSub(ctx, b, a);
}

}  // namespace fdr::testing
