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

#include "fdr/context.h"

#include <utility>

namespace fdr {

Context::Context()
    : entries_(std::make_shared<const std::vector<Entry>>()),
      typePositions_(std::make_shared<const std::vector<int>>()) {}

Context Context::extendTerm(std::string name, TypePtr type) const {
  auto entries = std::make_shared<std::vector<Entry>>(*entries_);
  entries->push_back(Entry{EntryKind::Term, std::move(name), std::move(type)});
  Context out = *this;
  out.entries_ = std::move(entries);
  return out;
}

Context Context::extendType(std::string name, TypePtr bound) const {
  auto entries = std::make_shared<std::vector<Entry>>(*entries_);
  auto positions = std::make_shared<std::vector<int>>(*typePositions_);
  positions->push_back(static_cast<int>(entries->size()));
  entries->push_back(Entry{EntryKind::Type, std::move(name), std::move(bound)});
  Context out;
  out.entries_ = std::move(entries);
  out.typePositions_ = std::move(positions);
  out.numTypeVars_ = numTypeVars_ + 1;
  return out;
}

std::optional<TypePtr> Context::typeBound(int index) const {
  if (index < 0 || index >= numTypeVars_) return std::nullopt;
  int pos = (*typePositions_)[numTypeVars_ - 1 - index];
  return shiftType((*entries_)[pos].type, index + 1);
}

std::optional<std::string> Context::typeVarName(int index) const {
  if (index < 0 || index >= numTypeVars_) return std::nullopt;
  return (*entries_)[(*typePositions_)[numTypeVars_ - 1 - index]].name;
}

std::optional<TypePtr> Context::termType(const std::string& name) const {
  int typesAfter = 0;
  for (auto it = entries_->rbegin(); it != entries_->rend(); ++it) {
    if (it->kind == EntryKind::Type) {
      ++typesAfter;
    } else if (it->name == name) {
      return shiftType(it->type, typesAfter);
    }
  }
  return std::nullopt;
}

std::vector<std::string> Context::typeVarNames() const {
  std::vector<std::string> out;
  out.reserve(typePositions_->size());
  for (int pos : *typePositions_) out.push_back((*entries_)[pos].name);
  return out;
}

Context Context::typeBindingsOnly() const {
  Context out;
  for (int pos : *typePositions_) {
    const Entry& e = (*entries_)[pos];
    out = out.extendType(e.name, e.type);
  }
  return out;
}

bool operator==(const Context& a, const Context& b) {
  if (a.entries_ == b.entries_) return true;
  if (a.entries_->size() != b.entries_->size()) return false;
  for (std::size_t i = 0; i < a.entries_->size(); ++i) {
    const auto& x = (*a.entries_)[i];
    const auto& y = (*b.entries_)[i];
    if (x.kind != y.kind || !sameType(x.type, y.type)) return false;
    if (x.kind == Context::EntryKind::Term && x.name != y.name) return false;
  }
  return true;
}

bool wellFormed(const Context& ctx, const TypePtr& t) {
  return closedUnder(t, ctx.numTypeVars());
}

bool wellFormedContext(const Context& ctx) {
  int typesBefore = 0;
  for (const auto& e : ctx.entries()) {
    if (!e.type || !closedUnder(e.type, typesBefore)) return false;
    if (e.kind == Context::EntryKind::Type) ++typesBefore;
  }
  return true;
}

}  // namespace fdr
