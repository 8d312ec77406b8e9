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

#include "fdr/term.h"

#include <algorithm>
#include <utility>

namespace fdr {

SourceSpan SourceSpan::merge(const SourceSpan& a, const SourceSpan& b) {
  if (!a.valid()) return b;
  if (!b.valid()) return a;
  SourceSpan out;
  if (std::pair(a.startLine, a.startColumn) <= std::pair(b.startLine, b.startColumn)) {
    out.startLine = a.startLine;
    out.startColumn = a.startColumn;
  } else {
    out.startLine = b.startLine;
    out.startColumn = b.startColumn;
  }
  if (std::pair(a.endLine, a.endColumn) >= std::pair(b.endLine, b.endColumn)) {
    out.endLine = a.endLine;
    out.endColumn = a.endColumn;
  } else {
    out.endLine = b.endLine;
    out.endColumn = b.endColumn;
  }
  return out;
}

Term::Term(TermKind kind, std::string name, TypePtr type, TermPtr left,
           TermPtr right, SourceSpan span)
    : kind_(kind),
      name_(std::move(name)),
      type_(std::move(type)),
      left_(std::move(left)),
      right_(std::move(right)),
      span_(span) {
  if (left_) size_ += left_->size();
  if (right_) size_ += right_->size();
}

TermPtr Term::constant(SourceSpan span) {
  return TermPtr(new Term(TermKind::Const, {}, nullptr, nullptr, nullptr, span));
}

TermPtr Term::var(std::string name, SourceSpan span) {
  return TermPtr(new Term(TermKind::Var, std::move(name), nullptr, nullptr, nullptr, span));
}

TermPtr Term::abs(std::string param, TypePtr annotation, TermPtr body, SourceSpan span) {
  return TermPtr(new Term(TermKind::Abs, std::move(param), std::move(annotation),
                          std::move(body), nullptr, span));
}

TermPtr Term::app(TermPtr fn, TermPtr arg, SourceSpan span) {
  return TermPtr(new Term(TermKind::App, {}, nullptr, std::move(fn), std::move(arg), span));
}

TermPtr Term::tabs(std::string var, TypePtr bound, TermPtr body, SourceSpan span) {
  return TermPtr(new Term(TermKind::TAbs, std::move(var), std::move(bound),
                          std::move(body), nullptr, span));
}

TermPtr Term::tapp(TermPtr fn, TypePtr typeArg, SourceSpan span) {
  return TermPtr(new Term(TermKind::TApp, {}, std::move(typeArg), std::move(fn), nullptr,
                          span));
}

TermPtr Term::pair(TermPtr left, TermPtr right, SourceSpan span) {
  return TermPtr(new Term(TermKind::Pair, {}, nullptr, std::move(left), std::move(right),
                          span));
}

TermPtr Term::fst(TermPtr inner, SourceSpan span) {
  return TermPtr(new Term(TermKind::Fst, {}, nullptr, std::move(inner), nullptr, span));
}

TermPtr Term::snd(TermPtr inner, SourceSpan span) {
  return TermPtr(new Term(TermKind::Snd, {}, nullptr, std::move(inner), nullptr, span));
}

bool sameTerm(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind() || a->size() != b->size()) return false;
  // TAbs names are hints: the annotations below them are nameless.
  if (!a->is(TermKind::TAbs) && a->name() != b->name()) return false;
  if ((a->type() == nullptr) != (b->type() == nullptr)) return false;
  if (a->type() && !sameType(a->type(), b->type())) return false;
  return sameTerm(a->left(), b->left()) && sameTerm(a->right(), b->right());
}

TermPtr replaceAnnotations(const TermPtr& t, const TypePtr& replacement) {
  if (!t) return t;
  TermPtr l = replaceAnnotations(t->left(), replacement);
  TermPtr r = replaceAnnotations(t->right(), replacement);
  switch (t->kind()) {
    case TermKind::Const:
    case TermKind::Var:
      return t;
    case TermKind::Abs:
      return Term::abs(t->name(), replacement, l, t->span());
    case TermKind::TAbs:
      return Term::tabs(t->name(), replacement, l, t->span());
    case TermKind::TApp:
      return Term::tapp(l, replacement, t->span());
    case TermKind::App:
      return Term::app(l, r, t->span());
    case TermKind::Pair:
      return Term::pair(l, r, t->span());
    case TermKind::Fst:
      return Term::fst(l, t->span());
    case TermKind::Snd:
      return Term::snd(l, t->span());
  }
  return t;
}

}  // namespace fdr
