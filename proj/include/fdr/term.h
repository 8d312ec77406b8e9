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

#include <memory>
#include <string>

#include "fdr/type.h"

namespace fdr {

// 1-based, inclusive line/column range into the source text.
struct SourceSpan {
  int startLine = 0;
  int startColumn = 0;
  int endLine = 0;
  int endColumn = 0;

  bool valid() const { return startLine > 0; }
  static SourceSpan merge(const SourceSpan& a, const SourceSpan& b);
};

enum class TermKind { Const, Var, Abs, App, TAbs, TApp, Pair, Fst, Snd };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Term variables are named; type annotations use the de Bruijn scheme of
// `Type`, relative to the type binders (TAbs and context) in scope.
class Term {
 public:
  static TermPtr constant(SourceSpan span = {});
  static TermPtr var(std::string name, SourceSpan span = {});
  static TermPtr abs(std::string param, TypePtr annotation, TermPtr body,
                     SourceSpan span = {});
  static TermPtr app(TermPtr fn, TermPtr arg, SourceSpan span = {});
  static TermPtr tabs(std::string var, TypePtr bound, TermPtr body,
                      SourceSpan span = {});
  static TermPtr tapp(TermPtr fn, TypePtr typeArg, SourceSpan span = {});
  static TermPtr pair(TermPtr left, TermPtr right, SourceSpan span = {});
  static TermPtr fst(TermPtr inner, SourceSpan span = {});
  static TermPtr snd(TermPtr inner, SourceSpan span = {});

  TermKind kind() const { return kind_; }
  bool is(TermKind k) const { return kind_ == k; }

  // Var: the variable. Abs: the parameter. TAbs: the type variable hint.
  const std::string& name() const { return name_; }
  // Abs: parameter annotation. TAbs: bound. TApp: type argument.
  const TypePtr& type() const { return type_; }
  // Abs/TAbs: body. App/TApp: function. Pair: left. Fst/Snd: inner.
  const TermPtr& left() const { return left_; }
  // App: argument. Pair: right.
  const TermPtr& right() const { return right_; }

  const TermPtr& body() const { return left_; }
  const TermPtr& fn() const { return left_; }
  const TermPtr& arg() const { return right_; }
  const TermPtr& inner() const { return left_; }

  const SourceSpan& span() const { return span_; }
  std::size_t size() const { return size_; }

 private:
  Term(TermKind kind, std::string name, TypePtr type, TermPtr left,
       TermPtr right, SourceSpan span);

  TermKind kind_;
  std::string name_;
  TypePtr type_;
  TermPtr left_;
  TermPtr right_;
  SourceSpan span_;
  std::size_t size_ = 1;
};

// Structural equality; spans are ignored, annotations compared as types.
bool sameTerm(const TermPtr& a, const TermPtr& b);

// Rebuilds the term with every annotation and type argument replaced by
// `replacement`.
TermPtr replaceAnnotations(const TermPtr& t, const TypePtr& replacement);

}  // namespace fdr
