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

#include "fdr/typing.h"

#include <fmt/format.h>

#include <utility>

#include "fdr/printer.h"
#include "fdr/projection.h"

namespace fdr {

std::string_view typingRuleName(TypingRule rule) {
  switch (rule) {
    case TypingRule::Cst: return "t-cst";
    case TypingRule::Var: return "t-var";
    case TypingRule::Abs: return "t-abs";
    case TypingRule::AppDR: return "t-app-dr";
    case TypingRule::TAbs: return "t-tabs";
    case TypingRule::TApp: return "t-tapp";
    case TypingRule::Sub: return "t-sub";
    case TypingRule::Pair: return "t-pair";
    case TypingRule::Fst: return "t-fst";
    case TypingRule::Snd: return "t-snd";
  }
  return "?";
}

std::string_view typeErrorName(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::UnboundVariable: return "UnboundVariable";
    case TypeErrorKind::NotAFunction: return "NotAFunction";
    case TypeErrorKind::ArgumentMismatch: return "ArgumentMismatch";
    case TypeErrorKind::NotAQuantifier: return "NotAQuantifier";
    case TypeErrorKind::BoundViolation: return "BoundViolation";
    case TypeErrorKind::NotAPair: return "NotAPair";
    case TypeErrorKind::AnnotationMismatch: return "AnnotationMismatch";
    case TypeErrorKind::IllFormedAnnotation: return "IllFormedAnnotation";
  }
  return "?";
}

TypeError::TypeError(TypeErrorKind kind, const std::string& message, TermPtr term,
                     std::optional<RejectionTrace> trace)
    : std::runtime_error(message), kind_(kind), term_(std::move(term)), trace_(std::move(trace)) {}

namespace {

class Synthesizer {
 public:
  std::vector<TypingStep> trace;

  TypePtr synth(const Context& ctx, const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Const:
        step(t, TypingRule::Cst);
        return Type::base();

      case TermKind::Var: {
        auto type = ctx.termType(t->name());
        if (!type) {
          throw TypeError(TypeErrorKind::UnboundVariable,
                          fmt::format("unbound variable '{}'", t->name()), t);
        }
        step(t, TypingRule::Var);
        return *type;
      }

      case TermKind::Abs: {
        requireWellFormed(ctx, t, t->type());
        TypePtr body = synth(ctx.extendTerm(t->name(), t->type()), t->body());
        step(t, TypingRule::Abs);
        return Type::arrow(t->type(), body);
      }

      case TermKind::TAbs: {
        requireWellFormed(ctx, t, t->type());
        TypePtr body = synth(ctx.extendType(t->name(), t->type()), t->body());
        step(t, TypingRule::TAbs);
        return Type::all(t->name(), t->type(), body);
      }

      case TermKind::App:
        return application(ctx, t);

      case TermKind::TApp:
        return typeApplication(ctx, t);

      case TermKind::Pair: {
        TypePtr first = synth(ctx, t->left());
        TypePtr second = synth(ctx, t->right());
        step(t, TypingRule::Pair);
        return Type::pair(first, second);
      }

      case TermKind::Fst:
      case TermKind::Snd:
        return projection(ctx, t);
    }
    throw std::logic_error("unknown term kind");
  }

 private:
  void step(const TermPtr& t, TypingRule rule, std::vector<DerivationPtr> ds = {}) {
    trace.push_back(TypingStep{t, rule, std::move(ds)});
  }

  void requireWellFormed(const Context& ctx, const TermPtr& t, const TypePtr& type) {
    if (!wellFormed(ctx, type)) {
      throw TypeError(TypeErrorKind::IllFormedAnnotation,
                      "annotation mentions a type variable that is not in scope", t);
    }
  }

  // Records `t : from` widened to its head normal form, returning the latter.
  TypePtr normalized(const Context& ctx, const TermPtr& t, const TypePtr& from) {
    HeadNormal hn = headNormalize(ctx, from);
    if (hn.steps.empty()) return from;
    step(t, TypingRule::Sub, {hn.rewrite.forward});
    return hn.rewrite.to;
  }

  TypePtr application(const Context& ctx, const TermPtr& t) {
    TypePtr fn = synth(ctx, t->fn());
    TypePtr arg = synth(ctx, t->arg());
    TypePtr dom = Type::dom(fn);
    SubtypeResult check = subtype(ctx, arg, dom);
    if (!check) {
      Exposure e = expose(ctx, fn);
      if (e.is(ExposureKind::Arrow)) {
        throw TypeError(TypeErrorKind::ArgumentMismatch,
                        fmt::format("argument of type {} does not match the domain {}",
                                    printType(ctx, arg), printType(ctx, dom)),
                        t, check.trace);
      }
      throw TypeError(TypeErrorKind::NotAFunction,
                      fmt::format("cannot apply a term of type {} to an argument of type {}",
                                  printType(ctx, fn), printType(ctx, arg)),
                      t, check.trace);
    }
    step(t, TypingRule::AppDR, {check.derivation});
    return normalized(ctx, t, Type::range(fn));
  }

  TypePtr typeApplication(const Context& ctx, const TermPtr& t) {
    requireWellFormed(ctx, t, t->type());
    TypePtr fn = synth(ctx, t->fn());
    Exposure e = expose(ctx, fn);
    if (!e.is(ExposureKind::All)) {
      throw TypeError(TypeErrorKind::NotAQuantifier,
                      fmt::format("type application to a term of type {}", printType(ctx, fn)),
                      t);
    }
    if (!e.chain.empty()) step(t->fn(), TypingRule::Sub, {e.derivation});
    const TypePtr& bound = e.head->bound();
    SubtypeResult check = subtype(ctx, t->type(), bound);
    if (!check) {
      throw TypeError(TypeErrorKind::BoundViolation,
                      fmt::format("type argument {} is not a subtype of the bound {}",
                                  printType(ctx, t->type()), printType(ctx, bound)),
                      t, check.trace);
    }
    step(t, TypingRule::TApp, {check.derivation});
    return instantiate(e.head->body(), t->type());
  }

  TypePtr projection(const Context& ctx, const TermPtr& t) {
    TypePtr inner = synth(ctx, t->inner());
    TypePtr pairTop = Type::pair(Type::top(), Type::top());
    SubtypeResult check = subtype(ctx, inner, pairTop);
    if (!check) {
      throw TypeError(TypeErrorKind::NotAPair,
                      fmt::format("projection from a term of type {}, which is not below {}",
                                  printType(ctx, inner), printType(ctx, pairTop)),
                      t, check.trace);
    }
    bool first = t->is(TermKind::Fst);
    step(t, first ? TypingRule::Fst : TypingRule::Snd, {check.derivation});
    return normalized(ctx, t, first ? Type::fst(inner) : Type::snd(inner));
  }
};

}  // namespace

TypingResult synthesize(const Context& ctx, const TermPtr& t) {
  Synthesizer s;
  TypePtr type = s.synth(ctx, t);
  return TypingResult{type, std::move(s.trace)};
}

TypingResult checkAgainst(const Context& ctx, const TermPtr& t, const TypePtr& expected) {
  TypingResult r = synthesize(ctx, t);
  if (!wellFormed(ctx, expected)) {
    throw TypeError(TypeErrorKind::IllFormedAnnotation,
                    "expected type mentions a type variable that is not in scope", t);
  }
  SubtypeResult check = subtype(ctx, r.type, expected);
  if (!check) {
    throw TypeError(TypeErrorKind::AnnotationMismatch,
                    fmt::format("term of type {} does not check against {}",
                                printType(ctx, r.type), printType(ctx, expected)),
                    t, check.trace);
  }
  r.trace.push_back(TypingStep{t, TypingRule::Sub, {check.derivation}});
  r.type = expected;
  return r;
}

}  // namespace fdr
