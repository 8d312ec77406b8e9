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

#include "fdr/printer.h"

#include <algorithm>

#include "fdr/parser.h"

namespace fdr {

namespace {

class TypePrinter {
 public:
  explicit TypePrinter(std::vector<std::string> scope) : names_(std::move(scope)) {}

  // Arrow-level position: anything goes.
  void top(const TypePtr& t) {
    switch (t->kind()) {
      case TypeKind::All: {
        std::string name = bind(t->hint());
        out_ += "forall " + name + " <: ";
        if (t->bound()->is(TypeKind::All)) {
          paren(t->bound());
        } else {
          top(t->bound());
        }
        out_ += " . ";
        names_.push_back(name);
        top(t->body());
        names_.pop_back();
        return;
      }
      case TypeKind::Arrow:
        if (t->param()->is(TypeKind::Arrow) || t->param()->is(TypeKind::All)) {
          paren(t->param());
        } else {
          top(t->param());
        }
        out_ += " -> ";
        top(t->result());
        return;
      default:
        atom(t);
    }
  }

  void atom(const TypePtr& t) {
    switch (t->kind()) {
      case TypeKind::Base: out_ += "B"; return;
      case TypeKind::Top: out_ += "Top"; return;
      case TypeKind::Bot: out_ += "Bot"; return;
      case TypeKind::Var: {
        int pos = static_cast<int>(names_.size()) - 1 - t->index();
        if (pos >= 0) {
          out_ += names_[pos];
        } else {
          out_ += "?" + std::to_string(t->index());
        }
        return;
      }
      case TypeKind::Pair:
        out_ += "[";
        top(t->first());
        out_ += ", ";
        top(t->second());
        out_ += "]";
        return;
      case TypeKind::Dom:
      case TypeKind::Range:
      case TypeKind::Fst:
      case TypeKind::Snd:
        out_ += kindName(t->kind());
        out_ += "<";
        top(t->inner());
        out_ += ">";
        return;
      case TypeKind::Arrow:
      case TypeKind::All:
        paren(t);
        return;
    }
  }

  void paren(const TypePtr& t) {
    out_ += "(";
    top(t);
    out_ += ")";
  }

  std::string bind(const std::string& hint) {
    std::string base = hint.empty() || isReservedWord(hint) ? "X" : hint;
    std::string name = base;
    for (int n = 1; std::find(names_.begin(), names_.end(), name) != names_.end(); ++n) {
      name = base + std::to_string(n);
    }
    return name;
  }

  std::vector<std::string>& names() { return names_; }
  std::string& out() { return out_; }

 private:
  std::vector<std::string> names_;
  std::string out_;
};

class TermPrinter {
 public:
  explicit TermPrinter(std::vector<std::string> scope) : types_(std::move(scope)) {}

  void top(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Abs:
        out() += "fun (" + t->name() + " : ";
        types_.top(t->type());
        out() += ") => ";
        top(t->body());
        return;
      case TermKind::TAbs: {
        std::string name = types_.bind(t->name());
        out() += "tfun (" + name + " <: ";
        types_.top(t->type());
        out() += ") => ";
        types_.names().push_back(name);
        top(t->body());
        types_.names().pop_back();
        return;
      }
      default:
        app(t);
    }
  }

  void app(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::App:
        app(t->fn());
        out() += " ";
        postfix(t->arg());
        return;
      case TermKind::TApp:
        app(t->fn());
        out() += " [";
        types_.top(t->type());
        out() += "]";
        return;
      default:
        postfix(t);
    }
  }

  void postfix(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Fst:
      case TermKind::Snd:
        postfix(t->inner());
        out() += t->is(TermKind::Fst) ? ".1" : ".2";
        return;
      default:
        atom(t);
    }
  }

  void atom(const TermPtr& t) {
    switch (t->kind()) {
      case TermKind::Const:
        out() += "c";
        return;
      case TermKind::Var:
        out() += t->name();
        return;
      case TermKind::Pair:
        out() += "(";
        top(t->left());
        out() += ", ";
        top(t->right());
        out() += ")";
        return;
      default:
        out() += "(";
        top(t);
        out() += ")";
    }
  }

  std::string& out() { return types_.out(); }

 private:
  TypePrinter types_;
};

}  // namespace

std::string printType(const TypePtr& t, const std::vector<std::string>& scope) {
  TypePrinter p(scope);
  p.top(t);
  return std::move(p.out());
}

std::string printType(const Context& ctx, const TypePtr& t) {
  return printType(t, ctx.typeVarNames());
}

std::string printTerm(const TermPtr& t, const std::vector<std::string>& scope) {
  TermPrinter p(scope);
  p.top(t);
  return std::move(p.out());
}

std::string printTerm(const Context& ctx, const TermPtr& t) {
  return printTerm(t, ctx.typeVarNames());
}

std::string printContext(const Context& ctx) {
  std::string out;
  std::vector<std::string> scope;
  for (const auto& e : ctx.entries()) {
    if (!out.empty()) out += ", ";
    out += e.name + (e.kind == Context::EntryKind::Type ? " <: " : " : ");
    out += printType(e.type, scope);
    if (e.kind == Context::EntryKind::Type) scope.push_back(e.name);
  }
  return out;
}

}  // namespace fdr
