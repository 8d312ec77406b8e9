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

#include "fdr/cli.h"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "fdr/declarative.h"
#include "fdr/differential.h"
#include "fdr/eval.h"
#include "fdr/fuzz.h"
#include "fdr/parser.h"
#include "fdr/printer.h"
#include "fdr/subtype.h"
#include "fdr/typing.h"

namespace fdr {

namespace {

std::string formatSpan(const SourceSpan& s) {
  if (!s.valid()) return "?";
  return fmt::format("{}:{}-{}:{}", s.startLine, s.startColumn, s.endLine, s.endColumn);
}

void reportParseError(std::ostream& err, const std::string& where, const ParseError& e) {
  err << fmt::format("{}:{}: parse error: {}\n", where, formatSpan(e.span()), e.what());
}

void reportTypeError(std::ostream& out, const TypeError& e) {
  out << fmt::format("error at {}: {}: {}\n", formatSpan(e.span()), typeErrorName(e.kind()),
                     e.what());
  if (e.trace() && !e.trace()->goals.empty()) out << e.trace()->format();
}

std::optional<std::string> readFile(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << fmt::format("{}: cannot open file\n", path);
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parses and type checks a program file. On failure the exit status is
// returned instead.
struct Checked {
  TermPtr term;
  TypePtr type;
};

std::variant<Checked, int> loadProgram(const std::string& path, std::ostream& out,
                                       std::ostream& err) {
  auto src = readFile(path, err);
  if (!src) return kExitParseError;
  TermPtr term;
  try {
    term = parseProgram(*src);
  } catch (const ParseError& e) {
    reportParseError(err, path, e);
    return kExitParseError;
  }
  try {
    return Checked{term, synthesize(Context(), term).type};
  } catch (const TypeError& e) {
    reportTypeError(out, e);
    return kExitRejected;
  }
}

int printOutcome(const EvalOutcome& r, std::ostream& out, std::ostream& err) {
  switch (r.status) {
    case EvalOutcome::Status::Value:
      out << printValue(*r.value) << "\n";
      return kExitOk;
    case EvalOutcome::Status::OutOfFuel:
      err << fmt::format("out of fuel after {} steps\n", r.steps);
      return kExitRuntime;
    case EvalOutcome::Status::Stuck:
      err << fmt::format("stuck after {} steps: {}\n", r.steps, r.reason);
      return kExitRuntime;
  }
  return kExitRuntime;
}

int checkCommand(const std::string& path, std::ostream& out, std::ostream& err) {
  auto loaded = loadProgram(path, out, err);
  if (auto* status = std::get_if<int>(&loaded)) return *status;
  out << printType(std::get<Checked>(loaded).type) << "\n";
  return kExitOk;
}

int evalCommand(const std::string& path, std::size_t fuel, std::ostream& out, std::ostream& err) {
  auto loaded = loadProgram(path, out, err);
  if (auto* status = std::get_if<int>(&loaded)) return *status;
  return printOutcome(eval(ValueEnv(), std::get<Checked>(loaded).term, fuel), out, err);
}

struct Query {
  Context ctx;
  TypePtr lhs;
  TypePtr rhs;
};

std::optional<Query> parseQuery(const std::string& ctxSrc, const std::string& lhs,
                                const std::string& rhs, std::ostream& err) {
  Query q;
  const char* where = "--ctx";
  try {
    q.ctx = parseContext(ctxSrc);
    where = "T1";
    q.lhs = parseType(lhs, q.ctx);
    where = "T2";
    q.rhs = parseType(rhs, q.ctx);
  } catch (const ParseError& e) {
    reportParseError(err, where, e);
    return std::nullopt;
  }
  return q;
}

int subCommand(const Query& q, bool certify, std::ostream& out) {
  SubtypeResult r = subtype(q.ctx, q.lhs, q.rhs);
  if (!r) {
    out << "reject\n" << r.trace.format();
    return kExitRejected;
  }
  out << "accept\n";
  if (!certify) return kExitOk;
  out << formatDerivation(*r.derivation);
  CheckVerdict v = checkDerivation(*r.derivation);
  if (!v) {
    out << "certificate: invalid: " << v.reason << "\n";
    return kExitSuiteFailure;
  }
  out << "certificate: valid\n";
  return kExitOk;
}

int oracleCommand(const Query& q, int depth, std::ostream& out) {
  SearchBudget budget;
  budget.maxDepth = depth;
  budget.maxTransCut = depth - 1;
  SearchResult r = search(q.ctx, q.lhs, q.rhs, budget);
  if (!r.derivation) {
    out << fmt::format("not found within depth {} (pool {})\n", depth, r.poolSize);
    return kExitRejected;
  }
  out << fmt::format("found height={} (pool {})\n", r.derivation->height(), r.poolSize);
  out << formatDerivation(*r.derivation);
  return kExitOk;
}

// Splits `T1 <: T2` at the first top-level `<:` that leaves two types.
std::optional<std::pair<TypePtr, TypePtr>> splitSubtypeQuery(const std::string& text,
                                                             const Context& ctx) {
  for (std::size_t pos = text.find("<:"); pos != std::string::npos;
       pos = text.find("<:", pos + 1)) {
    try {
      return std::make_pair(parseType(text.substr(0, pos), ctx),
                            parseType(text.substr(pos + 2), ctx));
    } catch (const ParseError&) {
    }
  }
  return std::nullopt;
}

int repl(std::istream& in, std::ostream& out, std::ostream& err) {
  std::string line;
  int last = kExitOk;
  while (err << "fdr> " << std::flush, std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line == ":q" || line == ":quit") break;
    try {
      if (line.rfind(":sub", 0) == 0) {
        auto q = splitSubtypeQuery(line.substr(4), Context());
        if (!q) {
          err << "usage: :sub T1 <: T2\n";
          last = kExitParseError;
          continue;
        }
        last = subCommand(Query{Context(), q->first, q->second}, false, out);
      } else if (line.rfind(":t", 0) == 0) {
        TermPtr t = parseTerm(line.substr(2));
        out << printType(synthesize(Context(), t).type) << "\n";
        last = kExitOk;
      } else if (line[0] == ':') {
        err << "commands: :t TERM, :sub T1 <: T2, :q, or a term to evaluate\n";
        last = kExitParseError;
      } else {
        TermPtr t = parseTerm(line);
        synthesize(Context(), t);
        last = printOutcome(eval(ValueEnv(), t), out, err);
      }
    } catch (const ParseError& e) {
      reportParseError(err, "input", e);
      last = kExitParseError;
    } catch (const TypeError& e) {
      reportTypeError(out, e);
      last = kExitRejected;
    }
  }
  return last;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Checker, evaluator and test harness for a calculus with domain, range and "
               "pair projection types",
               "fdr"};
  app.require_subcommand(1);

  std::string file;
  std::size_t fuel = kDefaultFuel;
  std::string lhs, rhs, ctxSrc;
  bool certify = false;
  int depth = 12;
  std::size_t maxSize = 0;
  bool pairs = false;
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  int termDepth = 6;

  auto* check = app.add_subcommand("check", "Type check a program and print its type");
  check->add_option("FILE", file, "Program file")->required();

  auto* evalCmd = app.add_subcommand("eval", "Type check, then evaluate a program");
  evalCmd->add_option("FILE", file, "Program file")->required();
  evalCmd->add_option("--fuel", fuel, "Rule applications allowed");

  auto* sub = app.add_subcommand("sub", "Decide T1 <: T2 algorithmically");
  sub->add_option("T1", lhs)->required();
  sub->add_option("T2", rhs)->required();
  sub->add_option("--ctx", ctxSrc, "Comma-separated bindings, e.g. \"X <: B -> B\"");
  sub->add_flag("--certify", certify, "Print the derivation and validate it");

  auto* oracle = app.add_subcommand("oracle-sub", "Bounded search for a declarative derivation");
  oracle->add_option("T1", lhs)->required();
  oracle->add_option("T2", rhs)->required();
  oracle->add_option("--ctx", ctxSrc, "Comma-separated bindings");
  oracle->add_option("--depth", depth, "Maximum derivation height")->check(CLI::Range(1, 255));

  auto* diff = app.add_subcommand("diff-sub", "Exhaustive differential test against the oracle");
  diff->add_option("--max-size", maxSize, "Largest type size (default 5, or 4 with --pairs)")
      ->check(CLI::Range(1, 8));
  diff->add_option("--depth", depth, "Oracle depth")->check(CLI::Range(1, 255));
  diff->add_flag("--pairs", pairs, "Include pair types and their projections");

  auto* fuzz = app.add_subcommand("fuzz", "Soundness fuzzing of generated well-typed terms");
  fuzz->add_option("--count", count, "Number of terms");
  fuzz->add_option("--seed", seed, "Random seed");
  fuzz->add_option("--depth", termDepth, "Generator depth")->check(CLI::Range(0, 64));
  fuzz->add_option("--fuel", fuel, "Evaluation fuel per term");

  auto* replCmd = app.add_subcommand("repl", "Interactive loop: :t TERM, :sub T1 <: T2, or TERM");

  std::vector<std::string> storage{"fdr"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitParseError;
  }

  try {
    if (*check) return checkCommand(file, out, err);
    if (*evalCmd) return evalCommand(file, fuel, out, err);
    if (*sub || *oracle) {
      auto q = parseQuery(ctxSrc, lhs, rhs, err);
      if (!q) return kExitParseError;
      return *sub ? subCommand(*q, certify, out) : oracleCommand(*q, depth, out);
    }
    if (*diff) {
      DiffConfig config;
      config.pairs = pairs;
      config.maxSize = maxSize ? maxSize : (pairs ? 4 : 5);
      config.budget.maxDepth = depth;
      config.budget.maxTransCut = depth - 1;
      config.contexts = standardContexts();
      return runDifferential(config, out).passed() ? kExitOk : kExitSuiteFailure;
    }
    if (*fuzz) {
      GenConfig config;
      config.count = count;
      config.seed = seed;
      config.maxTermDepth = termDepth;
      config.fuel = fuel;
      SoundnessReport report = runSoundness(config);
      out << report.serialize();
      return report.passed() ? kExitOk : kExitSuiteFailure;
    }
    if (*replCmd) return repl(in, out, err);
  } catch (const IllFormedType& e) {
    err << "ill-formed type: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr, std::cin); }

}  // namespace fdr
