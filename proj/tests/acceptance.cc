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


// Acceptance checks AC1 to AC7. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Arguments select a subset, e.g. `AC2 AC6`.

#include <fmt/format.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fdr/cli.h"
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

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(std::move(why));
  }
};

bool certified(const Context& ctx, const TypePtr& s, const TypePtr& t) {
  SubtypeResult r = subtype(ctx, s, t);
  return r.accepted() && checkDerivation(*r.derivation).ok;
}

bool equivalent(const Context& ctx, const TypePtr& a, const TypePtr& b) {
  return certified(ctx, a, b) && certified(ctx, b, a);
}

bool traceCertified(const TypingResult& r) {
  for (const auto& step : r.trace) {
    for (const auto& d : step.derivations) {
      if (!checkDerivation(*d).ok) return false;
    }
  }
  return true;
}

template <typename T>
const T& sample(Rng& rng, const std::vector<T>& xs) {
  return xs[rng.below(xs.size())];
}

// ---------------------------------------------------------------------------

Outcome ruleCoverage() {
  Outcome o;

  // Subtyping: every rule must appear in a validated derivation of one of
  // these queries, produced by the algorithm or, failing that, the oracle.
  struct Query {
    const char* ctx;
    const char* lhs;
    const char* rhs;
  };
  const std::vector<Query> queries = {
      {"", "B", "Top"},
      {"", "Bot", "B"},
      {"", "B", "B"},
      {"X <: B -> B", "X", "B -> B"},
      {"", "Top", "Dom<Bot>"},
      {"", "Top -> B", "B -> Top"},
      {"", "forall X <: B . X", "forall X <: B . Top"},
      {"", "B", "Dom<B -> B>"},
      {"", "Dom<B -> B>", "B"},
      {"", "B", "Range<Top -> B>"},
      {"", "Range<Top -> B>", "B"},
      {"F <: B -> B", "B", "Dom<F>"},
      {"F <: B -> B", "Range<F>", "B"},
      {"", "[B, Bot]", "[Top, B]"},
      {"", "B", "Fst<[B, Top]>"},
      {"", "Fst<[B, Top]>", "B"},
      {"", "B", "Snd<[Top, B]>"},
      {"", "Snd<[Top, B]>", "B"},
      {"T <: [B, B]", "Fst<T>", "B"},
      {"T <: [B, B]", "Snd<T>", "B"},
  };
  std::vector<bool> algo(kAllRules.size()), oracle(kAllRules.size());
  for (const auto& q : queries) {
    Context ctx = parseContext(q.ctx);
    TypePtr s = parseType(q.lhs, ctx), t = parseType(q.rhs, ctx);
    SubtypeResult r = subtype(ctx, s, t);
    if (!r || !checkDerivation(*r.derivation).ok) {
      o.fail(fmt::format("no validated certificate for {} <: {}", q.lhs, q.rhs));
      continue;
    }
    collectRules(*r.derivation, algo);
    SearchResult found = search(ctx, s, t);
    if (!found || !checkDerivation(*found.derivation).ok) {
      o.fail(fmt::format("oracle found no derivation of {} <: {}", q.lhs, q.rhs));
      continue;
    }
    collectRules(*found.derivation, oracle);
  }
  std::size_t subtyping = 0, byAlgorithm = 0;
  for (std::size_t i = 0; i < kAllRules.size(); ++i) {
    byAlgorithm += algo[i];
    if (algo[i] || oracle[i]) {
      ++subtyping;
    } else {
      o.fail(fmt::format("rule {} never used", ruleName(kAllRules[i])));
    }
  }

  // Typing rules, read off the traces.
  std::set<TypingRule> typing;
  const std::vector<std::string> programs = {
      "c",
      "fun (x : B) => x",
      "(fun (x : B) => x) c",
      "tfun (X <: Top) => c",
      "(tfun (X <: Top) => c) [B]",
      "(fun (x : B) => fun (y : B) => y) c",
      "(c, c).1",
      "(c, c).2",
  };
  for (const auto& src : programs) {
    TypingResult r = synthesize(Context(), parseTerm(src));
    if (!traceCertified(r)) o.fail("uncertified typing step in " + src);
    for (const auto& step : r.trace) typing.insert(step.rule);
  }
  TypingResult widened =
      checkAgainst(Context(), parseTerm("fun (x : B) => x"), parseType("B -> Top"));
  for (const auto& step : widened.trace) typing.insert(step.rule);
  if (typing.size() != 10) o.fail(fmt::format("{} of 10 typing rules used", typing.size()));

  // The standard rules, derived: applications and projections at syntactic
  // arrow and pair types get the textbook result up to equivalence.
  int derived = 0;
  Context ctx = parseContext("f : B -> Top -> B, a : B, p : [B, B -> B]");
  auto derivedCase = [&](const char* term, const char* expected) {
    TypePtr got = synthesize(ctx, parseTerm(term)).type;
    if (equivalent(ctx, got, parseType(expected))) {
      ++derived;
    } else {
      o.fail(fmt::format("{} : {} is not equivalent to {}", term, printType(ctx, got), expected));
    }
  };
  derivedCase("f a", "Top -> B");
  derivedCase("p.1", "B");
  derivedCase("p.2", "B -> B");

  // Evaluation rules.
  EvalStats stats;
  for (const char* src : {"(fun (x : B) => x) c", "(tfun (X <: Top) => c) [B]", "(c, c).1",
                          "(c, c).2"}) {
    if (!eval(ValueEnv(), parseTerm(src), 100, &stats).ok()) o.fail(fmt::format("{} failed", src));
  }
  std::size_t evaluation = 0;
  for (std::size_t i = 0; i < kEvalRuleCount; ++i) {
    if (stats.applications[i]) {
      ++evaluation;
    } else {
      o.fail(fmt::format("{} never applied", evalRuleName(static_cast<EvalRule>(i))));
    }
  }

  o.detail = fmt::format(
      "subtyping {}/20 ({} in algorithmic certificates), typing {}/10 (+{}/3 derived), "
      "evaluation {}/9",
      subtyping, byAlgorithm, typing.size(), derived, evaluation);
  return o;
}

// ---------------------------------------------------------------------------

std::vector<TypePtr> corpus(const Context& ctx, std::size_t maxSize) {
  Signature sig = pairSignature();
  sig.insert(TypeKind::All);
  if (ctx.numTypeVars()) sig.insert(TypeKind::Var);
  return enumerateTypes(sig, maxSize, ctx);
}

Outcome admissibility() {
  Outcome o;
  Rng rng(2026);
  const Context base = parseContext("X <: B -> B");
  const std::vector<TypePtr> types = corpus(base, 4);
  int apps = 0, projections = 0;
  for (int i = 0; i < 100; ++i) {
    TypePtr a = sample(rng, types), b = sample(rng, types);
    Context ctx = base.extendTerm("f", Type::arrow(a, b)).extendTerm("a", a);
    try {
      TypingResult r = synthesize(ctx, parseTerm("f a"));
      if (traceCertified(r) && equivalent(ctx, r.type, b)) {
        ++apps;
        continue;
      }
      o.fail(fmt::format("f : {} applied gives {}", printType(ctx, Type::arrow(a, b)),
                         printType(ctx, r.type)));
    } catch (const TypeError& e) {
      o.fail(fmt::format("f : {}: {}", printType(ctx, Type::arrow(a, b)), e.what()));
    }
  }
  for (int i = 0; i < 100; ++i) {
    TypePtr a = sample(rng, types), b = sample(rng, types);
    Context ctx = base.extendTerm("p", Type::pair(a, b));
    try {
      TypingResult first = synthesize(ctx, parseTerm("p.1"));
      TypingResult second = synthesize(ctx, parseTerm("p.2"));
      if (traceCertified(first) && traceCertified(second) && equivalent(ctx, first.type, a) &&
          equivalent(ctx, second.type, b)) {
        ++projections;
        continue;
      }
      o.fail(fmt::format("p : {} projects to {} and {}", printType(ctx, Type::pair(a, b)),
                         printType(ctx, first.type), printType(ctx, second.type)));
    } catch (const TypeError& e) {
      o.fail(fmt::format("p : {}: {}", printType(ctx, Type::pair(a, b)), e.what()));
    }
  }
  o.detail = fmt::format("t-app {}/100, t-fst-std and t-snd-std {}/100", apps, projections);
  return o;
}

// ---------------------------------------------------------------------------

Outcome projectionEquivalences() {
  Outcome o;
  Rng rng(1729);
  const Context ctx = parseContext("X <: B -> B");
  const std::vector<TypePtr> types = corpus(ctx, 4);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    TypePtr a = sample(rng, types), b = sample(rng, types);
    TypePtr arrow = Type::arrow(a, b), pair = Type::pair(a, b);
    bool good = equivalent(ctx, Type::dom(arrow), a) && equivalent(ctx, Type::range(arrow), b) &&
                equivalent(ctx, Type::fst(pair), a) && equivalent(ctx, Type::snd(pair), b);
    if (good) {
      ++ok;
    } else {
      o.fail(fmt::format("A = {}, B = {}", printType(ctx, a), printType(ctx, b)));
    }
  }
  int absorbed = 0;
  const std::vector<std::pair<const char*, const char*>> absorptions = {
      {"Dom<Bot>", "Top"}, {"Dom<Top>", "Bot"}, {"Range<Top>", "Top"}, {"Range<Bot>", "Bot"}};
  for (const auto& [lhs, rhs] : absorptions) {
    TypePtr s = parseType(lhs), t = parseType(rhs);
    SearchResult there = search(Context(), s, t);
    SearchResult back = search(Context(), t, s);
    bool byOracle = there && back && checkDerivation(*there.derivation).ok &&
                    checkDerivation(*back.derivation).ok;
    if (equivalent(Context(), s, t) && byOracle) {
      ++absorbed;
    } else {
      o.fail(fmt::format("{} == {} not confirmed", lhs, rhs));
    }
  }
  o.detail = fmt::format("equivalences {}/100, absorptions {}/4", ok, absorbed);
  return o;
}

// ---------------------------------------------------------------------------

Outcome differential() {
  Outcome o;
  std::ostringstream findings;
  std::vector<std::string> parts;
  for (bool pairs : {false, true}) {
    DiffConfig config;
    config.pairs = pairs;
    config.maxSize = pairs ? 4 : 5;
    config.contexts = standardContexts();
    DiffReport report = runDifferential(config, findings);
    std::size_t types = 0, judged = 0, accepted = 0;
    for (const auto& c : report.corpora) {
      types += c.types;
      judged += c.pairs;
      accepted += c.accepted;
    }
    parts.push_back(fmt::format("{} size<={}: {} pairs, {} accepted, {} disagreements, {} invalid",
                                pairs ? "pairs" : "functions", config.maxSize, judged, accepted,
                                report.disagreements(), report.invalidCertificates()));
    if (!report.passed()) o.fail(parts.back());
  }
  std::istringstream lines(findings.str());
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("SUMMARY", 0) != 0) o.fail(line);
  }
  o.detail = fmt::format("{}", fmt::join(parts, "; "));
  return o;
}

// ---------------------------------------------------------------------------

Outcome soundness() {
  Outcome o;
  GenConfig config;
  config.count = 10000;
  config.seed = 42;
  config.maxTermDepth = 6;
  config.fuel = 1'000'000;
  SoundnessReport first = runSoundness(config);
  std::string bytes = first.serialize();
  bool reproducible = runSoundness(config).serialize() == bytes;
  if (first.generated != config.count) {
    o.fail(fmt::format("only {} terms generated", first.generated));
  }
  if (!first.passed()) {
    for (const auto& f : first.failures) o.fail(printTerm(f.term) + ": " + f.detail);
    if (o.problems.empty()) o.fail("report not clean");
  }
  if (!reproducible) o.fail("second run differs");
  o.detail = fmt::format(
      "{} terms, stuck {}, shape mismatches {}, out of fuel {}, check failures {}, skipped {}, "
      "reproducible {}",
      first.generated, first.stuck, first.shapeMismatches, first.outOfFuel, first.checkFailures,
      first.skippedOpaque, reproducible ? "yes" : "no");
  return o;
}

// ---------------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome exampleCorpus() {
  Outcome o;
  const std::filesystem::path root = FDR_SOURCE_DIR;
  int goldens = 0;
  for (const auto& entry : std::filesystem::directory_iterator(root / "tests" / "golden")) {
    // <program>.<subcommand>.out
    std::string name = entry.path().stem().string();
    auto dot = name.rfind('.');
    std::string programName = name.substr(0, dot), command = name.substr(dot + 1);
    std::ostringstream out, err;
    std::istringstream in;
    int status = run({command, (root / "programs" / (programName + ".fdr")).string()}, out, err, in);
    std::string got = out.str() + fmt::format("status: {}\n", status);
    if (got != slurp(entry.path())) o.fail(fmt::format("{} differs from its golden", name));
    ++goldens;
  }
  if (goldens == 0) o.fail("no golden files");

  auto load = [&](const char* name) {
    return parseProgram(slurp(root / "programs" / (std::string(name) + ".fdr")));
  };
  int semantic = 0;
  auto expect = [&](bool ok, const std::string& what) {
    if (ok) {
      ++semantic;
    } else {
      o.fail(what);
    }
  };
  try {
    expect(sameType(synthesize(Context(), load("eta")).type,
                    parseType("forall F <: Top . F -> Dom<F> -> Range<F>")),
           "eta signature");
    expect(traceCertified(checkAgainst(Context(), load("eta_instance"), parseType("B -> B"))),
           "eta instance against B -> B");
    try {
      synthesize(Context(), load("mapB_misuse"));
      expect(false, "mapB misuse accepted");
    } catch (const TypeError& e) {
      expect(e.kind() == TypeErrorKind::ArgumentMismatch, "mapB misuse error kind");
    }
    expect(sameType(synthesize(Context(), load("funError")).type, parseType("Dom<B> -> B")),
           "funError signature");
    bool inhabited = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      inhabited |= genWellTypedTerm(Context(), parseType("Dom<B>"), 8, rng).has_value();
    }
    expect(!inhabited, "the generator found an inhabitant of Dom<B>");
    expect(sameType(synthesize(Context(), load("mapFirst1")).type,
                    parseType("forall F <: Top . forall C <: Top . F -> [Dom<F>, C] -> "
                              "[Range<F>, C]")),
           "mapFirst1 signature");
    expect(sameType(synthesize(Context(), load("mapFirst2_bounded")).type,
                    parseType("forall T <: [Top, Top] . forall A1 <: Top . (Fst<T> -> A1) -> T -> "
                              "[A1, Snd<T>]")),
           "bounded mapFirst2 signature");
  } catch (const std::exception& e) {
    o.fail(e.what());
  }
  o.detail = fmt::format("{} goldens, {}/7 signature and error checks", goldens, semantic);
  return o;
}

// ---------------------------------------------------------------------------

Outcome roundTripAndErasure() {
  Outcome o;
  Rng rng(99);
  const Context ctx = parseContext("X <: B -> B");
  const std::vector<TypePtr> types = corpus(ctx, 5);
  int typeTrips = 0;
  for (int i = 0; i < 1000; ++i) {
    const TypePtr& t = sample(rng, types);
    std::string text = printType(ctx, t);
    try {
      if (sameType(parseType(text, ctx), t)) {
        ++typeTrips;
        continue;
      }
    } catch (const ParseError&) {
    }
    o.fail("type " + text);
  }

  GenConfig config;
  const std::vector<TypePtr> goals = goalPool(rng, config);
  std::vector<TermPtr> terms;
  for (std::size_t i = 0; terms.size() < 1000 && i < 100000; ++i) {
    if (auto t = genWellTypedTerm(Context(), goals[i % goals.size()], 6, rng, config)) {
      terms.push_back(*t);
    }
  }
  if (terms.size() < 1000) o.fail(fmt::format("only {} terms generated", terms.size()));

  int termTrips = 0, erasures = 0;
  for (const TermPtr& t : terms) {
    std::string text = printTerm(t);
    try {
      if (sameTerm(parseTerm(text), t)) {
        ++termTrips;
      } else {
        o.fail("term " + text);
      }
    } catch (const ParseError&) {
      o.fail("term " + text);
    }
    EvalOutcome a = eval(ValueEnv(), t);
    EvalOutcome b = eval(ValueEnv(), replaceAnnotations(t, Type::top()));
    bool same = a.status == b.status && a.steps == b.steps && a.reason == b.reason &&
                (!a.ok() || printValue(*a.value) == printValue(*b.value));
    if (same) {
      ++erasures;
    } else {
      o.fail("erasure " + text);
    }
  }
  o.detail = fmt::format("types {}/1000, terms {}/{}, erasure {}/{}", typeTrips, termTrips,
                         terms.size(), erasures, terms.size());
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limitSeconds;
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace fdr

int main(int argc, char** argv) {
  using namespace fdr;
  const std::vector<Criterion> criteria = {
      {"AC1", "rule coverage", 5, ruleCoverage},
      {"AC2", "admissibility of standard rules", 10, admissibility},
      {"AC3", "projection equivalences", 10, projectionEquivalences},
      {"AC4", "differential subtyping", 600, differential},
      {"AC5", "soundness fuzz", 300, soundness},
      {"AC6", "paper-example corpus", 5, exampleCorpus},
      {"AC7", "round-trip and erasure", 30, roundTripAndErasure},
  };
  std::set<std::string> selected(argv + 1, argv + argc);
  bool allPassed = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limitSeconds) o.fail(fmt::format("over the {} s budget", c.limitSeconds));
    allPassed &= o.pass;
    std::cout << fmt::format("{} {} {}: {} [{:.2f} s]\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                             o.detail, seconds);
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
  }
  return allPassed ? 0 : 1;
}
