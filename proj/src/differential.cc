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

#include "fdr/differential.h"

#include <fmt/format.h>

#include "fdr/printer.h"
#include "fdr/subtype.h"

namespace fdr {

std::vector<Context> standardContexts() {
  Context empty;
  Context withX = empty.extendType("X", Type::arrow(Type::base(), Type::base()));
  return {empty, withX};
}

std::size_t DiffReport::disagreements() const {
  std::size_t n = 0;
  for (const auto& c : corpora) n += c.oracleFound;
  return n;
}

std::size_t DiffReport::invalidCertificates() const {
  std::size_t n = 0;
  for (const auto& c : corpora) n += c.invalidCerts;
  return n;
}

DiffReport runDifferential(const DiffConfig& config, std::ostream& out) {
  DiffReport report;
  Signature sig = config.pairs ? pairSignature() : functionSignature();
  SearchBudget budget = config.budget;
  budget.pool.pairs = budget.pool.pairs || config.pairs;

  std::vector<Context> contexts = config.contexts.empty() ? standardContexts() : config.contexts;
  for (const Context& ctx : contexts) {
    Signature corpusSig = sig;
    if (ctx.numTypeVars() > 0) corpusSig.insert(TypeKind::Var);
    std::vector<TypePtr> types = enumerateTypes(corpusSig, config.maxSize, ctx);

    DiffCorpusSummary summary;
    summary.context = printContext(ctx);
    summary.types = types.size();
    for (const auto& lhs : types) {
      for (const auto& rhs : types) {
        ++summary.pairs;
        SubtypeResult algo = subtype(ctx, lhs, rhs);
        if (algo) {
          ++summary.accepted;
          CheckVerdict v = checkDerivation(*algo.derivation);
          if (!v) {
            ++summary.invalidCerts;
            out << fmt::format("INVALID-CERT {} <: {} | {}\n", printType(ctx, lhs),
                               printType(ctx, rhs), v.reason);
          }
          continue;
        }
        ++summary.rejected;
        SearchResult oracle = search(ctx, lhs, rhs, budget);
        if (oracle) {
          ++summary.oracleFound;
          out << fmt::format("DISAGREE {} <: {} | algo=reject oracle=found@{}\n",
                             printType(ctx, lhs), printType(ctx, rhs),
                             oracle.derivation->height());
        }
      }
    }
    out << fmt::format(
        "SUMMARY context=[{}] types={} pairs={} accepted={} rejected={} disagreements={} "
        "invalid_certificates={}\n",
        summary.context, summary.types, summary.pairs, summary.accepted, summary.rejected,
        summary.oracleFound, summary.invalidCerts);
    out.flush();
    report.corpora.push_back(std::move(summary));
  }
  return report;
}

}  // namespace fdr
