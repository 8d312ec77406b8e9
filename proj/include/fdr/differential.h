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

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "fdr/context.h"
#include "fdr/declarative.h"

namespace fdr {

struct DiffConfig {
  std::size_t maxSize = 5;
  bool pairs = false;  // adds [,], Fst and Snd to the signature
  SearchBudget budget;
  // Contexts to enumerate in. Each context's type variables join the
  // signature.
  std::vector<Context> contexts;
};

// The two contexts of the standard suite: empty, and X <: B -> B.
std::vector<Context> standardContexts();

struct DiffCorpusSummary {
  std::string context;  // printed context, "" when empty
  std::size_t types = 0;
  std::size_t pairs = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t oracleFound = 0;    // rejected but derivable: completeness failures
  std::size_t invalidCerts = 0;   // accepted with a certificate the checker rejects
};

struct DiffReport {
  std::vector<DiffCorpusSummary> corpora;

  std::size_t disagreements() const;
  std::size_t invalidCertificates() const;
  bool passed() const { return disagreements() == 0 && invalidCertificates() == 0; }
};

/**
 * Runs the algorithmic subtyper on every ordered pair of enumerated types in
 * each context. Every acceptance's certificate goes through checkDerivation;
 * every rejection is put to the bounded declarative search.
 *
 * Writes one line per finding to `out`:
 *   DISAGREE <lhs> <: <rhs> | algo=reject oracle=found@<height>
 *   INVALID-CERT <lhs> <: <rhs> | <checker reason>
 * followed by one SUMMARY line per context.
 */
DiffReport runDifferential(const DiffConfig& config, std::ostream& out);

}  // namespace fdr
