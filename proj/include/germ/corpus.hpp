// Golden regression corpus: a JSON list of germs with their expected
// invariants, checked by computing every expectation with the standard-basis
// engine and cross-checking the Milnor number against the truncated-quotient
// oracle (and against the weight formula for quasihomogeneous entries).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germ/milnor.hpp"
#include "germ/polynomial.hpp"

namespace germ {

struct CorpusEntry {
  std::string name;
  std::vector<std::string> variables;
  std::string expression;
  bool expect_non_isolated = false;
  unsigned long long mu = 0;  // when isolated
  std::optional<std::vector<unsigned long long>> sequence;
  std::optional<std::string> class_name;  // "A_3", "cA_5", ...
  std::optional<std::vector<Rational>> weights;
};

struct CorpusCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;  // one line per mismatched expectation
};

std::vector<CorpusEntry> load_corpus(const std::string& json_text);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

// Every stated expectation is recomputed; the Milnor number is additionally
// cross-checked against the oracle and, when weights are stated, against the
// quasihomogeneous product formula.
CorpusCheck check_corpus_entry(const CorpusEntry& entry, const SectionSamplingConfig& cfg);

// Checks entries concurrently; result order matches input order.
std::vector<CorpusCheck> run_corpus(const std::vector<CorpusEntry>& entries, const SectionSamplingConfig& cfg);

}  // namespace germ
