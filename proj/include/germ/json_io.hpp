// JSON report assembly for the CLI and tests.  All numbers are exact: JSON
// integers where they fit, "p/q" strings otherwise; no floating point is
// ever emitted.  Key order is fixed, so a fixed seed yields byte-identical
// documents.
#pragma once

#include <vector>

#include "json.hpp"

#include "germ/classification.hpp"
#include "germ/corpus.hpp"
#include "germ/family.hpp"
#include "germ/milnor.hpp"

namespace germ {

using Json = nlohmann::ordered_json;

// Integer when the value is integral and fits 64 bits, else exact "p/q".
Json json_rational(const Rational& r);

Json json_sequence(const MilnorSequence& s);

// {"status": "non_isolated"} or {"status": "inconclusive", "degree_cap": N}.
// pre: !c.finite().
Json json_colength_failure(const Colength& c);

// mu, multiplicity, smooth flag, and quasihomogeneity info for a finite germ.
// pre: mu.finite().
Json json_milnor_report(const Polynomial& f, const Colength& mu);

Json json_sequence_report(const MilnorSequence& s);

Json json_classify_report(const SingularityClass& c);

Json json_fiber(const FiberReport& r);

Json json_family_report(const FamilyVerdict& v);

Json json_corpus_report(const std::vector<CorpusCheck>& checks);

}  // namespace germ
