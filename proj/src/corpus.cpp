#include "germ/corpus.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "germ/classification.hpp"
#include "germ/errors.hpp"
#include "germ/macaulay.hpp"
#include "germ/parallel.hpp"
#include "germ/parser.hpp"
#include "germ/standard_basis.hpp"

namespace germ {
namespace {

std::string sequence_text(const std::vector<unsigned long long>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FamilyFormatError(std::string("corpus document is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw FamilyFormatError("corpus document must be a JSON array");
  std::vector<CorpusEntry> entries;
  for (const auto& item : doc) {
    if (!item.is_object()) throw FamilyFormatError("corpus entries must be objects");
    CorpusEntry e;
    if (!item.contains("name") || !item["name"].is_string()) throw FamilyFormatError("corpus entry needs a name");
    e.name = item["name"].get<std::string>();
    if (!item.contains("variables") || !item["variables"].is_array()) {
      throw FamilyFormatError("corpus entry needs a variables array: " + e.name);
    }
    for (const auto& v : item["variables"]) e.variables.push_back(v.get<std::string>());
    if (!item.contains("expression") || !item["expression"].is_string()) {
      throw FamilyFormatError("corpus entry needs an expression: " + e.name);
    }
    e.expression = item["expression"].get<std::string>();
    if (item.contains("status") && item["status"].is_string() &&
        item["status"].get<std::string>() == "non_isolated") {
      e.expect_non_isolated = true;
    } else {
      if (!item.contains("mu") || !item["mu"].is_number_integer()) {
        throw FamilyFormatError("corpus entry needs mu or status=non_isolated: " + e.name);
      }
      e.mu = item["mu"].get<unsigned long long>();
    }
    if (item.contains("sequence")) {
      std::vector<unsigned long long> seq;
      for (const auto& v : item["sequence"]) seq.push_back(v.get<unsigned long long>());
      e.sequence = std::move(seq);
    }
    if (item.contains("class")) e.class_name = item["class"].get<std::string>();
    if (item.contains("weights")) {
      std::vector<Rational> w;
      for (const auto& v : item["weights"]) w.push_back(parse_rational(v.get<std::string>()));
      e.weights = std::move(w);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FamilyFormatError("cannot read corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_corpus(buf.str());
}

CorpusCheck check_corpus_entry(const CorpusEntry& entry, const SectionSamplingConfig& cfg) {
  CorpusCheck check;
  check.name = entry.name;
  auto fail = [&](const std::string& msg) {
    check.passed = false;
    check.failures.push_back(msg);
  };
  Polynomial f(0);
  try {
    f = parse_polynomial(entry.expression, entry.variables);
  } catch (const Error& e) {
    fail(std::string("parse: ") + e.what());
    return check;
  }

  Colength mu = milnor_number(f);
  if (entry.expect_non_isolated) {
    if (mu.status != Colength::Status::NonIsolated) {
      fail("expected a non-isolated singularity, engine says otherwise");
    }
    return check;
  }
  if (!mu.finite()) {
    fail("expected finite Milnor number " + std::to_string(entry.mu));
    return check;
  }
  if (mu.value != entry.mu) {
    fail("Milnor number " + std::to_string(mu.value) + ", expected " + std::to_string(entry.mu));
  }

  Colength oracle = macaulay_colength(jacobian(f), default_degree_cap(jacobian(f)));
  if (!oracle.finite()) {
    fail("oracle did not settle");
  } else if (oracle.value != mu.value) {
    fail("oracle colength " + std::to_string(oracle.value) + " disagrees with engine " +
         std::to_string(mu.value));
  }

  if (entry.weights) {
    auto detected = detect_quasihomogeneous(f);
    if (!detected) {
      fail("expected quasihomogeneous weights, none detected");
    } else {
      if (detected->weights != *entry.weights) {
        std::string got;
        for (const Rational& w : detected->weights) got += (got.empty() ? "" : ",") + to_string(w);
        fail("weights (" + got + ") differ from the stated ones");
      }
      unsigned long long qh = quasihomogeneous_milnor(*detected);
      if (qh != mu.value) {
        fail("weight-formula value " + std::to_string(qh) + " disagrees with colength " +
             std::to_string(mu.value));
      }
    }
  }

  if (entry.sequence) {
    MilnorSequence seq = milnor_sequence(f, cfg);
    if (seq.values != *entry.sequence) {
      fail("sequence " + sequence_text(seq.values) + ", expected " + sequence_text(*entry.sequence));
    }
  }

  if (entry.class_name) {
    try {
      SingularityClass cls = f.num_vars() == 4 ? classify_cdv(f, cfg) : classify_du_val(f, cfg);
      if (cls.name() != *entry.class_name) {
        fail("class " + cls.name() + ", expected " + *entry.class_name);
      }
    } catch (const Error& e) {
      fail(std::string("classification: ") + e.what());
    }
  }
  return check;
}

std::vector<CorpusCheck> run_corpus(const std::vector<CorpusEntry>& entries, const SectionSamplingConfig& cfg) {
  std::vector<CorpusCheck> checks(entries.size());
  parallel::parallel_for(entries.size(), [&](std::size_t i) { checks[i] = check_corpus_entry(entries[i], cfg); });
  return checks;
}

}  // namespace germ
