#include "germ/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "germ/errors.hpp"
#include "germ/parallel.hpp"
#include "germ/parser.hpp"

namespace germ {
namespace {

std::size_t space_dim(const FamilySpec& family) { return family.variables.size(); }

bool is_excluded(const FamilySpec& family, const Rational& a) {
  for (const Rational& e : family.excluded_parameters) {
    if (e == a) return true;
  }
  return false;
}

// sigma_i(a) for every coordinate of one section.
std::vector<Rational> section_point(const FamilySpec& family, std::size_t section_index, const Rational& a) {
  std::vector<Rational> point;
  point.reserve(space_dim(family));
  for (const Polynomial& coord : family.sections[section_index]) {
    point.push_back(coord.evaluate({a}));
  }
  return point;
}

// A polynomial in the lone parameter variable, lifted into the family's
// variable space (parameter last).
Polynomial lift_parameter_poly(const Polynomial& p, std::size_t nv) {
  Polynomial out(nv + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial lifted = Monomial::one(nv + 1);
    lifted.e[nv] = m.e[0];
    out.add_term(lifted, c);
  }
  return out;
}

std::vector<Rational> sorted_unique_samples(const FamilySpec& family) {
  std::vector<Rational> samples = family.parameter_samples;
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return samples;
}

std::vector<MilnorSequence> sequence_multiset(const FiberReport& report) {
  std::vector<MilnorSequence> multi;
  multi.reserve(report.per_section.size());
  for (const SectionOutcome& s : report.per_section) {
    if (s.isolated) multi.push_back(s.sequence);
  }
  std::sort(multi.begin(), multi.end(),
            [](const MilnorSequence& x, const MilnorSequence& y) { return x.values < y.values; });
  return multi;
}

struct FiberEntry {
  Rational parameter;
  FiberReport report;
  bool degenerate = false;
};

std::vector<FiberEntry> compute_fibers(const FamilySpec& family, const SectionSamplingConfig& cfg) {
  std::vector<Rational> samples = sorted_unique_samples(family);
  std::vector<FiberEntry> entries(samples.size());
  parallel::parallel_for(samples.size(), [&](std::size_t i) {
    FiberEntry& e = entries[i];
    e.parameter = samples[i];
    try {
      e.report = fiber_report(family, samples[i], cfg);
      for (const SectionOutcome& s : e.report.per_section) {
        if (!s.isolated) e.degenerate = true;
      }
    } catch (const InconclusiveResult&) {
      e.report = FiberReport{samples[i], {}, std::nullopt};
      e.degenerate = true;
    } catch (const AllSamplesInconclusive&) {
      e.report = FiberReport{samples[i], {}, std::nullopt};
      e.degenerate = true;
    }
  });
  return entries;
}

std::vector<Stratum> build_strata(const std::vector<FiberEntry>& entries) {
  std::vector<Stratum> strata;
  long degenerate_block = -1;
  for (const FiberEntry& e : entries) {
    if (e.degenerate) {
      if (degenerate_block < 0) {
        degenerate_block = static_cast<long>(strata.size());
        Stratum s;
        s.degenerate = true;
        strata.push_back(std::move(s));
      }
      strata[static_cast<std::size_t>(degenerate_block)].parameters.push_back(e.parameter);
      continue;
    }
    std::vector<MilnorSequence> multi = sequence_multiset(e.report);
    bool placed = false;
    for (Stratum& s : strata) {
      if (!s.degenerate && s.multiset == multi) {
        s.parameters.push_back(e.parameter);
        placed = true;
        break;
      }
    }
    if (!placed) {
      Stratum s;
      s.multiset = std::move(multi);
      s.parameters.push_back(e.parameter);
      strata.push_back(std::move(s));
    }
  }
  return strata;
}

}  // namespace

const std::string& family_report_note() {
  static const std::string note =
      "Verdicts cover the declared sections at the sampled parameters only: equisingular "
      "evidence is a sampled certificate, not a proof over the base, and undeclared "
      "singular points are never searched for.";
  return note;
}

void validate_family(const FamilySpec& family) {
  const std::size_t nv = space_dim(family);
  if (nv == 0) throw FamilyFormatError("family needs at least one space variable");
  if (family.parameter.empty()) throw FamilyFormatError("family needs a parameter symbol");
  for (const std::string& v : family.variables) {
    if (v == family.parameter) throw FamilyFormatError("parameter symbol duplicates a space variable");
  }
  if (family.family_polynomial.num_vars() != nv + 1) {
    throw FamilyFormatError("family polynomial must use the space variables plus the parameter");
  }
  if (family.sections.empty()) throw FamilyFormatError("family needs at least one declared section");
  for (const auto& section : family.sections) {
    if (section.size() != nv) throw FamilyFormatError("section coordinate count must match the space variables");
    for (const Polynomial& coord : section) {
      if (coord.num_vars() != 1) throw FamilyFormatError("section coordinates are polynomials in the parameter alone");
    }
  }
  for (const Rational& s : family.parameter_samples) {
    if (is_excluded(family, s)) {
      throw FamilyFormatError("parameter sample " + to_string(s) + " is listed as excluded");
    }
  }

  // f(sigma(a), a) must vanish identically in the parameter.
  for (std::size_t si = 0; si < family.sections.size(); ++si) {
    Polynomial g = family.family_polynomial;
    for (std::size_t i = 0; i < nv; ++i) {
      g = g.substitute_one(i, lift_parameter_poly(family.sections[si][i], nv));
    }
    if (!g.is_zero()) {
      throw SectionNotOnFiber("section " + std::to_string(si) + " does not lie on the family hypersurface");
    }
  }

  // The declared sections must be singular points of the sampled fibers.
  for (std::size_t si = 0; si < family.sections.size(); ++si) {
    for (const Rational& a : family.parameter_samples) {
      std::vector<Rational> point = section_point(family, si, a);
      point.push_back(a);
      for (std::size_t i = 0; i < nv; ++i) {
        if (family.family_polynomial.derivative(i).evaluate(point) != 0) {
          throw SectionNotOnFiber("section " + std::to_string(si) + " is not singular on the fiber at parameter " +
                                  to_string(a));
        }
      }
    }
  }
}

Polynomial specialize(const FamilySpec& family, const Rational& a, std::size_t section_index) {
  if (is_excluded(family, a)) throw ExcludedParameter(to_string(a));
  if (section_index >= family.sections.size()) {
    throw IndexOutOfRange("section index " + std::to_string(section_index) + " out of range");
  }
  const std::size_t nv = space_dim(family);
  Polynomial fiber = family.family_polynomial.substitute_value(nv, a);
  Polynomial germ = fiber.translated(section_point(family, section_index, a));
  if (germ.constant_term() != 0) {
    throw SectionNotOnFiber("section " + std::to_string(section_index) + " misses the fiber at parameter " +
                            to_string(a));
  }
  return germ;
}

FiberReport fiber_report(const FamilySpec& family, const Rational& a, const SectionSamplingConfig& cfg) {
  if (is_excluded(family, a)) throw ExcludedParameter(to_string(a));
  FiberReport report;
  report.parameter = a;
  unsigned long long sum = 0;
  bool all_isolated = true;
  for (std::size_t si = 0; si < family.sections.size(); ++si) {
    SectionOutcome outcome;
    outcome.point = section_point(family, si, a);
    Polynomial germ = specialize(family, a, si);
    try {
      outcome.sequence = milnor_sequence(germ, cfg);
      outcome.isolated = true;
      sum += outcome.sequence.mu();
    } catch (const NonIsolatedInput&) {
      outcome.isolated = false;
      all_isolated = false;
    } catch (const InconclusiveResult& e) {
      throw InconclusiveResult(e.degree_cap,
                               "section " + std::to_string(si) + ", parameter " + to_string(a));
    }
    report.per_section.push_back(std::move(outcome));
  }
  if (all_isolated) report.milnor_sum = sum;
  return report;
}

FamilyVerdict whitney_check(const FamilySpec& family, const SectionSamplingConfig& cfg) {
  validate_family(family);
  if (family.parameter_samples.empty()) throw FamilyFormatError("family has no parameter samples");
  std::vector<FiberEntry> entries = compute_fibers(family, cfg);

  FamilyVerdict out;
  out.note = family_report_note();
  out.strata = build_strata(entries);
  for (const FiberEntry& e : entries) out.fibers.push_back(e.report);

  bool have_min = false;
  for (const FiberEntry& e : entries) {
    if (e.report.milnor_sum && (!have_min || *e.report.milnor_sum < out.min_milnor_sum)) {
      out.min_milnor_sum = *e.report.milnor_sum;
      have_min = true;
    }
  }
  out.semicontinuity_ok = true;
  for (const FiberEntry& e : entries) {
    if (e.report.milnor_sum && *e.report.milnor_sum < out.min_milnor_sum) out.semicontinuity_ok = false;
  }

  const FiberEntry* first_degenerate = nullptr;
  for (const FiberEntry& e : entries) {
    if (e.degenerate) {
      first_degenerate = &e;
      break;
    }
  }
  if (first_degenerate != nullptr) {
    out.verdict = FamilyVerdict::Verdict::Degenerate;
    out.witnesses.push_back(first_degenerate->report);
    return out;
  }

  std::vector<MilnorSequence> common = sequence_multiset(entries.front().report);
  const FiberEntry* differing = nullptr;
  for (const FiberEntry& e : entries) {
    if (sequence_multiset(e.report) != common) {
      differing = &e;
      break;
    }
  }
  if (differing == nullptr) {
    out.verdict = FamilyVerdict::Verdict::EquisingularEvidence;
    out.common_multiset = std::move(common);
    return out;
  }
  out.verdict = FamilyVerdict::Verdict::NotEquisingular;
  out.witnesses.push_back(entries.front().report);
  out.witnesses.push_back(differing->report);
  return out;
}

std::vector<Stratum> stratify(const FamilySpec& family, const SectionSamplingConfig& cfg) {
  validate_family(family);
  if (family.parameter_samples.empty()) throw FamilyFormatError("family has no parameter samples");
  return build_strata(compute_fibers(family, cfg));
}

namespace {

Rational rational_from_json(const nlohmann::json& v, const char* field) {
  if (v.is_number_integer()) return parse_rational(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw FamilyFormatError(std::string(field) + " entries must be integers or exact rational strings");
}

}  // namespace

FamilySpec parse_family(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FamilyFormatError(std::string("family document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FamilyFormatError("family document must be a JSON object");

  FamilySpec spec;
  if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty()) {
    throw FamilyFormatError("field 'variables' must be a nonempty array of variable names");
  }
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw FamilyFormatError("field 'variables' must contain strings");
    spec.variables.push_back(v.get<std::string>());
  }
  if (!doc.contains("parameter") || !doc["parameter"].is_string()) {
    throw FamilyFormatError("field 'parameter' must be the parameter symbol");
  }
  spec.parameter = doc["parameter"].get<std::string>();
  if (!doc.contains("polynomial") || !doc["polynomial"].is_string()) {
    throw FamilyFormatError("field 'polynomial' must be the family polynomial text");
  }
  std::vector<std::string> names = spec.variables;
  names.push_back(spec.parameter);
  spec.family_polynomial = parse_polynomial(doc["polynomial"].get<std::string>(), names);

  if (!doc.contains("sections") || !doc["sections"].is_array() || doc["sections"].empty()) {
    throw FamilyFormatError("field 'sections' must be a nonempty array of section coordinate lists");
  }
  const std::vector<std::string> param_only{spec.parameter};
  for (const auto& sec : doc["sections"]) {
    if (!sec.is_array()) throw FamilyFormatError("each section must be an array of coordinates");
    std::vector<Polynomial> coords;
    for (const auto& coord : sec) {
      if (coord.is_string()) {
        coords.push_back(parse_polynomial(coord.get<std::string>(), param_only));
      } else if (coord.is_number_integer()) {
        coords.push_back(Polynomial::constant(1, parse_rational(std::to_string(coord.get<long long>()))));
      } else {
        throw FamilyFormatError("section coordinates must be strings or integers");
      }
    }
    spec.sections.push_back(std::move(coords));
  }

  if (doc.contains("excluded")) {
    if (!doc["excluded"].is_array()) throw FamilyFormatError("field 'excluded' must be an array");
    for (const auto& v : doc["excluded"]) spec.excluded_parameters.push_back(rational_from_json(v, "excluded"));
  }
  if (doc.contains("samples") && doc["samples"].is_array() && !doc["samples"].empty()) {
    for (const auto& v : doc["samples"]) spec.parameter_samples.push_back(rational_from_json(v, "samples"));
  } else if (doc.contains("samples") && !doc["samples"].is_array()) {
    throw FamilyFormatError("field 'samples' must be an array");
  } else {
    for (int v : {-3, -1, 0, 1, 3}) {
      Rational r(v);
      if (!is_excluded(spec, r)) spec.parameter_samples.push_back(r);
    }
  }

  validate_family(spec);
  return spec;
}

FamilySpec parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FamilyFormatError("cannot read family file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

}  // namespace germ
