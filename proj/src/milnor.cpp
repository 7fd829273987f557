#include "germ/milnor.hpp"

#include <algorithm>
#include <utility>

#include "germ/errors.hpp"
#include "germ/parallel.hpp"

namespace germ {
namespace {

constexpr std::uint64_t kSectionStream = 0x73656374;  // plane-section sample stream

Colength sample_section(const Polynomial& f, std::size_t plane_dim, const SectionSamplingConfig& cfg,
                        unsigned idx) {
  std::mt19937_64 rng(parallel::derive_seed(
      cfg.seed, {kSectionStream, static_cast<std::uint64_t>(f.num_vars()), static_cast<std::uint64_t>(plane_dim),
                 static_cast<std::uint64_t>(idx)}));
  LinearSubstitution plane = random_section_matrix(f.num_vars(), plane_dim, rng, cfg.coefficient_height);
  Polynomial g = primitive_scale(substitute_linear(f, plane));
  return milnor_number(g);
}

}  // namespace

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> J;
  J.reserve(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) J.push_back(f.derivative(i));
  return J;
}

Colength milnor_number(const Polynomial& f, unsigned degree_cap) {
  if (f.constant_term() != 0) throw ConstantTermPresent();
  Colength out;
  out.degree_cap = degree_cap;
  if (f.is_zero()) {
    out.status = Colength::Status::NonIsolated;
    return out;
  }
  if (f.order().value() == 1) {
    out.status = Colength::Status::Finite;
    out.value = 0;
    return out;
  }
  std::vector<Polynomial> J;
  for (Polynomial& d : jacobian(f)) {
    if (!d.is_zero()) J.push_back(std::move(d));
  }
  if (J.empty()) {
    out.status = Colength::Status::NonIsolated;  // cannot happen for nonzero f in char 0
    return out;
  }
  return colength(J, LocalOrder::anti_graded_revlex(f.num_vars()), degree_cap);
}

Colength milnor_number(const Polynomial& f) {
  if (f.constant_term() != 0) throw ConstantTermPresent();
  if (f.is_zero()) {
    Colength out;
    out.status = Colength::Status::NonIsolated;
    return out;
  }
  return milnor_number(f, default_degree_cap(jacobian(f)));
}

unsigned multiplicity(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.constant_term() != 0) throw ConstantTermPresent();
  return f.order().value();
}

std::optional<WeightVector> detect_quasihomogeneous(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  const std::size_t nv = f.num_vars();
  // Augmented system: one row per exponent vector, right-hand side 1.
  std::vector<std::vector<Rational>> rows;
  rows.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    std::vector<Rational> row(nv + 1);
    for (std::size_t i = 0; i < nv; ++i) row[i] = Rational(m.e[i]);
    row[nv] = 1;
    rows.push_back(std::move(row));
  }
  // Gauss-Jordan with leftmost pivots.
  std::vector<std::size_t> pivot_col;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < nv && next_row < rows.size(); ++col) {
    std::size_t p = next_row;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next_row], rows[p]);
    Rational inv = 1 / rows[next_row][col];
    for (std::size_t j = col; j <= nv; ++j) rows[next_row][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t j = col; j <= nv; ++j) rows[r][j] -= factor * rows[next_row][j];
    }
    pivot_col.push_back(col);
    ++next_row;
  }
  for (std::size_t r = next_row; r < rows.size(); ++r) {
    if (rows[r][nv] != 0) return std::nullopt;  // inconsistent
  }

  std::vector<bool> is_pivot(nv, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  // The weight sum is bounded on the solution space only when every null
  // direction has coordinate sum zero; otherwise a weight can drift freely,
  // which in practice flags a variable the germ does not constrain.
  for (std::size_t j = 0; j < nv; ++j) {
    if (is_pivot[j]) continue;
    Rational sum = 1;  // the free coordinate itself
    for (std::size_t r = 0; r < pivot_col.size(); ++r) sum -= rows[r][j];
    if (sum != 0) return std::nullopt;
  }

  // Free weights sit at 1/2, the largest admissible value; pivot weights
  // follow by back-substitution.
  std::vector<Rational> w(nv);
  const Rational half(1, 2);
  for (std::size_t j = 0; j < nv; ++j) {
    if (!is_pivot[j]) w[j] = half;
  }
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    Rational v = rows[r][nv];
    for (std::size_t j = 0; j < nv; ++j) {
      if (!is_pivot[j] && rows[r][j] != 0) v -= rows[r][j] * half;
    }
    w[pivot_col[r]] = v;
  }
  for (const Rational& wi : w) {
    if (wi <= 0 || wi > half) return std::nullopt;
  }
  return WeightVector{std::move(w)};
}

unsigned long long quasihomogeneous_milnor(const WeightVector& w) {
  Rational prod = 1;
  for (const Rational& wi : w.weights) prod *= 1 / wi - 1;
  if (prod.get_den() != 1 || prod < 0) throw NonIntegerResult();
  if (!prod.get_num().fits_ulong_p()) throw NonIntegerResult();
  return prod.get_num().get_ui();
}

LinearSubstitution random_section_matrix(std::size_t num_vars, std::size_t plane_dim, std::mt19937_64& rng,
                                         unsigned height) {
  // Modular draws instead of std::uniform_int_distribution keep the stream
  // identical across standard libraries; the bias at 64 bits is negligible
  // for genericity purposes.
  const std::uint64_t span = 2ull * height + 1;
  LinearSubstitution sub;
  sub.num_target_vars = num_vars;
  sub.num_source_vars = plane_dim;
  sub.matrix.resize(num_vars * plane_dim);
  for (std::size_t i = 0; i < num_vars; ++i) {
    for (std::size_t j = 0; j < plane_dim; ++j) {
      long long num = static_cast<long long>(rng() % span) - static_cast<long long>(height);
      long long den = static_cast<long long>(rng() % height) + 1;
      Rational entry(static_cast<long>(num), static_cast<long>(den));
      entry.canonicalize();
      sub.at(i, j) = entry;
    }
  }
  return sub;
}

unsigned long long generic_section_milnor(const Polynomial& f, std::size_t plane_dim,
                                          const SectionSamplingConfig& cfg) {
  const std::size_t nv = f.num_vars();
  if (plane_dim < 1 || plane_dim > nv) throw DimensionMismatch("plane dimension must be between 1 and the variable count");
  if (f.constant_term() != 0) throw ConstantTermPresent();
  const unsigned total = std::max(cfg.escalation_samples, cfg.num_samples);

  std::vector<Colength> results(cfg.num_samples);
  parallel::parallel_for(cfg.num_samples, [&](std::size_t i) {
    results[i] = sample_section(f, plane_dim, cfg, static_cast<unsigned>(i));
  });

  bool agree = true;
  for (const Colength& c : results) {
    if (!c.finite() || c.value != results.front().value) {
      agree = false;
      break;
    }
  }
  if (agree) return results.front().value;

  results.resize(total);
  parallel::parallel_for(total - cfg.num_samples, [&](std::size_t i) {
    results[cfg.num_samples + i] = sample_section(f, plane_dim, cfg, static_cast<unsigned>(cfg.num_samples + i));
  });

  bool have = false;
  unsigned long long best = 0;
  for (const Colength& c : results) {
    if (c.finite() && (!have || c.value < best)) {
      have = true;
      best = c.value;
    }
  }
  if (!have) throw AllSamplesInconclusive();
  return best;
}

MilnorSequence milnor_sequence(const Polynomial& f, const SectionSamplingConfig& cfg) {
  Colength mu = milnor_number(f);
  if (mu.status == Colength::Status::NonIsolated) throw NonIsolatedInput();
  if (mu.status == Colength::Status::Inconclusive) throw InconclusiveResult(mu.degree_cap);

  const std::size_t nv = f.num_vars();
  MilnorSequence seq;
  seq.values.assign(nv + 1, 0);
  seq.values[0] = mu.value;
  seq.values[nv] = 1;
  if (mu.value == 0) return seq;  // smooth: (0, ..., 0, 1)

  if (nv >= 2) seq.values[nv - 1] = multiplicity(f) - 1;
  for (std::size_t j = 1; j + 2 <= nv; ++j) {
    seq.values[j] = generic_section_milnor(f, nv - j, cfg);
  }
  return seq;
}

}  // namespace germ
