#include "germ/classification.hpp"

#include <algorithm>
#include <utility>

#include "germ/errors.hpp"
#include "germ/parallel.hpp"

namespace germ {
namespace {

constexpr std::uint64_t kSliceStream = 0x736c6963;     // hyperplane slice matrices
constexpr std::uint64_t kSliceCfgStream = 0x736c6366;  // per-slice nested sampling seeds

// Symmetric matrix of the quadratic part (B_ii = coeff of x_i^2, B_ij = half
// the coeff of x_i x_j); its rank equals the Hessian rank.
std::vector<std::vector<Rational>> quadratic_form(const Polynomial& f) {
  const std::size_t nv = f.num_vars();
  std::vector<std::vector<Rational>> B(nv, std::vector<Rational>(nv));
  for (const auto& [m, c] : f.homogeneous_part(2).terms()) {
    std::size_t i = nv, j = nv;
    for (std::size_t v = 0; v < nv; ++v) {
      if (m.e[v] == 2) i = j = v;
      if (m.e[v] == 1) (i == nv ? i : j) = v;
    }
    if (i == j) {
      B[i][i] = c;
    } else {
      Rational half = c / 2;
      B[i][j] = half;
      B[j][i] = half;
    }
  }
  return B;
}

unsigned matrix_rank(std::vector<std::vector<Rational>> M) {
  const std::size_t n = M.size();
  unsigned rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && M[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(M[row], M[p]);
    Rational inv = 1 / M[row][col];
    for (std::size_t j = col; j < n; ++j) M[row][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || M[r][col] == 0) continue;
      Rational factor = M[r][col];
      for (std::size_t j = col; j < n; ++j) M[r][j] -= factor * M[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

Polynomial variable_poly(std::size_t nv, std::size_t i) {
  Polynomial x(nv);
  Monomial m = Monomial::one(nv);
  m.e[i] = 1;
  x.add_term(m, 1);
  return x;
}

MilnorSequence table_sequence(SingularityClass::Kind kind, unsigned k) {
  const unsigned long long second = (kind == SingularityClass::Kind::A) ? 1 : 2;
  return MilnorSequence{{k, second, 1, 1}};
}

SingularityClass not_du_val(unsigned long long mu, MilnorSequence seq, unsigned corank) {
  SingularityClass out;
  out.kind = SingularityClass::Kind::NotDuVal;
  out.milnor = mu;
  out.sequence = std::move(seq);
  out.corank = corank;
  return out;
}

}  // namespace

std::string SingularityClass::name() const {
  switch (kind) {
    case Kind::Smooth: return "Smooth";
    case Kind::A: return "A_" + std::to_string(k);
    case Kind::D: return "D_" + std::to_string(k);
    case Kind::E: return "E_" + std::to_string(k);
    case Kind::CA: return "cA_" + std::to_string(k);
    case Kind::CD: return "cD_" + std::to_string(k);
    case Kind::CE: return "cE_" + std::to_string(k);
    case Kind::NotDuVal: return "NotDuVal";
    case Kind::NotCDV: return "NotCDV";
  }
  return "NotDuVal";
}

unsigned hessian_corank(const Polynomial& f) {
  if (f.constant_term() != 0) throw ConstantTermPresent();
  if (!f.is_zero() && f.order().value() == 1) throw OrderOne();
  const std::size_t nv = f.num_vars();
  return static_cast<unsigned>(nv) - matrix_rank(quadratic_form(f));
}

Polynomial splitting_reduce(const Polynomial& f, unsigned jet_degree) {
  if (jet_degree < 3) throw std::invalid_argument("jet degree must be at least 3");
  if (f.constant_term() != 0) throw ConstantTermPresent();
  if (!f.is_zero() && f.order().value() == 1) throw OrderOne();
  const std::size_t nv = f.num_vars();
  Polynomial g = f.truncated(jet_degree);

  // Stage 1: diagonalize the quadratic part by congruence.  Each pivot sweep
  // removes its variable from every other quadratic term for good; when no
  // variable carries a square but mixed terms remain, a shear manufactures
  // a square first.
  const unsigned stage1_bound = static_cast<unsigned>(4 * nv + 8);
  for (unsigned pass = 0;; ++pass) {
    if (pass > stage1_bound) throw SplitFailure();
    Polynomial q = g.homogeneous_part(2);
    std::size_t pi = nv, pj = nv;  // first mixed pair
    for (const auto& [m, c] : q.terms()) {
      std::size_t i = nv, j = nv;
      for (std::size_t v = 0; v < nv; ++v) {
        if (m.e[v] == 1) (i == nv ? i : j) = v;
      }
      if (j != nv) {
        pi = i;
        pj = j;
        break;
      }
    }
    if (pj == nv) break;  // diagonal

    auto square_coeff = [&](std::size_t v) {
      Monomial m = Monomial::one(nv);
      m.e[v] = 2;
      return q.coefficient(m);
    };
    std::size_t pivot = nv;
    if (square_coeff(pi) != 0) {
      pivot = pi;
    } else if (square_coeff(pj) != 0) {
      pivot = pj;
    }
    if (pivot == nv) {
      // x_pi <- x_pi + x_pj turns the mixed term into a square at x_pj.
      g = g.substitute_one(pi, variable_poly(nv, pi) + variable_poly(nv, pj), jet_degree);
      continue;
    }
    const Rational d = square_coeff(pivot);
    Polynomial replacement = variable_poly(nv, pivot);
    for (std::size_t v = 0; v < nv; ++v) {
      if (v == pivot) continue;
      Monomial m = Monomial::one(nv);
      m.e[pivot] = 1;
      m.e[v] = 1;
      Rational c = q.coefficient(m);
      if (c != 0) replacement = replacement - variable_poly(nv, v).scaled(c / (2 * d));
    }
    g = g.substitute_one(pivot, replacement, jet_degree);
  }

  // Rank and kernel variables of the now-diagonal quadratic part.
  std::vector<Rational> diag(nv);
  std::vector<bool> is_rank(nv, false);
  {
    Polynomial q = g.homogeneous_part(2);
    for (std::size_t v = 0; v < nv; ++v) {
      Monomial m = Monomial::one(nv);
      m.e[v] = 2;
      diag[v] = q.coefficient(m);
      is_rank[v] = diag[v] != 0;
    }
  }

  // Stage 2: complete squares against higher-order terms touching a rank
  // variable, lowest degree first.  Every step trades the chosen term for
  // terms of strictly higher degree, so the minimal such degree climbs to
  // the jet bound.
  const unsigned long long stage2_bound = 200000;
  for (unsigned long long pass = 0;; ++pass) {
    if (pass > stage2_bound) throw SplitFailure();
    const Monomial* target = nullptr;
    Rational coeff;
    for (const auto& [m, c] : g.terms()) {  // ascending degree: first hit is minimal
      if (m.degree() < 3) continue;
      bool touches_rank = false;
      for (std::size_t v = 0; v < nv && !touches_rank; ++v) {
        if (m.e[v] > 0 && is_rank[v]) touches_rank = true;
      }
      if (touches_rank) {
        target = &m;
        coeff = c;
        break;
      }
    }
    if (target == nullptr) break;
    std::size_t pivot = nv;
    for (std::size_t v = 0; v < nv; ++v) {
      if (target->e[v] > 0 && is_rank[v]) {
        pivot = v;
        break;
      }
    }
    Monomial rest = *target;
    rest.e[pivot] -= 1;
    Polynomial correction(nv);
    correction.add_term(rest, coeff / (2 * diag[pivot]));
    g = g.substitute_one(pivot, variable_poly(nv, pivot) - correction, jet_degree);
  }

  // Residual: everything in the kernel variables, re-indexed.
  std::vector<std::size_t> kernel;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!is_rank[v]) kernel.push_back(v);
  }
  Polynomial residual(kernel.size());
  for (const auto& [m, c] : g.terms()) {
    if (m.degree() == 2) {
      bool diag_square = false;
      for (std::size_t v = 0; v < nv; ++v) {
        if (m.e[v] == 2 && is_rank[v]) diag_square = true;
      }
      if (diag_square) continue;
    }
    Monomial mapped = Monomial::one(kernel.size());
    bool pure_kernel = true;
    for (std::size_t v = 0; v < nv && pure_kernel; ++v) {
      if (m.e[v] == 0) continue;
      if (is_rank[v]) pure_kernel = false;
    }
    if (!pure_kernel) throw SplitFailure();
    for (std::size_t ki = 0; ki < kernel.size(); ++ki) mapped.e[ki] = m.e[kernel[ki]];
    residual.add_term(mapped, c);
  }
  return residual;
}

BinaryCubicShape binary_cubic_shape(const Polynomial& f) {
  if (f.num_vars() != 2) throw DimensionMismatch("binary cubic shape expects two variables");
  Polynomial cubic = f.homogeneous_part(3);
  if (cubic.is_zero()) return BinaryCubicShape::Zero;
  auto coeff = [&](unsigned i, unsigned j) {
    Monomial m = Monomial::one(2);
    m.e[0] = i;
    m.e[1] = j;
    return cubic.coefficient(m);
  };
  const Rational a = coeff(3, 0), b = coeff(2, 1), c = coeff(1, 2), d = coeff(0, 3);
  const Rational disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                        27 * a * a * d * d;
  if (disc != 0) return BinaryCubicShape::ThreeDistinctFactors;
  // Hessian of the cubic: (12ac-4b^2) x^2 + (36ad-4bc) xy + (12bd-4c^2) y^2.
  const bool hessian_zero = (12 * a * c - 4 * b * b == 0) && (36 * a * d - 4 * b * c == 0) &&
                            (12 * b * d - 4 * c * c == 0);
  return hessian_zero ? BinaryCubicShape::TripleFactor : BinaryCubicShape::DoubleFactor;
}

SingularityClass classify_du_val(const Polynomial& f, const SectionSamplingConfig& cfg) {
  if (f.num_vars() != 3) throw DimensionMismatch("Du Val classification expects three variables");
  MilnorSequence seq = milnor_sequence(f, cfg);
  const unsigned long long mu = seq.mu();

  SingularityClass out;
  out.milnor = mu;
  out.sequence = seq;
  if (mu == 0) {
    out.kind = SingularityClass::Kind::Smooth;
    out.corank = 0;
    return out;
  }
  const unsigned corank = hessian_corank(f);
  out.corank = corank;

  if (corank == 0) {
    if (mu != 1) return not_du_val(mu, std::move(seq), corank);
    out.kind = SingularityClass::Kind::A;
    out.k = 1;
    return out;
  }
  if (corank == 1) {
    if (seq != table_sequence(SingularityClass::Kind::A, static_cast<unsigned>(mu))) {
      return not_du_val(mu, std::move(seq), corank);
    }
    out.kind = SingularityClass::Kind::A;
    out.k = static_cast<unsigned>(mu);
    return out;
  }
  if (corank == 2) {
    Polynomial residual = splitting_reduce(f, static_cast<unsigned>(mu) + 2);
    BinaryCubicShape shape = binary_cubic_shape(residual);
    SingularityClass::Kind kind;
    switch (shape) {
      case BinaryCubicShape::ThreeDistinctFactors:
        if (mu != 4) return not_du_val(mu, std::move(seq), corank);
        kind = SingularityClass::Kind::D;
        break;
      case BinaryCubicShape::DoubleFactor:
        if (mu < 5) return not_du_val(mu, std::move(seq), corank);
        kind = SingularityClass::Kind::D;
        break;
      case BinaryCubicShape::TripleFactor:
        if (mu < 6 || mu > 8) return not_du_val(mu, std::move(seq), corank);
        kind = SingularityClass::Kind::E;
        break;
      case BinaryCubicShape::Zero:
      default:
        return not_du_val(mu, std::move(seq), corank);
    }
    if (seq != table_sequence(kind, static_cast<unsigned>(mu))) {
      return not_du_val(mu, std::move(seq), corank);
    }
    out.kind = kind;
    out.k = static_cast<unsigned>(mu);
    return out;
  }
  return not_du_val(mu, std::move(seq), corank);
}

SingularityClass classify_cdv(const Polynomial& f, const SectionSamplingConfig& cfg) {
  if (f.num_vars() != 4) throw DimensionMismatch("compound Du Val classification expects four variables");
  Colength mu_col = milnor_number(f);
  if (mu_col.status == Colength::Status::NonIsolated) throw NonIsolatedInput();
  if (mu_col.status == Colength::Status::Inconclusive) throw InconclusiveResult(mu_col.degree_cap);
  const unsigned long long mu = mu_col.value;

  if (mu == 0) {
    SingularityClass out;
    out.kind = SingularityClass::Kind::Smooth;
    out.milnor = 0;
    out.sequence = MilnorSequence{{0, 0, 0, 0, 1}};
    out.corank = 0;
    return out;
  }
  const unsigned corank = hessian_corank(f);

  struct Slice {
    bool valid = false;
    SingularityClass cls;
  };
  auto classify_slice = [&](unsigned idx) {
    Slice s;
    std::mt19937_64 rng(parallel::derive_seed(cfg.seed, {kSliceStream, idx}));
    LinearSubstitution plane = random_section_matrix(4, 3, rng, cfg.coefficient_height);
    Polynomial g = primitive_scale(substitute_linear(f, plane));
    SectionSamplingConfig nested = cfg;
    nested.seed = parallel::derive_seed(cfg.seed, {kSliceCfgStream, idx});
    try {
      s.cls = classify_du_val(g, nested);
      s.valid = true;
    } catch (const NonIsolatedInput&) {
    } catch (const InconclusiveResult&) {
    } catch (const AllSamplesInconclusive&) {
    }
    return s;
  };

  const unsigned total = std::max(cfg.escalation_samples, cfg.num_samples);
  std::vector<Slice> slices(cfg.num_samples);
  parallel::parallel_for(cfg.num_samples,
                         [&](std::size_t i) { slices[i] = classify_slice(static_cast<unsigned>(i)); });

  bool agree = true;
  for (const Slice& s : slices) {
    if (!s.valid || s.cls != slices.front().cls) {
      agree = false;
      break;
    }
  }
  SingularityClass surface;
  if (agree) {
    surface = slices.front().cls;
  } else {
    slices.resize(total);
    parallel::parallel_for(total - cfg.num_samples, [&](std::size_t i) {
      slices[cfg.num_samples + i] = classify_slice(static_cast<unsigned>(cfg.num_samples + i));
    });
    // The generic slice realizes the minimal Milnor number; a type clash at
    // that minimum is reported, not resolved by vote.
    const Slice* best = nullptr;
    for (const Slice& s : slices) {
      if (s.valid && (best == nullptr || s.cls.milnor < best->cls.milnor)) best = &s;
    }
    if (best == nullptr) throw AllSamplesInconclusive();
    for (const Slice& s : slices) {
      if (s.valid && s.cls.milnor == best->cls.milnor && s.cls != best->cls) throw SliceDisagreement();
    }
    surface = best->cls;
  }

  SingularityClass out;
  out.milnor = mu;
  out.corank = corank;
  switch (surface.kind) {
    case SingularityClass::Kind::A: out.kind = SingularityClass::Kind::CA; break;
    case SingularityClass::Kind::D: out.kind = SingularityClass::Kind::CD; break;
    case SingularityClass::Kind::E: out.kind = SingularityClass::Kind::CE; break;
    default:
      out.kind = SingularityClass::Kind::NotCDV;
      out.sequence = milnor_sequence(f, cfg);
      return out;
  }
  out.k = surface.k;
  MilnorSequence tail = table_sequence(surface.kind, surface.k);
  out.sequence.values.assign(1, mu);
  out.sequence.values.insert(out.sequence.values.end(), tail.values.begin(), tail.values.end());
  return out;
}

}  // namespace germ
