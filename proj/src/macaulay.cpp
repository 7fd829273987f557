#include "germ/macaulay.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "germ/errors.hpp"

namespace germ {
namespace {

// Sparse row over the column space, sorted by ascending column index.  With
// columns enumerated in ascending term order, the last entry is the row's
// largest monomial; we pivot on the first entry (the smallest), which works
// equally well and keeps the merge loops forward-only.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// r -= c * pivot, where pivot is monic in its first column.
SparseRow subtract_scaled(const SparseRow& r, const Rational& c, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(r.size() + pivot.size());
  std::size_t ia = 0, ib = 0;
  while (ia < r.size() || ib < pivot.size()) {
    if (ib >= pivot.size() || (ia < r.size() && r[ia].first < pivot[ib].first)) {
      out.push_back(r[ia]);
      ++ia;
    } else if (ia >= r.size() || pivot[ib].first < r[ia].first) {
      out.emplace_back(pivot[ib].first, -(c * pivot[ib].second));
      ++ib;
    } else {
      Rational v = r[ia].second - c * pivot[ib].second;
      if (v != 0) out.emplace_back(r[ia].first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::vector<Monomial> monomials_below_degree(std::size_t nv, unsigned d) {
  std::vector<Monomial> out;
  Monomial m = Monomial::one(nv);
  std::vector<unsigned> v(nv, 0);
  unsigned deg = 0;
  for (;;) {
    if (deg < d) {
      for (std::size_t i = 0; i < nv; ++i) m.e[i] = v[i];
      out.push_back(m);
    }
    // Odometer with degree pruning: once the degree budget is spent at a
    // position, carry immediately instead of walking the rest of the box.
    std::size_t pos = 0;
    for (;;) {
      if (pos == nv) return out;
      ++v[pos];
      ++deg;
      if (deg < d) break;
      deg -= v[pos];
      v[pos] = 0;
      ++pos;
    }
  }
}

unsigned long long truncated_quotient_dim(const std::vector<Polynomial>& gens, std::size_t nv, unsigned d) {
  std::vector<Monomial> cols = monomials_below_degree(nv, d);
  std::map<Monomial, std::size_t, TermOrder> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);

  std::vector<SparseRow> pivot_rows;
  std::vector<long> pivot_of_col(cols.size(), -1);
  unsigned long long rank = 0;

  for (const Polynomial& g : gens) {
    unsigned ord = g.order().value();
    if (ord >= d) continue;
    for (const Monomial& shift : monomials_below_degree(nv, d - ord)) {
      SparseRow row;
      row.reserve(g.term_count());
      for (const auto& [m, c] : g.terms()) {
        Monomial prod = m * shift;
        if (prod.degree() >= d) continue;
        row.emplace_back(index.at(prod), c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!row.empty()) {
        long p = pivot_of_col[row.front().first];
        if (p < 0) {
          Rational inv = 1 / row.front().second;
          for (auto& [idx, c] : row) c *= inv;
          pivot_of_col[row.front().first] = static_cast<long>(pivot_rows.size());
          pivot_rows.push_back(std::move(row));
          ++rank;
          break;
        }
        row = subtract_scaled(row, row.front().second, pivot_rows[static_cast<std::size_t>(p)]);
      }
    }
  }
  return cols.size() - rank;
}

}  // namespace

Colength macaulay_colength(const std::vector<Polynomial>& generators, unsigned max_truncation) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const Polynomial& g : generators) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) throw EmptyGenerators();
  const std::size_t nv = gens.front().num_vars();
  for (const Polynomial& g : gens) {
    if (g.num_vars() != nv) throw DimensionMismatch("generators live in different variable counts");
  }

  Colength out;
  out.degree_cap = max_truncation;
  unsigned long long prev = 0;
  bool have_prev = false;
  for (unsigned d = 1; d <= max_truncation; ++d) {
    unsigned long long dim = truncated_quotient_dim(gens, nv, d);
    if (have_prev && dim == prev) {
      out.status = Colength::Status::Finite;
      out.value = dim;
      return out;
    }
    prev = dim;
    have_prev = true;
  }
  out.status = Colength::Status::Inconclusive;
  return out;
}

}  // namespace germ
