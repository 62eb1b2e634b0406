#include "menv/center.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <tuple>

#include "menv/operators.hpp"
#include "menv/product.hpp"

namespace menv {

namespace {

const std::array<CompositeOp, 5>& adjoint_ops() {
  static const std::array<CompositeOp, 5> ops = {adjoint_op(Gen::a), adjoint_op(Gen::b), adjoint_op(Gen::c),
                                                 adjoint_op(Gen::d), adjoint_op(Gen::e)};
  return ops;
}

Element specialize(const Element& x, const GammaMode& mode) {
  return mode.is_symbolic() ? x : gamma_eval(x, mode.value());
}

using Grade = std::tuple<unsigned, unsigned, unsigned>;

Grade grade_of(const Monomial& x) {
  return {x[Gen::b] + x[Gen::d], x[Gen::c] + x[Gen::d], x[Gen::e]};
}

// Row key: which generator, which output monomial, which power of gamma.
using RowKey = std::tuple<unsigned, Monomial, std::size_t>;

// Null space of the matrix whose columns are given sparsely.
std::vector<std::vector<Rational>> null_space(const std::vector<std::map<RowKey, Rational>>& columns) {
  std::map<RowKey, std::size_t> row_index;
  for (const auto& col : columns)
    for (const auto& entry : col) row_index.try_emplace(entry.first, row_index.size());
  const std::size_t rows = row_index.size(), cols = columns.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [key, value] : columns[c]) m[row_index[key]][c] = value;

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Rational inv = 1 / m[rank][c];
    for (std::size_t t = c; t < cols; ++t) m[rank][t] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t t = c; t < cols; ++t) m[r][t] -= f * m[rank][t];
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Element ad_action(Gen s, const Element& x) { return adjoint_ops()[index(s)].apply(x); }

bool is_central(const Element& x, const GammaMode& mode) {
  for (Gen s : kGenerators)
    if (!specialize(ad_action(s, x), mode).is_zero()) return false;
  return true;
}

std::optional<Monomial> center_generator(const Rational& gamma0) {
  if (gamma0 == 0) throw std::domain_error("gamma must be nonzero");
  Rational q = gamma0;
  q.canonicalize();
  // [d^l e^m, a] = -(l + m gamma) d^l e^m, so a generator needs gamma = -l/m.
  if (q > 0) return std::nullopt;
  const Integer l = -q.get_num();
  const Integer& m = q.get_den();
  if (!l.fits_uint_p() || !m.fits_uint_p()) throw std::overflow_error("center generator exponent too large");
  return Monomial(0, 0, 0, static_cast<unsigned>(l.get_ui()), static_cast<unsigned>(m.get_ui()));
}

std::vector<Element> center_search(unsigned max_degree, const GammaMode& mode, const CenterSearchOptions& options) {
  std::map<Grade, std::vector<Monomial>> blocks;
  for (const Monomial& x : monomials_up_to_degree(max_degree))
    if (!options.a_free_only || x[Gen::a] == 0) blocks[grade_of(x)].push_back(x);

  std::vector<Element> out;
  for (const auto& [grade, monos] : blocks) {
    std::vector<std::map<RowKey, Rational>> columns;
    columns.reserve(monos.size());
    for (const Monomial& x : monos) {
      std::map<RowKey, Rational> col;
      for (Gen s : kGenerators) {
        const Element image = specialize(ad_action(s, Element(x)), mode);
        for (const auto& [mono, coeff] : image.terms())
          for (std::size_t t = 0; t < coeff.coeffs().size(); ++t)
            if (coeff.coeffs()[t] != 0) col.emplace(RowKey{index(s), mono, t}, coeff.coeffs()[t]);
      }
      columns.push_back(std::move(col));
    }
    for (const auto& v : null_space(columns)) {
      Element n;
      for (std::size_t c = 0; c < monos.size(); ++c) n.add(monos[c], GammaCoeff(v[c]));
      const Rational lead = n.terms().rbegin()->second.coeff(0);
      out.push_back(GammaCoeff(1 / lead) * n);
    }
  }
  std::sort(out.begin(), out.end(), [](const Element& x, const Element& y) {
    return x.terms().rbegin()->first < y.terms().rbegin()->first;
  });
  return out;
}

}  // namespace menv
