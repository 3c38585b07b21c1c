#include "nilfibre/invariant.hpp"

#include <algorithm>

namespace nilfibre {

PolyMatrix generic_matrix(const RootSet& basis, int n, bool with_deform) {
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (const Root& r : basis) {
    if (r.i < 1 || r.j > n || r.i >= r.j) throw std::invalid_argument("basis root outside the upper triangle");
    m[r.i - 1][r.j - 1] = Polynomial::var(Variable::coord(r.i, r.j));
  }
  if (with_deform)
    for (int d = 0; d < n; ++d) m[d][d] = Polynomial::var(Variable::deform());
  return m;
}

Polynomial deformed_minor(const IndexedMinorSpec& spec, const RootSet& basis) {
  if (spec.deleted_rows.size() != spec.deleted_cols.size())
    throw std::invalid_argument("minor must delete as many rows as columns");
  std::vector<int> rows, cols;
  for (int x = 1; x <= spec.n; ++x) {
    if (!spec.deleted_rows.count(x)) rows.push_back(x);
    if (!spec.deleted_cols.count(x)) cols.push_back(x);
  }
  const Polynomial c = Polynomial::var(Variable::deform());
  PolyMatrix m(rows.size(), std::vector<Polynomial>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const int i = rows[a], j = cols[b];
      if (i == j)
        m[a][b] = c;
      else if (i < j && basis.count({i, j}))
        m[a][b] = Polynomial::var(Variable::coord(i, j));
    }
  return det_symbolic(m);
}

BSInvariant bs_invariant(const StandardTableau& t, const NeighbouringPair& p, const RootSet& basis) {
  IndexedMinorSpec spec;
  spec.n = t.n();
  for (int v : t.column(p.right)) spec.deleted_rows.insert(v);
  for (int v : t.column(p.left)) spec.deleted_cols.insert(v);
  const Polynomial det = deformed_minor(spec, basis);
  if (det.is_zero()) throw DegenerateMinor("degenerate minor for " + label(p));
  LowestCoefficient low = lowest_c_coefficient(det);
  BSInvariant inv;
  inv.pair = p;
  inv.poly = sign_normalized(low.coeff);
  inv.degree = inv.poly.degree();
  inv.c_power = low.power;
  return inv;
}

std::vector<BSInvariant> all_invariants(const Composition& comp) {
  const StandardTableau t(comp);
  const RootSet basis = m_basis(comp);
  std::vector<BSInvariant> out;
  for (const auto& p : neighbouring_pairs(comp)) out.push_back(bs_invariant(t, p, basis));
  return out;
}

Polynomial factor_invariant(const std::vector<int>& left, const std::vector<int>& right,
                            const RootSet& basis) {
  if (left.size() != right.size()) throw std::invalid_argument("pseudo columns differ in height");
  if (left.empty()) return Polynomial(1);
  const int lo = *std::min_element(left.begin(), left.end());
  const int hi = *std::max_element(right.begin(), right.end());
  IndexedMinorSpec spec;
  spec.n = hi;
  for (int x = 1; x < lo; ++x) {
    spec.deleted_rows.insert(x);
    spec.deleted_cols.insert(x);
  }
  spec.deleted_rows.insert(right.begin(), right.end());
  spec.deleted_cols.insert(left.begin(), left.end());
  const Polynomial det = deformed_minor(spec, basis);
  if (det.is_zero()) return Polynomial();
  return sign_normalized(lowest_c_coefficient(det).coeff);
}

Polynomial factor_invariant(const PseudoColumn& left, const PseudoColumn& right,
                            const RootSet& basis) {
  return factor_invariant(left.values, right.values, basis);
}

Polynomial restrict_invariant(const BSInvariant& inv, const RootSet& excluded) {
  std::set<Variable> kill;
  for (const Root& r : excluded) kill.insert(Variable::coord(r.i, r.j));
  return substitute_zero(inv.poly, kill);
}

}  // namespace nilfibre
