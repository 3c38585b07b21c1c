#include "nilfibre/orbit.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace nilfibre {

int exact_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Integer& p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Integer f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        Integer v = p * rows[r][c] - f * rows[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        rows[r][c] = std::move(v);
      }
    }
    prev_pivot = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

int orbit_closure_dim(const Composition& comp, const RootSet& u_basis, const OrbitOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const int n = comp.n();
  const RootSet basis = m_basis(comp);
  std::map<Root, int> index;
  for (const Root& r : basis) index.emplace(r, static_cast<int>(index.size()));
  for (const Root& r : u_basis)
    if (!index.count(r)) throw std::invalid_argument("u is not inside m");
  const std::size_t dim = basis.size();
  if (dim == 0) return 0;

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> dist(-opt.bound, opt.bound);
  int best = 0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::vector<std::vector<long>> x(n + 1, std::vector<long>(n + 1, 0));
    for (const Root& r : u_basis) x[r.i][r.j] = dist(rng);

    std::vector<std::vector<Integer>> rows;
    // [E_ab, x] = E_ab x - x E_ab, projected onto the m coordinates.
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        std::vector<Integer> v(dim, 0);
        bool nonzero = false;
        for (int j = 1; j <= n; ++j) {
          auto it = index.find({a, j});
          if (it != index.end() && x[b][j] != 0) {
            v[it->second] += x[b][j];
            nonzero = true;
          }
        }
        for (int i = 1; i <= n; ++i) {
          auto it = index.find({i, b});
          if (it != index.end() && x[i][a] != 0) {
            v[it->second] -= x[i][a];
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(v));
      }
    for (const Root& r : u_basis) {
      std::vector<Integer> v(dim, 0);
      v[index.at(r)] = 1;
      rows.push_back(std::move(v));
    }
    best = std::max(best, exact_rank(std::move(rows)));
  }
  return best;
}

int orbit_codim(const Composition& comp, const RootSet& u_basis, const OrbitOptions& opt) {
  return static_cast<int>(m_basis(comp).size()) - orbit_closure_dim(comp, u_basis, opt);
}

}  // namespace nilfibre
