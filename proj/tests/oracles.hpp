#ifndef NILFIBRE_TESTS_ORACLES_HPP
#define NILFIBRE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "nilfibre/shape.hpp"
#include "nilfibre/symalg.hpp"

namespace oracle {

using nilfibre::Integer;
using nilfibre::Monomial;
using nilfibre::Polynomial;
using nilfibre::PolyMatrix;
using nilfibre::Variable;

inline Polynomial x(int i, int j) { return Polynomial::var(Variable::coord(i, j)); }
inline Polynomial c() { return Polynomial::var(Variable::deform()); }

// Sum over all coefficient * product of listed coordinates.
struct TermSpec {
  long coeff;
  std::vector<std::pair<int, int>> vars;
};
inline Polynomial poly(std::initializer_list<TermSpec> terms) {
  Polynomial out;
  for (const auto& t : terms) {
    Polynomial m(t.coeff);
    for (auto [i, j] : t.vars) m *= x(i, j);
    out += m;
  }
  return out;
}

// Leibniz expansion over every permutation.
inline Polynomial leibniz_det(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out;
  if (n == 0) return Polynomial(1);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    Polynomial term(inversions % 2 ? -1L : 1L);
    for (int r = 0; r < n && !term.is_zero(); ++r) term *= m[r][perm[r]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Polynomial random_poly(std::mt19937_64& rng, int max_terms, int max_index, bool with_c) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coeff(-5, 5), idx(1, max_index),
      deg(0, 3), cexp(0, 2);
  Polynomial out;
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Polynomial m(static_cast<long>(coeff(rng)));
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      m *= x(i, j);
    }
    if (with_c)
      for (int e = cexp(rng); e > 0; --e) m *= c();
    out += m;
  }
  return out;
}

// Exact rank over a prime field; agrees with the rational rank for generic data.
inline int rank_mod_p(std::vector<std::vector<long long>> rows) {
  const long long p = 2305843009213693951LL;  // 2^61 - 1
  auto mulmod = [p](long long a, long long b) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
  };
  auto powmod = [&](long long a, long long e) {
    long long r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (auto& r : rows)
    for (auto& v : r) v = ((v % p) + p) % p;
  int rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols; ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const long long inv = powmod(rows[rank][col], p - 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      const long long f = mulmod(rows[r][col], inv);
      for (std::size_t k = 0; k < ncols; ++k)
        rows[r][k] = ((rows[r][k] - mulmod(f, rows[rank][k])) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<int>> all_compositions(int n) {
  std::vector<std::vector<int>> out;
  // Bit b of mask set means a cut after position b+1.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask >> b & 1u) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(parts);
  }
  return out;
}

}  // namespace oracle

#endif  // NILFIBRE_TESTS_ORACLES_HPP
