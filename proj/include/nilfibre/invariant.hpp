#ifndef NILFIBRE_INVARIANT_HPP
#define NILFIBRE_INVARIANT_HPP

#include <set>
#include <stdexcept>
#include <vector>

#include "nilfibre/reverse.hpp"
#include "nilfibre/shape.hpp"
#include "nilfibre/symalg.hpp"

namespace nilfibre {

// Entry (i,j) is x_{i,j} for (i,j) in basis, c on the diagonal when
// with_deform, zero elsewhere. Entry (i,j) is stored at [i-1][j-1].
PolyMatrix generic_matrix(const RootSet& basis, int n, bool with_deform);

struct IndexedMinorSpec {
  int n = 0;
  std::set<int> deleted_rows;
  std::set<int> deleted_cols;
};

class DegenerateMinor : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Determinant of c*Id + X with the given rows and columns removed.
Polynomial deformed_minor(const IndexedMinorSpec& spec, const RootSet& basis);

struct BSInvariant {
  NeighbouringPair pair;
  Polynomial poly;
  int degree = 0;
  int c_power = 0;
};

// Throws DegenerateMinor when the minor vanishes on the basis.
BSInvariant bs_invariant(const StandardTableau& t, const NeighbouringPair& p, const RootSet& basis);

// Invariants of every neighbouring pair on the full m basis, pair order.
std::vector<BSInvariant> all_invariants(const Composition& comp);

// Minor of c*Id + X over the values min(left)..max(right), deleting rows
// indexed by right and columns indexed by left; lowest c coefficient, sign
// normalized. Zero when the minor vanishes; 1 for empty columns.
Polynomial factor_invariant(const std::vector<int>& left, const std::vector<int>& right,
                            const RootSet& basis);
Polynomial factor_invariant(const PseudoColumn& left, const PseudoColumn& right,
                            const RootSet& basis);

Polynomial restrict_invariant(const BSInvariant& inv, const RootSet& excluded);

}  // namespace nilfibre

#endif  // NILFIBRE_INVARIANT_HPP
