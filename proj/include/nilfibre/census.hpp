#ifndef NILFIBRE_CENSUS_HPP
#define NILFIBRE_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilfibre/invariant.hpp"
#include "nilfibre/orbit.hpp"
#include "nilfibre/reverse.hpp"
#include "nilfibre/shape.hpp"

namespace nilfibre {

struct ComponentRecord {
  Multiset red;
  RootSet excluded;
  RootSet u_basis;
  int codim = -1;  // -1 until the rank oracle has run
  ImplementationTrace witness;
  // Distinct excluded sets of other complete tableaux with the same Red Set.
  std::vector<RootSet> other_excluded;
};

struct Census {
  Composition composition;
  int g = 0;
  int dim_m = 0;
  std::vector<ComponentRecord> records;
  Multiset global_red;
  std::vector<std::string> findings;
  long states = 0;           // distinct (tableau, implemented set) states
  long complete_traces = 0;  // paths through the state graph reaching stage g+1
  long dead_ends = 0;        // paths stopping at a pair that cannot be implemented
  long complete_tableaux = 0;
};

class GuardExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  long limit = 1000000;
  bool parallel = true;
  bool compute_codim = false;
  OrbitOptions orbit;
};

// Memoized depth-first search over (tableau, implemented pairs), split over
// the first implementation step with OpenMP. Records come in order of first
// discovery, witnesses are the first path found. Throws GuardExceeded when
// the distinct state count or the complete trace count passes opt.limit.
Census enumerate_components(const Composition& comp, const EnumerationOptions& opt = {});

// Plain recursion over every complete sequence and every choice.
Census enumerate_components_serial(const Composition& comp, const EnumerationOptions& opt = {});

std::vector<ComponentRecord> enumerate_components(const Composition& comp, std::optional<long> limit);

struct Report {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  void merge(const Report& other);
};

Report verify_vanishing(const Composition& comp, const ComponentRecord& record);

// Throws std::domain_error when the pair restricts to zero at this stage.
Report verify_factorization(const ImplementationTrace& trace, std::size_t stage,
                            const NeighbouringPair& pair);

std::vector<int> stage_codims(const Composition& comp, const ImplementationTrace& trace,
                              const OrbitOptions& opt = {});

Report verify_krull_chain(const Composition& comp, const ImplementationTrace& trace,
                          const OrbitOptions& opt = {});

struct SubcolumnMove {
  int j = 0;  // source column
  int k = 0;  // number of boxes moved from the bottom of C_j
  int i = 0;  // destination column, i < j
};

struct SubcolumnResult {
  RootSet u_b;
  int predicted_codim = 0;
  ColoredTableau moved;
};

bool is_legal_move(const Composition& comp, const SubcolumnMove& mv);
std::vector<SubcolumnMove> legal_moves(const Composition& comp);
// Throws std::invalid_argument for an illegal move.
SubcolumnResult subcolumn_move(const Composition& comp, const SubcolumnMove& mv);
// Pairs whose invariant must vanish on u_b: C_a < C_j <= C_b, C_a <= C_i < C_b,
// and a moved box from row <= s lands below row s.
std::vector<NeighbouringPair> pairs_cut_by_move(const Composition& comp, const SubcolumnMove& mv);

Multiset global_red_multiset(const Composition& comp);

// True when every Red Set is a sub-multiset of the Global Red multiset.
Report check_red_subset(const Census& census);

bool is_submultiset(const Multiset& small, const Multiset& big);

}  // namespace nilfibre

#endif  // NILFIBRE_CENSUS_HPP
