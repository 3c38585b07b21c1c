#ifndef NILFIBRE_ORBIT_HPP
#define NILFIBRE_ORBIT_HPP

#include <cstdint>
#include <vector>

#include "nilfibre/shape.hpp"
#include "nilfibre/symalg.hpp"

namespace nilfibre {

struct OrbitOptions {
  int trials = 5;
  std::uint64_t seed = 20240601;
  long bound = 10000;
};

// Exact rank of an integer matrix (fraction-free elimination).
int exact_rank(std::vector<std::vector<Integer>> rows);

// Max over trials of rank([b, x] + u) inside m for random x in u.
int orbit_closure_dim(const Composition& comp, const RootSet& u_basis, const OrbitOptions& opt = {});

// dim m minus orbit_closure_dim.
int orbit_codim(const Composition& comp, const RootSet& u_basis, const OrbitOptions& opt = {});

}  // namespace nilfibre

#endif  // NILFIBRE_ORBIT_HPP
