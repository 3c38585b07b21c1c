#include "nilfibre/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace nilfibre {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "degree_law",    "multilinear",      "structure",      "enabling",
      "monotonicity",  "black_count",      "non_acquisition", "free_pairs",
      "vanishing",     "red_cardinality",  "factorization",  "codimension",
      "krull_chain",   "subcolumn_moves",  "subcolumn_vanishing", "red_subset"};
  return names;
}

bool VerificationSummary::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.report.ok(); });
}

const Check& VerificationSummary::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

namespace {

struct Key {
  ColoredTableau tab;
  std::uint32_t done = 0;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const { return k.tab.hash() * 31 + k.done; }
};

std::string stage_text(const std::vector<NeighbouringPair>& order) {
  std::string out = "after [";
  for (std::size_t x = 0; x < order.size(); ++x) out += (x ? "," : "") + label(order[x]);
  return out + "]";
}

bool subset_of(const RootSet& a, const RootSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

class StateSweep {
 public:
  StateSweep(const Composition& comp, const VerifyOptions& opt, std::map<std::string, Check>& checks)
      : comp_(comp), opt_(opt), checks_(checks), pairs_(neighbouring_pairs(comp)),
        invariants_(all_invariants(comp)), tableau_(comp), basis_(m_basis(comp)) {
    for (const auto& p : pairs_) degree_.push_back(static_cast<int>(left_rectangle_entries(tableau_, p).size()));
  }

  void run() {
    const ColoredTableau start = init(tableau_);
    trace_.stages.push_back(start);
    visit(start, 0);
  }

  long states() const { return static_cast<long>(seen_.size()); }
  long finals() const { return finals_; }
  long dead_ends() const { return dead_ends_; }

 private:
  Report& rep(const std::string& name) { return checks_.at(name).report; }

  void visit(const ColoredTableau& t, std::uint32_t done) {
    if (!seen_.insert({t, done}).second) return;
    const std::string where = stage_text(trace_.order);
    ++rep("structure").checked;
    if (auto err = t.structure_violation()) rep("structure").fail(*err + " " + where);

    const RootSet excluded = excluded_roots(t);
    const int implemented = std::popcount(done);
    const int g = static_cast<int>(pairs_.size());

    if (comp_.n() <= opt_.krull_max_n) {
      RootSet u;
      for (const Root& r : basis_)
        if (!excluded.count(r)) u.insert(r);
      ++rep("krull_chain").checked;
      const int codim = orbit_codim(comp_, u, opt_.orbit);
      if (codim != implemented)
        rep("krull_chain").fail("codimension " + std::to_string(codim) + " with " +
                                std::to_string(implemented) + " pairs implemented " + where);
    }

    for (int pi = 0; pi < g; ++pi) {
      if (done >> pi & 1u) continue;
      const NeighbouringPair& p = pairs_[pi];
      try {
        ++rep("structure").checked;
        if (!trapezium(t, p).right_boundary_black)
          rep("structure").fail("right boundary of " + label(p) + " holds a red entry " + where);
        ++rep("black_count").checked;
        const int bc = black_count(t, p);
        if (bc != degree_[pi])
          rep("black_count").fail(label(p) + " has " + std::to_string(bc) + " black boxes, expected " +
                                  std::to_string(degree_[pi]) + " " + where);
        ++rep("non_acquisition").checked;
        if (red_in_left_row(t, p)) rep("non_acquisition").fail(label(p) + " acquired a red entry " + where);
      } catch (const StructureViolation& e) {
        rep("black_count").fail(std::string(e.what()) + " " + where);
      }
      ++rep("free_pairs").checked;
      const Polynomial restricted = restrict_invariant(invariants_[pi], excluded);
      if (restricted.is_zero()) {
        rep("free_pairs").fail("invariant of " + label(p) + " vanishes before implementation " + where);
        continue;
      }
      try {
        ImplementationTrace single;
        single.stages.push_back(t);
        rep("factorization").merge(verify_factorization(single, 0, p));
      } catch (const std::exception& e) {
        rep("factorization").fail(label(p) + ": " + e.what() + " " + where);
      }
    }

    if (implemented == g) {
      ++finals_;
      ++rep("red_cardinality").checked;
      if (static_cast<int>(red_multiset(t).size()) != g)
        rep("red_cardinality").fail("Red Set of size " + std::to_string(red_multiset(t).size()) + " " + where);
      for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
        ++rep("vanishing").checked;
        const Polynomial r = restrict_invariant(invariants_[pi], excluded);
        if (!r.is_zero())
          rep("vanishing").fail("invariant of " + label(pairs_[pi]) + " survives " + where + ": " + to_text(r));
      }
      return;
    }

    for (int pi = 0; pi < g; ++pi) {
      if (done >> pi & 1u) continue;
      const NeighbouringPair& p = pairs_[pi];
      std::vector<ImplementationChoice> chs;
      ++rep("enabling").checked;
      try {
        chs = enumerate_choices(t, p);
      } catch (const NotImplementable&) {
        ++dead_ends_;
        continue;
      } catch (const EnablingViolation& e) {
        rep("enabling").fail(std::string(e.what()) + " " + where);
        continue;
      } catch (const StructureViolation& e) {
        rep("structure").fail(std::string(e.what()) + " " + where);
        continue;
      }
      for (const auto& ch : chs) {
        ColoredTableau next;
        try {
          next = implement_pair(t, p, ch);
        } catch (const StructureViolation& e) {
          rep("structure").fail(std::string(e.what()) + " " + where);
          continue;
        }
        ++rep("monotonicity").checked;
        if (!subset_of(excluded, excluded_roots(next)))
          rep("monotonicity").fail("excluded roots shrink implementing " + label(p) + " " + where);
        trace_.order.push_back(p);
        trace_.choices.push_back(ch);
        trace_.stages.push_back(next);
        visit(next, done | (std::uint32_t{1} << pi));
        trace_.order.pop_back();
        trace_.choices.pop_back();
        trace_.stages.pop_back();
      }
    }
  }

  const Composition& comp_;
  const VerifyOptions& opt_;
  std::map<std::string, Check>& checks_;
  std::vector<NeighbouringPair> pairs_;
  std::vector<BSInvariant> invariants_;
  StandardTableau tableau_;
  RootSet basis_;
  std::vector<int> degree_;
  ImplementationTrace trace_;
  std::unordered_set<Key, KeyHash> seen_;
  long finals_ = 0;
  long dead_ends_ = 0;
};

}  // namespace

VerificationSummary verify_composition(const Composition& comp, const VerifyOptions& opt) {
  std::map<std::string, Check> checks;
  for (const auto& name : check_names()) checks[name].name = name;
  auto rep = [&](const std::string& name) -> Report& { return checks.at(name).report; };

  const StandardTableau t(comp);
  const RootSet basis = m_basis(comp);
  for (const auto& p : neighbouring_pairs(comp)) {
    ++rep("degree_law").checked;
    ++rep("multilinear").checked;
    BSInvariant inv;
    try {
      inv = bs_invariant(t, p, basis);
    } catch (const std::exception& e) {
      rep("degree_law").fail(label(p) + ": " + e.what());
      continue;
    }
    const int d = static_cast<int>(left_rectangle_entries(t, p).size());
    if (inv.degree != d || !inv.poly.is_homogeneous())
      rep("degree_law").fail(label(p) + " has degree " + std::to_string(inv.degree) + ", expected " +
                             std::to_string(d));
    if (!inv.poly.is_multilinear()) rep("multilinear").fail(label(p) + " repeats a coordinate");
    for (const Variable& v : inv.poly.variables()) {
      const int ci = t.col_of(v.i), cj = t.col_of(v.j);
      if (v.is_deform() || ci < p.left || cj > p.right) {
        rep("multilinear").fail(label(p) + " uses " + to_text(v) + " outside its columns");
        break;
      }
    }
  }

  VerificationSummary out;
  out.composition = comp;

  StateSweep sweep(comp, opt, checks);
  sweep.run();
  out.states = sweep.states();
  out.final_states = sweep.finals();

  EnumerationOptions eo;
  eo.limit = opt.limit;
  eo.parallel = opt.parallel;
  eo.orbit = opt.orbit;
  eo.compute_codim = comp.n() <= opt.codim_max_n;
  const Census census = enumerate_components(comp, eo);
  out.findings = census.findings;
  rep("red_subset").merge(check_red_subset(census));

  if (eo.compute_codim) {
    for (const auto& r : census.records) {
      ++rep("codimension").checked;
      if (r.codim != census.g)
        rep("codimension").fail("Red Set record has codimension " + std::to_string(r.codim) +
                                ", expected " + std::to_string(census.g));
      for (const auto& other : r.other_excluded) {
        RootSet u;
        for (const Root& x : basis)
          if (!other.count(x)) u.insert(x);
        ++rep("codimension").checked;
        const int c = orbit_codim(comp, u, opt.orbit);
        if (c != census.g)
          rep("codimension").fail("alternative excluded set has codimension " + std::to_string(c));
      }
    }
  } else {
    checks.at("codimension").skipped = true;
  }

  if (comp.n() <= opt.krull_max_n) {
    for (const auto& r : census.records) rep("krull_chain").merge(verify_krull_chain(comp, r.witness, opt.orbit));
  } else {
    checks.at("krull_chain").skipped = true;
  }

  if (comp.n() <= opt.moves_max_n) {
    const auto moves = legal_moves(comp);
    const auto invariants = all_invariants(comp);
    std::vector<int> codims(moves.size());
    std::vector<SubcolumnResult> results(moves.size());
    const int count = static_cast<int>(moves.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (int x = 0; x < count; ++x) {
      results[x] = subcolumn_move(comp, moves[x]);
      codims[x] = orbit_codim(comp, results[x].u_b, opt.orbit);
    }
    for (int x = 0; x < count; ++x) {
      const auto& mv = moves[x];
      const std::string name = "move (j=" + std::to_string(mv.j) + ",k=" + std::to_string(mv.k) +
                               ",i=" + std::to_string(mv.i) + ")";
      ++rep("subcolumn_moves").checked;
      if (codims[x] != results[x].predicted_codim)
        rep("subcolumn_moves").fail(name + " has codimension " + std::to_string(codims[x]) +
                                    ", formula gives " + std::to_string(results[x].predicted_codim));
      RootSet excluded;
      for (const Root& r : basis)
        if (!results[x].u_b.count(r)) excluded.insert(r);
      for (const auto& p : pairs_cut_by_move(comp, mv)) {
        ++rep("subcolumn_vanishing").checked;
        for (const auto& inv : invariants)
          if (inv.pair == p && !restrict_invariant(inv, excluded).is_zero())
            rep("subcolumn_vanishing").fail("invariant of " + label(p) + " survives " + name);
      }
    }
  } else {
    checks.at("subcolumn_moves").skipped = true;
    checks.at("subcolumn_vanishing").skipped = true;
  }

  for (const auto& name : check_names()) out.checks.push_back(checks.at(name));
  return out;
}

}  // namespace nilfibre
