#include "nilfibre/census.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <omp.h>

namespace nilfibre {

namespace {

using Mask = std::uint32_t;

struct StateKey {
  ColoredTableau tab;
  Mask done = 0;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const { return k.tab.hash() * 31 + k.done; }
};

struct PathCounts {
  long complete = 0;
  long dead = 0;
};

struct Final {
  ColoredTableau tab;
  ImplementationTrace witness;
};

struct DeadEnd {
  StateKey state;
  NeighbouringPair pair;
  std::vector<NeighbouringPair> before;
};

std::string set_text(const Multiset& m) {
  std::string out = "{";
  for (std::size_t x = 0; x < m.size(); ++x) out += (x ? "," : "") + std::to_string(m[x]);
  return out + "}";
}

std::string order_text(const std::vector<NeighbouringPair>& order) {
  std::string out = "[";
  for (std::size_t x = 0; x < order.size(); ++x) out += (x ? "," : "") + label(order[x]);
  return out + "]";
}

long saturating_add(long a, long b) {
  const long cap = 1L << 60;
  return std::min(cap, a + b);
}

// Shared by the memoized and the plain explorers: the current path, the
// first-seen complete tableaux and dead ends.
struct PathRecorder {
  Composition comp;
  std::vector<NeighbouringPair> pairs;
  ImplementationTrace path;
  std::vector<Final> finals;
  std::unordered_map<ColoredTableau, std::size_t, ColoredTableauHash> final_index;
  std::vector<DeadEnd> dead_ends;
  std::unordered_set<StateKey, StateKeyHash> dead_seen;

  void record_final(const ColoredTableau& t) {
    if (final_index.count(t)) return;
    final_index.emplace(t, finals.size());
    finals.push_back({t, path});
  }

  void record_dead_end(const ColoredTableau& t, Mask done, const NeighbouringPair& p) {
    if (!dead_seen.insert({t, done}).second) return;
    dead_ends.push_back({{t, done}, p, path.order});
  }

  void push(const NeighbouringPair& p, ImplementationChoice ch, ColoredTableau next) {
    ch.pair_index = static_cast<int>(path.choices.size());
    path.order.push_back(p);
    path.choices.push_back(ch);
    path.stages.push_back(std::move(next));
  }

  void pop() {
    path.order.pop_back();
    path.choices.pop_back();
    path.stages.pop_back();
  }
};

class MemoExplorer {
 public:
  MemoExplorer(PathRecorder& rec, long limit) : rec_(rec), limit_(limit) {}

  PathCounts visit(const ColoredTableau& t, Mask done) {
    StateKey key{t, done};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (static_cast<long>(memo_.size()) >= limit_)
      throw GuardExceeded("state graph exceeds the enumeration limit of " + std::to_string(limit_));
    PathCounts counts;
    const int g = static_cast<int>(rec_.pairs.size());
    if (std::popcount(done) == g) {
      rec_.record_final(t);
      counts.complete = 1;
    } else {
      for (int pi = 0; pi < g; ++pi) {
        if (done >> pi & 1u) continue;
        const NeighbouringPair& p = rec_.pairs[pi];
        std::vector<ImplementationChoice> chs;
        try {
          chs = enumerate_choices(t, p);
        } catch (const NotImplementable&) {
          rec_.record_dead_end(t, done, p);
          counts.dead = saturating_add(counts.dead, 1);
          continue;
        }
        for (const auto& ch : chs) {
          ColoredTableau next = implement_pair(t, p, ch);
          rec_.push(p, ch, next);
          const PathCounts sub = visit(next, done | (Mask{1} << pi));
          rec_.pop();
          counts.complete = saturating_add(counts.complete, sub.complete);
          counts.dead = saturating_add(counts.dead, sub.dead);
        }
      }
    }
    memo_.emplace(std::move(key), counts);
    return counts;
  }

  const std::unordered_map<StateKey, PathCounts, StateKeyHash>& memo() const { return memo_; }

 private:
  PathRecorder& rec_;
  long limit_;
  std::unordered_map<StateKey, PathCounts, StateKeyHash> memo_;
};

class PlainExplorer {
 public:
  PlainExplorer(PathRecorder& rec, long limit) : rec_(rec), limit_(limit) {}

  void visit(const ColoredTableau& t, Mask done) {
    if (states_.insert({t, done}).second && static_cast<long>(states_.size()) > limit_)
      throw GuardExceeded("state graph exceeds the enumeration limit of " + std::to_string(limit_));
    const int g = static_cast<int>(rec_.pairs.size());
    if (std::popcount(done) == g) {
      rec_.record_final(t);
      if (++complete_ > limit_)
        throw GuardExceeded("more than " + std::to_string(limit_) + " complete traces");
      return;
    }
    for (int pi = 0; pi < g; ++pi) {
      if (done >> pi & 1u) continue;
      const NeighbouringPair& p = rec_.pairs[pi];
      std::vector<ImplementationChoice> chs;
      try {
        chs = enumerate_choices(t, p);
      } catch (const NotImplementable&) {
        rec_.record_dead_end(t, done, p);
        ++dead_;
        continue;
      }
      for (const auto& ch : chs) {
        ColoredTableau next = implement_pair(t, p, ch);
        rec_.push(p, ch, next);
        visit(next, done | (Mask{1} << pi));
        rec_.pop();
      }
    }
  }

  long complete() const { return complete_; }
  long dead() const { return dead_; }
  long states() const { return static_cast<long>(states_.size()); }

 private:
  PathRecorder& rec_;
  long limit_;
  long complete_ = 0;
  long dead_ = 0;
  std::unordered_set<StateKey, StateKeyHash> states_;
};

PathRecorder make_recorder(const Composition& comp) {
  PathRecorder rec;
  rec.comp = comp;
  rec.pairs = neighbouring_pairs(comp);
  if (rec.pairs.size() > 31) throw GuardExceeded("more than 31 neighbouring pairs");
  rec.path.stages.push_back(init(StandardTableau(comp)));
  return rec;
}

void merge_recorder(PathRecorder& into, PathRecorder&& from) {
  for (auto& f : from.finals) {
    if (into.final_index.count(f.tab)) continue;
    into.final_index.emplace(f.tab, into.finals.size());
    into.finals.push_back(std::move(f));
  }
  for (auto& d : from.dead_ends)
    if (into.dead_seen.insert(d.state).second) into.dead_ends.push_back(std::move(d));
}

Census assemble(const Composition& comp, PathRecorder& rec, const EnumerationOptions& opt,
                long states, PathCounts paths) {
  Census census;
  census.composition = comp;
  census.states = states;
  census.complete_traces = paths.complete;
  census.dead_ends = paths.dead;
  census.g = static_cast<int>(rec.pairs.size());
  census.dim_m = static_cast<int>(m_basis(comp).size());
  census.global_red = global_red_multiset(comp);
  census.complete_tableaux = static_cast<long>(rec.finals.size());
  const RootSet basis = m_basis(comp);

  std::map<Multiset, std::size_t> group;
  for (const Final& f : rec.finals) {
    const Multiset red = red_multiset(f.tab);
    const RootSet excluded = excluded_roots(f.tab);
    auto it = group.find(red);
    if (it == group.end()) {
      ComponentRecord r;
      r.red = red;
      r.excluded = excluded;
      for (const Root& x : basis)
        if (!excluded.count(x)) r.u_basis.insert(x);
      r.witness = f.witness;
      group.emplace(red, census.records.size());
      census.records.push_back(std::move(r));
      continue;
    }
    ComponentRecord& r = census.records[it->second];
    if (excluded != r.excluded &&
        std::find(r.other_excluded.begin(), r.other_excluded.end(), excluded) == r.other_excluded.end())
      r.other_excluded.push_back(excluded);
  }
  if (census.g == 0 && census.records.empty()) {
    ComponentRecord r;
    r.u_basis = basis;
    r.witness = rec.path;
    census.records.push_back(std::move(r));
  }

  for (const auto& p : rec.pairs)
    if (has_taller_intermediate(comp, p))
      census.findings.push_back("pair " + label(p) + " has a column taller than " +
                                std::to_string(p.height) + " between its members");
  if (!rec.dead_ends.empty()) {
    const DeadEnd& d = rec.dead_ends.front();
    census.findings.push_back(std::to_string(census.dead_ends) + " partial traces (" +
                              std::to_string(rec.dead_ends.size()) +
                              " distinct states) stop at a pair with no eligible source column; first: " +
                              label(d.pair) + " after " + order_text(d.before));
  }
  for (const auto& r : census.records)
    if (!r.other_excluded.empty())
      census.findings.push_back("Red Set " + set_text(r.red) + " is reached with " +
                                std::to_string(r.other_excluded.size() + 1) +
                                " distinct excluded-root sets");
  std::map<RootSet, Multiset> owner;
  for (const auto& r : census.records) {
    std::vector<const RootSet*> sets{&r.excluded};
    for (const auto& x : r.other_excluded) sets.push_back(&x);
    for (const RootSet* x : sets) {
      auto [it, inserted] = owner.emplace(*x, r.red);
      if (!inserted && it->second != r.red)
        census.findings.push_back("Red Sets " + set_text(it->second) + " and " + set_text(r.red) +
                                  " share an excluded-root set");
    }
  }

  if (opt.compute_codim) {
    const int count = static_cast<int>(census.records.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (int x = 0; x < count; ++x)
      census.records[x].codim = orbit_codim(comp, census.records[x].u_basis, opt.orbit);
  }
  return census;
}

}  // namespace

Census enumerate_components(const Composition& comp, const EnumerationOptions& opt) {
  PathRecorder root = make_recorder(comp);
  const ColoredTableau start = root.path.stages.front();
  const int g = static_cast<int>(root.pairs.size());

  struct Branch {
    int pair_index;
    ImplementationChoice choice;
  };
  std::vector<Branch> branches;
  std::vector<char> root_dead(g, 0);
  for (int pi = 0; pi < g; ++pi) {
    try {
      for (const auto& ch : enumerate_choices(start, root.pairs[pi])) branches.push_back({pi, ch});
    } catch (const NotImplementable&) {
      root_dead[pi] = 1;
    }
  }

  const int nb = static_cast<int>(branches.size());
  std::vector<PathRecorder> recorders(nb, root);
  std::vector<std::vector<StateKey>> keys(nb);
  std::vector<PathCounts> counts(nb);
  std::vector<std::exception_ptr> errors(nb);

#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (int b = 0; b < nb; ++b) {
    try {
      PathRecorder& rec = recorders[b];
      const NeighbouringPair& p = rec.pairs[branches[b].pair_index];
      ColoredTableau next = implement_pair(start, p, branches[b].choice);
      rec.push(p, branches[b].choice, next);
      MemoExplorer ex(rec, opt.limit);
      counts[b] = ex.visit(next, Mask{1} << branches[b].pair_index);
      keys[b].reserve(ex.memo().size());
      for (const auto& [k, v] : ex.memo()) keys[b].push_back(k);
    } catch (...) {
      errors[b] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Merge in the order a serial depth-first search would meet the branches.
  std::unordered_set<StateKey, StateKeyHash> all{{start, 0}};
  PathCounts total;
  if (g == 0) {
    root.record_final(start);
    total.complete = 1;
  }
  int b = 0;
  for (int pi = 0; pi < g; ++pi) {
    if (root_dead[pi]) {
      root.record_dead_end(start, 0, root.pairs[pi]);
      total.dead = saturating_add(total.dead, 1);
      continue;
    }
    for (; b < nb && branches[b].pair_index == pi; ++b) {
      for (auto& k : keys[b]) all.insert(std::move(k));
      total.complete = saturating_add(total.complete, counts[b].complete);
      total.dead = saturating_add(total.dead, counts[b].dead);
      merge_recorder(root, std::move(recorders[b]));
    }
  }
  if (static_cast<long>(all.size()) > opt.limit)
    throw GuardExceeded("state graph exceeds the enumeration limit of " + std::to_string(opt.limit));
  if (total.complete > opt.limit)
    throw GuardExceeded(std::to_string(total.complete) + " complete traces exceed the limit of " +
                        std::to_string(opt.limit));

  return assemble(comp, root, opt, static_cast<long>(all.size()), total);
}

Census enumerate_components_serial(const Composition& comp, const EnumerationOptions& opt) {
  PathRecorder rec = make_recorder(comp);
  PlainExplorer ex(rec, opt.limit);
  const ColoredTableau start = rec.path.stages.front();
  ex.visit(start, 0);
  EnumerationOptions serial = opt;
  serial.parallel = false;
  return assemble(comp, rec, serial, ex.states(), PathCounts{ex.complete(), ex.dead()});
}

std::vector<ComponentRecord> enumerate_components(const Composition& comp, std::optional<long> limit) {
  EnumerationOptions opt;
  if (limit) opt.limit = *limit;
  return enumerate_components(comp, opt).records;
}

}  // namespace nilfibre
