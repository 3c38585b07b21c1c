#include <algorithm>
#include <map>

#include "nilfibre/census.hpp"

namespace nilfibre {

void Report::merge(const Report& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string text(const Multiset& m) {
  std::string out = "{";
  for (std::size_t x = 0; x < m.size(); ++x) out += (x ? "," : "") + std::to_string(m[x]);
  return out + "}";
}

RootSet complement(const RootSet& basis, const RootSet& excluded) {
  RootSet u;
  for (const Root& r : basis)
    if (!excluded.count(r)) u.insert(r);
  return u;
}

}  // namespace

Report verify_vanishing(const Composition& comp, const ComponentRecord& record) {
  Report rep;
  for (const BSInvariant& inv : all_invariants(comp)) {
    ++rep.checked;
    const Polynomial r = restrict_invariant(inv, record.excluded);
    if (!r.is_zero())
      rep.fail("invariant of " + label(inv.pair) + " survives on u of Red Set " + text(record.red) +
               ": " + to_text(r));
  }
  return rep;
}

Report verify_factorization(const ImplementationTrace& trace, std::size_t stage,
                            const NeighbouringPair& pair) {
  const ColoredTableau& rt = trace.stages.at(stage);
  const Composition& comp = rt.origin();
  const StandardTableau t(comp);
  const RootSet basis = m_basis(comp);
  const RootSet u = complement(basis, excluded_roots(rt));
  const BSInvariant inv = bs_invariant(t, pair, basis);
  const Polynomial restricted = restrict_invariant(inv, excluded_roots(rt));
  if (restricted.is_zero()) throw std::domain_error("factorization undefined on annihilated pair");

  Report rep;
  rep.checked = 1;
  const auto cols = pseudo_columns(rt, pair);
  Polynomial product(1);
  int degree_sum = 0;
  for (std::size_t x = 0; x + 1 < cols.size(); ++x) {
    const Polynomial f = factor_invariant(cols[x], cols[x + 1], u);
    degree_sum += f.degree();
    product *= f;
  }
  if (!equals_up_to_sign(product, restricted))
    rep.fail("factor product differs from the restriction of " + label(pair) + " at stage " +
             std::to_string(stage + 1));
  if (degree_sum != restricted.degree())
    rep.fail("factor degrees of " + label(pair) + " do not add up at stage " + std::to_string(stage + 1));
  return rep;
}

std::vector<int> stage_codims(const Composition& comp, const ImplementationTrace& trace,
                              const OrbitOptions& opt) {
  const RootSet basis = m_basis(comp);
  std::vector<int> out;
  for (const auto& stage : trace.stages)
    out.push_back(orbit_codim(comp, complement(basis, excluded_roots(stage)), opt));
  return out;
}

Report verify_krull_chain(const Composition& comp, const ImplementationTrace& trace,
                          const OrbitOptions& opt) {
  Report rep;
  const auto codims = stage_codims(comp, trace, opt);
  for (std::size_t t = 0; t < codims.size(); ++t) {
    ++rep.checked;
    if (codims[t] != static_cast<int>(t))
      rep.fail("stage " + std::to_string(t + 1) + " has codimension " + std::to_string(codims[t]) +
               ", expected " + std::to_string(t));
  }
  const StandardTableau tab(comp);
  const RootSet basis = m_basis(comp);
  std::map<NeighbouringPair, BSInvariant> inv;
  for (const auto& p : trace.order) inv.emplace(p, bs_invariant(tab, p, basis));
  for (std::size_t t = 0; t < trace.stages.size(); ++t) {
    const RootSet excluded = excluded_roots(trace.stages[t]);
    for (std::size_t later = t; later < trace.order.size(); ++later) {
      ++rep.checked;
      if (restrict_invariant(inv.at(trace.order[later]), excluded).is_zero())
        rep.fail("invariant of " + label(trace.order[later]) + " vanishes at stage " +
                 std::to_string(t + 1) + " before its pair is implemented");
    }
  }
  return rep;
}

bool is_legal_move(const Composition& comp, const SubcolumnMove& mv) {
  if (mv.i < 1 || mv.j > comp.k() || mv.i >= mv.j) return false;
  const int ci = comp.height(mv.i), cj = comp.height(mv.j);
  if (mv.k < 0 || mv.k > cj) return false;
  if (mv.k == 0) return true;
  if (ci < cj - mv.k) return false;
  for (int x = mv.i + 1; x < mv.j; ++x)
    if (comp.height(x) > ci) return false;
  return true;
}

std::vector<SubcolumnMove> legal_moves(const Composition& comp) {
  std::vector<SubcolumnMove> out;
  for (int j = 1; j <= comp.k(); ++j)
    for (int k = 1; k <= comp.height(j); ++k)
      for (int i = 1; i < j; ++i)
        if (is_legal_move(comp, {j, k, i})) out.push_back({j, k, i});
  return out;
}

SubcolumnResult subcolumn_move(const Composition& comp, const SubcolumnMove& mv) {
  if (!is_legal_move(comp, mv)) throw std::invalid_argument("illegal subcolumn move");
  const StandardTableau t(comp);
  std::vector<std::vector<Cell>> cols;
  for (int c = 1; c <= comp.k(); ++c) {
    std::vector<Cell> col;
    for (int v : t.column(c)) col.push_back({v, Color::Black});
    cols.push_back(std::move(col));
  }
  auto& src = cols[mv.j - 1];
  std::vector<Cell> moved(src.end() - mv.k, src.end());
  src.resize(src.size() - mv.k);
  auto& dest = cols[mv.i - 1];
  dest.insert(dest.end(), moved.begin(), moved.end());

  SubcolumnResult out;
  out.moved = ColoredTableau(comp, std::move(cols));
  out.u_b = complement(m_basis(comp), excluded_roots(out.moved));
  out.predicted_codim = mv.k * (comp.height(mv.i) - (comp.height(mv.j) - mv.k));
  return out;
}

std::vector<NeighbouringPair> pairs_cut_by_move(const Composition& comp, const SubcolumnMove& mv) {
  std::vector<NeighbouringPair> out;
  const int ci = comp.height(mv.i), cj = comp.height(mv.j);
  for (const auto& p : neighbouring_pairs(comp)) {
    if (!(p.left < mv.j && mv.j <= p.right && p.left <= mv.i && mv.i < p.right)) continue;
    bool hit = false;
    for (int r = cj - mv.k + 1; r <= cj && !hit; ++r)
      hit = r <= p.height && ci + (r - (cj - mv.k)) > p.height;
    if (hit) out.push_back(p);
  }
  return out;
}

Multiset global_red_multiset(const Composition& comp) {
  const auto pairs = neighbouring_pairs(comp);
  const StandardTableau t(comp);
  auto surrounding = [&](int r, int lo, int hi) {
    int count = 0;
    for (const auto& p : pairs)
      if (p.left < r && r <= p.right && lo <= p.height && p.height <= hi) ++count;
    return count;
  };
  Multiset out;
  for (int r = 1; r <= comp.k(); ++r) {
    const int h = comp.height(r);
    for (int s = 1; s < h; ++s)
      if (surrounding(r, s, h) >= h - s + 1) out.push_back(t.entry({r, s}));
    int mult = 0;
    for (int extra = 0; extra <= static_cast<int>(pairs.size()); ++extra)
      if (surrounding(r, h, h + extra) >= extra + 1) mult = extra + 1;
    for (int x = 0; x < mult; ++x) out.push_back(t.entry({r, h}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_submultiset(const Multiset& small, const Multiset& big) {
  std::map<int, int> count;
  for (int v : big) ++count[v];
  for (int v : small)
    if (--count[v] < 0) return false;
  return true;
}

Report check_red_subset(const Census& census) {
  Report rep;
  for (const auto& r : census.records) {
    ++rep.checked;
    if (!is_submultiset(r.red, census.global_red))
      rep.fail("Red Set " + text(r.red) + " is not inside Global Red " + text(census.global_red));
  }
  return rep;
}

}  // namespace nilfibre
