#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilfibre/census.hpp"
#include "nilfibre/orbit.hpp"
#include "oracles.hpp"

using namespace nilfibre;

namespace {

const Composition kExample({1, 2, 2, 1});
const NeighbouringPair kP23{2, 3, 2};
const NeighbouringPair kP14{1, 4, 1};

ImplementationTrace trace_of(const Composition& comp,
                             const std::vector<std::pair<NeighbouringPair, int>>& steps) {
  ImplementationTrace tr;
  tr.stages.push_back(init(StandardTableau(comp)));
  for (const auto& [p, source] : steps) {
    for (const auto& ch : enumerate_choices(tr.stages.back(), p))
      if (ch.source_col == source) {
        tr.order.push_back(p);
        tr.choices.push_back(ch);
        tr.stages.push_back(implement_pair(tr.stages.back(), p, ch));
        break;
      }
  }
  REQUIRE(tr.order.size() == steps.size());
  return tr;
}

RootSet complement(const RootSet& basis, const RootSet& excluded) {
  RootSet out;
  for (const Root& r : basis)
    if (!excluded.count(r)) out.insert(r);
  return out;
}

// Tangent rank of the B-saturation at a random point, computed over a prime field.
int codim_oracle(const Composition& comp, const RootSet& u, std::uint64_t seed) {
  const int n = comp.n();
  const RootSet basis = m_basis(comp);
  std::vector<Root> coords(basis.begin(), basis.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-10000, 10000);
  std::vector<std::vector<long long>> x(n + 1, std::vector<long long>(n + 1, 0));
  for (const Root& r : u) x[r.i][r.j] = dist(rng);
  std::vector<std::vector<long long>> rows;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      // [E_ab, x] = E_a* x_b* - x_*a E_*b
      std::vector<long long> row;
      for (const Root& r : coords) {
        long long v = 0;
        if (r.i == a) v += x[b][r.j];
        if (r.j == b) v -= x[r.i][a];
        row.push_back(v);
      }
      rows.push_back(row);
    }
  for (const Root& r : u) {
    std::vector<long long> row;
    for (const Root& s : coords) row.push_back(r == s ? 1 : 0);
    rows.push_back(row);
  }
  return static_cast<int>(coords.size()) - oracle::rank_mod_p(rows);
}

}  // namespace

TEST_CASE("census of the worked example") {
  const Census c = enumerate_components(kExample, EnumerationOptions{});
  CHECK(c.g == 2);
  CHECK(c.dim_m == 13);
  REQUIRE(c.records.size() == 2);
  CHECK(c.records[0].red == Multiset{5, 6});
  CHECK(c.records[1].red == Multiset{4, 5});
  CHECK(c.global_red == Multiset{4, 5, 6});
  CHECK(check_red_subset(c).ok());
  for (const auto& r : c.records) {
    CHECK(r.witness.order.size() == 2);
    CHECK(r.u_basis == complement(m_basis(kExample), r.excluded));
    CHECK(verify_vanishing(kExample, r).ok());
    CHECK(verify_vanishing(kExample, r).checked == 2);
  }
  CHECK(c.complete_traces == 3);
  CHECK(c.complete_tableaux == 2);
}

TEST_CASE("census with codimension") {
  EnumerationOptions opt;
  opt.compute_codim = true;
  const Census c = enumerate_components(kExample, opt);
  for (const auto& r : c.records) CHECK(r.codim == 2);
}

TEST_CASE("census of (1,1) and of a single column") {
  const Census a = enumerate_components(Composition({1, 1}), EnumerationOptions{});
  REQUIRE(a.records.size() == 1);
  CHECK(a.records[0].red == Multiset{2});
  CHECK(a.global_red == Multiset{2});
  CHECK(check_red_subset(a).ok());

  const Census b = enumerate_components(Composition({3}), EnumerationOptions{});
  CHECK(b.g == 0);
  REQUIRE(b.records.size() == 1);
  CHECK(b.records[0].red.empty());
  CHECK(b.records[0].u_basis.empty());
  CHECK(b.global_red.empty());
  CHECK(verify_vanishing(Composition({3}), b.records[0]).ok());
  CHECK(check_red_subset(b).ok());

  const auto recs = enumerate_components(kExample, std::optional<long>{});
  CHECK(recs.size() == 2);
}

TEST_CASE("vanishing fails on the full nilradical") {
  ComponentRecord r;
  r.red = {};
  CHECK_FALSE(verify_vanishing(kExample, r).ok());
  CHECK(verify_vanishing(kExample, r).failures.size() == 2);
}

TEST_CASE("factorization on the worked example") {
  const ImplementationTrace tr = trace_of(kExample, {{kP23, 3}});
  const Report rep = verify_factorization(tr, 1, kP14);
  CHECK(rep.ok());
  CHECK(rep.checked == 1);
  CHECK(verify_factorization(tr, 0, kP14).ok());
  CHECK(verify_factorization(tr, 0, kP23).ok());
  CHECK_THROWS_WITH_AS(verify_factorization(tr, 1, kP23), "factorization undefined on annihilated pair",
                       std::domain_error);

  const Composition fig({1, 2, 3, 3, 1, 2});
  const ImplementationTrace ftr = trace_of(fig, {{{3, 4, 3}, 4}, {{1, 5, 1}, 5}});
  CHECK(pseudo_columns(ftr.stages[2], {2, 6, 2}).size() == 4);
  CHECK(verify_factorization(ftr, 2, {2, 6, 2}).ok());
}

TEST_CASE("exact_rank agrees with the prime-field oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> val(-4, 4), dim(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = dim(rng), c = dim(rng);
    std::vector<std::vector<Integer>> m(r, std::vector<Integer>(c));
    std::vector<std::vector<long long>> o(r, std::vector<long long>(c));
    // Low-rank products make rank deficiency common.
    const int inner = dim(rng) % 3 + 1;
    std::vector<std::vector<int>> a(r, std::vector<int>(inner)), b(inner, std::vector<int>(c));
    for (auto& row : a)
      for (auto& v : row) v = val(rng);
    for (auto& row : b)
      for (auto& v : row) v = val(rng);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        long long s = 0;
        for (int k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
        if (trial % 2) s += val(rng) == 0;
        m[i][j] = static_cast<long>(s);
        o[i][j] = s;
      }
    CHECK(exact_rank(m) == oracle::rank_mod_p(o));
  }
}

TEST_CASE("orbit codimension") {
  const RootSet basis = m_basis(kExample);
  CHECK(orbit_codim(kExample, basis) == 0);
  CHECK(orbit_closure_dim(kExample, basis) == 13);
  CHECK(orbit_codim(kExample, {}) == 13);
  const Census c = enumerate_components(kExample, EnumerationOptions{});
  for (const auto& r : c.records) {
    CHECK(orbit_codim(kExample, r.u_basis) == 2);
    CHECK(codim_oracle(kExample, r.u_basis, 5) == 2);
  }
}

TEST_CASE("orbit codimension matches the independent oracle on random subspaces") {
  std::mt19937_64 rng(17);
  for (const auto& parts : {std::vector<int>{1, 2, 2, 1}, std::vector<int>{2, 1, 3}, std::vector<int>{1, 1, 1, 1, 1}}) {
    const Composition comp(parts);
    const RootSet basis = m_basis(comp);
    for (int trial = 0; trial < 15; ++trial) {
      RootSet u;
      for (const Root& r : basis)
        if (rng() % 3) u.insert(r);
      int best = 1 << 20;
      for (std::uint64_t s = 1; s <= 3; ++s) best = std::min(best, codim_oracle(comp, u, s));
      CHECK(orbit_codim(comp, u) == best);
    }
  }
}

TEST_CASE("Krull chain") {
  for (int source : {3, 4}) {
    const ImplementationTrace tr = trace_of(kExample, {{kP23, 3}, {kP14, source}});
    CHECK(stage_codims(kExample, tr) == std::vector<int>{0, 1, 2});
    CHECK(verify_krull_chain(kExample, tr).ok());
  }
  const ImplementationTrace rev = trace_of(kExample, {{kP14, 4}, {kP23, 2}});
  CHECK(stage_codims(kExample, rev) == std::vector<int>{0, 1, 2});

  const Composition two({1, 1});
  const ImplementationTrace one = trace_of(two, {{{1, 2, 1}, 2}});
  CHECK(stage_codims(two, one) == std::vector<int>{0, 1});
  CHECK(verify_krull_chain(two, one).ok());
}

TEST_CASE("Krull chain flags a stage that kills too much") {
  ImplementationTrace tr = trace_of(kExample, {{kP23, 3}, {kP14, 4}});
  // The middle stage now excludes the roots of the complete tableau.
  tr.stages[1] = tr.stages[2];
  const Report rep = verify_krull_chain(kExample, tr);
  CHECK_FALSE(rep.ok());
  bool premature = false;
  for (const auto& f : rep.failures) premature |= f.find("vanishes at stage 2") != std::string::npos;
  CHECK(premature);
}

TEST_CASE("subcolumn moves") {
  CHECK(is_legal_move(kExample, {3, 1, 2}));
  CHECK(is_legal_move(kExample, {3, 0, 2}));
  CHECK(is_legal_move(kExample, {2, 2, 1}));
  CHECK_FALSE(is_legal_move(kExample, {3, 1, 1}));
  CHECK_FALSE(is_legal_move(kExample, {2, 1, 3}));
  CHECK_THROWS_AS(subcolumn_move(kExample, {3, 1, 1}), std::invalid_argument);

  const SubcolumnResult none = subcolumn_move(kExample, {3, 0, 2});
  CHECK(none.predicted_codim == 0);
  CHECK(none.u_b == m_basis(kExample));

  const SubcolumnResult r = subcolumn_move(kExample, {3, 1, 2});
  CHECK(r.predicted_codim == 1);
  CHECK(orbit_codim(kExample, r.u_b) == 1);
  CHECK(codim_oracle(kExample, r.u_b, 3) == 1);
  CHECK(r.moved.column(2).size() == 3);
  CHECK(r.moved.column(2)[2].value == 5);
}

TEST_CASE("subcolumn move annihilates the pairs it cuts") {
  const auto invariants = all_invariants(kExample);
  const SubcolumnResult r = subcolumn_move(kExample, {3, 1, 2});
  const RootSet excluded = complement(m_basis(kExample), r.u_b);
  const auto cut = pairs_cut_by_move(kExample, {3, 1, 2});
  CHECK(std::find(cut.begin(), cut.end(), kP23) != cut.end());
  for (const auto& inv : invariants)
    if (std::find(cut.begin(), cut.end(), inv.pair) != cut.end()) CHECK(restrict_invariant(inv, excluded).is_zero());
}

TEST_CASE("subcolumn codimension formula for all legal moves with n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& comp : compositions_of(n))
      for (const auto& mv : legal_moves(comp)) {
        const SubcolumnResult r = subcolumn_move(comp, mv);
        CHECK(r.predicted_codim == mv.k * (comp.height(mv.i) - comp.height(mv.j) + mv.k));
        CHECK(orbit_codim(comp, r.u_b) == r.predicted_codim);
      }
}

TEST_CASE("Global Red multiset") {
  CHECK(global_red_multiset(kExample) == Multiset{4, 5, 6});
  CHECK(global_red_multiset(Composition({4})).empty());
  CHECK(global_red_multiset(Composition({1, 1})) == Multiset{2});
  CHECK(is_submultiset({5, 6}, {4, 5, 6}));
  CHECK(is_submultiset({}, {}));
  CHECK_FALSE(is_submultiset({5, 5}, {4, 5, 6}));
}

TEST_CASE("every Red Set lies in Global Red for n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& comp : compositions_of(n)) {
      const Census c = enumerate_components(comp, EnumerationOptions{});
      CAPTURE(to_string(comp));
      CHECK(check_red_subset(c).ok());
      for (const auto& r : c.records) CHECK(static_cast<int>(r.red.size()) == c.g);
    }
}

TEST_CASE("enumeration guard") {
  EnumerationOptions opt;
  opt.limit = 2;
  CHECK_THROWS_AS(enumerate_components(kExample, opt), GuardExceeded);
  CHECK_THROWS_AS(enumerate_components_serial(kExample, opt), GuardExceeded);
  CHECK_THROWS_AS(enumerate_components(kExample, std::optional<long>{1}), GuardExceeded);
  // Five states and three complete traces.
  opt.limit = 4;
  CHECK_THROWS_AS(enumerate_components(kExample, opt), GuardExceeded);
  CHECK_THROWS_AS(enumerate_components_serial(kExample, opt), GuardExceeded);
  opt.limit = 5;
  CHECK_NOTHROW(enumerate_components(kExample, opt));
  CHECK_NOTHROW(enumerate_components_serial(kExample, opt));
}

TEST_CASE("parallel enumeration matches the serial reference for n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& comp : compositions_of(n)) {
      EnumerationOptions par;
      EnumerationOptions ser;
      ser.parallel = false;
      const Census a = enumerate_components(comp, par);
      const Census b = enumerate_components_serial(comp, ser);
      CAPTURE(to_string(comp));
      REQUIRE(a.records.size() == b.records.size());
      for (std::size_t x = 0; x < a.records.size(); ++x) {
        CHECK(a.records[x].red == b.records[x].red);
        CHECK(a.records[x].excluded == b.records[x].excluded);
        CHECK(a.records[x].other_excluded == b.records[x].other_excluded);
        CHECK(a.records[x].witness.order == b.records[x].witness.order);
        CHECK(a.records[x].witness.choices == b.records[x].witness.choices);
      }
      CHECK(a.complete_traces == b.complete_traces);
      CHECK(a.dead_ends == b.dead_ends);
      CHECK(a.complete_tableaux == b.complete_tableaux);
      CHECK(a.findings == b.findings);
    }
}
