#include "nilfibre/reverse.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nilfibre {

ColoredTableau::ColoredTableau(Composition origin, std::vector<std::vector<Cell>> columns)
    : origin_(std::move(origin)), columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != origin_.k())
    throw std::invalid_argument("column count differs from the composition");
}

int ColoredTableau::black_height(int col) const {
  const auto& c = column(col);
  for (int r = static_cast<int>(c.size()); r >= 1; --r)
    if (c[r - 1].color == Color::Black) return r;
  return 0;
}

int ColoredTableau::max_height() const {
  int h = 0;
  for (const auto& c : columns_) h = std::max(h, static_cast<int>(c.size()));
  return h;
}

std::optional<Cell> ColoredTableau::at(Box b) const {
  if (b.col < 1 || b.col > num_columns() || b.row < 1 || b.row > height(b.col))
    return std::nullopt;
  return column(b.col)[b.row - 1];
}

Box ColoredTableau::black_position(int value) const {
  for (int col = 1; col <= num_columns(); ++col)
    for (int row = 1; row <= height(col); ++row) {
      const Cell& cell = column(col)[row - 1];
      if (cell.value == value && cell.color == Color::Black) return {col, row};
    }
  throw std::out_of_range("value " + std::to_string(value) + " has no black box");
}

std::vector<Box> ColoredTableau::occurrences(int value) const {
  std::vector<Box> out;
  for (int col = 1; col <= num_columns(); ++col)
    for (int row = 1; row <= height(col); ++row)
      if (column(col)[row - 1].value == value) out.push_back({col, row});
  return out;
}

int ColoredTableau::red_count() const {
  int count = 0;
  for (const auto& c : columns_)
    for (const Cell& cell : c) count += cell.color == Color::Red;
  return count;
}

std::optional<std::string> ColoredTableau::structure_violation() const {
  const int n = origin_.n();
  std::vector<Box> black(n + 1, Box{0, 0});
  std::vector<std::vector<Box>> occ(n + 1);
  for (int col = 1; col <= num_columns(); ++col) {
    const auto& c = column(col);
    for (int row = 1; row <= static_cast<int>(c.size()); ++row) {
      const Cell& cell = c[row - 1];
      if (cell.value < 1 || cell.value > n) return "value out of range";
      if (row > 1 && c[row - 2].value >= cell.value)
        return "column C" + std::to_string(col) + " not increasing";
      if (cell.color == Color::Black) {
        if (black[cell.value].col != 0)
          return "value " + std::to_string(cell.value) + " has two black boxes";
        black[cell.value] = {col, row};
      }
      occ[cell.value].push_back({col, row});
    }
  }
  for (int v = 1; v <= n; ++v)
    if (black[v].col == 0) return "value " + std::to_string(v) + " has no black box";
  for (int row = 1; row <= max_height(); ++row) {
    int last = 0;
    for (int col = 1; col <= num_columns(); ++col) {
      auto cell = at({col, row});
      if (!cell) continue;
      if (cell->value <= last) return "row R" + std::to_string(row) + " not increasing";
      last = cell->value;
    }
  }
  for (int v = 1; v <= n; ++v) {
    const auto& boxes = occ[v];
    if (boxes.front() != black[v])
      return "leftmost occurrence of " + std::to_string(v) + " is red";
    for (std::size_t x = 1; x < boxes.size(); ++x) {
      if (boxes[x].col == boxes[x - 1].col)
        return "value " + std::to_string(v) + " repeats in a column";
      if (boxes[x].row != boxes[x - 1].row - 1)
        return "occurrences of " + std::to_string(v) + " do not climb one row at a time";
    }
  }
  return std::nullopt;
}

std::size_t ColoredTableau::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ull; };
  for (const auto& c : columns_) {
    mix(0xfff);
    for (const Cell& cell : c) mix(static_cast<std::size_t>(cell.value) * 2 + (cell.color == Color::Red));
  }
  return h;
}

ColoredTableau init(const StandardTableau& t) {
  std::vector<std::vector<Cell>> columns;
  for (int col = 1; col <= t.k(); ++col) {
    std::vector<Cell> c;
    for (int v : t.column(col)) c.push_back({v, Color::Black});
    columns.push_back(std::move(c));
  }
  return ColoredTableau(t.composition(), std::move(columns));
}

namespace {

int standard_value(const Composition& comp, int col, int row) {
  int v = 0;
  for (int c = 1; c < col; ++c) v += comp.height(c);
  return v + row;
}

struct Boundaries {
  std::vector<int> left;   // column of b_t
  std::vector<int> right;  // column of b'_t
};

Boundaries boundaries(const ColoredTableau& rt, const NeighbouringPair& p) {
  Boundaries b;
  for (int row = 1; row <= p.height; ++row) {
    const int lv = standard_value(rt.origin(), p.left, row);
    const int rv = standard_value(rt.origin(), p.right, row);
    int lcol = 0, rcol = 0;
    for (int col = 1; col <= rt.num_columns(); ++col) {
      auto cell = rt.at({col, row});
      if (!cell) continue;
      if (cell->value == lv) lcol = col;
      if (cell->value == rv && rcol == 0) rcol = col;
    }
    if (lcol == 0 || rcol == 0)
      throw StructureViolation("trapezium boundary of " + label(p) + " missing in row R" +
                               std::to_string(row));
    b.left.push_back(lcol);
    b.right.push_back(rcol);
  }
  return b;
}

}  // namespace

Trapezium trapezium(const ColoredTableau& rt, const NeighbouringPair& p) {
  const Boundaries b = boundaries(rt, p);
  Trapezium tr;
  tr.pair = p;
  for (int row = 1; row <= p.height; ++row) {
    const int lo = b.left[row - 1], hi = b.right[row - 1];
    tr.left_boundary.push_back({lo, row});
    tr.right_boundary.push_back({hi, row});
    if (rt.at({hi, row})->color != Color::Black) tr.right_boundary_black = false;
    for (int col = lo; col <= hi; ++col) {
      if (!rt.at({col, row})) continue;
      tr.members.push_back({col, row});
      if (col > lo) tr.left_members.push_back({col, row});
    }
  }
  return tr;
}

PairState pair_state(const ColoredTableau& rt, const NeighbouringPair& p) {
  const Boundaries b = boundaries(rt, p);
  const int s = p.height;
  PairState st;
  st.pair = p;
  st.left_boundary = b.left[s - 1];
  st.right_limit = b.right[s - 1];
  for (int col = st.left_boundary; col <= st.right_limit; ++col)
    if (rt.black_height(col) <= s && rt.height(col) >= s) st.eligible.push_back(col);
  if (st.eligible.empty() || st.eligible.front() != st.left_boundary ||
      rt.height(st.left_boundary) != s)
    throw EnablingViolation("enabling fails for " + label(p) + ": leftmost eligible column is not C" +
                            std::to_string(st.left_boundary) + " of height " + std::to_string(s));
  return st;
}

std::vector<ImplementationChoice> enumerate_choices(const ColoredTableau& rt,
                                                    const NeighbouringPair& p) {
  const PairState st = pair_state(rt, p);
  const int s = p.height;
  const int lo = st.left_boundary;
  std::vector<ImplementationChoice> out;
  for (auto it = st.eligible.rbegin(); it + 1 != st.eligible.rend(); ++it) {
    const int src = *it;
    int landing = 0;
    for (int col = src - 1; col >= lo; --col)
      if (rt.height(col) >= s) {
        landing = col;
        break;
      }
    if (rt.height(landing) == s) {
      out.push_back({0, src, landing, landing});
      continue;
    }
    for (int stop = landing - 1; stop >= lo; --stop)
      if (rt.height(stop) == s) out.push_back({0, src, landing, stop});
  }
  if (out.empty()) throw NotImplementable("pair not implementable: " + label(p));
  return out;
}

ColoredTableau implement_pair(const ColoredTableau& rt, const NeighbouringPair& p,
                              const ImplementationChoice& ch) {
  const auto legal = enumerate_choices(rt, p);
  const bool found = std::any_of(legal.begin(), legal.end(), [&](const ImplementationChoice& c) {
    return c.source_col == ch.source_col && c.landing_col == ch.landing_col &&
           c.shift_stop == ch.shift_stop;
  });
  if (!found) throw std::invalid_argument("illegal choice for " + label(p));

  const int s = p.height;
  std::vector<std::vector<Cell>> cols = rt.columns();
  Cell& source = cols[ch.source_col - 1][s - 1];
  const int j = source.value;
  source.color = Color::Red;

  if (ch.landing_col != ch.shift_stop) {
    std::vector<int> chain{ch.landing_col};
    for (int col = ch.landing_col - 1; col > ch.shift_stop; --col)
      if (static_cast<int>(cols[col - 1].size()) > s) chain.push_back(col);
    chain.push_back(ch.shift_stop);
    std::vector<std::vector<Cell>> lowers;
    for (int col : chain) {
      auto& c = cols[col - 1];
      lowers.emplace_back(c.begin() + std::min<std::size_t>(s, c.size()), c.end());
      c.resize(std::min<std::size_t>(s, c.size()));
    }
    for (std::size_t x = 0; x + 1 < chain.size(); ++x) {
      auto& dest = cols[chain[x + 1] - 1];
      dest.insert(dest.end(), lowers[x].begin(), lowers[x].end());
    }
  }
  auto& landing = cols[ch.landing_col - 1];
  if (static_cast<int>(landing.size()) != s)
    throw StructureViolation("landing column C" + std::to_string(ch.landing_col) +
                             " not of height s after shifting");
  landing.push_back({j, Color::Black});

  ColoredTableau out(rt.origin(), std::move(cols));
  if (auto err = out.structure_violation())
    throw StructureViolation("implementing " + label(p) + ": " + *err);
  return out;
}

int black_count(const ColoredTableau& rt, const NeighbouringPair& p) {
  int count = 0;
  for (Box b : trapezium(rt, p).left_members)
    count += rt.at(b)->color == Color::Black;
  return count;
}

bool red_in_left_row(const ColoredTableau& rt, const NeighbouringPair& p) {
  for (Box b : trapezium(rt, p).left_members)
    if (b.row == p.height && rt.at(b)->color == Color::Red) return true;
  return false;
}

RootSet excluded_roots(const ColoredTableau& rt) {
  const int n = rt.n();
  std::vector<Box> black(n + 1), rightmost(n + 1);
  std::vector<int> block(n + 1);
  const StandardTableau t(rt.origin());
  for (int v = 1; v <= n; ++v) block[v] = t.col_of(v);
  for (int col = 1; col <= rt.num_columns(); ++col)
    for (int row = 1; row <= rt.height(col); ++row) {
      const Cell& cell = rt.column(col)[row - 1];
      if (cell.color == Color::Black) black[cell.value] = {col, row};
      if (rightmost[cell.value].col < col) rightmost[cell.value] = {col, row};
    }
  RootSet out;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      if (block[i] == block[j]) continue;
      const Box ri = rightmost[i], bj = black[j];
      if ((ri.col == bj.col && ri.row < bj.row) || ri.col > bj.col) out.insert({i, j});
    }
  return out;
}

Multiset red_multiset(const ColoredTableau& rt) {
  Multiset out;
  for (const auto& c : rt.columns())
    for (const Cell& cell : c)
      if (cell.color == Color::Red) out.push_back(cell.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PseudoColumn> pseudo_columns(const ColoredTableau& rt, const NeighbouringPair& p) {
  const PairState st = pair_state(rt, p);
  const Boundaries b = boundaries(rt, p);
  const int s = p.height;
  std::vector<PseudoColumn> out;
  PseudoColumn left{st.left_boundary, {}};
  for (int row = 1; row <= s; ++row) left.values.push_back(standard_value(rt.origin(), p.left, row));
  out.push_back(std::move(left));
  for (std::size_t x = 1; x < st.eligible.size(); ++x) {
    const int col = st.eligible[x];
    bool inside = true;
    for (int row = 1; row <= s && inside; ++row)
      inside = b.left[row - 1] < col && col < b.right[row - 1];
    if (!inside) continue;
    PseudoColumn pc{col, {}};
    for (int row = 1; row <= s; ++row) pc.values.push_back(rt.column(col)[row - 1].value);
    out.push_back(std::move(pc));
  }
  PseudoColumn right{st.right_limit, {}};
  for (int row = 1; row <= s; ++row) right.values.push_back(standard_value(rt.origin(), p.right, row));
  out.push_back(std::move(right));
  return out;
}

}  // namespace nilfibre
