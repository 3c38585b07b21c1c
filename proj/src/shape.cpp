#include "nilfibre/shape.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace nilfibre {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int c : parts_) {
    if (c <= 0) throw std::invalid_argument("parts must be positive");
    n_ += c;
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    long value = 0;
    const char* first = field.data();
    const char* last = first + field.size();
    if (!field.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last)
      throw std::invalid_argument("malformed composition '" + std::string(text) + "'");
    if (value <= 0) throw std::invalid_argument("parts must be positive");
    if (value > 64) throw std::invalid_argument("part too large");
    parts.push_back(static_cast<int>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

std::string to_string(const Composition& comp) {
  std::string out;
  for (int c : comp.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n <= 0) return out;
  std::vector<int> prefix;
  compositions_rec(n, prefix, out);
  return out;
}

std::string label(const NeighbouringPair& p) {
  return "(C" + std::to_string(p.left) + ",C" + std::to_string(p.right) + ")";
}

StandardTableau::StandardTableau(const Composition& comp) : comp_(comp) {
  col_of_.assign(comp.n() + 1, 0);
  row_of_.assign(comp.n() + 1, 0);
  int value = 1;
  for (int col = 1; col <= comp.k(); ++col) {
    std::vector<int> column;
    for (int row = 1; row <= comp.height(col); ++row, ++value) {
      column.push_back(value);
      col_of_[value] = col;
      row_of_[value] = row;
    }
    columns_.push_back(std::move(column));
  }
}

StandardTableau standard_tableau(const Composition& comp) { return StandardTableau(comp); }

std::vector<NeighbouringPair> neighbouring_pairs(const Composition& comp) {
  std::vector<NeighbouringPair> out;
  const int k = comp.k();
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      if (comp.height(a) != comp.height(b)) continue;
      bool blocked = false;
      for (int x = a + 1; x < b && !blocked; ++x) blocked = comp.height(x) == comp.height(a);
      if (!blocked) out.push_back({a, b, comp.height(a)});
    }
  std::sort(out.begin(), out.end(), [](const NeighbouringPair& x, const NeighbouringPair& y) {
    if (x.height != y.height) return x.height > y.height;
    return x.left < y.left;
  });
  return out;
}

std::vector<Box> left_rectangle(const StandardTableau& t, const NeighbouringPair& p) {
  std::vector<Box> out;
  for (int col = p.left + 1; col <= p.right; ++col) {
    const int rows = std::min(p.height, t.composition().height(col));
    for (int row = 1; row <= rows; ++row) out.push_back({col, row});
  }
  return out;
}

std::vector<int> left_rectangle_entries(const StandardTableau& t, const NeighbouringPair& p) {
  std::vector<int> out;
  for (Box b : left_rectangle(t, p)) out.push_back(t.entry(b));
  std::sort(out.begin(), out.end());
  return out;
}

RootSet m_basis(const Composition& comp) {
  const StandardTableau t(comp);
  RootSet out;
  for (int i = 1; i <= comp.n(); ++i)
    for (int j = i + 1; j <= comp.n(); ++j)
      if (t.col_of(i) != t.col_of(j)) out.insert({i, j});
  return out;
}

bool is_levi_root(const StandardTableau& t, int i, int j) {
  if (i < 1 || j < 1 || i > t.n() || j > t.n()) throw std::out_of_range("entry outside 1..n");
  return t.col_of(i) == t.col_of(j);
}

bool has_taller_intermediate(const Composition& comp, const NeighbouringPair& p) {
  for (int x = p.left + 1; x < p.right; ++x)
    if (comp.height(x) > p.height) return true;
  return false;
}

}  // namespace nilfibre
