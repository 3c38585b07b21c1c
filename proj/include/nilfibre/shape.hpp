#ifndef NILFIBRE_SHAPE_HPP
#define NILFIBRE_SHAPE_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nilfibre {

// Column heights (c_1, ..., c_k) of the diagram; n = sum of parts.
class Composition {
 public:
  Composition() = default;
  // Throws std::invalid_argument unless every part is positive and k >= 1.
  explicit Composition(std::vector<int> parts);
  // Comma-separated positive integers, e.g. "1,2,2,1".
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int k() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  // 1-based column index.
  int height(int col) const { return parts_.at(col - 1); }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::string to_string(const Composition& comp);

// Every composition of n, in lexicographic order of parts.
std::vector<Composition> compositions_of(int n);

struct Box {
  int col = 0;
  int row = 0;
  auto operator<=>(const Box&) const = default;
};

// Coordinate (i, j) of the nilradical, i < j.
struct Root {
  int i = 0;
  int j = 0;
  auto operator<=>(const Root&) const = default;
};

using RootSet = std::set<Root>;

struct NeighbouringPair {
  int left = 0;
  int right = 0;
  int height = 0;
  auto operator<=>(const NeighbouringPair&) const = default;
};

// "(C2,C3)"
std::string label(const NeighbouringPair& p);

class StandardTableau {
 public:
  explicit StandardTableau(const Composition& comp);

  const Composition& composition() const { return comp_; }
  int n() const { return comp_.n(); }
  int k() const { return comp_.k(); }
  // Entries of column col, top to bottom.
  const std::vector<int>& column(int col) const { return columns_.at(col - 1); }
  int entry(Box b) const { return columns_.at(b.col - 1).at(b.row - 1); }
  int col_of(int value) const { return col_of_.at(value); }
  int row_of(int value) const { return row_of_.at(value); }

 private:
  Composition comp_;
  std::vector<std::vector<int>> columns_;
  std::vector<int> col_of_;
  std::vector<int> row_of_;
};

StandardTableau standard_tableau(const Composition& comp);

// Sorted by height descending, then left column ascending.
std::vector<NeighbouringPair> neighbouring_pairs(const Composition& comp);

// Boxes of rows 1..s in the columns ]C, C'].
std::vector<Box> left_rectangle(const StandardTableau& t, const NeighbouringPair& p);
std::vector<int> left_rectangle_entries(const StandardTableau& t, const NeighbouringPair& p);

RootSet m_basis(const Composition& comp);

bool is_levi_root(const StandardTableau& t, int i, int j);

// True when some column strictly between the pair's columns is taller than s.
bool has_taller_intermediate(const Composition& comp, const NeighbouringPair& p);

}  // namespace nilfibre

#endif  // NILFIBRE_SHAPE_HPP
