#ifndef NILFIBRE_REVERSE_HPP
#define NILFIBRE_REVERSE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilfibre/shape.hpp"

namespace nilfibre {

enum class Color : std::uint8_t { Black, Red };

struct Cell {
  int value = 0;
  Color color = Color::Black;
  auto operator<=>(const Cell&) const = default;
};

// Sorted list of values with repetition.
using Multiset = std::vector<int>;

class ColoredTableau {
 public:
  ColoredTableau() = default;
  // columns[c-1] lists column c top to bottom. The composition fixes the
  // standard filling the tableau was derived from.
  ColoredTableau(Composition origin, std::vector<std::vector<Cell>> columns);

  const Composition& origin() const { return origin_; }
  int n() const { return origin_.n(); }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  const std::vector<std::vector<Cell>>& columns() const { return columns_; }
  const std::vector<Cell>& column(int col) const { return columns_.at(col - 1); }
  int height(int col) const { return static_cast<int>(column(col).size()); }
  // Row of the lowest black cell, 0 when the column has none.
  int black_height(int col) const;
  int max_height() const;

  std::optional<Cell> at(Box b) const;
  Box black_position(int value) const;
  // Every box holding value, left to right.
  std::vector<Box> occurrences(int value) const;
  int red_count() const;

  // First broken structural invariant, if any.
  std::optional<std::string> structure_violation() const;

  std::size_t hash() const;
  auto operator<=>(const ColoredTableau&) const = default;

 private:
  Composition origin_;
  std::vector<std::vector<Cell>> columns_;
};

struct ColoredTableauHash {
  std::size_t operator()(const ColoredTableau& t) const { return t.hash(); }
};

class StructureViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class EnablingViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when no eligible source column exists for a pair at this stage.
class NotImplementable : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PairState {
  NeighbouringPair pair;
  int left_boundary = 0;  // C^-
  int right_limit = 0;    // column of the row-s right boundary box
  std::vector<int> eligible;
};

struct ImplementationChoice {
  int pair_index = 0;
  int source_col = 0;
  int landing_col = 0;
  int shift_stop = 0;
  auto operator<=>(const ImplementationChoice&) const = default;
};

struct Trapezium {
  NeighbouringPair pair;
  std::vector<Box> left_boundary;   // b_1 .. b_s
  std::vector<Box> right_boundary;  // b'_1 .. b'_s
  std::vector<Box> members;         // rows 1..s, columns [b_t, b'_t]
  std::vector<Box> left_members;    // rows 1..s, columns ]b_t, b'_t]
  bool right_boundary_black = true;  // holds for every pair not yet implemented
};

struct PseudoColumn {
  int col = 0;
  std::vector<int> values;  // rows 1..s, red included
};

struct ImplementationTrace {
  std::vector<NeighbouringPair> order;
  std::vector<ImplementationChoice> choices;
  std::vector<ColoredTableau> stages;  // stages[0] is the standard tableau
};

ColoredTableau init(const StandardTableau& t);

Trapezium trapezium(const ColoredTableau& rt, const NeighbouringPair& p);

// Throws EnablingViolation when the leftmost eligible column is not C^- of
// height exactly s.
PairState pair_state(const ColoredTableau& rt, const NeighbouringPair& p);

// Sources right to left, then stops right to left. Throws NotImplementable
// when only the leftmost eligible column exists.
std::vector<ImplementationChoice> enumerate_choices(const ColoredTableau& rt,
                                                    const NeighbouringPair& p);

// Throws std::invalid_argument for a choice outside enumerate_choices and
// StructureViolation when the result breaks a structural invariant.
ColoredTableau implement_pair(const ColoredTableau& rt, const NeighbouringPair& p,
                              const ImplementationChoice& ch);

// Black boxes of rows 1..s strictly right of b_t up to b'_t.
int black_count(const ColoredTableau& rt, const NeighbouringPair& p);

// True when row s of the left trapezium holds a red entry.
bool red_in_left_row(const ColoredTableau& rt, const NeighbouringPair& p);

RootSet excluded_roots(const ColoredTableau& rt);

Multiset red_multiset(const ColoredTableau& rt);

// B, the interior height-s columns of S strictly inside the trapezium, B'.
std::vector<PseudoColumn> pseudo_columns(const ColoredTableau& rt, const NeighbouringPair& p);

}  // namespace nilfibre

#endif  // NILFIBRE_REVERSE_HPP
