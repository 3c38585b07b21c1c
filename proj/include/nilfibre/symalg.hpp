#ifndef NILFIBRE_SYMALG_HPP
#define NILFIBRE_SYMALG_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nilfibre {

using Integer = mpz_class;

// A polynomial variable: either the coordinate x_{i,j} (i < j) or the
// deformation parameter c. Deform orders before every coordinate.
struct Variable {
  int i = 0;
  int j = 0;

  static constexpr Variable deform() { return {0, 0}; }
  static Variable coord(int i, int j);

  constexpr bool is_deform() const { return i == 0; }
  auto operator<=>(const Variable&) const = default;
};

struct Factor {
  Variable var;
  int exp = 1;
  auto operator<=>(const Factor&) const = default;
};

// Product of variables with positive exponents, kept sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial of(Variable v, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(Variable v) const;
  bool contains(Variable v) const { return exponent(v) > 0; }

  Monomial operator*(const Monomial& other) const;
  // Removes every power of c.
  Monomial without_deform() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Canonical term order: graded, then lexicographic with x_{1,2} the largest
// variable and c the smallest. `operator()` is "a comes before b".
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, TermOrder>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT: integers promote to constants
  explicit Polynomial(const Integer& constant);

  static Polynomial var(Variable v);
  static Polynomial term(const Integer& coeff, Monomial m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of m, zero when absent.
  Integer coeff(const Monomial& m) const;
  // Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // True when no term repeats a coordinate variable.
  bool is_multilinear() const;
  std::set<Variable> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  bool operator==(const Polynomial&) const = default;

 private:
  void add_term(const Monomial& m, const Integer& c);
  TermMap terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

// Drops every term that contains one of the killed variables.
Polynomial substitute_zero(const Polynomial& p, const std::set<Variable>& kill);

// Exact determinant by Laplace expansion memoized over column subsets
// (2^m * m subset transitions for an m x m matrix). The empty matrix has
// determinant 1. Throws std::invalid_argument for non-square input or m > 20.
Polynomial det_symbolic(const PolyMatrix& m);

struct LowestCoefficient {
  Polynomial coeff;
  int power = 0;
};

// Smallest power e of c over all terms, and the c-free polynomial formed by
// those terms divided by c^e. Throws std::domain_error on the zero polynomial.
LowestCoefficient lowest_c_coefficient(const Polynomial& p);

bool equals_up_to_sign(const Polynomial& p, const Polynomial& q);

// Returns p or -p, whichever has a positive leading coefficient.
Polynomial sign_normalized(const Polynomial& p);

// `x_{2,4}*x_{3,5} - x_{2,5}*x_{3,4}`
std::string to_text(const Polynomial& p);
std::string to_text(Variable v);

}  // namespace nilfibre

#endif  // NILFIBRE_SYMALG_HPP
