#include "nilfibre/symalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace nilfibre {

Variable Variable::coord(int i, int j) {
  if (i < 1 || i >= j)
    throw std::invalid_argument("coordinate x_{i,j} needs 1 <= i < j");
  return {i, j};
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  for (const Factor& f : factors) {
    if (f.exp < 0) throw std::invalid_argument("negative exponent");
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var)
      factors_.back().exp += f.exp;
    else
      factors_.push_back(f);
  }
}

Monomial Monomial::of(Variable v, int exp) { return Monomial({{v, exp}}); }

int Monomial::degree() const {
  int d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

int Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const Factor& f, const Variable& x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without_deform() const {
  Monomial out = *this;
  if (!out.factors_.empty() && out.factors_.front().var.is_deform())
    out.factors_.erase(out.factors_.begin());
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // Coordinates sit after c in storage; compare them first, smallest index
  // being the largest variable.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin(), ib = fb.begin();
  if (ia != fa.end() && ia->var.is_deform()) ++ia;
  if (ib != fb.end() && ib->var.is_deform()) ++ib;
  for (; ia != fa.end() && ib != fb.end(); ++ia, ++ib) {
    if (ia->var != ib->var) return ia->var < ib->var;
    if (ia->exp != ib->exp) return ia->exp > ib->exp;
  }
  if (ia != fa.end()) return true;
  if (ib != fb.end()) return false;
  return a.exponent(Variable::deform()) > b.exponent(Variable::deform());
}

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::var(Variable v) { return term(1, Monomial::of(v)); }

Polynomial Polynomial::term(const Integer& coeff, Monomial m) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(std::move(m), coeff);
  return p;
}

Integer Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::is_multilinear() const {
  for (const auto& [m, c] : terms_)
    for (const Factor& f : m.factors())
      if (!f.var.is_deform() && f.exp != 1) return false;
  return true;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> vars;
  for (const auto& [m, c] : terms_)
    for (const Factor& f : m.factors()) vars.insert(f.var);
  return vars;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  Integer prod;
  for (const auto& [ma, ca] : p.terms_)
    for (const auto& [mb, cb] : q.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial substitute_zero(const Polynomial& p, const std::set<Variable>& kill) {
  if (kill.empty()) return p;
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const bool killed = std::any_of(
        m.factors().begin(), m.factors().end(),
        [&](const Factor& f) { return kill.count(f.var) != 0; });
    if (!killed) out += Polynomial::term(c, m);
  }
  return out;
}

Polynomial det_symbolic(const PolyMatrix& m) {
  const std::size_t size = m.size();
  for (const auto& row : m)
    if (row.size() != size) throw std::invalid_argument("determinant of a non-square matrix");
  if (size == 0) return Polynomial(1);
  if (size > 20) throw std::invalid_argument("determinant too large for subset expansion");

  // minors[mask] = det of the last popcount(mask) rows restricted to the
  // columns in mask. Built upward from the bottom row.
  const std::uint32_t full = (std::uint32_t{1} << size) - 1;
  std::vector<Polynomial> minors(std::size_t{full} + 1);
  minors[0] = Polynomial(1);

  std::vector<std::vector<std::uint32_t>> by_count(size + 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    by_count[std::popcount(mask)].push_back(mask);

  for (std::size_t k = 1; k <= size; ++k) {
    const std::size_t row = size - k;
    for (std::uint32_t mask : by_count[k]) {
      Polynomial acc;
      int position = 0;
      for (std::size_t col = 0; col < size; ++col) {
        if (!(mask >> col & 1u)) continue;
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << col);
        const Polynomial& entry = m[row][col];
        if (!entry.is_zero() && !minors[rest].is_zero()) {
          Polynomial t = entry * minors[rest];
          if (position % 2 == 0)
            acc += t;
          else
            acc -= t;
        }
        ++position;
      }
      minors[mask] = std::move(acc);
    }
    // Masks of size k-1 are no longer needed.
    for (std::uint32_t mask : by_count[k - 1]) minors[mask] = Polynomial();
  }
  return minors[full];
}

LowestCoefficient lowest_c_coefficient(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no lowest coefficient");
  int lowest = -1;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(Variable::deform());
    if (lowest < 0 || e < lowest) lowest = e;
  }
  LowestCoefficient out;
  out.power = lowest;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(Variable::deform()) == lowest)
      out.coeff += Polynomial::term(c, m.without_deform());
  return out;
}

bool equals_up_to_sign(const Polynomial& p, const Polynomial& q) {
  return p == q || p == -q;
}

Polynomial sign_normalized(const Polynomial& p) {
  if (p.is_zero() || p.terms().begin()->second > 0) return p;
  return -p;
}

std::string to_text(Variable v) {
  if (v.is_deform()) return "c";
  return "x_{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}";
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      out << mag.get_str();
      need_star = true;
    }
    // Coordinates first, c last, matching the term order.
    std::vector<Factor> fs = m.factors();
    std::stable_partition(fs.begin(), fs.end(),
                          [](const Factor& f) { return !f.var.is_deform(); });
    for (const Factor& f : fs) {
      if (need_star) out << "*";
      out << to_text(f.var);
      if (f.exp != 1) out << "^" << f.exp;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace nilfibre
