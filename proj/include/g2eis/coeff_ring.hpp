#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2eis/character.hpp"
#include "g2eis/rational.hpp"

namespace g2eis {

// Generators of the coefficient ring:
//   ZetaCoeff(i, j)            c_{i,j}, the i-th Laurent coefficient of c at the
//                              integer j (i >= ord_j(c));
//   UnitC(cls, order, k, v, d) the d-th Taylor coefficient of x -> c(k*cls + v + x)
//                              at 0, where c(k*cls + v) is a unit;
//   Log1, Log2                 the symbols l1, l2 with <c,d> = c*l1 + d*l2.
// Inverses are represented by negative exponents in monomials; an inverse is
// only admitted for c_{-1,1}, c_{0,j} with |j| >= 2, and unit leading
// coefficients (derivative order 0).
struct CoeffSymbol {
  enum class Kind : std::uint8_t { ZetaCoeff, UnitC, Log1, Log2 };

  Kind kind = Kind::ZetaCoeff;
  int i = 0, j = 0;       // ZetaCoeff indices
  std::string cls;        // UnitC torsion class name ("1" for the trivial class)
  int order = 1;          // UnitC torsion class order
  long k = 0;             // UnitC torsion multiplier, in [0, order)
  Rat value = 0;          // UnitC base value
  int deriv = 0;          // UnitC Taylor index

  static CoeffSymbol zeta(int i, int j);
  static CoeffSymbol unit(const std::string& cls, int order, long k, const Rat& v, int deriv);
  static CoeffSymbol log1() { return CoeffSymbol{Kind::Log1, 0, 0, "", 1, 0, 0, 0}; }
  static CoeffSymbol log2() { return CoeffSymbol{Kind::Log2, 0, 0, "", 1, 0, 0, 0}; }

  bool invertible() const;
  // Self-inverse units satisfy U^2 = 1 (the pairing (k, v) ~ (n-k, -v) fixed
  // point with derivative order 0); exponents reduce mod 2.
  bool self_inverse() const;
  // Canonical generators: c_{i,j} with j >= 1; c_{i,0} with i odd; units at
  // a canonically oriented (k, v); everything else rewrites.
  bool canonical() const;

  std::string str() const;
  friend bool operator==(const CoeffSymbol&, const CoeffSymbol&) = default;
  auto key() const { return std::tie(kind, j, i, cls, order, k, value, deriv); }
  friend bool operator<(const CoeffSymbol& a, const CoeffSymbol& b) { return a.key() < b.key(); }
};

// ord_j(c): 1 at j = -1, -1 at j = 1, 0 at other integers.
int zeta_ord(int j);

// Sorted factor list with nonzero integer exponents; negative exponents only
// on invertible symbols; self-inverse symbols keep exponent in {1} (mod 2).
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial of(const CoeffSymbol& s, int e = 1);

  const std::vector<std::pair<CoeffSymbol, int>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int degree() const;
  Monomial times(const Monomial& o) const;
  Monomial inverse() const;  // throws if any factor is not invertible
  bool all_canonical() const;

  std::string str() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

 private:
  void push(const CoeffSymbol& s, int e);
  std::vector<std::pair<CoeffSymbol, int>> f_;
};

// Polynomial over Q in the coefficient symbols, stored canonically (sorted
// monomials, zero terms dropped). Rewriting of non-canonical symbols is done
// by CoeffRewriter (relations.hpp); ring arithmetic itself never introduces
// non-canonical symbols.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  static CoeffPoly zero() { return CoeffPoly(); }
  static CoeffPoly constant(const Rat& c);
  static CoeffPoly symbol(const CoeffSymbol& s, int e = 1);
  static CoeffPoly monomial(const Monomial& m, const Rat& c = 1);

  const std::map<Monomial, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  CoeffPoly& add_term(const Monomial& m, const Rat& c);
  // True iff the poly is a single term c*m with every factor invertible.
  bool is_unit_monomial() const;
  CoeffPoly unit_inverse() const;  // throws unless is_unit_monomial()

  CoeffPoly pow(int e) const;  // e >= 0
  std::string str() const;
  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

  friend CoeffPoly operator+(const CoeffPoly&, const CoeffPoly&);
  friend CoeffPoly operator-(const CoeffPoly&, const CoeffPoly&);
  friend CoeffPoly operator-(const CoeffPoly&);
  friend CoeffPoly operator*(const CoeffPoly&, const CoeffPoly&);
  friend CoeffPoly operator*(const Rat&, const CoeffPoly&);

 private:
  std::map<Monomial, Rat> t_;
};

// <c,d> = c*l1 + d*l2
CoeffPoly log_pairing(const Rat& c, const Rat& d);

}  // namespace g2eis
