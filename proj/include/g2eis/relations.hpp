#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2eis/character.hpp"
#include "g2eis/coeff_ring.hpp"
#include "g2eis/laurent.hpp"

namespace g2eis {

// Rewrites non-canonical coefficient symbols into the free generators, using
// the functional equation c(s)c(-s) = 1 and c(0) = -1:
//   c_{i,-1}        -> polynomials in c_{.,1} and c_{-1,1}^{-1}
//   c_{i,-j}, j>=2  -> polynomials in c_{.,j} and c_{0,j}^{-1}
//   c_{0,0} = -1, c_{2m,0} -> polynomials in the odd c_{.,0}
//   U((T,k), v, m) at a non-canonical (k, v) -> the inverted partner series
//   U((T,k), 0, 2m) at the self-paired point -> odd coefficients and U0.
// Rules are derived on demand by formal series inversion and memoized.
class CoeffRewriter {
 public:
  const CoeffPoly& rule(const CoeffSymbol& s) const;
  CoeffPoly normalize(const CoeffPoly& p) const;
  LaurentSeries normalize(const LaurentSeries& s) const;

 private:
  CoeffPoly derive(const CoeffSymbol& s) const;
  mutable std::map<CoeffSymbol, CoeffPoly> cache_;
};

struct CRelation {
  CoeffSymbol lhs;
  CoeffPoly rhs;
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

// The zeta-coefficient relations obtained from c(s)c(-s) = 1 and c(0) = -1:
// c_{i,-1} for i = 1..max_order+1, c_{0,0}, c_{2m,0} for 2m <= max_order+1,
// and the inverse relations c_{0,-j} = c_{0,j}^{-1} for j = 2, 3.
std::vector<CRelation> derive_c_relations(int max_order);

// The instantiated unit relations for the class (cls, n) at the point
// k*cls + v: expresses the coefficients of the expansion at the
// non-canonical partner (n-k, -v) up to derivative order max_deriv.
std::vector<CRelation> unit_relations(const std::string& cls, int n, long k, const Rat& v,
                                      int max_deriv);

enum class OffLattice { Error, UnitSymbol };

// Expansion of c at arg = (torsion) + base + m*var as a truncated Laurent
// series in var with rel_order coefficients past the leading term.
// Trivial torsion at an integer base j uses the c_{i,j} symbols (with
// ord_j(c) bookkeeping); nontrivial torsion uses unit symbols. A trivial
// torsion part at a non-integer base is an off-lattice point: an error by
// default, or an opaque unit expansion under OffLattice::UnitSymbol.
LaurentSeries expand_c(const Gl1Char& arg, const std::string& var, int rel_order,
                       const CoeffRewriter& rw, OffLattice policy = OffLattice::Error);

}  // namespace g2eis
