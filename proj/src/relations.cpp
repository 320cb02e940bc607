#include "g2eis/relations.hpp"

#include <limits>

namespace g2eis {

namespace {

const std::string kDummyVar = "_x";

// sum_{i=ord_j}^{ord_j+terms-1} c_{i,j} x^i, raw symbols (no rewriting)
LaurentSeries zeta_symbol_series(int j, int terms) {
  int ord = zeta_ord(j);
  std::vector<CoeffPoly> coeffs;
  for (int i = ord; i < ord + terms; ++i) coeffs.push_back(CoeffPoly::symbol(CoeffSymbol::zeta(i, j)));
  return LaurentSeries(kDummyVar, ord, ord + terms, std::move(coeffs));
}

// sum_{m=0}^{terms-1} U((cls,n,k), v, m) x^m, raw symbols
LaurentSeries unit_symbol_series(const std::string& cls, int n, long k, const Rat& v, int terms) {
  std::vector<CoeffPoly> coeffs;
  for (int m = 0; m < terms; ++m)
    coeffs.push_back(CoeffPoly::symbol(CoeffSymbol::unit(cls, n, k, v, m)));
  return LaurentSeries(kDummyVar, 0, terms, std::move(coeffs));
}

// f(x) -> f(c*x)
LaurentSeries rescale_var(const LaurentSeries& f, const Rat& c) {
  if (c == 0) throw std::invalid_argument("rescale by zero");
  auto cpow = [&](int d) {
    Rat r = 1;
    int a = d >= 0 ? d : -d;
    for (int t = 0; t < a; ++t) r = r * c;
    if (d < 0) r = Rat(denominator(r), numerator(r));
    return r;
  };
  std::vector<CoeffPoly> coeffs;
  for (int d = f.min_deg(); d < f.trunc(); ++d) coeffs.push_back(cpow(d) * f.coeff(d));
  return LaurentSeries(f.var(), f.min_deg(), f.trunc(), std::move(coeffs));
}

}  // namespace

const CoeffPoly& CoeffRewriter::rule(const CoeffSymbol& s) const {
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(s, derive(s)).first->second;
}

CoeffPoly CoeffRewriter::derive(const CoeffSymbol& s) const {
  if (s.canonical()) throw std::logic_error("no rule for canonical symbol " + s.str());
  if (s.kind == CoeffSymbol::Kind::ZetaCoeff) {
    if (s.j <= -1) {
      // c(j + x) = 1 / c(-j - x): invert the positive-side series.
      int terms = s.i - zeta_ord(s.j) + 1;
      LaurentSeries pos = zeta_symbol_series(-s.j, terms + 2);
      LaurentSeries inv = normalize(rescale_var(pos, -1)).inverse();
      return inv.coeff(s.i);
    }
    // j == 0, even index: from C(x) C(-x) = 1 with C = -1 + sum c_{i,0} x^i.
    if (s.i == 0) return CoeffPoly::constant(-1);
    // c_{2m,0} = 1/2 sum_{a=1}^{2m-1} (-1)^a c_{a,0} c_{2m-a,0}, lower even
    // indices already rewritten.
    CoeffPoly acc;
    for (int a = 1; a < s.i; ++a) {
      CoeffPoly pa = normalize(CoeffPoly::symbol(CoeffSymbol::zeta(a, 0)));
      CoeffPoly pb = normalize(CoeffPoly::symbol(CoeffSymbol::zeta(s.i - a, 0)));
      CoeffPoly term = pa * pb;
      acc = (a % 2 == 0) ? acc + term : acc - term;
    }
    return Rat(1, 2) * acc;
  }
  if (s.kind == CoeffSymbol::Kind::UnitC) {
    if (s.self_inverse() || (s.value == 0 && (2 * s.k) % s.order == 0 && s.k != 0)) {
      // Self-paired point: S(x) S(-x) = 1 determines the even coefficients.
      // coefficient of x^{2m}: sum_{a+b=2m} (-1)^b U_a U_b = 0.
      CoeffPoly acc;
      for (int a = 1; a < s.deriv; ++a) {
        CoeffPoly pa = normalize(CoeffPoly::symbol(CoeffSymbol::unit(s.cls, s.order, s.k, s.value, a)));
        CoeffPoly pb = normalize(
            CoeffPoly::symbol(CoeffSymbol::unit(s.cls, s.order, s.k, s.value, s.deriv - a)));
        CoeffPoly term = pa * pb;
        acc = (a % 2 == 0) ? acc - term : acc + term;
      }
      CoeffPoly u0 = CoeffPoly::symbol(CoeffSymbol::unit(s.cls, s.order, s.k, s.value, 0));
      // 1/(2 U0) = U0 / 2 since U0^2 = 1.
      return Rat(1, 2) * (u0 * acc);
    }
    // Non-canonical orientation: c(kT + v + x) = 1 / c((n-k)T - v - x).
    long pk = s.k == 0 ? 0 : s.order - s.k;
    LaurentSeries partner = unit_symbol_series(s.cls, s.order, pk, -s.value, s.deriv + 1);
    LaurentSeries inv = normalize(rescale_var(partner, -1)).inverse();
    return inv.coeff(s.deriv);
  }
  throw std::logic_error("no rule for symbol " + s.str());
}

CoeffPoly CoeffRewriter::normalize(const CoeffPoly& p) const {
  CoeffPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.all_canonical()) {
      out.add_term(m, c);
      continue;
    }
    CoeffPoly acc = CoeffPoly::constant(c);
    Monomial residual;
    for (const auto& [sym, e] : m.factors()) {
      if (sym.canonical()) {
        residual = residual.times(Monomial::of(sym, e));
        continue;
      }
      const CoeffPoly& rhs = rule(sym);
      if (e >= 0) {
        acc = acc * rhs.pow(e);
      } else {
        acc = acc * rhs.unit_inverse().pow(-e);
      }
    }
    out = out + acc * CoeffPoly::monomial(residual);
  }
  return out;
}

LaurentSeries CoeffRewriter::normalize(const LaurentSeries& s) const {
  std::vector<CoeffPoly> coeffs;
  for (int d = s.min_deg(); d < s.trunc(); ++d) coeffs.push_back(normalize(s.coeff(d)));
  return LaurentSeries(s.var(), s.min_deg(), s.trunc(), std::move(coeffs));
}

std::vector<CRelation> derive_c_relations(int max_order) {
  if (max_order < 1) throw std::invalid_argument("derive_c_relations: max_order must be >= 1");
  CoeffRewriter rw;
  std::vector<CRelation> rels;
  for (int i = 1; i <= max_order + 1; ++i) {
    CoeffSymbol s = CoeffSymbol::zeta(i, -1);
    rels.push_back({s, rw.rule(s)});
  }
  rels.push_back({CoeffSymbol::zeta(0, 0), rw.rule(CoeffSymbol::zeta(0, 0))});
  for (int m = 2; m <= max_order + 1; m += 2) {
    CoeffSymbol s = CoeffSymbol::zeta(m, 0);
    rels.push_back({s, rw.rule(s)});
  }
  for (int j = 2; j <= 3; ++j) {
    CoeffSymbol s = CoeffSymbol::zeta(0, -j);
    rels.push_back({s, rw.rule(s)});
  }
  return rels;
}

std::vector<CRelation> unit_relations(const std::string& cls, int n, long k, const Rat& v,
                                      int max_deriv) {
  if (n < 1) throw std::invalid_argument("unit_relations: order must be finite and >= 1");
  CoeffRewriter rw;
  std::vector<CRelation> rels;
  for (int m = 0; m <= max_deriv; ++m) {
    CoeffSymbol s = CoeffSymbol::unit(cls, n, k, v, m);
    if (s.canonical()) {
      // canonical orientation requested: report the partner's rules instead
      s = CoeffSymbol::unit(cls, n, n - k, -v, m);
      if (s.canonical()) continue;  // self-paired odd / deriv-0 case
    }
    rels.push_back({s, rw.rule(s)});
  }
  return rels;
}

LaurentSeries expand_c(const Gl1Char& arg, const std::string& var, int rel_order,
                       const CoeffRewriter& rw, OffLattice policy) {
  if (rel_order < 1) throw std::invalid_argument("expand_c: rel_order must be >= 1");
  for (const auto& v : arg.variables())
    if (v != var)
      throw std::invalid_argument("expand_c: argument depends on extra variable '" + v + "'");
  Rat m = arg.coeff(var);
  Rat base = arg.cst;
  const TorsionPart& tor = arg.tor;

  auto scaled_series = [&](const LaurentSeries& raw) {
    // substitute x -> m*var into a raw symbol series (in kDummyVar)
    if (m == 0) throw std::logic_error("scaled_series: zero increment");
    LaurentSeries s = rescale_var(raw, m);
    std::vector<CoeffPoly> coeffs;
    for (int d = s.min_deg(); d < s.trunc(); ++d) coeffs.push_back(s.coeff(d));
    return LaurentSeries(var, s.min_deg(), s.trunc(), std::move(coeffs));
  };

  if (tor.trivial()) {
    if (!is_integer(base)) {
      if (policy == OffLattice::Error)
        throw OffLatticeError("expansion of c at off-lattice point " + rat_str(base) +
                              " with trivial torsion");
      // Opaque unit for the trivial class at a non-integer point.
      bool canonical = base > 0;
      if (m == 0) {
        CoeffSymbol u0 = CoeffSymbol::unit("1", 1, 0, canonical ? base : -base, 0);
        CoeffPoly p = CoeffPoly::symbol(u0, canonical ? 1 : -1);
        return LaurentSeries::constant(var, p, rel_order);
      }
      if (canonical)
        return rw.normalize(scaled_series(unit_symbol_series("1", 1, 0, base, rel_order)));
      LaurentSeries partner = scaled_series(unit_symbol_series("1", 1, 0, -base, rel_order));
      return rw.normalize(rescale_var(partner, -1)).inverse();
    }
    long j = to_long(base);
    if (j > std::numeric_limits<int>::max() || j < std::numeric_limits<int>::min())
      throw std::invalid_argument("expand_c: base point out of range");
    int ji = static_cast<int>(j);
    if (m == 0) {
      if (ji == 1 || ji == -1)
        throw std::invalid_argument("expand_c: constant argument at the pole/zero of c");
      CoeffPoly v0 = ji == 0 ? CoeffPoly::constant(-1) : CoeffPoly::symbol(CoeffSymbol::zeta(0, ji));
      return LaurentSeries::constant(var, rw.normalize(v0), rel_order);
    }
    return rw.normalize(scaled_series(zeta_symbol_series(ji, rel_order)));
  }

  // Nontrivial torsion: unit expansion.
  if (tor.order == 0)
    throw std::invalid_argument("expand_c: torsion class '" + tor.cls + "' needs a declared order");
  int n = tor.order;
  long k = ((tor.k % n) + n) % n;
  CoeffSymbol probe = CoeffSymbol::unit(tor.cls, n, k, base, 0);
  bool canonical = probe.canonical() || probe.self_inverse();
  if (m == 0) {
    CoeffPoly p = canonical ? CoeffPoly::symbol(probe)
                            : CoeffPoly::symbol(CoeffSymbol::unit(tor.cls, n, n - k, -base, 0), -1);
    return LaurentSeries::constant(var, p, rel_order);
  }
  if (canonical)
    return rw.normalize(scaled_series(unit_symbol_series(tor.cls, n, k, base, rel_order)));
  LaurentSeries partner = scaled_series(unit_symbol_series(tor.cls, n, n - k, -base, rel_order));
  return rw.normalize(rescale_var(partner, -1)).inverse();
}

}  // namespace g2eis
