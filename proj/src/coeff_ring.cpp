#include "g2eis/coeff_ring.hpp"

#include <algorithm>
#include <sstream>

namespace g2eis {

int zeta_ord(int j) {
  if (j == -1) return 1;
  if (j == 1) return -1;
  return 0;
}

CoeffSymbol CoeffSymbol::zeta(int i, int j) {
  if (i < zeta_ord(j))
    throw std::invalid_argument("c_{" + std::to_string(i) + "," + std::to_string(j) +
                                "}: index below ord_j(c)");
  CoeffSymbol s;
  s.kind = Kind::ZetaCoeff;
  s.i = i;
  s.j = j;
  return s;
}

CoeffSymbol CoeffSymbol::unit(const std::string& cls, int order, long k, const Rat& v, int deriv) {
  if (order < 1) throw std::invalid_argument("unit symbol needs a finite torsion order");
  if (deriv < 0) throw std::invalid_argument("negative derivative order");
  CoeffSymbol s;
  s.kind = Kind::UnitC;
  s.cls = cls;
  s.order = order;
  s.k = ((k % order) + order) % order;
  if (s.k == 0) {  // trivial multiple: fold into the trivial class
    s.cls = "1";
    s.order = 1;
  }
  s.value = v;
  s.deriv = deriv;
  if (s.order == 1 && is_integer(s.value))
    throw std::invalid_argument("trivial-class unit at integer point should be a zeta expansion");
  return s;
}

bool CoeffSymbol::invertible() const {
  switch (kind) {
    case Kind::ZetaCoeff:
      return (i == -1 && j == 1) || (i == 0 && (j >= 2 || j <= -2));
    case Kind::UnitC:
      return deriv == 0;
    default:
      return false;
  }
}

bool CoeffSymbol::self_inverse() const {
  return kind == Kind::UnitC && value == 0 && (2 * k) % order == 0 && deriv == 0;
}

bool CoeffSymbol::canonical() const {
  switch (kind) {
    case Kind::ZetaCoeff:
      if (j >= 1) return true;
      if (j == 0) return i % 2 == 1;  // c_{0,0} and even indices rewrite
      return false;                   // negative base points rewrite
    case Kind::UnitC: {
      if (value > 0) return true;
      if (value < 0) return false;
      // value == 0: orient by the multiplier; the self-paired case keeps the
      // symbol for deriv 0 and odd deriv, and rewrites even derivatives.
      long kk = k, nk = order - k;
      if (kk < nk) return true;
      if (kk > nk) return false;
      return deriv == 0 || deriv % 2 == 1;
    }
    default:
      return true;
  }
}

std::string CoeffSymbol::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ZetaCoeff:
      os << "c{" << i << "," << j << "}";
      break;
    case Kind::UnitC: {
      os << "U";
      if (deriv > 0) os << deriv;
      os << "{";
      if (k == 0) os << "1";
      else {
        if (k != 1) os << k;
        os << cls;
      }
      os << ";" << rat_str(value) << "}";
      break;
    }
    case Kind::Log1:
      os << "l1";
      break;
    case Kind::Log2:
      os << "l2";
      break;
  }
  return os.str();
}

Monomial Monomial::of(const CoeffSymbol& s, int e) {
  Monomial m;
  m.push(s, e);
  return m;
}

void Monomial::push(const CoeffSymbol& s, int e) {
  if (e == 0) return;
  int ee = e;
  if (s.self_inverse()) {
    ee = ((ee % 2) + 2) % 2;
    if (ee == 0) return;
  }
  if (ee < 0 && !s.invertible())
    throw std::invalid_argument("symbol has no admissible inverse: " + s.str());
  auto it = std::lower_bound(f_.begin(), f_.end(), s,
                             [](const auto& p, const CoeffSymbol& x) { return p.first < x; });
  if (it != f_.end() && it->first == s) {
    int combined = it->second + ee;
    if (s.self_inverse()) combined = ((combined % 2) + 2) % 2;
    if (combined == 0) f_.erase(it);
    else {
      if (combined < 0 && !s.invertible())
        throw std::invalid_argument("symbol has no admissible inverse: " + s.str());
      it->second = combined;
    }
  } else {
    f_.insert(it, {s, ee});
  }
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [s, e] : f_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m = *this;
  for (const auto& [s, e] : o.f_) m.push(s, e);
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (const auto& [s, e] : f_) m.push(s, -e);
  return m;
}

bool Monomial::all_canonical() const {
  return std::all_of(f_.begin(), f_.end(), [](const auto& p) { return p.first.canonical(); });
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, e] : f_) {
    if (!first) os << "*";
    os << s.str();
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

CoeffPoly CoeffPoly::constant(const Rat& c) {
  CoeffPoly p;
  p.add_term(Monomial::one(), c);
  return p;
}

CoeffPoly CoeffPoly::symbol(const CoeffSymbol& s, int e) {
  CoeffPoly p;
  p.add_term(Monomial::of(s, e), 1);
  return p;
}

CoeffPoly CoeffPoly::monomial(const Monomial& m, const Rat& c) {
  CoeffPoly p;
  p.add_term(m, c);
  return p;
}

bool CoeffPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Rat CoeffPoly::constant_value() const {
  if (t_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value on non-constant poly");
  return t_.begin()->second;
}

CoeffPoly& CoeffPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return *this;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
  return *this;
}

bool CoeffPoly::is_unit_monomial() const {
  if (t_.size() != 1) return false;
  const auto& [m, c] = *t_.begin();
  if (c == 0) return false;
  return std::all_of(m.factors().begin(), m.factors().end(),
                     [](const auto& p) { return p.first.invertible(); });
}

CoeffPoly CoeffPoly::unit_inverse() const {
  if (!is_unit_monomial())
    throw std::invalid_argument("not an invertible coefficient: " + str());
  const auto& [m, c] = *t_.begin();
  return CoeffPoly::monomial(m.inverse(), Rat(denominator(c), numerator(c)));
}

CoeffPoly CoeffPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  CoeffPoly r = CoeffPoly::constant(1);
  for (int t = 0; t < e; ++t) r = r * (*this);
  return r;
}

std::string CoeffPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rat a = c;
    if (!first) {
      os << (a > 0 ? " + " : " - ");
      if (a < 0) a = -a;
    }
    if (m.is_one()) os << rat_str(a);
    else {
      if (a == 1) os << m.str();
      else if (a == -1 && first) os << "-" << m.str();
      else os << rat_str(a) << "*" << m.str();
    }
    first = false;
  }
  return os.str();
}

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

CoeffPoly operator-(const CoeffPoly& a) {
  CoeffPoly r;
  for (const auto& [m, c] : a.t_) r.add_term(m, -c);
  return r;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

CoeffPoly operator*(const Rat& c, const CoeffPoly& a) {
  CoeffPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : a.t_) r.add_term(m, c * k);
  return r;
}

CoeffPoly log_pairing(const Rat& c, const Rat& d) {
  CoeffPoly p;
  p.add_term(Monomial::of(CoeffSymbol::log1()), c);
  p.add_term(Monomial::of(CoeffSymbol::log2()), d);
  return p;
}

}  // namespace g2eis
