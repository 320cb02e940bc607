#include "g2eis/character.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace g2eis {

TorsionPart TorsionPart::make(const std::string& cls, int order, long k) {
  if (order < 0) throw std::invalid_argument("torsion order must be >= 0");
  TorsionPart t{cls, order, k};
  return t.reduced();
}

TorsionPart TorsionPart::reduced() const {
  TorsionPart t = *this;
  if (t.order == 1) t.k = 0;
  if (t.order >= 2) {
    long n = t.order;
    t.k = ((t.k % n) + n) % n;       // into [0, n)
    if (2 * t.k > n) t.k -= n;       // symmetric residue (-n/2, n/2]
  }
  if (t.k == 0) {
    t.cls.clear();
    t.order = 0;
  }
  return t;
}

std::string TorsionPart::str() const {
  if (k == 0) return "";
  std::ostringstream os;
  if (k == -1) os << "-";
  else if (k != 1) os << k;
  os << cls;
  return os.str();
}

TorsionPart operator+(const TorsionPart& a, const TorsionPart& b) {
  if (a.trivial()) return b.reduced();
  if (b.trivial()) return a.reduced();
  if (a.cls != b.cls || a.order != b.order)
    throw std::invalid_argument("cannot combine distinct torsion classes " + a.cls + " and " + b.cls);
  return TorsionPart::make(a.cls, a.order, a.k + b.k);
}

TorsionPart operator-(const TorsionPart& a) {
  if (a.trivial()) return a;
  return TorsionPart::make(a.cls, a.order, -a.k);
}

TorsionPart operator*(const Rat& c, const TorsionPart& t) {
  if (t.trivial()) return t;
  Rat k = c * t.k;
  if (!is_integer(k))
    throw std::invalid_argument("non-integral torsion multiple: " + rat_str(c) + " * " + t.str());
  return TorsionPart::make(t.cls, t.order, to_long(k));
}

Gl1Char Gl1Char::var(const std::string& v, const Rat& coeff) {
  Gl1Char c;
  if (coeff != 0) c.lin[v] = coeff;
  return c;
}

Gl1Char& Gl1Char::normalize() {
  for (auto it = lin.begin(); it != lin.end();) {
    if (it->second == 0) it = lin.erase(it);
    else ++it;
  }
  tor = tor.reduced();
  return *this;
}

Rat Gl1Char::coeff(const std::string& v) const {
  auto it = lin.find(v);
  return it == lin.end() ? Rat(0) : it->second;
}

std::vector<std::string> Gl1Char::variables() const {
  std::vector<std::string> vs;
  for (const auto& [v, c] : lin) vs.push_back(v);
  return vs;
}

Gl1Char Gl1Char::specialize(const std::map<std::string, Rat>& assignment) const {
  Gl1Char out;
  out.cst = cst;
  out.tor = tor;
  for (const auto& [v, c] : lin) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw std::invalid_argument("specialize: no value for variable '" + v + "'");
    out.cst += c * it->second;
  }
  return out.normalize();
}

Gl1Char Gl1Char::substitute(const std::string& v, const Gl1Char& repl) const {
  Gl1Char out = *this;
  auto it = out.lin.find(v);
  if (it == out.lin.end()) return out;
  Rat c = it->second;
  out.lin.erase(it);
  return (out + c * repl).normalize();
}

std::string Gl1Char::str() const {
  // term order: torsion part, then variables alphabetically, then constant
  std::ostringstream os;
  bool first = true;
  auto put = [&](const Rat& coeff, const std::string& sym) {
    if (coeff == 0) return;
    if (coeff > 0 && !first) os << "+";
    if (coeff == -1) os << "-";
    else if (coeff != 1) os << rat_str(coeff) << (sym.empty() ? "" : "");
    if (!sym.empty()) os << sym;
    else if (coeff == 1 || coeff == -1) os << "1";
    first = false;
  };
  if (!tor.trivial()) {
    os << tor.str();
    first = false;
  }
  for (const auto& [v, c] : lin) put(c, v);
  if (cst != 0) put(cst, "");
  if (first) os << "0";
  return os.str();
}

Gl1Char operator+(const Gl1Char& a, const Gl1Char& b) {
  Gl1Char out = a;
  for (const auto& [v, c] : b.lin) out.lin[v] += c;
  out.cst += b.cst;
  out.tor = a.tor + b.tor;
  return out.normalize();
}

Gl1Char operator-(const Gl1Char& a, const Gl1Char& b) { return a + (-b); }

Gl1Char operator-(const Gl1Char& a) {
  Gl1Char out;
  for (const auto& [v, c] : a.lin) out.lin[v] = -c;
  out.cst = -a.cst;
  out.tor = -a.tor;
  return out.normalize();
}

Gl1Char operator*(const Rat& c, const Gl1Char& a) {
  Gl1Char out;
  for (const auto& [v, k] : a.lin) out.lin[v] = c * k;
  out.cst = c * a.cst;
  out.tor = c * a.tor;
  return out.normalize();
}

TorusChar TorusChar::make(Gl1Char a, Gl1Char b, Orientation o) {
  TorusChar t;
  t.c1 = a.normalize();
  t.c2 = b.normalize();
  t.orient = o;
  return t;
}

TorusChar TorusChar::from_coords(Coord2 c, Orientation o) {
  return make(Gl1Char::constant(c.x), Gl1Char::constant(c.y), o);
}

TorusChar TorusChar::varpi1(Orientation o) { return from_coords({1, 0}, o); }
TorusChar TorusChar::varpi2(Orientation o) { return from_coords({0, 1}, o); }

TorusChar TorusChar::rho_P(Orientation o) {
  return make(Gl1Char::constant(0), Gl1Char::constant(Rat(3, 2)), o);
}

TorusChar TorusChar::delta_P_s(const std::string& svar, Orientation o) {
  return make(Gl1Char::constant(0), Gl1Char::var(svar, 3), o);
}

TorusChar TorusChar::specialize(const std::map<std::string, Rat>& a) const {
  return make(c1.specialize(a), c2.specialize(a), orient);
}

TorusChar TorusChar::substitute(const std::string& v, const Gl1Char& repl) const {
  return make(c1.substitute(v, repl), c2.substitute(v, repl), orient);
}

std::vector<std::string> TorusChar::variables() const {
  std::set<std::string> vs;
  for (const auto& v : c1.variables()) vs.insert(v);
  for (const auto& v : c2.variables()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::string TorusChar::str() const { return "[" + c1.str() + ", " + c2.str() + "]"; }

TorusChar operator+(const TorusChar& a, const TorusChar& b) {
  if (a.orient != b.orient) throw std::invalid_argument("orientation mismatch in TorusChar sum");
  return TorusChar::make(a.c1 + b.c1, a.c2 + b.c2, a.orient);
}

TorusChar operator-(const TorusChar& a, const TorusChar& b) {
  if (a.orient != b.orient) throw std::invalid_argument("orientation mismatch in TorusChar difference");
  return TorusChar::make(a.c1 - b.c1, a.c2 - b.c2, a.orient);
}

TorusChar operator*(const Rat& c, const TorusChar& a) {
  return TorusChar::make(c * a.c1, c * a.c2, a.orient);
}

Gl1Char coroot_pairing(const RootSystem& rs, const TorusChar& chi, const Root& gamma) {
  if (rs.orientation() != chi.orient)
    throw std::invalid_argument("orientation mismatch between character and root system");
  rs.find_root(gamma.m, gamma.n);  // membership check
  return (Rat(gamma.coroot.x) * chi.c1 + Rat(gamma.coroot.y) * chi.c2).normalize();
}

TorusChar weyl_act(const RootSystem& rs, const WeylElt& w, const TorusChar& chi) {
  if (rs.orientation() != chi.orient)
    throw std::invalid_argument("orientation mismatch between character and root system");
  TorusChar cur = chi;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const Root& g = (*it == SimpleRef::A) ? rs.alpha() : rs.beta();
    // s_g chi = chi - <chi, g^vee> g; for a simple root the pairing is just
    // the matching coordinate.
    Gl1Char pairing = (*it == SimpleRef::A) ? cur.c1 : cur.c2;
    TorusChar shift = TorusChar::make(Rat(g.coords.x) * pairing, Rat(g.coords.y) * pairing, cur.orient);
    cur = cur - shift;
  }
  return cur;
}

std::vector<IdentityCheck> verify_character_identity(bool scan_orders, int eta_order) {
  std::vector<IdentityCheck> out;
  const std::string eta = "eta";
  for (Orientation o : {Orientation::BetaLong, Orientation::AlphaLong}) {
    RootSystem rs(o);
    std::vector<bool> orders = scan_orders ? std::vector<bool>{true, false} : std::vector<bool>{true};
    for (bool rightmost : orders) {
      auto act = [&](const WeylElt& w, const TorusChar& chi) {
        return weyl_act(rs, rightmost ? w : w.reversed(), chi);
      };
      WeylElt wab = WeylElt::parse("ab");  // w_alpha w_beta
      WeylElt wba = WeylElt::parse("ba");  // w_beta w_alpha

      {  // w_alpha w_beta [0,1] = beta
        TorusChar lhs = act(wab, TorusChar::varpi2(o));
        TorusChar rhs = TorusChar::from_coords(rs.beta().coords, o);
        out.push_back({"w_a w_b [0,1] = beta", o, rightmost, lhs == rhs, lhs.str(), rhs.str()});
      }
      {  // w_beta w_alpha alpha = [0,1]
        TorusChar lhs = act(wba, TorusChar::from_coords(rs.alpha().coords, o));
        TorusChar rhs = TorusChar::varpi2(o);
        out.push_back({"w_b w_a alpha = [0,1]", o, rightmost, lhs == rhs, lhs.str(), rhs.str()});
      }
      {  // w_a w_b [0, s+eta] + u alpha/2 = [u+eta, 0] + s beta/2
        TorsionPart te = TorsionPart::make(eta, eta_order, 1);
        TorusChar base = TorusChar::make(Gl1Char::constant(0),
                                         Gl1Char::var("s") + Gl1Char::torsion(te), o);
        TorusChar alpha_half = Rat(1, 2) * TorusChar::from_coords(rs.alpha().coords, o);
        TorusChar beta_half = Rat(1, 2) * TorusChar::from_coords(rs.beta().coords, o);
        // u * alpha/2 and s * beta/2 as characters affine in the formal vars
        TorusChar lhs = act(wab, base) + TorusChar::make(Gl1Char::var("u", alpha_half.c1.cst),
                                                         Gl1Char::var("u", alpha_half.c2.cst), o);
        TorusChar rhs = TorusChar::make(Gl1Char::var("u") + Gl1Char::torsion(te), Gl1Char::constant(0), o) +
                        TorusChar::make(Gl1Char::var("s", beta_half.c1.cst),
                                        Gl1Char::var("s", beta_half.c2.cst), o);
        out.push_back({"w_a w_b [0,s+eta] + u alpha/2 = [u+eta,0] + s beta/2", o, rightmost,
                       lhs == rhs, lhs.str(), rhs.str()});
      }
    }
    {  // beta == varpi1 mod 2 (composition-order independent)
      Coord2 b = rs.beta().coords;
      bool holds = ((b.x - 1) % 2 == 0) && (b.y % 2 == 0);
      out.push_back({"beta = varpi1 (mod 2)", o, true, holds,
                     TorusChar::from_coords(b, o).str(), "[1, 0] (mod 2)"});
    }
  }
  return out;
}

}  // namespace g2eis
