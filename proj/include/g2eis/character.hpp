#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2eis/rational.hpp"
#include "g2eis/root_system.hpp"

namespace g2eis {

// A normalized-character class such as chi0 or eta. order == 0 means the
// order is left free (multiples never reduce); order == 1 is the trivial
// class.
struct TorsionClass {
  std::string name;
  int order = 0;
  friend bool operator==(const TorsionClass&, const TorsionClass&) = default;
};

// k times a torsion class, stored reduced. For a finite order n the
// multiplier lives in the symmetric residue system (-n/2, n/2]; this is what
// makes -chi0 print as chi0 for n = 2 and stay -chi0 for n = 3.
struct TorsionPart {
  std::string cls;  // empty means trivial
  int order = 0;    // 0 = free
  long k = 0;

  static TorsionPart none() { return {}; }
  static TorsionPart make(const std::string& cls, int order, long k);
  bool trivial() const { return k == 0; }
  TorsionPart reduced() const;
  std::string str() const;  // e.g. "chi0", "-chi0", "3chi0", "" when trivial
  friend bool operator==(const TorsionPart&, const TorsionPart&) = default;
  friend auto operator<=>(const TorsionPart&, const TorsionPart&) = default;
};

TorsionPart operator+(const TorsionPart& a, const TorsionPart& b);
TorsionPart operator-(const TorsionPart& a);
TorsionPart operator*(const Rat& c, const TorsionPart& t);  // c*k must be integral

// A GL1 character: affine-linear form over Q in named formal variables plus
// a torsion part.
struct Gl1Char {
  std::map<std::string, Rat> lin;  // nonzero coefficients only
  Rat cst = 0;
  TorsionPart tor;

  static Gl1Char constant(const Rat& c) { return Gl1Char{{}, c, {}}; }
  static Gl1Char var(const std::string& v, const Rat& coeff = 1);
  static Gl1Char torsion(const TorsionPart& t) { return Gl1Char{{}, 0, t}; }

  Gl1Char& normalize();
  bool is_constant() const { return lin.empty(); }
  Rat coeff(const std::string& v) const;
  std::vector<std::string> variables() const;

  // Substitutes rationals for all variables present; missing -> error.
  Gl1Char specialize(const std::map<std::string, Rat>& assignment) const;
  // Replaces a variable by an affine expression (used for recentering s at a
  // point: s -> point + t).
  Gl1Char substitute(const std::string& v, const Gl1Char& repl) const;

  std::string str() const;
  friend bool operator==(const Gl1Char&, const Gl1Char&) = default;
};

Gl1Char operator+(const Gl1Char& a, const Gl1Char& b);
Gl1Char operator-(const Gl1Char& a, const Gl1Char& b);
Gl1Char operator-(const Gl1Char& a);
Gl1Char operator*(const Rat& c, const Gl1Char& a);

// A torus character [c1, c2] in the fundamental-coweight pairing
// coordinates: <[c1,c2], alpha^vee> = c1 and <[c1,c2], beta^vee> = c2.
struct TorusChar {
  Gl1Char c1, c2;
  Orientation orient = Orientation::BetaLong;

  static TorusChar make(Gl1Char a, Gl1Char b, Orientation o);
  static TorusChar from_coords(Coord2 c, Orientation o);  // integral character
  // varpi1 = [1,0], varpi2 = [0,1], rho_P = [0, 3/2], delta_P^s = [0, 3s].
  static TorusChar varpi1(Orientation o);
  static TorusChar varpi2(Orientation o);
  static TorusChar rho_P(Orientation o);
  static TorusChar delta_P_s(const std::string& svar, Orientation o);

  TorusChar specialize(const std::map<std::string, Rat>& assignment) const;
  TorusChar substitute(const std::string& v, const Gl1Char& repl) const;
  std::vector<std::string> variables() const;
  std::string str() const;
  friend bool operator==(const TorusChar&, const TorusChar&) = default;
};

TorusChar operator+(const TorusChar& a, const TorusChar& b);
TorusChar operator-(const TorusChar& a, const TorusChar& b);
TorusChar operator*(const Rat& c, const TorusChar& a);

// <chi, gamma^vee> for a root gamma of the system rs. Orientation mismatch
// between rs and chi is an error.
Gl1Char coroot_pairing(const RootSystem& rs, const TorusChar& chi, const Root& gamma);

// Applies the word right-to-left; s_gamma chi = chi - <chi, gamma^vee> gamma.
TorusChar weyl_act(const RootSystem& rs, const WeylElt& w, const TorusChar& chi);

// One line of the character-identity report.
struct IdentityCheck {
  std::string statement;
  Orientation orientation;
  bool rightmost_first;  // composition order used for the Weyl word
  bool holds;
  std::string lhs, rhs;
};

// Evaluates the coordinate identities behind the ramified second-term
// argument under both orientations (and both composition orders when
// scan_orders is set), with eta of order eta_order. Mismatches are report
// content, not errors.
std::vector<IdentityCheck> verify_character_identity(bool scan_orders = true,
                                                     int eta_order = 2);

}  // namespace g2eis
