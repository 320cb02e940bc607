#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2eis/character.hpp"
#include "g2eis/laurent.hpp"
#include "g2eis/relations.hpp"
#include "g2eis/root_system.hpp"

namespace g2eis {

// A limiting weight coordinate: rational value plus symbolic torsion part.
struct WeightCoord {
  Rat v;
  TorsionPart tor;
  std::string str() const;
  friend bool operator==(const WeightCoord&, const WeightCoord&) = default;
  friend bool operator<(const WeightCoord& a, const WeightCoord& b) {
    return std::tie(a.v, a.tor) < std::tie(b.v, b.tor);
  }
};

// Eigenspace key: the weight at expansion-variable 0.
struct Weight {
  WeightCoord a, b;
  std::string str() const { return "[" + a.str() + ", " + b.str() + "]"; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& x, const Weight& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  }
};

// f_{[a,b]+u[c,d]} = f_{[a,b]} sum_m <c,d>^m/m! u^m with <c,d> = c l1 + d l2.
LaurentSeries spherical_expand(const Rat& c, const Rat& d, const std::string& var, int order);

struct SphericalTerm {
  std::pair<Rat, Rat> base_weight;
  LaurentSeries series;
};

SphericalTerm spherical_term(const std::pair<Rat, Rat>& base, const std::pair<Rat, Rat>& direction,
                             const std::string& var, int order);

// The multiset of pairing arguments {<gamma^vee, chi> : gamma in Inv(w)},
// sorted canonically; independent of the reduced word of w.
std::vector<Gl1Char> c_factors(const RootSystem& rs, const WeylElt& w, const TorusChar& chi);

// A degenerate Eisenstein family: parabolic P or Q, inducing character with
// coordinates affine in one expansion variable. The coordinate matching the
// parabolic must be identically -1.
struct EisensteinSpec {
  Parabolic parabolic = Parabolic::P;
  TorusChar inducing;
  std::string var;

  static EisensteinSpec make(Parabolic p, TorusChar inducing);
  // (E_Q f[3u+2,-1])_B and (E_P f[-1,u+1])_B, the unramified pair.
  static EisensteinSpec unramified_q(const std::string& var = "u",
                                     Orientation o = Orientation::BetaLong);
  static EisensteinSpec unramified_p(const std::string& var = "u",
                                     Orientation o = Orientation::BetaLong);
};

// One Weyl summand of the constant term, before series expansion.
struct WeylTermInfo {
  WeylElt w;
  std::vector<Gl1Char> args;  // c-factor arguments
  TorusChar image;            // w . inducing
  Weight weight;              // image at var = 0
  std::pair<Rat, Rat> direction;
};

std::vector<WeylTermInfo> weyl_terms(const EisensteinSpec& spec);

struct ConstantTerm {
  std::map<Weight, LaurentSeries> terms;
  std::string str() const;
};

ConstantTerm constant_term(const EisensteinSpec& spec, int rel_order, const CoeffRewriter& rw,
                           OffLattice policy = OffLattice::Error);

// ---- verification reports ----

struct EigenspaceLine {
  Weight weight;
  bool ok = false;
  std::string detail;  // leading behavior, contributing elements, ...
};

struct VerifyReport {
  std::string title;
  bool certified = false;
  std::vector<std::string> facts;        // checked side facts, prefixed ok/FAIL
  std::vector<EigenspaceLine> spaces;
  std::string to_text() const;
};

// Checks that E_Q f[3u+2,-1] - (1/3) c(u) c(3u-1) E_P f[-1,u+1] has vanishing
// eigenspace coefficients at u^-2, u^-1, u^0.
VerifyReport verify_second_term_identity(int rel_order = 8);

// The [1,-1]-eigenspace portion of (1/3) c(u) c(3u-1) (E_P f[-1,u+1])_B with
// the common factor c(3u+2) removed (an intermediate of the proof, used as a
// golden value).
LaurentSeries prefactored_p_eigenspace_1m1(int rel_order = 4);

// With chi0 of order 2: E_P([-1, 3s-1+chi0]) at s = 1/2 + t vanishes through
// t^0 in every eigenspace; also certifies the fixed-point facts and the
// grouping (e with w5; w1 with w4; w2 with w3).
VerifyReport verify_vanishing_half(int rel_order = 8);

struct PoleOrderLine {
  Weight weight;
  // Pole order of the eigenspace sum: positive = pole, 0 = finite nonzero
  // leading term, negative = zero of that order. nullopt when the series
  // vanishes through its entire truncation window.
  std::optional<int> order;
  std::vector<std::string> contributors;
};

struct PoleOrderReport {
  int chi_order = 1;
  Rat point;
  std::vector<PoleOrderLine> lines;
  std::optional<int> max_order;  // nullopt if every eigenspace vanished identically
  bool has_expectation = false;
  bool expect_exact = false;  // else "at most"
  int expected = 0;
  bool certified = false;
  std::string to_text() const;
};

// Expands the constant term of E_P([-1, 3s-1+chi0]), order(chi0) = n, at
// s = point + t and reports the per-eigenspace pole orders. Factors at
// off-lattice trivial-torsion points are treated as opaque units.
PoleOrderReport verify_pole_orders(int chi_order, const Rat& point, int rel_order = 8);

}  // namespace g2eis
