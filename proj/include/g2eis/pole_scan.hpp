#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2eis/character.hpp"

namespace g2eis {

// Behavior of a rank-one intertwining operator at a point, read off the
// specialized pairing argument: 1 (trivial torsion) -> pole; exactly 0 ->
// the scalar operator -1; -1 (trivial torsion) -> has a kernel; otherwise an
// isomorphism.
enum class RankOneStatus { Pole, ScalarMinusOne, HasKernel, Isomorphism };

std::string to_string(RankOneStatus s);

RankOneStatus rank_one_status(const Gl1Char& arg, const std::map<std::string, Rat>& point);

// The successive rank-one pairing arguments along the length-5 element of
// the P-set applied to chi = [-1, c2]; prefix products give c_factors(w_i).
// The first coordinate of chi must be identically -1.
std::vector<Gl1Char> cvector(const TorusChar& chi);

struct PoleCell {
  std::vector<std::pair<Rat, int>> poles;  // (s-value, multiplicity), s descending
  bool holomorphic() const { return poles.empty(); }
  std::string str() const;
};

struct PoleTable {
  int chi_order = 1;
  std::array<PoleCell, 6> rows;  // w_0 .. w_5
  std::string to_text() const;
  std::string to_csv() const;
};

// Per-operator pole bookkeeping in Re(s) >= 1/2 for chi = [-1, 3s-1+chi0]
// with chi0 of the given order: scans the C-prefix arguments of each w_i for
// points where the argument is 1 with trivial torsion.
PoleTable pole_table(int chi_order);

// Renders all three columns side by side in the paper's layout.
std::string pole_table_text(const std::array<PoleTable, 3>& columns);
std::string pole_table_csv(const std::array<PoleTable, 3>& columns);

enum class PoleClass { EdgePole, LZeroRegion, LocalLRegion };

std::string to_string(PoleClass c);

struct PoleSourceNote {
  PoleClass cls;
  std::optional<Rat> point;                       // EdgePole location
  std::optional<std::pair<Rat, Rat>> s_interval;  // region in the s-plane (open)
  bool intersects_half_plane = false;
  std::string descr;
};

// For the factor c(arg): emits the EdgePole point (argument = 1, trivial
// torsion) inside the half plane, the strip where the denominator L(arg+1)
// may vanish (-1 < Re(arg) < 0), and the local-factor region Re(arg) <= -1.
// Pole locations are certified only outside the warned regions.
std::vector<PoleSourceNote> classify_pole_sources(const Gl1Char& arg, const Rat& half_plane);

}  // namespace g2eis
