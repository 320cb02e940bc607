#include "g2eis/pole_scan.hpp"

#include <algorithm>
#include <sstream>

#include "g2eis/constant_term.hpp"
#include "g2eis/root_system.hpp"

namespace g2eis {

std::string to_string(RankOneStatus s) {
  switch (s) {
    case RankOneStatus::Pole: return "pole";
    case RankOneStatus::ScalarMinusOne: return "scalar -1";
    case RankOneStatus::HasKernel: return "has kernel";
    case RankOneStatus::Isomorphism: return "isomorphism";
  }
  return "?";
}

std::string to_string(PoleClass c) {
  switch (c) {
    case PoleClass::EdgePole: return "edge pole";
    case PoleClass::LZeroRegion: return "L-zero region";
    case PoleClass::LocalLRegion: return "local L region";
  }
  return "?";
}

RankOneStatus rank_one_status(const Gl1Char& arg, const std::map<std::string, Rat>& point) {
  Gl1Char v = arg.specialize(point);
  if (v.tor.trivial()) {
    if (v.cst == 1) return RankOneStatus::Pole;
    if (v.cst == 0) return RankOneStatus::ScalarMinusOne;
    if (v.cst == -1) return RankOneStatus::HasKernel;
  }
  return RankOneStatus::Isomorphism;
}

std::vector<Gl1Char> cvector(const TorusChar& chi) {
  if (!chi.c1.is_constant() || chi.c1.cst != -1 || !chi.c1.tor.trivial())
    throw std::invalid_argument("cvector: character must have first coordinate -1, got " +
                                chi.str());
  RootSystem rs(chi.orient);
  auto wlist = rs.degenerate_weyl_set(Parabolic::P);
  // successive arguments <beta^vee, chi>, <alpha^vee, w1 chi>, <beta^vee, w2 chi>, ...
  std::vector<Gl1Char> out;
  for (int i = 0; i < 5; ++i) {
    const Root& g = (i % 2 == 0) ? rs.beta() : rs.alpha();
    out.push_back(coroot_pairing(rs, weyl_act(rs, wlist[i], chi), g));
  }
  return out;
}

std::string PoleCell::str() const {
  if (poles.empty()) return "holomorphic";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, m] : poles) {
    if (!first) os << ", ";
    os << rat_str(s);
    if (m == 2) os << " (double)";
    else if (m == 3) os << " (triple)";
    else if (m > 3) os << " (x" << m << ")";
    first = false;
  }
  return os.str();
}

PoleTable pole_table(int chi_order) {
  if (chi_order < 1 || chi_order > 3)
    throw std::invalid_argument("pole_table: chi0 order must be 1, 2, or 3");
  PoleTable table;
  table.chi_order = chi_order;
  TorsionPart chi0 = TorsionPart::make("chi0", chi_order, 1);
  TorusChar chi = TorusChar::make(
      Gl1Char::constant(-1), Gl1Char::torsion(chi0) + Gl1Char::var("s", 3) + Gl1Char::constant(-1),
      Orientation::BetaLong);
  std::vector<Gl1Char> cv = cvector(chi);
  const Rat half(1, 2);
  for (int i = 0; i <= 5; ++i) {
    std::map<Rat, int> mult;
    for (int t = 0; t < i; ++t) {
      const Gl1Char& arg = cv[t];
      if (!arg.tor.trivial()) continue;  // argument = 1 needs trivial torsion
      Rat m = arg.coeff("s");
      Rat s0 = (Rat(1) - arg.cst) / m;
      if (s0 >= half) mult[s0] += 1;
    }
    PoleCell cell;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) cell.poles.push_back(*it);
    table.rows[static_cast<std::size_t>(i)] = std::move(cell);
  }
  return table;
}

std::string PoleTable::to_text() const {
  std::ostringstream os;
  os << "chi0 order " << chi_order << "\n";
  for (int i = 0; i <= 5; ++i)
    os << "  w" << i << ": " << rows[static_cast<std::size_t>(i)].str() << "\n";
  return os.str();
}

std::string PoleTable::to_csv() const {
  std::ostringstream os;
  os << "w,chi_order,poles\n";
  for (int i = 0; i <= 5; ++i)
    os << "w" << i << "," << chi_order << ",\"" << rows[static_cast<std::size_t>(i)].str()
       << "\"\n";
  return os.str();
}

std::string pole_table_text(const std::array<PoleTable, 3>& columns) {
  std::array<std::string, 3> heads = {"trivial", "nontrivial quadratic", "nontrivial cubic"};
  std::vector<std::array<std::string, 4>> grid;
  grid.push_back({"", heads[0], heads[1], heads[2]});
  for (int i = 0; i <= 5; ++i) {
    std::array<std::string, 4> row;
    row[0] = "w" + std::to_string(i);
    for (int c = 0; c < 3; ++c)
      row[static_cast<std::size_t>(c + 1)] =
          columns[static_cast<std::size_t>(c)].rows[static_cast<std::size_t>(i)].str();
    grid.push_back(row);
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : grid)
    for (int c = 0; c < 4; ++c)
      width[static_cast<std::size_t>(c)] =
          std::max(width[static_cast<std::size_t>(c)], row[static_cast<std::size_t>(c)].size());
  std::ostringstream os;
  for (const auto& row : grid) {
    for (int c = 0; c < 4; ++c) {
      os << row[static_cast<std::size_t>(c)];
      if (c < 3)
        os << std::string(width[static_cast<std::size_t>(c)] - row[static_cast<std::size_t>(c)].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string pole_table_csv(const std::array<PoleTable, 3>& columns) {
  std::ostringstream os;
  os << "w,trivial,quadratic,cubic\n";
  for (int i = 0; i <= 5; ++i) {
    os << "w" << i;
    for (int c = 0; c < 3; ++c)
      os << ",\"" << columns[static_cast<std::size_t>(c)].rows[static_cast<std::size_t>(i)].str()
         << "\"";
    os << "\n";
  }
  return os.str();
}

std::vector<PoleSourceNote> classify_pole_sources(const Gl1Char& arg, const Rat& half_plane) {
  auto vars = arg.variables();
  if (vars.size() != 1)
    throw std::invalid_argument("classify_pole_sources: argument must depend on one variable");
  Rat m = arg.coeff(vars[0]);
  if (m == 0) throw std::invalid_argument("classify_pole_sources: constant argument");
  Rat b = arg.cst;
  std::vector<PoleSourceNote> notes;

  // s-interval where lo < arg < hi
  auto interval = [&](const Rat& lo, const Rat& hi) {
    Rat a = (lo - b) / m, c = (hi - b) / m;
    if (a > c) std::swap(a, c);
    return std::make_pair(a, c);
  };

  if (arg.tor.trivial()) {
    Rat s0 = (Rat(1) - b) / m;
    if (s0 >= half_plane) {
      PoleSourceNote n;
      n.cls = PoleClass::EdgePole;
      n.point = s0;
      n.descr = "pole of L(arg) at arg = 1, s = " + rat_str(s0);
      notes.push_back(std::move(n));
    }
  }

  {
    PoleSourceNote n;
    n.cls = PoleClass::LZeroRegion;
    auto iv = interval(-1, 0);
    n.s_interval = iv;
    // open interval (iv.first, iv.second) against [half_plane, inf)
    n.intersects_half_plane = iv.second > half_plane;
    n.descr = "denominator L(arg+1) may vanish for s in (" + rat_str(iv.first) + ", " +
              rat_str(iv.second) + "); zeros begin at " + rat_str(iv.second);
    notes.push_back(std::move(n));
  }
  {
    PoleSourceNote n;
    n.cls = PoleClass::LocalLRegion;
    // Re(arg) <= -1: a half line in s
    Rat edge = (Rat(-1) - b) / m;
    if (m > 0) {
      n.s_interval = std::make_pair(Rat(0), edge);  // descriptor: s <= edge
      n.intersects_half_plane = edge >= half_plane;
      n.descr = "local L factors may contribute for s <= " + rat_str(edge);
    } else {
      n.s_interval = std::make_pair(edge, Rat(0));
      n.intersects_half_plane = true;  // unbounded above
      n.descr = "local L factors may contribute for s >= " + rat_str(edge);
    }
    notes.push_back(std::move(n));
  }
  return notes;
}

}  // namespace g2eis
