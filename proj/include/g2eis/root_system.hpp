#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2eis {

// Which simple root of G2 is the long one in the [.,.] coordinate system.
// BetaLong gives alpha = [2,-1], beta = [-3,2]; AlphaLong gives
// alpha = [2,-3], beta = [-1,2].
enum class Orientation { BetaLong, AlphaLong };

enum class Parabolic { P, Q };

// Generators of the Weyl group: A = s_alpha, B = s_beta.
enum class SimpleRef : std::uint8_t { A, B };

std::string to_string(Orientation o);
std::string to_string(Parabolic p);
Orientation parse_orientation(std::string_view s);

struct Coord2 {
  long x = 0;
  long y = 0;
  friend bool operator==(const Coord2&, const Coord2&) = default;
  friend auto operator<=>(const Coord2&, const Coord2&) = default;
};

struct Root {
  long m = 0;        // coefficient of alpha in the simple-root basis
  long n = 0;        // coefficient of beta
  Coord2 coords;     // [.,.] coordinates (pairings with the simple coroots)
  bool is_long = false;
  Coord2 coroot;     // coroot written in the basis (alpha^vee, beta^vee)
  friend bool operator==(const Root&, const Root&) = default;
};

// A Weyl group element stored as a word in the simple reflections.
// Words act right-to-left: the last letter is applied first.
struct WeylElt {
  std::vector<SimpleRef> word;

  std::size_t length() const { return word.size(); }
  // Parses strings like "bab" or "e" (identity).
  static WeylElt parse(std::string_view s);
  std::string str() const;
  WeylElt reversed() const;
  friend bool operator==(const WeylElt&, const WeylElt&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(Orientation o);

  Orientation orientation() const { return orient_; }
  const std::vector<Root>& positive_roots() const { return positives_; }
  const Root& alpha() const { return positives_[0]; }
  const Root& beta() const { return positives_[1]; }
  const Root& highest_root() const;

  // Looks up a positive or negative root by simple-root coefficients.
  // Returns sign (+1/-1) and the positive root; throws if not a root.
  std::pair<int, const Root*> find_root(long m, long n) const;

  Coord2 reflect(SimpleRef s, Coord2 c) const;
  std::pair<long, long> reflect_root(SimpleRef s, std::pair<long, long> mn) const;

  Coord2 act(const WeylElt& w, Coord2 c) const;
  std::pair<long, long> act_root(const WeylElt& w, std::pair<long, long> mn) const;

  bool is_reduced(const WeylElt& w) const;
  // {gamma > 0 : w gamma < 0}; size equals the word length for reduced words.
  // Throws std::invalid_argument for a non-reduced word.
  std::vector<Root> inversion_set(const WeylElt& w) const;

  // All 12 elements with canonical alternating words, ordered by length.
  const std::vector<WeylElt>& all_elements() const { return elements_; }
  // The 6 elements w with w(alpha) > 0 (P) resp. w(beta) > 0 (Q), one of
  // each length 0..5, ordered by length.
  std::vector<WeylElt> degenerate_weyl_set(Parabolic p) const;

  // Group-element equality, decided by the action on the simple roots.
  bool equal(const WeylElt& a, const WeylElt& b) const;

 private:
  std::vector<Root> raw_inversions(const WeylElt& w) const;

  Orientation orient_;
  long c_ab_;  // <alpha, beta^vee>
  long c_ba_;  // <beta, alpha^vee>
  long len_a_sq_, len_b_sq_;
  std::vector<Root> positives_;
  std::vector<WeylElt> elements_;
};

}  // namespace g2eis
