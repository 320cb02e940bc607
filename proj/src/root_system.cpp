#include "g2eis/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace g2eis {

std::string to_string(Orientation o) {
  return o == Orientation::BetaLong ? "beta-long" : "alpha-long";
}

std::string to_string(Parabolic p) { return p == Parabolic::P ? "P" : "Q"; }

Orientation parse_orientation(std::string_view s) {
  if (s == "beta-long" || s == "betalong" || s == "beta") return Orientation::BetaLong;
  if (s == "alpha-long" || s == "alphalong" || s == "alpha") return Orientation::AlphaLong;
  throw std::invalid_argument("unknown orientation: '" + std::string(s) + "'");
}

WeylElt WeylElt::parse(std::string_view s) {
  WeylElt w;
  if (s == "e" || s == "1" || s.empty()) return w;
  for (char c : s) {
    if (c == 'a') w.word.push_back(SimpleRef::A);
    else if (c == 'b') w.word.push_back(SimpleRef::B);
    else throw std::invalid_argument(std::string("bad Weyl word letter: '") + c + "'");
  }
  return w;
}

std::string WeylElt::str() const {
  if (word.empty()) return "e";
  std::string s;
  for (auto r : word) s += (r == SimpleRef::A ? 'a' : 'b');
  return s;
}

WeylElt WeylElt::reversed() const {
  WeylElt w = *this;
  std::reverse(w.word.begin(), w.word.end());
  return w;
}

RootSystem::RootSystem(Orientation o) : orient_(o) {
  if (o == Orientation::BetaLong) {
    c_ab_ = -1;  // <alpha, beta^vee>
    c_ba_ = -3;  // <beta, alpha^vee>
    len_a_sq_ = 2;
    len_b_sq_ = 6;
  } else {
    c_ab_ = -3;
    c_ba_ = -1;
    len_a_sq_ = 6;
    len_b_sq_ = 2;
  }

  // Generate the positive roots by reflection closure from the simple ones.
  auto make_root = [&](long m, long n) {
    Root r;
    r.m = m;
    r.n = n;
    r.coords = Coord2{2 * m + c_ba_ * n, c_ab_ * m + 2 * n};
    long lsq = m * m * len_a_sq_ + n * n * len_b_sq_ - 6 * m * n;  // alpha.beta = -3
    r.is_long = (lsq == 6);
    // coroot = (2/|g|^2) (m alpha + n beta) = (m |a|^2/|g|^2) a^vee + (n |b|^2/|g|^2) b^vee
    if ((m * len_a_sq_) % lsq != 0 || (n * len_b_sq_) % lsq != 0)
      throw std::logic_error("non-integral coroot coefficients");
    r.coroot = Coord2{m * len_a_sq_ / lsq, n * len_b_sq_ / lsq};
    return r;
  };

  std::set<std::pair<long, long>> posset = {{1, 0}, {0, 1}};
  std::vector<std::pair<long, long>> queue(posset.begin(), posset.end());
  while (!queue.empty()) {
    auto mn = queue.back();
    queue.pop_back();
    for (auto s : {SimpleRef::A, SimpleRef::B}) {
      auto im = reflect_root(s, mn);
      if (im.first >= 0 && im.second >= 0 && posset.insert(im).second) queue.push_back(im);
    }
  }
  std::vector<std::pair<long, long>> pos(posset.begin(), posset.end());
  // Canonical order: alpha, beta, then by height.
  std::sort(pos.begin(), pos.end(), [](auto a, auto b) {
    auto key = [](std::pair<long, long> r) {
      return std::make_tuple(r.first + r.second, -r.first, r.second);
    };
    return key(a) < key(b);
  });
  for (auto [m, n] : pos) positives_.push_back(make_root(m, n));
  if (positives_.size() != 6) throw std::logic_error("expected 6 positive roots");

  // Enumerate the 12 group elements with canonical alternating words.
  std::vector<WeylElt> elems;
  std::map<std::vector<Coord2>, WeylElt> sigs;
  auto signature = [&](const WeylElt& w) {
    std::vector<Coord2> sig;
    for (const Root& r : positives_) sig.push_back(act(w, r.coords));
    return sig;
  };
  std::vector<WeylElt> frontier = {WeylElt{}};
  sigs[signature(WeylElt{})] = WeylElt{};
  elems.push_back(WeylElt{});
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier) {
      for (auto s : {SimpleRef::A, SimpleRef::B}) {
        WeylElt w2;
        w2.word.push_back(s);  // left-multiply: s * w
        w2.word.insert(w2.word.end(), w.word.begin(), w.word.end());
        auto sig = signature(w2);
        if (sigs.emplace(sig, w2).second) {
          elems.push_back(w2);
          next.push_back(w2);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end(), [](const WeylElt& a, const WeylElt& b) {
    return std::make_pair(a.length(), a.word) < std::make_pair(b.length(), b.word);
  });
  elements_ = std::move(elems);
  if (elements_.size() != 12) throw std::logic_error("expected 12 Weyl elements");
}

const Root& RootSystem::highest_root() const { return positives_.back(); }

std::pair<int, const Root*> RootSystem::find_root(long m, long n) const {
  for (const Root& r : positives_) {
    if (r.m == m && r.n == n) return {1, &r};
    if (r.m == -m && r.n == -n) return {-1, &r};
  }
  throw std::invalid_argument("not a root: (" + std::to_string(m) + "," + std::to_string(n) + ")");
}

Coord2 RootSystem::reflect(SimpleRef s, Coord2 c) const {
  if (s == SimpleRef::A) return Coord2{-c.x, c.y - c_ab_ * c.x};
  return Coord2{c.x - c_ba_ * c.y, -c.y};
}

std::pair<long, long> RootSystem::reflect_root(SimpleRef s, std::pair<long, long> mn) const {
  auto [m, n] = mn;
  if (s == SimpleRef::A) {
    long pairing = 2 * m + c_ba_ * n;  // <m a + n b, a^vee>
    return {m - pairing, n};
  }
  long pairing = c_ab_ * m + 2 * n;
  return {m, n - pairing};
}

Coord2 RootSystem::act(const WeylElt& w, Coord2 c) const {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) c = reflect(*it, c);
  return c;
}

std::pair<long, long> RootSystem::act_root(const WeylElt& w, std::pair<long, long> mn) const {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) mn = reflect_root(*it, mn);
  return mn;
}

std::vector<Root> RootSystem::raw_inversions(const WeylElt& w) const {
  std::vector<Root> inv;
  for (const Root& r : positives_) {
    auto [m, n] = act_root(w, {r.m, r.n});
    if (m <= 0 && n <= 0) inv.push_back(r);
  }
  return inv;
}

bool RootSystem::is_reduced(const WeylElt& w) const {
  return raw_inversions(w).size() == w.length();
}

std::vector<Root> RootSystem::inversion_set(const WeylElt& w) const {
  auto inv = raw_inversions(w);
  if (inv.size() != w.length())
    throw std::invalid_argument("non-reduced Weyl word: " + w.str());
  return inv;
}

std::vector<WeylElt> RootSystem::degenerate_weyl_set(Parabolic p) const {
  const Root& fixed = (p == Parabolic::P) ? alpha() : beta();
  std::vector<WeylElt> out;
  for (const WeylElt& w : elements_) {
    auto [m, n] = act_root(w, {fixed.m, fixed.n});
    if (m >= 0 && n >= 0) out.push_back(w);
  }
  // all_elements is ordered by length already
  return out;
}

bool RootSystem::equal(const WeylElt& a, const WeylElt& b) const {
  for (const Root& r : positives_)
    if (act(a, r.coords) != act(b, r.coords)) return false;
  return true;
}

}  // namespace g2eis
