#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "g2eis/rational.hpp"

namespace g2eis {

// Prime-field scalar with a runtime modulus. Characteristics 2 and 3 are
// rejected at the enumeration entry points, not here.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, std::uint64_t p) : p_(p), v_(v % p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) { a.check(b); return Fp(a.v_ + b.v_, a.p_); }
  friend Fp operator-(Fp a, Fp b) { a.check(b); return Fp(a.v_ + a.p_ - b.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) { a.check(b); return Fp(a.v_ * b.v_, a.p_); }
  friend Fp operator-(Fp a) { return Fp(a.p_ - a.v_ % a.p_, a.p_); }
  Fp inverse() const;
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  bool is_zero() const { return v_ == 0; }
  std::string str() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed moduli");
  }
  std::uint64_t p_ = 2;
  std::uint64_t v_ = 0;
};

bool is_prime(std::uint64_t q);
// The two square roots of r mod q if any, smaller first.
std::optional<std::pair<std::uint64_t, std::uint64_t>> sqrt_mod(std::uint64_t r, std::uint64_t q);

template <class S>
using Vec8 = std::array<S, 8>;
template <class S>
using Mat8 = std::array<std::array<S, 8>, 8>;

template <class S>
Mat8<S> mat_identity(const S& one, const S& zero) {
  Mat8<S> m;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m[i][j] = (i == j) ? one : zero;
  return m;
}

template <class S>
Vec8<S> mat_vec(const Mat8<S>& m, const Vec8<S>& x) {
  Vec8<S> y;
  for (int i = 0; i < 8; ++i) {
    S acc = m[i][0] * x[0];
    for (int j = 1; j < 8; ++j) acc = acc + m[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

template <class S>
Mat8<S> mat_mul(const Mat8<S>& a, const Mat8<S>& b) {
  Mat8<S> c;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      S acc = a[i][0] * b[0][j];
      for (int k = 1; k < 8; ++k) acc = acc + a[i][k] * b[k][j];
      c[i][j] = acc;
    }
  return c;
}

// The quadratic form x -> tx.x with t the antidiagonal transpose:
// sum_i x_i x_{9-i} = 2(x1 x8 + x2 x7 + x3 x6 + x4 x5).
template <class S>
S form_value(const Vec8<S>& x) {
  S acc = x[0] * x[7];
  acc = acc + x[1] * x[6];
  acc = acc + x[2] * x[5];
  acc = acc + x[3] * x[4];
  return acc + acc;
}

template <class S>
bool in_v0(const Vec8<S>& x) {
  return x[3] == x[4];
}

// v_rho = t[0 0 1 0 0 rho 0 0]
template <class S>
Vec8<S> v_rho(const S& rho, const S& one, const S& zero) {
  Vec8<S> v{zero, zero, one, zero, zero, rho, zero, zero};
  return v;
}

// Scalar construction helpers so the templates work for both Rat and Fp.
inline Rat scalar_one(const Rat&) { return Rat(1); }
inline Rat scalar_from_int(const Rat&, long v) { return Rat(v); }
inline Fp scalar_one(const Fp& model) { return Fp(1, model.modulus()); }
inline Fp scalar_from_int(const Fp& model, long v) {
  std::uint64_t p = model.modulus();
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return Fp(static_cast<std::uint64_t>(r), p);
}

// exp(r X_{-alpha}) where X_{-alpha} has ones at (2,1), (4,3), (5,3) and -1
// at (8,7), (6,5), (6,4); X^2 has a single entry -2 at (6,3), X^3 = 0, so the
// exponential series terminates.
template <class S>
Mat8<S> x_minus_alpha(const S& r) {
  S zero = r - r;
  S one = scalar_one(r);
  Mat8<S> m = mat_identity(one, zero);
  m[1][0] = r;
  m[3][2] = r;
  m[4][2] = r;
  m[7][6] = zero - r;
  m[5][4] = zero - r;
  m[5][3] = zero - r;
  m[5][2] = zero - r * r;  // r^2/2 * (-2) at (6,3)
  return m;
}

// phi32: SL2 -> G2 placing a, b, c, d on the (1,7), (2,8) planes.
template <class S>
Mat8<S> phi32(const std::array<std::array<S, 2>, 2>& g) {
  const S& a = g[0][0];
  const S& b = g[0][1];
  const S& c = g[1][0];
  const S& d = g[1][1];
  S det = a * d - b * c;
  S one = scalar_one(a);
  if (!(det == one)) throw std::invalid_argument("phi32: determinant must be 1");
  S zero = a - a;
  Mat8<S> m = mat_identity(one, zero);
  m[0][0] = a; m[0][6] = b;
  m[1][1] = a; m[1][7] = b;
  m[6][0] = c; m[6][6] = d;
  m[7][1] = c; m[7][7] = d;
  return m;
}

enum class OrbitClass { Open, Mid, Plus, Minus };

std::string to_string(OrbitClass c);

// Classification of points of the quadric {x in V0 : tx.x = 2 rho}:
// Open when x8 != 0, Mid when x8 = 0 and (x6,x7) != (0,0), else the sign
// class of x4 against the designated square root of rho.
template <class S>
OrbitClass orbit_class(const Vec8<S>& x, const S& rho, const std::optional<S>& designated_root) {
  if (!in_v0(x)) throw std::invalid_argument("orbit_class: point not in V0 (x4 != x5)");
  S two_rho = rho + rho;
  if (!(form_value(x) == two_rho))
    throw std::invalid_argument("orbit_class: form value differs from 2*rho");
  S zero = rho - rho;
  if (!(x[7] == zero)) return OrbitClass::Open;
  if (!(x[5] == zero) || !(x[6] == zero)) return OrbitClass::Mid;
  if (!designated_root)
    throw std::domain_error("orbit_class: impossible point (rho has no designated square root)");
  const S& a = *designated_root;
  if (!(a * a == rho) || a == zero)
    throw std::invalid_argument("orbit_class: designated root must be a nonzero square root of rho");
  if (x[3] == a) return OrbitClass::Plus;
  if (x[3] == zero - a) return OrbitClass::Minus;
  throw std::domain_error("orbit_class: impossible point (x4^2 != rho)");
}

struct OrbitCounts {
  std::uint64_t open = 0, mid = 0, plus = 0, minus = 0;
  std::uint64_t total() const { return open + mid + plus + minus; }
};

// Iterates all q^7 points of V0 over F_q, filters by form value 2*rho and
// classifies each; q must be a prime other than 2 and 3, rho nonzero.
OrbitCounts enumerate_quadric(std::uint64_t q, std::uint64_t rho, int threads = 1);

// Independent re-count of #{x in V0 : form = 2 rho} without classification.
std::uint64_t count_quadric(std::uint64_t q, std::uint64_t rho);

}  // namespace g2eis
