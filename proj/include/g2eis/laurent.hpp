#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "g2eis/coeff_ring.hpp"

namespace g2eis {

// Asking for a coefficient at or beyond the truncation order, or asserting
// vanishing past it, raises this; callers retry at higher relative order.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a trivial-torsion c-expansion is requested at a non-integer
// base point.
struct OffLatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series sum_{d=min_deg}^{trunc-1} c[d-min_deg] x^d + O(x^trunc)
// over CoeffPoly. Arithmetic tracks truncation exactly; no operation claims
// precision it does not have.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(std::string var, int min_deg, int trunc, std::vector<CoeffPoly> coeffs);

  static LaurentSeries zero(const std::string& var, int trunc);
  static LaurentSeries constant(const std::string& var, const CoeffPoly& c, int trunc);
  static LaurentSeries monomial(const std::string& var, int deg, const CoeffPoly& c, int trunc);

  const std::string& var() const { return var_; }
  int min_deg() const { return min_deg_; }
  int trunc() const { return trunc_; }

  // Coefficient of x^d; zero below min_deg, TruncationError at d >= trunc.
  const CoeffPoly& coeff(int d) const;
  // Degree of the first nonzero coefficient; trunc() if none survives.
  int valuation() const;
  bool known_zero() const { return valuation() == trunc_; }
  // True iff all coefficients of x^d, d <= through, vanish; TruncationError
  // if the truncation does not certify that range.
  bool zero_through(int through) const;

  LaurentSeries truncated(int new_trunc) const;
  std::string str() const;

  friend LaurentSeries operator+(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator-(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator-(const LaurentSeries&);
  friend LaurentSeries operator*(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator*(const CoeffPoly&, const LaurentSeries&);
  friend LaurentSeries operator*(const Rat&, const LaurentSeries&);
  friend bool operator==(const LaurentSeries&, const LaurentSeries&);

  // Multiplicative inverse; requires the leading coefficient to be an
  // invertible monomial times a rational.
  LaurentSeries inverse() const;

 private:
  void trim();
  std::string var_;
  int min_deg_ = 0;
  int trunc_ = 0;
  std::vector<CoeffPoly> c_;
};

}  // namespace g2eis
