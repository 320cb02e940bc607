#include "g2eis/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace g2eis {

namespace {
const CoeffPoly kZeroPoly;

void check_same_var(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.var() != b.var())
    throw std::invalid_argument("series variable mismatch: " + a.var() + " vs " + b.var());
}
}  // namespace

LaurentSeries::LaurentSeries(std::string var, int min_deg, int trunc, std::vector<CoeffPoly> coeffs)
    : var_(std::move(var)), min_deg_(min_deg), trunc_(trunc), c_(std::move(coeffs)) {
  if (trunc_ < min_deg_) trunc_ = min_deg_;
  c_.resize(static_cast<std::size_t>(trunc_ - min_deg_));
  trim();
}

LaurentSeries LaurentSeries::zero(const std::string& var, int trunc) {
  return LaurentSeries(var, trunc, trunc, {});
}

LaurentSeries LaurentSeries::constant(const std::string& var, const CoeffPoly& c, int trunc) {
  return monomial(var, 0, c, trunc);
}

LaurentSeries LaurentSeries::monomial(const std::string& var, int deg, const CoeffPoly& c, int trunc) {
  if (deg >= trunc) return zero(var, trunc);
  std::vector<CoeffPoly> coeffs(static_cast<std::size_t>(trunc - deg));
  coeffs[0] = c;
  return LaurentSeries(var, deg, trunc, std::move(coeffs));
}

void LaurentSeries::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    min_deg_ += static_cast<int>(lead);
  }
}

const CoeffPoly& LaurentSeries::coeff(int d) const {
  if (d >= trunc_)
    throw TruncationError("coefficient of " + var_ + "^" + std::to_string(d) +
                          " beyond truncation O(" + var_ + "^" + std::to_string(trunc_) + ")");
  if (d < min_deg_) return kZeroPoly;
  return c_[static_cast<std::size_t>(d - min_deg_)];
}

int LaurentSeries::valuation() const {
  for (std::size_t t = 0; t < c_.size(); ++t)
    if (!c_[t].is_zero()) return min_deg_ + static_cast<int>(t);
  return trunc_;
}

bool LaurentSeries::zero_through(int through) const {
  if (through >= trunc_)
    throw TruncationError("cannot certify vanishing through degree " + std::to_string(through) +
                          " at truncation O(" + var_ + "^" + std::to_string(trunc_) + ")");
  return valuation() > through;
}

LaurentSeries LaurentSeries::truncated(int new_trunc) const {
  if (new_trunc >= trunc_) return *this;
  std::vector<CoeffPoly> coeffs;
  for (int d = min_deg_; d < new_trunc; ++d) coeffs.push_back(coeff(d));
  return LaurentSeries(var_, min_deg_, new_trunc, std::move(coeffs));
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int d = min_deg_; d < trunc_; ++d) {
    const CoeffPoly& p = coeff(d);
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << p.str() << ")";
    if (d != 0) os << "*" << var_ << "^" << d;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << trunc_ << ")";
  return os.str();
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_var(a, b);
  int trunc = std::min(a.trunc_, b.trunc_);
  int lo = std::min(a.min_deg_, b.min_deg_);
  std::vector<CoeffPoly> coeffs;
  for (int d = lo; d < trunc; ++d) {
    CoeffPoly p;
    if (d < a.trunc_) p = p + a.coeff(d);
    if (d < b.trunc_) p = p + b.coeff(d);
    coeffs.push_back(std::move(p));
  }
  return LaurentSeries(a.var_, lo, trunc, std::move(coeffs));
}

LaurentSeries operator-(const LaurentSeries& a) {
  std::vector<CoeffPoly> coeffs;
  for (const auto& p : a.c_) coeffs.push_back(-p);
  return LaurentSeries(a.var_, a.min_deg_, a.trunc_, std::move(coeffs));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_var(a, b);
  int va = a.valuation(), vb = b.valuation();
  // O(x^Ta)*g contributes O(x^(Ta+vb)) and symmetrically.
  int trunc = std::min(a.trunc_ + vb, b.trunc_ + va);
  int lo = va + vb;
  if (lo >= trunc) return LaurentSeries::zero(a.var_, trunc);
  std::vector<CoeffPoly> coeffs(static_cast<std::size_t>(trunc - lo));
  for (int da = va; da < a.trunc_; ++da) {
    const CoeffPoly& pa = a.coeff(da);
    if (pa.is_zero()) continue;
    for (int db = vb; db < b.trunc_ && da + db < trunc; ++db) {
      const CoeffPoly& pb = b.coeff(db);
      if (pb.is_zero()) continue;
      coeffs[static_cast<std::size_t>(da + db - lo)] =
          coeffs[static_cast<std::size_t>(da + db - lo)] + pa * pb;
    }
  }
  return LaurentSeries(a.var_, lo, trunc, std::move(coeffs));
}

LaurentSeries operator*(const CoeffPoly& c, const LaurentSeries& a) {
  std::vector<CoeffPoly> coeffs;
  for (const auto& p : a.c_) coeffs.push_back(c * p);
  return LaurentSeries(a.var_, a.min_deg_, a.trunc_, std::move(coeffs));
}

LaurentSeries operator*(const Rat& c, const LaurentSeries& a) {
  return CoeffPoly::constant(c) * a;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.var_ != b.var_ || a.trunc_ != b.trunc_) return false;
  int lo = std::min(a.min_deg_, b.min_deg_);
  for (int d = lo; d < a.trunc_; ++d)
    if (!(a.coeff(d) == b.coeff(d))) return false;
  return true;
}

LaurentSeries LaurentSeries::inverse() const {
  int v = valuation();
  if (v >= trunc_) throw std::invalid_argument("cannot invert a series that vanishes to its truncation");
  const CoeffPoly& lead = coeff(v);
  if (!lead.is_unit_monomial())
    throw std::invalid_argument("leading coefficient is not invertible: " + lead.str());
  CoeffPoly lead_inv = lead.unit_inverse();
  // f = lead x^v (1 + g), 1/f = lead^{-1} x^{-v} sum (-g)^m
  int rel = trunc_ - v;  // known relative terms of (1 + g)
  LaurentSeries g(var_, 0, rel, [&] {
    std::vector<CoeffPoly> coeffs;
    for (int d = v; d < trunc_; ++d) coeffs.push_back(lead_inv * coeff(d));
    coeffs[0] = coeffs[0] - CoeffPoly::constant(1);
    return coeffs;
  }());
  LaurentSeries acc = LaurentSeries::constant(var_, CoeffPoly::constant(1), rel);
  LaurentSeries powg = acc;
  for (int m = 1; m < rel; ++m) {
    powg = powg * (-g);
    if (powg.known_zero()) break;
    acc = acc + powg;
  }
  // shift by -v and scale by lead^{-1}
  std::vector<CoeffPoly> coeffs;
  for (int d = 0; d < rel; ++d) coeffs.push_back(lead_inv * acc.coeff(d));
  return LaurentSeries(var_, -v, -v + rel, std::move(coeffs));
}

}  // namespace g2eis
