#include "cfk/ulaurent.hpp"

#include <algorithm>

#include "cfk/error.hpp"

namespace cfk {

ULaurent::ULaurent(int lead, UPoly poly) : lead_(lead), poly_(std::move(poly)) { normalize(); }

ULaurent ULaurent::monomial(int exponent) { return {exponent, UPoly::one()}; }

void ULaurent::normalize() {
  if (poly_.is_zero()) {
    lead_ = 0;
    return;
  }
  const int low = poly_.lowest_exponent();
  if (low > 0) {
    poly_ = poly_.unshifted(low);
    lead_ += low;
  }
}

int ULaurent::exponent() const {
  if (!is_monomial()) throw InvalidArgument("ULaurent::exponent: not a monomial: " + to_string());
  return lead_;
}

ULaurent& ULaurent::operator+=(const ULaurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int base = std::min(lead_, other.lead_);
  UPoly sum = poly_.shifted(lead_ - base) + other.poly_.shifted(other.lead_ - base);
  lead_ = base;
  poly_ = std::move(sum);
  normalize();
  return *this;
}

ULaurent ULaurent::shifted(int k) const {
  if (is_zero()) return {};
  ULaurent out = *this;
  out.lead_ += k;
  return out;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.lead_ + b.lead_, a.poly_ * b.poly_};
}

UPoly ULaurent::to_upoly() const {
  if (is_zero()) return {};
  if (lead_ < 0) throw InvalidArgument("ULaurent::to_upoly: negative power of U in " + to_string());
  return poly_.shifted(lead_);
}

std::string ULaurent::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  const auto exps = poly_.exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    const int e = *it + lead_;
    if (!s.empty()) s += "+";
    if (e == 0) {
      s += "1";
    } else if (e == 1) {
      s += "U";
    } else {
      s += "U^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace cfk
