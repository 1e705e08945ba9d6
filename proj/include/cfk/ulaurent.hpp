#pragma once

#include <string>

#include "cfk/upoly.hpp"

namespace cfk {

/// Element of F2[U, U^-1], written U^lead * poly with poly(0) = 1.
/// The zero element has lead 0 and zero poly.
class ULaurent {
 public:
  ULaurent() = default;
  ULaurent(int lead, UPoly poly);

  static ULaurent zero() { return {}; }
  static ULaurent one() { return monomial(0); }
  static ULaurent monomial(int exponent);
  static ULaurent from(const UPoly& p) { return {0, p}; }

  bool is_zero() const noexcept { return poly_.is_zero(); }
  bool is_monomial() const noexcept { return poly_.is_one(); }
  bool is_one() const noexcept { return lead_ == 0 && poly_.is_one(); }
  int lead() const noexcept { return lead_; }
  const UPoly& poly() const noexcept { return poly_; }
  /// Exponent of a monomial; throws if the element is not a monomial.
  int exponent() const;
  /// Highest exponent present (lead + deg poly); only meaningful when nonzero.
  int top() const noexcept { return lead_ + poly_.degree(); }

  ULaurent& operator+=(const ULaurent& other);
  ULaurent shifted(int k) const;  // multiply by U^k, any sign

  friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
  friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
  friend bool operator==(const ULaurent&, const ULaurent&) = default;

  /// Converts to F2[U]; throws InvalidArgument if a negative power is present.
  UPoly to_upoly() const;

  std::string to_string() const;

 private:
  void normalize();

  int lead_ = 0;
  UPoly poly_;
};

}  // namespace cfk
