#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cfk {

/// Polynomial in U with coefficients in F2, stored as a dense bit vector
/// (bit k of the word array is the coefficient of U^k). The zero polynomial
/// has no words; nonzero polynomials never carry a trailing zero word.
class UPoly {
 public:
  UPoly() = default;

  static UPoly zero() { return {}; }
  static UPoly one() { return monomial(0); }
  static UPoly monomial(int exponent);
  /// Sum of U^e over the listed exponents (repeated exponents cancel).
  static UPoly from_exponents(std::initializer_list<int> exponents);

  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept;
  bool is_monomial() const noexcept;
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  /// Exponent of the lowest nonzero term; -1 for zero.
  int lowest_exponent() const noexcept;
  bool coeff(int k) const noexcept;
  std::vector<int> exponents() const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator*=(const UPoly& other);
  /// Multiply by U^k, k >= 0.
  UPoly shifted(int k) const;
  /// Divide by U^k; the caller guarantees U^k divides *this.
  UPoly unshifted(int k) const;

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string() const;

 private:
  void flip(int k);
  void trim();

  std::vector<std::uint64_t> words_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero when b is zero.
DivMod divmod(const UPoly& a, const UPoly& b);

/// Greatest common divisor (always monic over F2). Throws DivisionByZero
/// when b is zero, matching divmod.
UPoly gcd(UPoly a, UPoly b);

/// Bezout certificate: gcd = s*a + t*b.
struct ExtendedGcd {
  UPoly gcd;
  UPoly s;
  UPoly t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

}  // namespace cfk
