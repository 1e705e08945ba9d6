#include "cfk/upoly.hpp"

#include <bit>
#include <utility>

#include "cfk/error.hpp"

namespace cfk {

namespace {
constexpr int kWordBits = 64;
}

UPoly UPoly::monomial(int exponent) {
  if (exponent < 0) throw InvalidArgument("UPoly::monomial: negative exponent");
  UPoly p;
  p.flip(exponent);
  return p;
}

UPoly UPoly::from_exponents(std::initializer_list<int> exponents) {
  UPoly p;
  for (int e : exponents) {
    if (e < 0) throw InvalidArgument("UPoly::from_exponents: negative exponent");
    p.flip(e);
  }
  p.trim();
  return p;
}

bool UPoly::is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

bool UPoly::is_monomial() const noexcept {
  if (words_.empty()) return false;
  int bits = 0;
  for (auto w : words_) bits += std::popcount(w);
  return bits == 1;
}

int UPoly::degree() const noexcept {
  if (words_.empty()) return -1;
  const auto top = words_.back();
  return static_cast<int>(words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(top));
}

int UPoly::lowest_exponent() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<int>(w) * kWordBits + std::countr_zero(words_[w]);
  }
  return -1;
}

bool UPoly::coeff(int k) const noexcept {
  if (k < 0) return false;
  const auto w = static_cast<std::size_t>(k / kWordBits);
  if (w >= words_.size()) return false;
  return (words_[w] >> (k % kWordBits)) & 1U;
}

std::vector<int> UPoly::exponents() const {
  std::vector<int> out;
  for (int k = 0; k <= degree(); ++k) {
    if (coeff(k)) out.push_back(k);
  }
  return out;
}

void UPoly::flip(int k) {
  const auto w = static_cast<std::size_t>(k / kWordBits);
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (k % kWordBits);
}

void UPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  // Carry-less shift-and-xor over the set bits of a.
  for (std::size_t wa = 0; wa < a.words_.size(); ++wa) {
    auto word = a.words_[wa];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      word &= word - 1;
      const auto shift = static_cast<std::size_t>(wa * kWordBits + bit);
      const auto word_shift = shift / kWordBits;
      const auto bit_shift = shift % kWordBits;
      for (std::size_t wb = 0; wb < b.words_.size(); ++wb) {
        out.words_[wb + word_shift] ^= b.words_[wb] << bit_shift;
        if (bit_shift != 0) out.words_[wb + word_shift + 1] ^= b.words_[wb] >> (kWordBits - bit_shift);
      }
    }
  }
  out.trim();
  return out;
}

UPoly& UPoly::operator*=(const UPoly& other) {
  *this = *this * other;
  return *this;
}

UPoly UPoly::shifted(int k) const {
  if (k < 0) throw InvalidArgument("UPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  return *this * monomial(k);
}

UPoly UPoly::unshifted(int k) const {
  if (k < 0) throw InvalidArgument("UPoly::unshifted: negative shift");
  UPoly out;
  for (int e : exponents()) {
    if (e < k) throw InvalidArgument("UPoly::unshifted: U^k does not divide the polynomial");
    out.flip(e - k);
  }
  out.trim();
  return out;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  const auto exps = exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!s.empty()) s += "+";
    if (*it == 0) {
      s += "1";
    } else if (*it == 1) {
      s += "U";
    } else {
      s += "U^" + std::to_string(*it);
    }
  }
  return s;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  DivMod out{UPoly{}, a};
  const int db = b.degree();
  while (!out.remainder.is_zero() && out.remainder.degree() >= db) {
    const int shift = out.remainder.degree() - db;
    out.quotient += UPoly::monomial(shift);
    out.remainder += b.shifted(shift);
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  if (b.is_zero()) throw DivisionByZero();
  while (!b.is_zero()) {
    auto r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::one(), s1;
  UPoly t0, t1 = UPoly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = s0 + q * s1;
    UPoly t2 = t0 + q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {r0, s0, t0};
}

}  // namespace cfk
