#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace satrop {

// Arbitrary-precision signed integer. Sign-magnitude, 32-bit limbs, least
// significant limb first. Canonical form: no trailing zero limbs and
// sign == 0 exactly when the magnitude is empty.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  bool negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  bool fits_i64() const;
  long long to_i64() const;  // requires fits_i64()
  std::string to_string() const;

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division (quotient rounds toward zero, remainder has the
  // sign of the dividend). b must be nonzero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // Exact division: requires b | a.
  static BigInt divexact(const BigInt& a, const BigInt& b);

  static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

  bool operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
  }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
  bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
  bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

  static int cmp(const BigInt& a, const BigInt& b);
  size_t bit_length() const;

 private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void shl_bit(std::vector<uint32_t>& a);
  static void shr_bit(std::vector<uint32_t>& a);
  static BigInt from_mag(int sign, std::vector<uint32_t> mag);
};

}  // namespace satrop
