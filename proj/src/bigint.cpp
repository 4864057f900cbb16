#include "bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace satrop {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long u =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
  while (u) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::from_mag(int sign, std::vector<uint32_t> mag) {
  BigInt r;
  r.sign_ = sign;
  r.mag_ = std::move(mag);
  r.trim();
  return r;
}

bool BigInt::fits_i64() const {
  if (mag_.size() < 2) return true;
  if (mag_.size() > 2) return false;
  unsigned long long u = (static_cast<unsigned long long>(mag_[1]) << 32) | mag_[0];
  return sign_ > 0 ? u <= 0x7fffffffffffffffULL : u <= 0x8000000000000000ULL;
}

long long BigInt::to_i64() const {
  unsigned long long u = 0;
  if (mag_.size() > 0) u |= mag_[0];
  if (mag_.size() > 1) u |= static_cast<unsigned long long>(mag_[1]) << 32;
  return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<uint32_t>(carry);
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = ai * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t s = r[k] + carry;
      r[k] = static_cast<uint32_t>(s);
      carry = s >> 32;
      ++k;
    }
  }
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.fits_i64() && b.fits_i64() && a.mag_.size() < 2 && b.mag_.size() < 2)
    return BigInt(a.to_i64() + b.to_i64());
  if (a.sign_ == b.sign_) return BigInt::from_mag(a.sign_, BigInt::add_mag(a.mag_, b.mag_));
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigInt();
  if (c > 0) return BigInt::from_mag(a.sign_, BigInt::sub_mag(a.mag_, b.mag_));
  return BigInt::from_mag(b.sign_, BigInt::sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  if (a.mag_.size() == 1 && b.mag_.size() == 1) {
    uint64_t p = static_cast<uint64_t>(a.mag_[0]) * b.mag_[0];
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.push_back(static_cast<uint32_t>(p));
    if (p >> 32) r.mag_.push_back(static_cast<uint32_t>(p >> 32));
    return r;
  }
  return BigInt::from_mag(a.sign_ * b.sign_, BigInt::mul_mag(a.mag_, b.mag_));
}

void BigInt::shl_bit(std::vector<uint32_t>& a) {
  uint32_t carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint32_t nc = a[i] >> 31;
    a[i] = (a[i] << 1) | carry;
    carry = nc;
  }
  if (carry) a.push_back(carry);
}

void BigInt::shr_bit(std::vector<uint32_t>& a) {
  uint32_t carry = 0;
  for (size_t i = a.size(); i-- > 0;) {
    uint32_t nc = a[i] & 1;
    a[i] = (a[i] >> 1) | (carry << 31);
    carry = nc;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

size_t BigInt::bit_length() const {
  if (mag_.empty()) return 0;
  uint32_t top = mag_.back();
  size_t bits = (mag_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  if (a.fits_i64() && b.fits_i64() && a.mag_.size() < 2 && b.mag_.size() < 2) {
    long long x = a.to_i64(), y = b.to_i64();
    q = BigInt(x / y);
    r = BigInt(x % y);
    return;
  }
  int c = cmp_mag(a.mag_, b.mag_);
  if (c < 0) {
    q = BigInt();
    r = a;
    return;
  }
  // Single-limb divisor fast path.
  if (b.mag_.size() == 1) {
    uint64_t d = b.mag_[0];
    std::vector<uint32_t> qs(a.mag_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.mag_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a.mag_[i];
      qs[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    q = from_mag(a.sign_ * b.sign_, std::move(qs));
    r = BigInt(static_cast<long long>(rem));
    if (a.sign_ < 0) r = -r;
    return;
  }
  // Shift-subtract long division on magnitudes.
  size_t shift = a.bit_length() - (b.mag_.size() - 1) * 32;
  std::vector<uint32_t> den = b.mag_;
  size_t db = b.bit_length();
  size_t da = a.bit_length();
  shift = da - db;
  for (size_t i = 0; i < shift; ++i) shl_bit(den);
  std::vector<uint32_t> rem = a.mag_;
  std::vector<uint32_t> qs((shift + 32) / 32 + 1, 0);
  for (size_t i = shift + 1; i-- > 0;) {
    if (cmp_mag(rem, den) >= 0) {
      rem = sub_mag(rem, den);
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      qs[i / 32] |= (1u << (i % 32));
    }
    shr_bit(den);
  }
  q = from_mag(a.sign_ * b.sign_, std::move(qs));
  r = from_mag(a.sign_, std::move(rem));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  divmod(a, b, q, r);
  assert(r.is_zero() && "divexact: not divisible");
  return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  if (a.fits_i64() && b.fits_i64() && a.mag_.size() < 2 && b.mag_.size() < 2) {
    long long x = a.to_i64(), y = b.to_i64();
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y) {
      long long t = x % y;
      x = y;
      y = t;
    }
    return BigInt(x);
  }
  std::vector<uint32_t> x = a.mag_, y = b.mag_;
  size_t shifts = 0;
  auto even = [](const std::vector<uint32_t>& v) { return !v.empty() && (v[0] & 1) == 0; };
  while (!x.empty() && !y.empty() && even(x) && even(y)) {
    shr_bit(x);
    shr_bit(y);
    ++shifts;
  }
  while (!x.empty() && even(x)) shr_bit(x);
  while (!y.empty()) {
    while (even(y)) shr_bit(y);
    if (cmp_mag(x, y) > 0) std::swap(x, y);
    y = sub_mag(y, x);
    while (!y.empty() && y.back() == 0) y.pop_back();
  }
  for (size_t i = 0; i < shifts; ++i) shl_bit(x);
  return from_mag(1, std::move(x));
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string out;
  BigInt v = abs();
  BigInt base(1000000000LL);
  std::vector<long long> chunks;
  while (!v.is_zero()) {
    BigInt q, r;
    divmod(v, base, q, r);
    chunks.push_back(r.is_zero() ? 0 : r.to_i64());
    v = q;
  }
  out = std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  if (sign_ < 0) out = "-" + out;
  return out;
}

}  // namespace satrop
