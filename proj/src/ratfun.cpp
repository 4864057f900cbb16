#include "ratfun.hpp"

#include <atomic>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace satrop {

namespace {
std::atomic<long long> g_degree_cap{8000};

void check_cap(long long deg) {
  if (deg > g_degree_cap.load(std::memory_order_relaxed))
    throw DegreeCapError("polynomial degree " + std::to_string(deg) +
                         " exceeds the configured cap");
}
}  // namespace

long long ratfun_degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }
void set_ratfun_degree_cap(long long cap) { g_degree_cap.store(cap, std::memory_order_relaxed); }

IntPoly IntPoly::monomial(BigInt c, long long exp) {
  IntPoly p;
  if (c.is_zero()) return p;
  assert(exp >= 0);
  p.c_.assign(static_cast<size_t>(exp) + 1, BigInt());
  p.c_.back() = std::move(c);
  return p;
}

long long IntPoly::ord() const {
  if (c_.empty()) return LLONG_MAX;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<long long>(i);
  return LLONG_MAX;  // unreachable in trimmed form
}

const BigInt& IntPoly::coeff(size_t i) const {
  static const BigInt zero;
  return i < c_.size() ? c_[i] : zero;
}

BigInt& IntPoly::at(size_t i) { return c_[i]; }

void IntPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
  r.trim();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  check_cap(a.degree() + b.degree());
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  IntPoly r;
  if (s.is_zero()) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c *= s;
  return r;
}

IntPoly IntPoly::shifted(long long k) const {
  assert(k >= 0);
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.assign(c_.size() + static_cast<size_t>(k), BigInt());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

BigInt IntPoly::content() const {
  BigInt g;
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    g = BigInt::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (c_.back().negative()) g = -g;
  IntPoly r = *this;
  if (!g.is_one())
    for (auto& c : r.c_) c = BigInt::divexact(c, g);
  return r;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
  assert(!b.is_zero());
  if (a.is_zero()) return IntPoly();
  long long da = a.degree(), db = b.degree();
  assert(da >= db);
  IntPoly rem = a;
  IntPoly q;
  q.c_.assign(static_cast<size_t>(da - db) + 1, BigInt());
  const BigInt& lb = b.c_.back();
  for (long long k = da - db; k >= 0; --k) {
    BigInt lead = rem.coeff(static_cast<size_t>(k + db));
    if (lead.is_zero()) continue;
    BigInt qk = BigInt::divexact(lead, lb);
    q.c_[static_cast<size_t>(k)] = qk;
    for (long long j = 0; j <= db; ++j)
      rem.c_[static_cast<size_t>(k + j)] -= qk * b.c_[static_cast<size_t>(j)];
  }
  rem.trim();
  assert(rem.is_zero() && "IntPoly::divexact: not divisible");
  q.trim();
  return q;
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
  assert(!b.is_zero());
  long long db = b.degree();
  IntPoly r = a;
  const BigInt& lb = b.c_.back();
  while (!r.is_zero() && r.degree() >= db) {
    long long k = r.degree() - db;
    BigInt lr = r.c_.back();
    for (auto& c : r.c_) c *= lb;
    for (long long j = 0; j <= db; ++j)
      r.c_[static_cast<size_t>(k + j)] -= lr * b.c_[static_cast<size_t>(j)];
    r.trim();
  }
  return r;
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  a = a.primitive();
  b = b.primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << (c_[i].negative() ? " - " : " + ");
    else if (c_[i].negative())
      os << "-";
    BigInt a = c_[i].abs();
    if (i == 0 || !a.is_one()) os << a.to_string();
    if (i > 0) {
      if (!a.is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatFun::RatFun(IntPoly num, IntPoly den, Rational scale)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFun RatFun::monomial(Rational c, long long exp) {
  if (c.is_zero()) return RatFun();
  RatFun r;
  r.scale_ = std::move(c);
  if (exp >= 0)
    r.num_ = IntPoly::monomial(BigInt(1), exp);
  else
    r.den_ = IntPoly::monomial(BigInt(1), -exp);
  return r;
}

void RatFun::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  if (scale_.is_zero() || num_.is_zero()) {
    scale_ = Rational(0);
    num_ = IntPoly::one();
    den_ = IntPoly::one();
    return;
  }
  BigInt cn = num_.content();
  BigInt cd = den_.content();
  if (num_.coeffs().back().negative()) cn = -cn;
  if (den_.coeffs().back().negative()) cd = -cd;
  scale_ = scale_ * Rational(cn, cd);
  IntPoly n = num_, d = den_;
  if (!cn.is_one()) {
    for (size_t i = 0; i < n.coeffs().size(); ++i) n.at(i) = BigInt::divexact(n.coeff(i), cn);
  }
  if (!cd.is_one()) {
    for (size_t i = 0; i < d.coeffs().size(); ++i) d.at(i) = BigInt::divexact(d.coeff(i), cd);
  }
  IntPoly g = IntPoly::gcd(n, d);
  if (g.degree() > 0) {
    n = IntPoly::divexact(n, g);
    d = IntPoly::divexact(d, g);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

Rational RatFun::constant_value() const {
  assert(is_constant());
  if (is_zero()) return Rational(0);
  return scale_ * Rational(num_.coeff(0), den_.coeff(0));
}

long long RatFun::valuation() const {
  if (is_zero()) return kValInf;
  return num_.ord() - den_.ord();
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
  return RatFun(den_, num_, Rational(1) / scale_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  return RatFun(a.num_ * b.num_, a.den_ * b.den_, a.scale_ * b.scale_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // scale_a * na/da + scale_b * nb/db over common denominator da*db.
  Rational sa = a.scale_, sb = b.scale_;
  BigInt wa = sa.num() * sb.den();
  BigInt wb = sb.num() * sa.den();
  Rational common(BigInt(1), sa.den() * sb.den());
  IntPoly num = (a.num_ * b.den_).scaled(wa) + (b.num_ * a.den_).scaled(wb);
  return RatFun(std::move(num), a.den_ * b.den_, common);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

std::string RatFun::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (!scale_.is_one()) os << "(" << scale_.to_string() << ")*";
  os << "(" << num_.to_string() << ")";
  if (den_.degree() > 0 || !den_.coeff(0).is_one()) os << "/(" << den_.to_string() << ")";
  return os.str();
}

SolveStatus solve_linear(std::vector<std::vector<RatFun>> M, std::vector<RatFun> b,
                         std::vector<RatFun>& x) {
  const size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");
  if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");

  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < n && rank < n; ++col) {
    size_t piv = rank;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(M[piv], M[rank]);
    std::swap(b[piv], b[rank]);
    RatFun inv = M[rank][col].inverse();
    for (size_t j = col; j < n; ++j) M[rank][j] *= inv;
    b[rank] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == rank || M[i][col].is_zero()) continue;
      RatFun f = M[i][col];
      for (size_t j = col; j < n; ++j) M[i][j] -= f * M[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < n) {
    for (size_t i = rank; i < n; ++i)
      if (!b[i].is_zero()) return SolveStatus::inconsistent;
    return SolveStatus::singular;
  }
  x.assign(n, RatFun());
  for (size_t i = 0; i < n; ++i) x[pivot_col[i]] = b[i];
  return SolveStatus::ok;
}

}  // namespace satrop
