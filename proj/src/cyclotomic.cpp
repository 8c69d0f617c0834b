#include "workbench/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "workbench/error.hpp"
#include "workbench/numtheory.hpp"

namespace workbench {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::exact_div(const IntPoly& monic) const {
  if (monic.is_zero() || monic.coeffs_.back() != 1)
    throw Error(ErrorCode::Internal, "exact_div: divisor must be monic");
  if (degree() < monic.degree()) {
    if (!is_zero()) throw Error(ErrorCode::Internal, "exact_div: nonzero remainder");
    return {};
  }
  std::vector<Int> rem = coeffs_;
  const std::size_t dd = monic.coeffs_.size() - 1;
  std::vector<Int> q(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Int c = rem[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t t = 0; t <= dd; ++t) rem[i - dd + t] -= c * monic.coeffs_[t];
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorCode::Internal, "exact_div: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

namespace {

std::string format_terms(const std::vector<Int>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) os << (mag != 1 ? "*" : "") << "z" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string IntPoly::to_string() const { return format_terms(coeffs_); }

// ---------------------------------------------------------------------------
// cyclotomic polynomials

const IntPoly& cyclotomic(unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic: k must be positive");
  static std::shared_mutex mutex;
  static std::map<unsigned, std::unique_ptr<const IntPoly>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return *it->second;
  }
  IntPoly value;
  if (k == 1) {
    value = IntPoly({Int(-1), Int(1)});
  } else {
    IntPoly quotient = IntPoly::monomial(1, k) - IntPoly({Int(1)});
    for (unsigned d : divisors(k))
      if (d < k) quotient = quotient.exact_div(cyclotomic(d));
    value = std::move(quotient);
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(k, std::make_unique<const IntPoly>(std::move(value)));
  return *it->second;
}

void reduce_mod_cyclotomic(std::vector<Int>& coeffs, unsigned k) {
  const auto& phi = cyclotomic(k).coeffs();
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    if (coeffs[i] == 0) continue;
    const Int c = coeffs[i];
    for (std::size_t t = 0; t < deg; ++t)
      if (phi[t] != 0) coeffs[i - deg + t] -= c * phi[t];
    coeffs[i] = 0;
  }
  coeffs.resize(deg);
}

// ---------------------------------------------------------------------------
// shared fraction helpers

namespace {

void check_localization(const Int& big_n) {
  if (big_n < 1) throw Error(ErrorCode::InvalidInput, "localization N must be >= 1");
}

void normalize_fraction(std::vector<Int>& num, Int& den, const Int& big_n) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  if (den < 0) {
    den = -den;
    for (auto& c : num) c = -c;
  }
  bool zero = true;
  for (const auto& c : num) zero = zero && c == 0;
  if (zero) {
    den = 1;
    return;
  }
  Int g = den;
  for (const auto& c : num) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (g != 1) {
    for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    den /= g;
  }
  if (!primes_inverted(den, big_n))
    throw Error(ErrorCode::PrimeNotInverted,
                "denominator " + den.get_str() + " has a prime not dividing N = " + big_n.get_str());
}

struct Combined {
  std::vector<Int> a, b;
  Int den;
};

Combined common_denominator(const std::vector<Int>& na, const Int& da, const std::vector<Int>& nb,
                            const Int& db) {
  Combined c{na, nb, lcm(da, db)};
  const Int fa = c.den / da, fb = c.den / db;
  if (fa != 1)
    for (auto& x : c.a) x *= fa;
  if (fb != 1)
    for (auto& x : c.b) x *= fb;
  return c;
}

std::string format_fraction(const std::vector<Int>& num, const Int& den) {
  const std::string body = format_terms(num);
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

}  // namespace

// ---------------------------------------------------------------------------
// CycPoly

CycPoly::CycPoly(unsigned n, Int localization, std::vector<Int> num, Int den)
    : n_(n), big_n_(std::move(localization)), num_(n), den_(std::move(den)) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "CycPoly: n must be positive");
  check_localization(big_n_);
  for (std::size_t i = 0; i < num.size(); ++i) num_[i % n] += num[i];
  normalize_fraction(num_, den_, big_n_);
}

CycPoly CycPoly::zero(unsigned n, const Int& localization) { return CycPoly(n, localization, {}); }
CycPoly CycPoly::one(unsigned n, const Int& localization) { return monomial(n, localization, 0); }

CycPoly CycPoly::monomial(unsigned n, const Int& localization, unsigned power, const Int& c) {
  std::vector<Int> v(n);
  v[power % n] = c;
  return CycPoly(n, localization, std::move(v));
}

bool CycPoly::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

CycPoly CycPoly::scaled(const Int& factor) const {
  std::vector<Int> v = num_;
  for (auto& c : v) c *= factor;
  return CycPoly(n_, big_n_, std::move(v), den_);
}

static void require_same(const CycPoly& a, const CycPoly& b) {
  if (a.n() != b.n() || a.localization() != b.localization())
    throw Error(ErrorCode::ModulusMismatch, "CycPoly operands over (n=" + std::to_string(a.n()) +
                                                ", N=" + a.localization().get_str() + ") and (n=" +
                                                std::to_string(b.n()) + ", N=" +
                                                b.localization().get_str() + ")");
}

CycPoly operator+(const CycPoly& a, const CycPoly& b) {
  require_same(a, b);
  auto c = common_denominator(a.num_, a.den_, b.num_, b.den_);
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] += c.b[i];
  return CycPoly(a.n_, a.big_n_, std::move(c.a), std::move(c.den));
}

CycPoly operator-(const CycPoly& a, const CycPoly& b) {
  require_same(a, b);
  auto c = common_denominator(a.num_, a.den_, b.num_, b.den_);
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] -= c.b[i];
  return CycPoly(a.n_, a.big_n_, std::move(c.a), std::move(c.den));
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  require_same(a, b);
  const unsigned n = a.n_;
  std::vector<Int> c(n);
  for (unsigned i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (b.num_[j] == 0) continue;
      const unsigned k = i + j < n ? i + j : i + j - n;
      c[k] += a.num_[i] * b.num_[j];
    }
  }
  return CycPoly(n, a.big_n_, std::move(c), a.den_ * b.den_);
}

CycPoly CycPoly::operator-() const { return scaled(-1); }

std::string CycPoly::to_string() const { return format_fraction(num_, den_); }

CycPoly cyc_add(const CycPoly& a, const CycPoly& b) { return a + b; }
CycPoly cyc_sub(const CycPoly& a, const CycPoly& b) { return a - b; }
CycPoly cyc_mul(const CycPoly& a, const CycPoly& b) { return a * b; }

// ---------------------------------------------------------------------------
// CycEltN

CycEltN::CycEltN(unsigned n, Int localization, std::vector<Int> num, Int den)
    : n_(n), big_n_(std::move(localization)), num_(std::move(num)), den_(std::move(den)) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "CycEltN: n must be positive");
  check_localization(big_n_);
  const std::size_t deg = cyclotomic(n).coeffs().size() - 1;
  if (num_.size() < deg)
    num_.resize(deg);
  else if (num_.size() > deg)
    reduce_mod_cyclotomic(num_, n);
  normalize_fraction(num_, den_, big_n_);
}

CycEltN CycEltN::zero(unsigned n, const Int& localization) { return CycEltN(n, localization, {}); }
CycEltN CycEltN::one(unsigned n, const Int& localization) { return from_int(n, localization, 1); }
CycEltN CycEltN::from_int(unsigned n, const Int& localization, const Int& c) {
  return CycEltN(n, localization, {c});
}

bool CycEltN::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

CycEltN CycEltN::scaled(const Int& factor) const {
  std::vector<Int> v = num_;
  for (auto& c : v) c *= factor;
  return CycEltN(n_, big_n_, std::move(v), den_);
}

static void require_same(const CycEltN& a, const CycEltN& b) {
  if (a.n() != b.n() || a.localization() != b.localization())
    throw Error(ErrorCode::ModulusMismatch, "CycEltN operands over (n=" + std::to_string(a.n()) +
                                                ", N=" + a.localization().get_str() + ") and (n=" +
                                                std::to_string(b.n()) + ", N=" +
                                                b.localization().get_str() + ")");
}

CycEltN operator+(const CycEltN& a, const CycEltN& b) {
  require_same(a, b);
  auto c = common_denominator(a.num_, a.den_, b.num_, b.den_);
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] += c.b[i];
  return CycEltN(a.n_, a.big_n_, std::move(c.a), std::move(c.den));
}

CycEltN operator-(const CycEltN& a, const CycEltN& b) {
  require_same(a, b);
  auto c = common_denominator(a.num_, a.den_, b.num_, b.den_);
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] -= c.b[i];
  return CycEltN(a.n_, a.big_n_, std::move(c.a), std::move(c.den));
}

CycEltN operator*(const CycEltN& a, const CycEltN& b) {
  require_same(a, b);
  if (a.num_.empty()) return a;
  std::vector<Int> c(a.num_.size() + b.num_.size() - 1);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) c[i + j] += a.num_[i] * b.num_[j];
  }
  return CycEltN(a.n_, a.big_n_, std::move(c), a.den_ * b.den_);
}

CycEltN CycEltN::operator-() const { return scaled(-1); }

std::string CycEltN::to_string() const { return format_fraction(num_, den_); }

// ---------------------------------------------------------------------------
// operations

CycPoly psi(unsigned n, unsigned k, const Int& localization) {
  if (n == 0 || k == 0 || n % k != 0)
    throw Error(ErrorCode::NotADivisor,
                "psi: " + std::to_string(k) + " does not divide " + std::to_string(n));
  const Int big_n = localization == 0 ? Int(n) : localization;
  if (!primes_inverted(n, big_n))
    throw Error(ErrorCode::PrimeNotInverted,
                "psi: a prime of n = " + std::to_string(n) + " is not inverted in N = " + big_n.get_str());
  IntPoly p = IntPoly::monomial(1, 1) * cyclotomic(k).derivative();
  for (unsigned d : divisors(n))
    if (d != k) p = p * cyclotomic(d);
  return CycPoly(n, big_n, p.coeffs(), Int(n));
}

CycEltN evaluate_at_root(const CycPoly& a, long long j) {
  const unsigned n = a.n();
  const unsigned long long step = static_cast<unsigned long long>(((j % n) + n) % n);
  std::vector<Int> acc(n);
  for (unsigned i = 0; i < n; ++i)
    if (a.num()[i] != 0) acc[(i * step) % n] += a.num()[i];
  return CycEltN(n, a.localization(), std::move(acc), a.den());
}

std::vector<CycEltN> crt_split(const CycPoly& a) {
  const unsigned n = a.n();
  if (!primes_inverted(n, a.localization()))
    throw Error(ErrorCode::PrimeNotInverted, "crt_split: a prime of n = " + std::to_string(n) +
                                                 " is not inverted in N = " + a.localization().get_str());
  std::vector<CycEltN> parts;
  for (unsigned k : divisors(n)) {
    std::vector<Int> folded(k);
    for (unsigned i = 0; i < n; ++i) folded[i % k] += a.num()[i];
    parts.emplace_back(k, a.localization(), std::move(folded), a.den());
  }
  return parts;
}

CycPoly crt_join(unsigned n, const std::vector<CycEltN>& parts) {
  const auto divs = divisors(n);
  if (parts.size() != divs.size())
    throw Error(ErrorCode::InvalidInput, "crt_join: expected one part per divisor of n");
  const Int big_n = parts.front().localization();
  if (!primes_inverted(n, big_n))
    throw Error(ErrorCode::PrimeNotInverted, "crt_join: a prime of n = " + std::to_string(n) +
                                                 " is not inverted in N = " + big_n.get_str());
  CycPoly sum = CycPoly::zero(n, big_n);
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const auto& part = parts[i];
    if (part.n() != divs[i] || part.localization() != big_n)
      throw Error(ErrorCode::ModulusMismatch, "crt_join: part " + std::to_string(i) +
                                                  " is not over Z[theta_" + std::to_string(divs[i]) +
                                                  ", 1/N]");
    const CycPoly lifted(n, big_n, part.num(), part.den());
    sum = sum + psi(n, divs[i], big_n) * lifted;
  }
  return sum;
}

CycEltN galois(const CycEltN& a, long long k) {
  const unsigned n = a.n();
  const unsigned long long r = static_cast<unsigned long long>(((k % n) + n) % n);
  if (std::gcd(r, static_cast<unsigned long long>(n)) != 1)
    throw Error(ErrorCode::NotAUnit, std::to_string(k) + " is not a unit mod " + std::to_string(n));
  std::vector<Int> acc(n);
  for (std::size_t i = 0; i < a.num().size(); ++i)
    if (a.num()[i] != 0) acc[(i * r) % n] += a.num()[i];
  return CycEltN(n, a.localization(), std::move(acc), a.den());
}

CycEltN embed(const CycEltN& a, unsigned n) {
  if (n % a.n() != 0)
    throw Error(ErrorCode::NotADivisor,
                std::to_string(a.n()) + " does not divide " + std::to_string(n));
  const unsigned step = n / a.n();
  std::vector<Int> acc(a.num().empty() ? 0 : (a.num().size() - 1) * step + 1);
  for (std::size_t i = 0; i < a.num().size(); ++i) acc[i * step] = a.num()[i];
  return CycEltN(n, a.localization(), std::move(acc), a.den());
}

std::optional<CycEltN> descend(const CycEltN& a, unsigned k) {
  const unsigned n = a.n();
  if (k == 0 || n % k != 0)
    throw Error(ErrorCode::NotADivisor,
                std::to_string(k) + " does not divide " + std::to_string(n));
  const std::size_t rows = a.num().size();
  const std::size_t unknowns = euler_phi(k);
  RatMatrix m(rows, std::vector<Rat>(unknowns));
  for (std::size_t i = 0; i < unknowns; ++i) {
    std::vector<Int> e(i + 1);
    e[i] = 1;
    const auto img = embed(CycEltN(k, a.localization(), e), n);
    for (std::size_t r = 0; r < rows; ++r) m[r][i] = img.num()[r];
  }
  std::vector<Rat> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) rhs[r] = Rat(a.num()[r], a.den());
  const auto x = solve_rational(std::move(m), std::move(rhs));
  if (!x) return std::nullopt;
  Int den = 1;
  for (const auto& q : *x) den = lcm(den, Int(q.get_den()));
  if (!primes_inverted(den, a.localization())) return std::nullopt;
  std::vector<Int> num(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) num[i] = (*x)[i].get_num() * (den / Int((*x)[i].get_den()));
  CycEltN out(k, a.localization(), std::move(num), den);
  if (!(embed(out, n) == a)) return std::nullopt;
  return out;
}

}  // namespace workbench
