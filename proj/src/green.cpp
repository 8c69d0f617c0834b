#include "workbench/green.hpp"

#include <numeric>

#include "workbench/error.hpp"
#include "workbench/numtheory.hpp"

namespace workbench {

namespace {

void require_divisor(unsigned k, unsigned n) {
  if (k == 0 || n == 0 || n % k != 0)
    throw Error(ErrorCode::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(n));
}

}  // namespace

CharFn to_character(const RepElt& x) {
  CharFn chi;
  chi.n = x.n();
  chi.values.reserve(chi.n);
  for (unsigned j = 0; j < chi.n; ++j) chi.values.push_back(evaluate_at_root(x.value, j));
  return chi;
}

RepElt from_character(const CharFn& chi) {
  const unsigned n = chi.n;
  if (chi.values.size() != n) throw Error(ErrorCode::InvalidInput, "character needs one value per element");
  const Int big_n = chi.values.front().localization();
  Int den = 1;
  for (const auto& v : chi.values) {
    if (v.n() != n || v.localization() != big_n)
      throw Error(ErrorCode::ModulusMismatch, "character values over mixed rings");
    den = lcm(den, v.den());
  }
  std::vector<std::vector<Int>> scaled(n);
  for (unsigned j = 0; j < n; ++j) {
    scaled[j] = chi.values[j].num();
    const Int f = den / chi.values[j].den();
    if (f != 1)
      for (auto& c : scaled[j]) c *= f;
  }

  // c_i = (1/n) sum_j chi(j) theta^{-ij}; accumulate in Z[z]/(z^n - 1), then reduce mod Phi_n.
  std::vector<Int> coeffs(n);
  std::vector<Int> acc(n);
  for (unsigned i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), Int(0));
    for (unsigned j = 0; j < n; ++j) {
      const auto& v = scaled[j];
      bool zero = true;
      for (const auto& c : v) zero = zero && c == 0;
      if (zero) continue;
      const unsigned shift = static_cast<unsigned>((n - (static_cast<unsigned long long>(i) * j) % n) % n);
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        unsigned pos = static_cast<unsigned>(t) + shift;
        if (pos >= n) pos -= n;
        acc[pos] += v[t];
      }
    }
    std::vector<Int> reduced = acc;
    reduce_mod_cyclotomic(reduced, n);
    for (std::size_t t = 1; t < reduced.size(); ++t)
      if (reduced[t] != 0)
        throw Error(ErrorCode::Internal,
                    "from_character: coefficient " + std::to_string(i) + " is not rational");
    coeffs[i] = reduced.empty() ? Int(0) : reduced[0];
  }
  try {
    return {CycPoly(n, big_n, std::move(coeffs), den * n)};
  } catch (const Error& e) {
    throw Error(ErrorCode::Internal, std::string("from_character: not a virtual character over Z[1/N]: ") + e.what());
  }
}

RepElt restrict(const RepElt& x, unsigned k) {
  const unsigned n = x.n();
  require_divisor(k, n);
  std::vector<Int> acc(k);
  for (unsigned i = 0; i < n; ++i) acc[i % k] += x.value.num()[i];
  return {CycPoly(k, x.value.localization(), std::move(acc), x.value.den())};
}

CharFn restrict_character(const CharFn& chi, unsigned k) {
  require_divisor(k, chi.n);
  const unsigned step = chi.n / k;
  CharFn out;
  out.n = k;
  for (unsigned j = 0; j < k; ++j) {
    auto v = descend(chi.values[j * step], k);
    if (!v)
      throw Error(ErrorCode::DescentFailure, "value at h^" + std::to_string(j * step) + " = " +
                                                 chi.values[j * step].to_string() +
                                                 " does not lie in Z[theta_" + std::to_string(k) + ", 1/N]");
    out.values.push_back(std::move(*v));
  }
  return out;
}

CharFn induce_character(const CharFn& chi, unsigned n) {
  const unsigned k = chi.n;
  require_divisor(k, n);
  const unsigned index = n / k;
  const Int big_n = chi.values.front().localization();
  CharFn out;
  out.n = n;
  for (unsigned j = 0; j < n; ++j) {
    if (j % index != 0)
      out.values.push_back(CycEltN::zero(n, big_n));
    else
      out.values.push_back(embed(chi.values[j / index], n).scaled(index));
  }
  return out;
}

RepElt induce(const RepElt& x, unsigned n) {
  require_divisor(x.n(), n);
  return from_character(induce_character(to_character(x), n));
}

RepElt conjugate_rep(const RepElt& x, long long unit) {
  const unsigned n = x.n();
  const unsigned long long u = static_cast<unsigned long long>(((unit % n) + n) % n);
  if (std::gcd(u, static_cast<unsigned long long>(n)) != 1)
    throw Error(ErrorCode::NotAUnit, std::to_string(unit) + " is not a unit mod " + std::to_string(n));
  std::vector<Int> acc(n);
  for (unsigned i = 0; i < n; ++i) acc[(i * u) % n] = x.value.num()[i];
  return {CycPoly(n, x.value.localization(), std::move(acc), x.value.den())};
}

FrobeniusReport frobenius_check(unsigned n, unsigned k, const Int& localization) {
  require_divisor(k, n);
  const Int big_n = localization == 0 ? Int(n) : localization;
  FrobeniusReport report;
  report.n = n;
  report.k = k;
  auto fail = [&](std::string what) {
    if (report.passed) report.counterexample = std::move(what);
    report.passed = false;
  };

  const unsigned index = n / k;
  const RepElt pkk{psi(k, k, big_n)};
  const RepElt pnk{psi(n, k, big_n)};
  const CharFn induced = induce_character(to_character(pkk), n);
  CharFn expected = to_character(pnk);
  for (auto& v : expected.values) v = v.scaled(index);
  ++report.checked;
  if (!(induced == expected))
    fail("induced character of p_{" + std::to_string(k) + "," + std::to_string(k) + "} != |H:K| p_{" +
         std::to_string(n) + "," + std::to_string(k) + "}");
  ++report.checked;
  const RepElt ind_pkk = from_character(induced);
  if (!(ind_pkk == RepElt{pnk.value.scaled(index)}))
    fail("ind(p_{k,k}) = " + ind_pkk.value.to_string() + " != " + std::to_string(index) + "*p_{n,k}");

  // x = z^a in R(K), y = z^b in R(H); res(y) x = z^{(a+b) mod k}
  std::vector<RepElt> ind_basis;
  for (unsigned a = 0; a < k; ++a) ind_basis.push_back(induce(RepElt{CycPoly::monomial(k, big_n, a)}, n));
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < n; ++b) {
      ++report.checked;
      const RepElt y{CycPoly::monomial(n, big_n, b)};
      const RepElt& lhs = ind_basis[(a + b) % k];
      const RepElt rhs = y * ind_basis[a];
      if (!(lhs == rhs))
        fail("x = z^" + std::to_string(a) + ", y = z^" + std::to_string(b) + ": ind(res(y)x) = " +
             lhs.value.to_string() + " but y ind(x) = " + rhs.value.to_string());
    }
  return report;
}

std::vector<GeneratorSummand> decompose_generator(unsigned n, const Int& localization) {
  if (!primes_inverted(n, localization))
    throw Error(ErrorCode::PrimeNotInverted, "decompose_generator: a prime of n = " + std::to_string(n) +
                                                 " is not inverted in N = " + localization.get_str());
  std::vector<GeneratorSummand> out;
  for (unsigned k : divisors(n)) out.push_back({k, RepElt{psi(n, k, localization)}, k < n});
  return out;
}

}  // namespace workbench
