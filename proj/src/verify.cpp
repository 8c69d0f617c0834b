#include "workbench/verify.hpp"

#include <random>
#include <vector>

#include "workbench/crossring.hpp"
#include "workbench/cyclotomic.hpp"
#include "workbench/error.hpp"
#include "workbench/green.hpp"
#include "workbench/numtheory.hpp"
#include "workbench/parallel.hpp"

namespace workbench {

namespace {

struct ItemResult {
  std::size_t checked = 0;
  std::string counterexample;
};

std::uint64_t item_seed(std::uint64_t seed, unsigned n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), n};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::string tag(unsigned n) { return "n=" + std::to_string(n) + ": "; }

ItemResult psi_item(unsigned n) {
  ItemResult r;
  const Int big_n = n;
  const auto ks = divisors(n);
  std::vector<CycPoly> p;
  for (unsigned k : ks) p.push_back(psi(n, k, big_n));
  auto fail = [&](std::string s) {
    if (r.counterexample.empty()) r.counterexample = tag(n) + std::move(s);
  };
  CycPoly sum = CycPoly::zero(n, big_n);
  for (std::size_t a = 0; a < ks.size(); ++a) {
    sum = sum + p[a];
    for (std::size_t b = a; b < ks.size(); ++b) {
      ++r.checked;
      const CycPoly prod = p[a] * p[b];
      if (a == b && !(prod == p[a]))
        fail("psi_{n," + std::to_string(ks[a]) + "}^2 = " + prod.to_string() + " but psi = " + p[a].to_string());
      if (a != b && !prod.is_zero())
        fail("psi_{n," + std::to_string(ks[a]) + "} psi_{n," + std::to_string(ks[b]) + "} = " + prod.to_string() +
             " (operands " + p[a].to_string() + ", " + p[b].to_string() + ")");
    }
    ++r.checked;
    if (!mpz_divisible_p(Int(n).get_mpz_t(), p[a].den().get_mpz_t()))
      fail("n psi_{n," + std::to_string(ks[a]) + "} is not integral: " + p[a].to_string());
  }
  ++r.checked;
  if (!(sum == CycPoly::one(n, big_n))) fail("sum of psi_{n,k} = " + sum.to_string());
  return r;
}

ItemResult character_item(unsigned n) {
  ItemResult r;
  const Int big_n = n;
  const auto one = CycEltN::one(n, big_n), zero = CycEltN::zero(n, big_n);
  for (unsigned k : divisors(n)) {
    const CycPoly p = psi(n, k, big_n);
    for (unsigned j = 0; j < n; ++j) {
      ++r.checked;
      const CycEltN v = evaluate_at_root(p, j);
      const CycEltN& expect = additive_order(j, n) == k ? one : zero;
      if (!(v == expect) && r.counterexample.empty())
        r.counterexample = tag(n) + "psi_{n," + std::to_string(k) + "} = " + p.to_string() + " at theta^" +
                           std::to_string(j) + " gives " + v.to_string() + ", expected " + expect.to_string();
    }
  }
  return r;
}

ItemResult frobenius_item(unsigned n) {
  ItemResult r;
  for (unsigned k : divisors(n)) {
    const auto rep = frobenius_check(n, k);
    r.checked += rep.checked;
    if (!rep.passed && r.counterexample.empty())
      r.counterexample = tag(n) + "k=" + std::to_string(k) + ": " + rep.counterexample;
  }
  return r;
}

constexpr int crt_pairs = 100;

ItemResult crt_item(unsigned n, std::uint64_t seed) {
  ItemResult r;
  const Int big_n = n;
  std::mt19937_64 rng(item_seed(seed, n));
  std::uniform_int_distribution<int> coeff(-9, 9), pick(0, 2);
  const auto primes = prime_factors(big_n);
  auto random_poly = [&] {
    std::vector<Int> v(n);
    for (auto& c : v) c = coeff(rng);
    Int den = 1;
    for (const auto& p : primes)
      for (int e = pick(rng); e > 0; --e) den *= p;
    return CycPoly(n, big_n, std::move(v), den);
  };
  for (int t = 0; t < crt_pairs; ++t) {
    const CycPoly a = random_poly(), b = random_poly();
    const auto sa = crt_split(a), sb = crt_split(b), sab = crt_split(a * b);
    ++r.checked;
    if (!(crt_join(n, sa) == a) && r.counterexample.empty())
      r.counterexample = tag(n) + "crt_join(crt_split(a)) != a for a = " + a.to_string();
    for (std::size_t i = 0; i < sa.size(); ++i) {
      ++r.checked;
      if (!(sab[i] == sa[i] * sb[i]) && r.counterexample.empty())
        r.counterexample = tag(n) + "crt_split not multiplicative at component " + std::to_string(i) + " for a = " +
                           a.to_string() + ", b = " + b.to_string();
    }
  }
  return r;
}

std::vector<std::string> crossed_groups(unsigned k) {
  std::vector<std::string> g{"cyclic(" + std::to_string(k) + ")"};
  if (k >= 2) g.push_back("dihedral(" + std::to_string(k) + ")");
  if (k == 4) g.push_back("klein_four");
  if (k == 3 || k == 4) g.push_back("symmetric(" + std::to_string(k) + ")");
  return g;
}

IntMatrix power(const IntMatrix& a, unsigned k) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

ItemResult crossed_item(unsigned k, std::uint64_t seed) {
  constexpr std::size_t max_rank = 48;
  constexpr unsigned max_weyl_products = 24;
  ItemResult r;
  std::mt19937_64 rng(item_seed(seed, k));
  auto fail = [&](const std::string& where, const std::string& what) {
    if (r.counterexample.empty()) r.counterexample = where + ": " + what;
  };
  for (const auto& spec : crossed_groups(k)) {
    const auto g = preset_group(spec);
    const auto report = target_category(g);
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      const auto& entry = report.classes[c];
      const RingPtr& ring = entry.ring;
      const std::string where = spec + ", class " + std::to_string(c) + " (" + ring->label() + ")";
      if (ring->rank() <= max_rank) {
        const auto rep = regular_representation(*ring);
        IntMatrix phi(rep.z.rows(), rep.z.cols()), pw = IntMatrix::identity(rep.z.rows());
        for (const auto& coef : cyclotomic(ring->n).coeffs()) {
          for (std::size_t i = 0; i < pw.rows(); ++i)
            for (std::size_t j = 0; j < pw.cols(); ++j) phi(i, j) += coef * pw(i, j);
          pw = pw * rep.z;
        }
        ++r.checked;
        if (!phi.is_zero()) fail(where, "Phi_n(Z) != 0 for Z = " + rep.z.to_string());
        for (unsigned a = 0; a < ring->m; ++a) {
          ++r.checked;
          if (!(rep.w[a] * rep.z == power(rep.z, ring->weyl_units[a]) * rep.w[a]))
            fail(where, "w" + std::to_string(a) + " Z != Z^" + std::to_string(ring->weyl_units[a]) + " w" +
                            std::to_string(a));
          if (ring->m > max_weyl_products) continue;
          for (unsigned b = 0; b < ring->m; ++b) {
            ++r.checked;
            if (!(rep.w[a] * rep.w[b] == rep.w[ring->weyl_table[a][b]]))
              fail(where, "W" + std::to_string(a) + " W" + std::to_string(b) + " != W" +
                              std::to_string(ring->weyl_table[a][b]));
          }
        }
      }
      if (ring->m > max_weyl_products) continue;
      // associativity on seeded random triples, and the splitting idempotents
      std::uniform_int_distribution<int> coeff(-2, 2);
      auto random_elt = [&] {
        auto e = CrossedElt::zero(ring);
        for (auto& x : e.coeffs) {
          std::vector<Int> v(euler_phi(ring->n));
          for (auto& y : v) y = coeff(rng);
          x = CycEltN(ring->n, ring->N, v);
        }
        return e;
      };
      for (int t = 0; t < 2; ++t) {
        const auto a = random_elt(), b = random_elt(), d = random_elt();
        ++r.checked;
        if (!((a * b) * d == a * (b * d)))
          fail(where, "(ab)c != a(bc) for a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + d.to_string());
        ++r.checked;
        if (!(a * CrossedElt::one(ring) == a && CrossedElt::one(ring) * a == a))
          fail(where, "identity is not neutral for " + a.to_string());
      }
      auto sum = CrossedElt::zero(ring);
      std::vector<const CrossedElt*> ids;
      for (const auto& s : entry.summands)
        for (const auto& e : s.idempotents) ids.push_back(&e);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        sum = sum + *ids[i];
        for (std::size_t j = 0; j < ids.size(); ++j) {
          ++r.checked;
          const auto prod = *ids[i] * *ids[j];
          if (i == j ? !(prod == *ids[i]) : !prod.is_zero())
            fail(where, "idempotents " + std::to_string(i) + ", " + std::to_string(j) + " are not orthogonal: " +
                            ids[i]->to_string() + " * " + ids[j]->to_string() + " = " + prod.to_string());
        }
      }
      ++r.checked;
      if (!(sum == CrossedElt::one(ring))) fail(where, "splitting idempotents sum to " + sum.to_string());
    }
  }
  return r;
}

ItemResult run_item(Suite s, unsigned n, std::uint64_t seed) {
  switch (s) {
    case Suite::PsiIdentities: return psi_item(n);
    case Suite::Characters: return character_item(n);
    case Suite::Frobenius: return frobenius_item(n);
    case Suite::Crt: return crt_item(n, seed);
    case Suite::CrossedRelations: return crossed_item(n, seed);
  }
  throw Error(ErrorCode::Internal, "unknown suite");
}

ItemResult run_item_safe(Suite s, unsigned n, std::uint64_t seed) {
  try {
    return run_item(s, n, seed);
  } catch (const std::exception& e) {
    return {0, tag(n) + "exception: " + e.what()};
  }
}

SuiteReport fold(Suite s, unsigned bound, std::uint64_t seed, const std::vector<ItemResult>& items) {
  SuiteReport rep;
  rep.suite = suite_name(s);
  rep.bound = bound;
  rep.seed = seed;
  rep.items = items.size();
  for (const auto& it : items) {
    rep.checked += it.checked;
    if (!it.counterexample.empty() && rep.passed) {
      rep.passed = false;
      rep.counterexample = it.counterexample;
    }
  }
  return rep;
}

void check_bound(unsigned bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "verification bound must be >= 1");
}

}  // namespace

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::PsiIdentities: return "psi-identities";
    case Suite::Characters: return "characters";
    case Suite::Frobenius: return "frobenius";
    case Suite::Crt: return "crt";
    case Suite::CrossedRelations: return "crossed-relations";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::PsiIdentities, Suite::Characters, Suite::Frobenius, Suite::Crt, Suite::CrossedRelations})
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

SuiteReport run_suite_serial(Suite s, unsigned bound, std::uint64_t seed) {
  check_bound(bound);
  std::vector<ItemResult> items;
  for (unsigned n = 1; n <= bound; ++n) items.push_back(run_item_safe(s, n, seed));
  return fold(s, bound, seed, items);
}

SuiteReport run_suite(Suite s, unsigned bound, std::uint64_t seed) {
  check_bound(bound);
  std::vector<ItemResult> items(bound);
  const long count = static_cast<long>(bound);
  // larger n costs more, so hand them out first
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (long i = 0; i < count; ++i) {
    const unsigned n = static_cast<unsigned>(count - i);
    items[n - 1] = run_item_safe(s, n, seed);
  }
  return fold(s, bound, seed, items);
}

}  // namespace workbench
