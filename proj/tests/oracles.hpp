#pragma once
// Independent reference computations for the test suites.

#include <random>
#include <vector>

#include "workbench/amod.hpp"
#include "workbench/numtheory.hpp"

namespace oracle {

using workbench::AModObject;
using workbench::Int;
using workbench::IntMatrix;
using workbench::ModuleDegree;
using workbench::RingPtr;

// Elements of a finite module degree, indexed in mixed radix.
struct ElementTable {
  std::vector<unsigned long> radix;
  std::size_t count = 1;
  std::vector<std::vector<std::size_t>> act;  // act[s][x], s = 0 for z, then w_1, ...
  std::vector<std::vector<long>> coords;

  explicit ElementTable(const ModuleDegree& d) {
    for (const auto& o : d.orders) {
      radix.push_back(o.get_ui());
      count *= radix.back();
    }
    coords.resize(count);
    for (std::size_t x = 0; x < count; ++x) coords[x] = decode(x);
    const std::size_t gens = d.w.size();  // z plus w_1..w_{m-1}
    act.assign(gens, std::vector<std::size_t>(count));
    for (std::size_t s = 0; s < gens; ++s) {
      const IntMatrix& mat = s == 0 ? d.z : d.w[s];
      for (std::size_t x = 0; x < count; ++x) {
        std::vector<long> y(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
          Int acc = 0;
          for (std::size_t j = 0; j < radix.size(); ++j) acc += mat(i, j) * coords[x][j];
          y[i] = workbench::mod_floor(acc, Int(radix[i])).get_si();
        }
        act[s][x] = encode(y);
      }
    }
  }

  std::vector<long> decode(std::size_t x) const {
    std::vector<long> v(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      v[i] = static_cast<long>(x % radix[i]);
      x /= radix[i];
    }
    return v;
  }
  std::size_t encode(const std::vector<long>& v) const {
    std::size_t x = 0;
    for (std::size_t i = radix.size(); i-- > 0;) x = x * radix[i] + static_cast<std::size_t>(((v[i] % static_cast<long>(radix[i])) + static_cast<long>(radix[i])) % static_cast<long>(radix[i]));
    return x;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    std::vector<long> v = coords[a];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += coords[b][i];
    return encode(v);
  }
};

// Elements reachable from 0 by x -> x + g and x -> s x; this is the
// submodule generated by gens because every generator acts invertibly.
inline std::vector<char> generated(const ElementTable& t, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(t.count, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    auto push = [&](std::size_t y) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    };
    for (auto g : gens) push(t.add(x, g));
    for (const auto& a : t.act) push(a[x]);
  }
  return seen;
}

// Number of module maps A -> B, by enumerating the images of a generating set
// and propagating along x -> x + g, x -> s x.
inline unsigned long brute_hom_block(const ModuleDegree& a, const ModuleDegree& b) {
  if (a.size() == 0 || b.size() == 0) return 1;
  const ElementTable ta(a), tb(b);
  std::vector<std::size_t> gens;
  auto span = generated(ta, gens);
  for (std::size_t x = 0; x < ta.count; ++x)
    if (!span[x]) {
      gens.push_back(x);
      span = generated(ta, gens);
    }
  // precomputed edges of A
  std::vector<std::vector<std::size_t>> plus(gens.size(), std::vector<std::size_t>(ta.count));
  for (std::size_t l = 0; l < gens.size(); ++l)
    for (std::size_t x = 0; x < ta.count; ++x) plus[l][x] = ta.add(x, gens[l]);
  std::vector<std::vector<std::size_t>> badd(tb.count, std::vector<std::size_t>(tb.count));
  for (std::size_t u = 0; u < tb.count; ++u)
    for (std::size_t v = 0; v < tb.count; ++v) badd[u][v] = tb.add(u, v);

  unsigned long total = 0;
  std::vector<std::size_t> images(gens.size(), 0);
  std::vector<long> f(ta.count);
  std::vector<std::size_t> stack;
  while (true) {
    std::fill(f.begin(), f.end(), -1);
    f[0] = 0;
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      auto visit = [&](std::size_t y, std::size_t fy) {
        if (f[y] < 0) {
          f[y] = static_cast<long>(fy);
          stack.push_back(y);
        } else if (static_cast<std::size_t>(f[y]) != fy) {
          ok = false;
        }
      };
      for (std::size_t l = 0; l < gens.size() && ok; ++l) visit(plus[l][x], badd[f[x]][images[l]]);
      for (std::size_t s = 0; s < ta.act.size() && ok; ++s) visit(ta.act[s][x], tb.act[s][f[x]]);
    }
    total += ok;
    std::size_t p = 0;
    while (p < images.size() && images[p] + 1 == tb.count) images[p++] = 0;
    if (p == images.size()) break;
    ++images[p];
  }
  return total;
}

inline unsigned long brute_hom_count(const AModObject& m, const AModObject& n, int deg) {
  return brute_hom_block(m.degree[0], n.degree[deg & 1]) * brute_hom_block(m.degree[1], n.degree[(1 + deg) & 1]);
}

// Row echelon basis over F_q with insertion; returns false if v is dependent.
struct EchelonModQ {
  long q;
  std::vector<std::vector<long>> rows;
  std::vector<std::size_t> pivots;

  static long inv(long a, long q) {
    long r = 1, e = q - 2, b = a % q;
    while (e) {
      if (e & 1) r = r * b % q;
      b = b * b % q;
      e >>= 1;
    }
    return r;
  }
  std::vector<long> reduce(std::vector<long> v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const long c = v[pivots[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * rows[i][j]) % q + q) % q;
    }
    return v;
  }
  bool insert(const std::vector<long>& v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) return false;
    const long iv = inv(r[p], q);
    for (auto& x : r) x = x * iv % q;
    for (auto& row : rows) {
      const long c = row[p];
      if (c != 0)
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = ((row[j] - c * r[j]) % q + q) % q;
    }
    rows.push_back(std::move(r));
    pivots.push_back(p);
    return true;
  }
  // coordinates of v in the basis of inserted (reduced) rows; v must lie in the span
  std::vector<long> coords(const std::vector<long>& v) const {
    std::vector<long> c(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) c[i] = ((v[pivots[i]] % q) + q) % q;
    return c;
  }
};

// The R-submodule of (R/q)^copies generated by `gens` random vectors, with q prime.
inline AModObject random_submodule(const RingPtr& ring, long q, unsigned copies, unsigned gens, std::mt19937_64& rng,
                                   int deg = 0) {
  const auto rep = workbench::regular_representation(*ring);
  const std::size_t r = ring->rank(), dim = r * copies;
  std::vector<const IntMatrix*> ops{&rep.z};
  for (std::size_t w = 1; w < rep.w.size(); ++w) ops.push_back(&rep.w[w]);
  auto apply = [&](const IntMatrix& mat, const std::vector<long>& v) {
    std::vector<long> out(dim);
    for (unsigned c = 0; c < copies; ++c)
      for (std::size_t i = 0; i < r; ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < r; ++j) acc += mat(i, j).get_si() * v[c * r + j];
        out[c * r + i] = ((acc % q) + q) % q;
      }
    return out;
  };
  EchelonModQ basis{q, {}, {}};
  std::vector<std::vector<long>> vectors;  // spanning vectors, closed under the action
  std::uniform_int_distribution<long> dist(0, q - 1);
  std::vector<std::vector<long>> queue;
  for (unsigned g = 0; g < gens; ++g) {
    std::vector<long> v(dim);
    for (auto& x : v) x = dist(rng);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    if (!basis.insert(v)) continue;
    for (const auto* op : ops) queue.push_back(apply(*op, v));
  }
  const std::size_t s = basis.rows.size();
  AModObject m = AModObject::zero(ring);
  std::vector<IntMatrix> mats;
  std::vector<const IntMatrix*> all{&rep.z};
  for (const auto& w : rep.w) all.push_back(&w);
  for (const auto* op : all) {
    IntMatrix x(s, s);
    for (std::size_t j = 0; j < s; ++j) {
      const auto img = apply(*op, basis.rows[j]);
      const auto c = basis.coords(img);
      for (std::size_t i = 0; i < s; ++i) x(i, j) = c[i];
    }
    mats.push_back(std::move(x));
  }
  std::vector<IntMatrix> w(mats.begin() + 1, mats.end());
  m.degree[deg & 1] = AModObject::make_degree(*ring, std::vector<Int>(s, Int(q)), mats[0], w);
  return m;
}

// Primes coprime to N, smallest first.
inline std::vector<long> coprime_primes(const Int& big_n, long limit) {
  std::vector<long> out;
  for (long p = 2; p <= limit; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime && gcd(Int(p), big_n) == 1) out.push_back(p);
  }
  return out;
}

inline RingPtr ring_of(workbench::CrossedRing r) { return std::make_shared<const workbench::CrossedRing>(std::move(r)); }

inline RingPtr class_ring(const char* spec, std::size_t idx) {
  auto g = workbench::preset_group(spec);
  return ring_of(workbench::build_crossed_ring(workbench::cyclic_classes(g)[idx], g.order()));
}

// Rings of rank <= 4 over Z[1/N], including crossed and group rings.
inline std::vector<RingPtr> small_rings() {
  using workbench::CrossedRing;
  return {ring_of(CrossedRing::local(1, 2)),     ring_of(CrossedRing::local(3, 3)),
          ring_of(CrossedRing::local(5, 5)),     class_ring("symmetric(3)", 2),
          class_ring("klein_four", 0),           class_ring("cyclic(4)", 0),
          class_ring("dihedral(4)", 3),          ring_of(CrossedRing::local(4, 2))};
}

// A random valid module of order <= max_order: a submodule of (R/q)^copies.
inline AModObject random_module(const RingPtr& r, std::mt19937_64& rng, long max_order = 81) {
  const auto primes = coprime_primes(r->N, 7);
  while (true) {
    const long q = primes[rng() % primes.size()];
    const unsigned copies = 1 + static_cast<unsigned>(rng() % 2);
    auto m = random_submodule(r, q, copies, 1 + static_cast<unsigned>(rng() % 2), rng, static_cast<int>(rng() % 2));
    if (m.group_order() <= max_order) return m;
  }
}

}  // namespace oracle
