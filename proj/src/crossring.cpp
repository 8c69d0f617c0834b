#include "workbench/crossring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "workbench/error.hpp"
#include "workbench/numtheory.hpp"

namespace workbench {

namespace {

int table_power(const std::vector<std::vector<int>>& t, int x, unsigned long k) {
  int r = 0;
  while (k--) r = t[r][x];
  return r;
}

int table_order(const std::vector<std::vector<int>>& t, int x) {
  int k = 1;
  for (int y = x; y != 0; y = t[y][x]) ++k;
  return k;
}

bool table_abelian(const std::vector<std::vector<int>>& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

// Invariant factors of an abelian group from the sizes of its p^k-torsion.
std::vector<Int> abelian_invariants(const std::vector<std::vector<int>>& t) {
  const unsigned m = static_cast<unsigned>(t.size());
  std::vector<Int> primary;
  for (unsigned p : prime_factors(m)) {
    std::vector<int> rank_at_least;  // number of factors with exponent >= k, k = 1, 2, ...
    unsigned long pk = 1;
    int prev_log = 0;
    while (true) {
      pk *= p;
      std::size_t count = 0;
      for (unsigned x = 0; x < m; ++x) count += table_power(t, static_cast<int>(x), pk) == 0;
      int log = 0;
      for (std::size_t c = count; c > 1; c /= p) ++log;
      if (log == prev_log) break;
      rank_at_least.push_back(log - prev_log);
      prev_log = log;
    }
    for (std::size_t k = 0; k < rank_at_least.size(); ++k) {
      const int next = k + 1 < rank_at_least.size() ? rank_at_least[k + 1] : 0;
      Int q;
      mpz_ui_pow_ui(q.get_mpz_t(), p, k + 1);
      for (int c = 0; c < rank_at_least[k] - next; ++c) primary.push_back(q);
    }
  }
  return FinAbGroup::from_orders(primary).factors;
}

std::string weyl_structure_name(const std::vector<std::vector<int>>& t) {
  if (t.size() == 1) return "1";
  if (!table_abelian(t)) return "W" + std::to_string(t.size());
  std::string out;
  for (const auto& f : abelian_invariants(t)) out += (out.empty() ? "Z/" : "×Z/") + f.get_str();
  return out;
}

// Coefficients of z^k mod Phi_n, length phi(n).
std::vector<Int> reduced_power(unsigned n, unsigned long k) {
  std::vector<Int> v(n);
  v[k % n] = 1;
  reduce_mod_cyclotomic(v, n);
  v.resize(euler_phi(n));
  return v;
}

void require_same_ring(const CrossedElt& a, const CrossedElt& b) {
  if (a.ring != b.ring && !(a.ring && b.ring && *a.ring == *b.ring))
    throw Error(ErrorCode::RingMismatch, "elements of different crossed product rings");
}

// All homomorphisms W -> Z/e for abelian W of exponent e, as value tables.
std::vector<std::vector<unsigned>> abelian_characters(const std::vector<std::vector<int>>& t, unsigned e) {
  const unsigned m = static_cast<unsigned>(t.size());
  std::vector<int> span{0};
  std::vector<char> in_span(m, 0);
  in_span[0] = 1;
  std::vector<std::vector<unsigned>> chars{std::vector<unsigned>(m, 0)};
  for (unsigned g = 1; g < m; ++g) {
    if (in_span[g]) continue;
    unsigned k0 = 1;
    int gk = static_cast<int>(g);
    std::vector<int> powers{0, gk};
    while (!in_span[gk]) {
      gk = t[gk][g];
      powers.push_back(gk);
      ++k0;
    }
    const int target = gk;  // g^{k0} in the old span
    std::vector<std::vector<unsigned>> next;
    for (const auto& chi : chars)
      for (unsigned v = 0; v < e; ++v) {
        if ((static_cast<unsigned long>(k0) * v) % e != chi[target]) continue;
        auto c = chi;
        for (int s : span)
          for (unsigned k = 1; k < k0; ++k) c[t[s][powers[k]]] = (chi[s] + k * v) % e;
        next.push_back(std::move(c));
      }
    chars = std::move(next);
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i)
      for (unsigned k = 1; k < k0; ++k) {
        const int x = t[span[i]][powers[k]];
        in_span[x] = 1;
        span.push_back(x);
      }
  }
  return chars;
}

}  // namespace

std::string local_ring_label(unsigned d, const Int& N) {
  const Int r = radical(N);
  std::string s = "Z[";
  if (d > 2) s += "ϑ" + std::to_string(d);
  if (r > 1) s += (d > 2 ? ",1/" : "1/") + r.get_str();
  if (d <= 2 && r == 1) return "Z";
  return s + "]";
}

namespace {

CrossedRing assemble(unsigned n, Int N, std::vector<std::vector<int>> table, std::vector<unsigned> units,
                     std::string weyl_name, bool check_table) {
  if (n == 0 || N < 1) throw Error(ErrorCode::InvalidInput, "crossed ring needs n >= 1 and N >= 1");
  if (!primes_inverted(n, N))
    throw Error(ErrorCode::PrimeNotInverted, "a prime of n = " + std::to_string(n) + " is not inverted");
  const std::size_t m = table.size();
  if (m == 0 || units.size() != m) throw Error(ErrorCode::InvalidInput, "Weyl table and units disagree in size");
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m) throw Error(ErrorCode::InvalidInput, "Weyl table is not square");
    for (int v : table[a])
      if (v < 0 || static_cast<std::size_t>(v) >= m) throw Error(ErrorCode::InvalidInput, "Weyl table entry out of range");
    if (table[0][a] != static_cast<int>(a) || table[a][0] != static_cast<int>(a))
      throw Error(ErrorCode::InvalidInput, "Weyl index 0 must be the identity");
  }
  for (std::size_t a = 0; a < m; ++a) {
    units[a] %= n;
    if (std::gcd(units[a], n) != 1 && n > 1)
      throw Error(ErrorCode::NotAUnit, "Weyl unit " + std::to_string(units[a]) + " mod " + std::to_string(n));
  }
  for (std::size_t a = 0; a < m && check_table; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if ((static_cast<unsigned long>(units[a]) * units[b]) % n != units[table[a][b]] % n)
        throw Error(ErrorCode::InvalidInput, "Weyl units are not multiplicative");
      for (std::size_t c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::NonAssociative, "Weyl table is not associative");
    }
  CrossedRing r;
  r.n = n;
  r.N = std::move(N);
  r.m = static_cast<unsigned>(m);
  r.weyl_units = std::move(units);
  for (auto& u : r.weyl_units)
    if (n == 1) u = 1;
  r.weyl_name = weyl_name.empty() ? weyl_structure_name(table) : std::move(weyl_name);
  r.weyl_table = std::move(table);
  return r;
}

}  // namespace

CrossedRing CrossedRing::make(unsigned n, Int N, std::vector<std::vector<int>> table, std::vector<unsigned> units,
                              std::string weyl_name) {
  return assemble(n, std::move(N), std::move(table), std::move(units), std::move(weyl_name), true);
}

CrossedRing CrossedRing::trusted(unsigned n, Int N, std::vector<std::vector<int>> table,
                                 std::vector<unsigned> units, std::string weyl_name) {
  return assemble(n, std::move(N), std::move(table), std::move(units), std::move(weyl_name), false);
}

CrossedRing CrossedRing::local(unsigned d, Int N) { return make(d, std::move(N), {{0}}, {1}, "1"); }

std::size_t CrossedRing::rank() const { return static_cast<std::size_t>(euler_phi(n)) * m; }

int CrossedRing::weyl_inverse(int w) const {
  for (unsigned v = 0; v < m; ++v)
    if (weyl_table[w][v] == 0) return static_cast<int>(v);
  throw Error(ErrorCode::Internal, "Weyl element without inverse");
}

bool CrossedRing::trivial_action() const {
  return std::all_of(weyl_units.begin(), weyl_units.end(), [&](unsigned u) { return u % n == 1 % n; });
}

std::string CrossedRing::label() const {
  if (m == 1) return local_ring_label(n, N);
  if (n == 1) return local_ring_label(1, N) + "[" + weyl_name + "]";
  return local_ring_label(n, N) + "⋊" + weyl_name;
}

CrossedElt CrossedElt::zero(RingPtr r) {
  CrossedElt e;
  e.coeffs.assign(r->m, CycEltN::zero(r->n, r->N));
  e.ring = std::move(r);
  return e;
}

CrossedElt CrossedElt::scalar(RingPtr r, const CycEltN& a) {
  if (a.n() != r->n || a.localization() != r->N)
    throw Error(ErrorCode::RingMismatch, "scalar over a different cyclotomic ring");
  auto e = zero(std::move(r));
  e.coeffs[0] = a;
  return e;
}

CrossedElt CrossedElt::one(RingPtr r) {
  const unsigned n = r->n;
  const Int N = r->N;
  return scalar(std::move(r), CycEltN::one(n, N));
}

CrossedElt CrossedElt::weyl(RingPtr r, int w) {
  auto e = zero(r);
  e.coeffs.at(w) = CycEltN::one(r->n, r->N);
  return e;
}

CrossedElt CrossedElt::z_power(RingPtr r, unsigned i) {
  const unsigned n = r->n;
  const Int N = r->N;
  std::vector<Int> v(n);
  v[i % n] = 1;
  return scalar(std::move(r), CycEltN(n, N, std::move(v)));
}

CrossedElt operator+(const CrossedElt& a, const CrossedElt& b) {
  require_same_ring(a, b);
  CrossedElt c = a;
  for (std::size_t w = 0; w < c.coeffs.size(); ++w) c.coeffs[w] = c.coeffs[w] + b.coeffs[w];
  return c;
}

CrossedElt operator-(const CrossedElt& a, const CrossedElt& b) {
  require_same_ring(a, b);
  CrossedElt c = a;
  for (std::size_t w = 0; w < c.coeffs.size(); ++w) c.coeffs[w] = c.coeffs[w] - b.coeffs[w];
  return c;
}

CrossedElt operator*(const CrossedElt& a, const CrossedElt& b) { return crossed_mul(a, b); }

bool operator==(const CrossedElt& a, const CrossedElt& b) {
  if (a.ring != b.ring && !(a.ring && b.ring && *a.ring == *b.ring)) return false;
  return a.coeffs == b.coeffs;
}

bool CrossedElt::is_zero() const {
  const auto z = CycEltN::zero(ring->n, ring->N);
  return std::all_of(coeffs.begin(), coeffs.end(), [&](const CycEltN& c) { return c == z; });
}

std::string CrossedElt::to_string() const {
  std::string out;
  const auto z = CycEltN::zero(ring->n, ring->N);
  for (std::size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] == z) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[w].to_string() + ")";
    if (w > 0) out += "*w" + std::to_string(w);
  }
  return out.empty() ? "0" : out;
}

CrossedElt crossed_mul(const CrossedElt& a, const CrossedElt& b) {
  require_same_ring(a, b);
  const auto& r = *a.ring;
  auto out = CrossedElt::zero(a.ring);
  const auto z = CycEltN::zero(r.n, r.N);
  for (unsigned w = 0; w < r.m; ++w) {
    if (a.coeffs[w] == z) continue;
    for (unsigned v = 0; v < r.m; ++v) {
      if (b.coeffs[v] == z) continue;
      auto& slot = out.coeffs[r.weyl_table[w][v]];
      slot = slot + a.coeffs[w] * galois(b.coeffs[v], r.weyl_units[w]);
    }
  }
  return out;
}

CrossedRing build_crossed_ring(const CyclicClass& c, const Int& N, const std::string& group_name) {
  if (!primes_inverted(c.group_order, N))
    throw Error(ErrorCode::InsufficientInversion, "N = " + N.get_str() + " does not invert every prime of |G| = " +
                                                      std::to_string(c.group_order));
  std::string name;
  if (c.representative.n == 1 && !group_name.empty() && c.weyl_order > 1) {
    bool abelian = table_abelian(c.weyl_table);
    if (!abelian) name = group_name;
  }
  return CrossedRing::trusted(static_cast<unsigned>(c.representative.n), N, c.weyl_table, c.weyl_units, name);
}

RegularRep regular_representation(const CrossedRing& r) {
  const std::size_t phi = euler_phi(r.n), size = r.rank();
  std::vector<std::vector<Int>> zp(r.n);
  for (unsigned k = 0; k < r.n; ++k) zp[k] = reduced_power(r.n, k);
  RegularRep rep;
  rep.z = IntMatrix(size, size);
  for (unsigned w = 0; w < r.m; ++w)
    for (std::size_t i = 0; i < phi; ++i) {
      const auto& col = zp[(i + 1) % r.n];
      for (std::size_t j = 0; j < phi; ++j) rep.z(w * phi + j, w * phi + i) = col[j];
    }
  rep.w.reserve(r.m);
  for (unsigned v = 0; v < r.m; ++v) {
    IntMatrix mat(size, size);
    for (unsigned w = 0; w < r.m; ++w) {
      const std::size_t target = static_cast<std::size_t>(r.weyl_table[v][w]) * phi;
      for (std::size_t i = 0; i < phi; ++i) {
        const auto& col = zp[(i * r.weyl_units[v]) % r.n];
        for (std::size_t j = 0; j < phi; ++j) mat(target + j, w * phi + i) = col[j];
      }
    }
    rep.w.push_back(std::move(mat));
  }
  return rep;
}

const char* summand_kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::IntegralLocal: return "integral_local";
    case SummandKind::CyclotomicLocal: return "cyclotomic_local";
    case SummandKind::UnsplitCrossed: return "unsplit_crossed";
  }
  return "?";
}

std::string RingSummand::label() const { return ring->label(); }

std::size_t RingSummand::rank() const { return ring->rank(); }

std::vector<RingSummand> split_ring(const RingPtr& r, std::size_t class_id) {
  const std::string where = "class " + std::to_string(class_id) + ": ";
  const auto& t = r->weyl_table;
  const bool splittable = r->trivial_action() && table_abelian(t) && primes_inverted(r->m, r->N);
  unsigned exponent = 1;
  if (splittable)
    for (unsigned w = 0; w < r->m; ++w) exponent = std::lcm(exponent, static_cast<unsigned>(table_order(t, static_cast<int>(w))));
  if (!splittable || (r->n > 1 && exponent > 2)) {
    RingSummand s;
    s.kind = SummandKind::UnsplitCrossed;
    s.d = r->n;
    s.provenance = where + "no splitting rule applies";
    s.idempotents.push_back(CrossedElt::one(r));
    s.ring = r;
    return {s};
  }

  std::string path;
  if (r->m == 1)
    path = "W trivial";
  else if (r->n == 1)
    path = "characters of " + r->weyl_name + " split Z[1/N][W]";
  else
    path = "±1 characters of " + r->weyl_name;

  // Characters with equal kernel form one Galois orbit and cut out one summand.
  struct Orbit {
    unsigned d;
    int generator;
    std::vector<int> kernel;
  };
  std::vector<Orbit> orbits;
  std::map<std::vector<int>, std::size_t> seen;
  for (const auto& chi : abelian_characters(t, exponent)) {
    unsigned g = exponent;
    for (unsigned v : chi) g = std::gcd(g, v);
    const unsigned d = exponent / g;
    std::vector<int> kernel;
    int generator = 0;
    for (unsigned w = 0; w < r->m; ++w) {
      if (chi[w] == 0) kernel.push_back(static_cast<int>(w));
      if (generator == 0 && std::gcd(chi[w], exponent) == g) generator = static_cast<int>(w);
    }
    if (seen.emplace(kernel, orbits.size()).second) orbits.push_back({d, generator, std::move(kernel)});
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) { return a.d < b.d; });

  std::vector<RingSummand> out;
  for (const auto& o : orbits) {
    // e_K = (1/|K|) sum_{k in K} k * psi_{d,d}(g)
    const CycPoly p = psi(o.d, o.d, r->N);
    std::vector<Rat> coef(r->m);
    int gi = 0;
    for (unsigned i = 0; i < o.d; ++i) {
      const Rat a(p.num()[i], p.den() * static_cast<unsigned long>(o.kernel.size()));
      if (a != 0)
        for (int k : o.kernel) coef[t[k][gi]] += a;
      gi = t[gi][o.generator];
    }
    auto e = CrossedElt::zero(r);
    for (unsigned w = 0; w < r->m; ++w) {
      coef[w].canonicalize();
      if (coef[w] != 0) e.coeffs[w] = CycEltN(r->n, r->N, {coef[w].get_num()}, coef[w].get_den());
    }
    const unsigned d = r->n == 1 ? o.d : r->n;
    const SummandKind kind = d <= 2 ? SummandKind::IntegralLocal : SummandKind::CyclotomicLocal;
    const unsigned key = kind == SummandKind::IntegralLocal ? 1 : d;
    if (out.empty() || out.back().kind != kind || out.back().d != key) {
      RingSummand s;
      s.kind = kind;
      s.d = key;
      s.multiplicity = 0;
      s.provenance = where + path;
      s.ring = std::make_shared<const CrossedRing>(CrossedRing::local(key, r->N));
      out.push_back(std::move(s));
    }
    out.back().multiplicity++;
    out.back().idempotents.push_back(std::move(e));
  }
  return out;
}

std::vector<FlatSummand> TargetCategoryReport::flattened() const {
  std::vector<FlatSummand> out;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t s = 0; s < classes[c].summands.size(); ++s)
      for (unsigned k = 0; k < classes[c].summands[s].multiplicity; ++k) out.push_back({c, s, k});
  return out;
}

std::size_t TargetCategoryReport::total_summands() const {
  std::size_t total = 0;
  for (const auto& c : classes)
    for (const auto& s : c.summands) total += s.multiplicity;
  return total;
}

TargetCategoryReport target_category(const FiniteGroup& g) {
  TargetCategoryReport rep;
  rep.group_name = g.name();
  rep.group_order = g.order();
  rep.N = g.order();
  const std::string display = group_display_name(g.name());
  auto classes = cyclic_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto ring = std::make_shared<const CrossedRing>(build_crossed_ring(classes[i], rep.N, display));
    auto summands = split_ring(ring, i);
    rep.classes.push_back({std::move(classes[i]), std::move(ring), std::move(summands)});
  }
  return rep;
}

std::string group_display_name(const std::string& name) {
  auto arg = [&](const std::string& head) -> std::string {
    if (name.rfind(head + "(", 0) != 0 || name.back() != ')') return {};
    return name.substr(head.size() + 1, name.size() - head.size() - 2);
  };
  if (name == "klein_four") return "V";
  if (auto a = arg("symmetric"); !a.empty()) return "S" + a;
  if (auto a = arg("cyclic"); !a.empty()) return "Z/" + a;
  if (auto a = arg("dihedral"); !a.empty()) {
    try {
      return "D" + std::to_string(2 * std::stoul(a));
    } catch (...) {
      return name;
    }
  }
  return name.empty() ? "G" : name;
}

}  // namespace workbench
