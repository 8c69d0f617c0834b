#include "workbench/amod.hpp"

#include <exception>
#include <random>

#include "workbench/error.hpp"
#include "workbench/numtheory.hpp"
#include "workbench/parallel.hpp"

namespace workbench {

namespace {

bool divides(const Int& a, const Int& v) { return a == 0 ? v == 0 : mpz_divisible_p(v.get_mpz_t(), a.get_mpz_t()) != 0; }

void reduce_rows(IntMatrix& x, const std::vector<Int>& orders) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    if (orders[i] > 0)
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = mod_floor(x(i, j), orders[i]);
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long k, const std::vector<Int>& orders) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (unsigned long i = 0; i < k; ++i) {
    r = r * a;
    reduce_rows(r, orders);
  }
  return r;
}

// First entry where x is not zero mod the row orders, as "(i, j) = v mod m".
std::string nonzero_entry(const IntMatrix& x, const std::vector<Int>& orders) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (!divides(orders[i], x(i, j)))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
               mod_floor(x(i, j), orders[i]).get_str() + " mod " + orders[i].get_str();
  return {};
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

void require_same_ring(const AModObject& a, const AModObject& b) {
  if (a.ring != b.ring && !(a.ring && b.ring && *a.ring == *b.ring))
    throw Error(ErrorCode::RingMismatch, "modules over different rings: " + (a.ring ? a.ring->label() : "?") +
                                             " and " + (b.ring ? b.ring->label() : "?"));
}

void require_finite(const AModObject& m) {
  if (m.has_free_part())
    throw Error(ErrorCode::FreeModuleUnsupported, "hom and ext are only computed for finite modules");
}

// Matrices of the Z-basis z^i w of the ring acting on a module degree.
std::vector<IntMatrix> basis_actions(const CrossedRing& r, const ModuleDegree& d) {
  const unsigned phi = euler_phi(r.n);
  std::vector<IntMatrix> zp;
  zp.push_back(IntMatrix::identity(d.size()));
  for (unsigned i = 1; i < phi; ++i) {
    zp.push_back(zp.back() * d.z);
    reduce_rows(zp.back(), d.orders);
  }
  std::vector<IntMatrix> out;
  out.reserve(static_cast<std::size_t>(phi) * r.m);
  for (unsigned w = 0; w < r.m; ++w)
    for (unsigned i = 0; i < phi; ++i) {
      out.push_back(zp[i] * d.w[w]);
      reduce_rows(out.back(), d.orders);
    }
  return out;
}

// The ring generators z, w_1, ..., w_{m-1} acting on a module degree.
std::vector<const IntMatrix*> generators_of(const ModuleDegree& d) {
  std::vector<const IntMatrix*> g{&d.z};
  for (std::size_t w = 1; w < d.w.size(); ++w) g.push_back(&d.w[w]);
  return g;
}

struct HomBlock {
  FinAbGroup group;
  std::vector<IntMatrix> maps;
};

HomBlock hom_block(const ModuleDegree& a, const ModuleDegree& b) {
  const std::size_t ra = a.size(), rb = b.size();
  HomBlock out;
  if (ra == 0 || rb == 0) return out;
  const std::size_t unknowns = ra * rb;
  std::vector<Int> col_mod(unknowns), scale(unknowns);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < ra; ++j) {
      col_mod[i * ra + j] = gcd(a.orders[j], b.orders[i]);
      scale[i * ra + j] = b.orders[i] / col_mod[i * ra + j];
    }
  // S_B F - F S_A = 0 for every generator, F(i,j) = scale(i,j) t(i,j)
  IntMatrix eq(0, unknowns);
  std::vector<Int> row_mod;
  std::vector<Int> row(unknowns);
  const auto ga = generators_of(a), gb = generators_of(b);
  for (std::size_t s = 0; s < ga.size(); ++s) {
    const IntMatrix& sa = *ga[s];
    const IntMatrix& sb = *gb[s];
    for (std::size_t i = 0; i < rb; ++i) {
      if (b.orders[i] == 1) continue;
      for (std::size_t j = 0; j < ra; ++j) {
        std::fill(row.begin(), row.end(), Int(0));
        for (std::size_t k = 0; k < rb; ++k) row[k * ra + j] += sb(i, k) * scale[k * ra + j];
        for (std::size_t l = 0; l < ra; ++l) row[i * ra + l] -= scale[i * ra + l] * sa(l, j);
        eq.append_row(row);
        row_mod.push_back(b.orders[i]);
      }
    }
  }
  const auto sol = solve_mod(eq, row_mod, col_mod);
  out.group = sol.group;
  for (std::size_t g = 0; g < sol.generators.rows(); ++g) {
    IntMatrix f(rb, ra);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < ra; ++j)
        f(i, j) = mod_floor(scale[i * ra + j] * sol.generators(g, i * ra + j), b.orders[i]);
    out.maps.push_back(std::move(f));
  }
  return out;
}

// Hom_R(K, B) modulo the restrictions of Hom_R(R^k, B) = B^k, where K is an
// R-stable sublattice of Z^{k r} given by echelon basis rows.
FinAbGroup restriction_cokernel(const RegularRep& rep, std::size_t k, const IntMatrix& kb, const ModuleDegree& b,
                                const std::vector<IntMatrix>& b_actions) {
  const std::size_t r = rep.z.rows(), q = kb.rows(), rb = b.size();
  if (q == 0 || rb == 0) return {};
  const std::size_t dim = k * r;

  std::vector<const IntMatrix*> ring_gens{&rep.z};
  for (std::size_t w = 1; w < rep.w.size(); ++w) ring_gens.push_back(&rep.w[w]);
  const auto b_gens = generators_of(b);

  const std::size_t unknowns = rb * q;
  std::vector<Int> col_mod(unknowns);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < q; ++j) col_mod[i * q + j] = b.orders[i];

  IntMatrix eq(0, unknowns);
  std::vector<Int> row_mod;
  std::vector<Int> row(unknowns), image(dim);
  for (std::size_t s = 0; s < ring_gens.size(); ++s) {
    const IntMatrix& t = *ring_gens[s];
    // X(:, j) = coordinates of T b_j in the basis of K
    IntMatrix x(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t blk = 0; blk < k; ++blk)
        for (std::size_t a = 0; a < r; ++a) {
          Int acc = 0;
          for (std::size_t c = 0; c < r; ++c)
            if (t(a, c) != 0) acc += t(a, c) * kb(j, blk * r + c);
          image[blk * r + a] = acc;
        }
      auto coords = express_in_basis(kb, image);
      if (!coords) throw Error(ErrorCode::Internal, "kernel lattice is not stable under the ring action");
      for (std::size_t l = 0; l < q; ++l) x(l, j) = (*coords)[l];
    }
    const IntMatrix& sb = *b_gens[s];
    for (std::size_t i = 0; i < rb; ++i) {
      if (b.orders[i] == 1) continue;
      for (std::size_t j = 0; j < q; ++j) {
        std::fill(row.begin(), row.end(), Int(0));
        for (std::size_t kk = 0; kk < rb; ++kk)
          if (sb(i, kk) != 0) row[kk * q + j] += sb(i, kk);
        for (std::size_t l = 0; l < q; ++l)
          if (x(l, j) != 0) row[i * q + l] -= x(l, j);
        eq.append_row(row);
        row_mod.push_back(b.orders[i]);
      }
    }
  }
  const IntMatrix lattice = solution_lattice(eq, row_mod, col_mod);

  IntMatrix sub(0, unknowns);
  std::vector<Int> v(unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    std::fill(v.begin(), v.end(), Int(0));
    v[u] = col_mod[u];
    sub.append_row(v);
  }
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t t = 0; t < rb; ++t) {
      // the map R^k -> B sending generator l to e_t, restricted to K
      for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < q; ++j) {
          Int acc = 0;
          for (std::size_t c = 0; c < r; ++c) {
            const Int& kv = kb(j, l * r + c);
            if (kv != 0) acc += b_actions[c](i, t) * kv;
          }
          v[i * q + j] = mod_floor(acc, b.orders[i]);
        }
      sub.append_row(v);
    }
  return lattice_quotient(lattice, sub).group;
}

// Kernel of the free cover R^k -> A, k = generators.size(); rows basis in Z^{k r}.
IntMatrix first_syzygy(const CrossedRing& ring, const ModuleDegree& a, const std::vector<std::vector<Int>>& gens) {
  const auto acts = basis_actions(ring, a);
  const std::size_t r = ring.rank(), k = gens.size();
  IntMatrix pi(a.size(), k * r);
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t i = 0; i < a.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < a.size(); ++j) acc += acts[c](i, j) * gens[l][j];
        pi(i, l * r + c) = mod_floor(acc, a.orders[i]);
      }
  return lattice_kernel_localized(pi, a.orders, ring.N);
}

std::vector<std::vector<Int>> cover_generators(const ModuleDegree& a, unsigned extra, std::uint64_t seed) {
  std::vector<std::vector<Int>> gens;
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::vector<Int> e(a.size());
    e[j] = 1;
    gens.push_back(std::move(e));
  }
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < extra; ++t) {
    std::vector<Int> e(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      const unsigned long m = a.orders[j].get_ui();
      e[j] = static_cast<unsigned long>(rng() % m);
    }
    gens.push_back(std::move(e));
  }
  return gens;
}

FinAbGroup ext_block(const CrossedRing& ring, const RegularRep& rep, const ModuleDegree& a, const ModuleDegree& b,
                     unsigned extra, std::uint64_t seed) {
  if (a.size() == 0 || b.size() == 0) return {};
  const auto gens = cover_generators(a, extra, seed);
  const IntMatrix kernel = first_syzygy(ring, a, gens);
  return restriction_cokernel(rep, gens.size(), kernel, b, basis_actions(ring, b));
}

FinAbGroup ext2_block(const CrossedRing& ring, const RegularRep& rep, const ModuleDegree& a, const ModuleDegree& b) {
  if (a.size() == 0 || b.size() == 0) return {};
  const auto gens = cover_generators(a, 0, 0);
  const IntMatrix kernel = first_syzygy(ring, a, gens);
  const std::size_t r = ring.rank(), dim = kernel.cols(), q = kernel.rows();
  // free cover R^q -> K on the basis of K, then its kernel
  std::vector<IntMatrix> acts;
  {
    IntMatrix zp = IntMatrix::identity(r);
    std::vector<IntMatrix> powers{zp};
    for (unsigned i = 1; i < euler_phi(ring.n); ++i) powers.push_back(powers.back() * rep.z);
    for (unsigned w = 0; w < ring.m; ++w)
      for (const auto& p : powers) acts.push_back(p * rep.w[w]);
  }
  IntMatrix psi_map(dim, q * r);
  const std::size_t k = dim / r;
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t blk = 0; blk < k; ++blk)
        for (std::size_t x = 0; x < r; ++x) {
          Int acc = 0;
          for (std::size_t y = 0; y < r; ++y) acc += acts[c](x, y) * kernel(j, blk * r + y);
          psi_map(blk * r + x, j * r + c) = acc;
        }
  const IntMatrix second = integer_kernel(psi_map);
  return restriction_cokernel(rep, q, second, b, basis_actions(ring, b));
}

void check_family(const TargetCategoryReport& report, const AModFamily& f, const char* which) {
  const auto flat = report.flattened();
  if (f.modules.size() != flat.size())
    throw Error(ErrorCode::FamilyMismatch, std::string("family ") + which + " has " +
                                               std::to_string(f.modules.size()) + " modules but the report has " +
                                               std::to_string(flat.size()) + " summands");
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const auto& ring = report.summand(flat[i]).ring;
    if (!f.modules[i].ring || !(*f.modules[i].ring == *ring))
      throw Error(ErrorCode::FamilyMismatch, std::string("family ") + which + ", summand " + std::to_string(i) +
                                                 ": module is not over " + ring->label());
  }
}

std::array<UCTDegree, 2> summand_terms(const AModObject& a, const AModObject& b) {
  std::array<UCTDegree, 2> out;
  if (a.is_zero() || b.is_zero()) return out;
  const AModObject sb = suspend(b);
  for (int d = 0; d < 2; ++d) {
    out[d].hom = hom_group(a, b, d).group;
    out[d].ext = ext_group(a, sb, d);
  }
  return out;
}

UCTOrderResult assemble(const std::vector<std::array<UCTDegree, 2>>& parts) {
  UCTOrderResult res;
  for (const auto& p : parts)
    for (int d = 0; d < 2; ++d) {
      res.degree[d].hom = res.degree[d].hom.direct_sum(p[d].hom);
      res.degree[d].ext = res.degree[d].ext.direct_sum(p[d].ext);
    }
  for (auto& d : res.degree) d.kk_order = d.hom.order() * d.ext.order();
  return res;
}

}  // namespace

ModuleDegree AModObject::make_degree(const CrossedRing& r, std::vector<Int> orders, IntMatrix z,
                                     std::vector<IntMatrix> w) {
  ModuleDegree d;
  const std::size_t size = orders.size();
  d.orders = std::move(orders);
  if (z.rows() == 0 && z.cols() == 0) {
    if (r.n != 1 && size > 0) throw Error(ErrorCode::InvalidInput, "the action of z is required when n > 1");
    z = IntMatrix::identity(size);
  }
  if (w.empty()) {
    if (r.m != 1 && size > 0) throw Error(ErrorCode::InvalidInput, "the Weyl action is required when W is nontrivial");
    w.assign(r.m, IntMatrix::identity(size));
  }
  d.z = std::move(z);
  d.w = std::move(w);
  if (d.z.rows() == size && d.z.cols() == size) reduce_rows(d.z, d.orders);
  for (auto& m : d.w)
    if (m.rows() == size && m.cols() == size) reduce_rows(m, d.orders);
  return d;
}

AModObject AModObject::zero(RingPtr r) {
  AModObject m;
  for (auto& d : m.degree) d = make_degree(*r, {});
  m.ring = std::move(r);
  return m;
}

AModObject AModObject::cyclic(RingPtr r, const Int& order, int deg) {
  if (r->n != 1) throw Error(ErrorCode::InvalidInput, "cyclic modules with trivial action need n = 1");
  AModObject m = zero(r);
  m.degree[deg & 1] = make_degree(*r, {order});
  return m;
}

AModObject AModObject::regular_mod(RingPtr r, const Int& q, int deg) {
  AModObject m = zero(r);
  const auto rep = regular_representation(*r);
  m.degree[deg & 1] = make_degree(*r, std::vector<Int>(r->rank(), q), rep.z, rep.w);
  return m;
}

bool AModObject::has_free_part() const {
  for (const auto& d : degree)
    for (const auto& o : d.orders)
      if (o == 0) return true;
  return false;
}

Int AModObject::group_order() const {
  Int total = 1;
  for (const auto& d : degree)
    for (const auto& o : d.orders) total *= o;
  return total;
}

bool operator==(const AModObject& a, const AModObject& b) {
  if (a.ring != b.ring && !(a.ring && b.ring && *a.ring == *b.ring)) return false;
  return a.degree == b.degree;
}

ValidationReport validate(const AModObject& m) {
  const CrossedRing& r = *m.ring;
  for (int deg = 0; deg < 2; ++deg) {
    const ModuleDegree& d = m.degree[deg];
    const std::size_t size = d.size();
    auto fail = [&](std::string what) { return ValidationReport{false, deg, std::move(what)}; };
    if (d.z.rows() != size || d.z.cols() != size) return fail("z must be " + std::to_string(size) + "x" + std::to_string(size));
    if (d.w.size() != r.m)
      return fail("expected " + std::to_string(r.m) + " Weyl matrices, got " + std::to_string(d.w.size()));
    for (std::size_t w = 0; w < d.w.size(); ++w)
      if (d.w[w].rows() != size || d.w[w].cols() != size)
        return fail("w[" + std::to_string(w) + "] must be " + std::to_string(size) + "x" + std::to_string(size));
    for (std::size_t i = 0; i < size; ++i) {
      if (d.orders[i] < 0) return fail("negative order " + d.orders[i].get_str());
      if (d.orders[i] > 0 && gcd(d.orders[i], r.N) != 1)
        return fail("order " + d.orders[i].get_str() + " is not coprime to N = " + r.N.get_str());
    }
    auto well_defined = [&](const IntMatrix& x, const std::string& name) -> std::string {
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
          if (!divides(d.orders[i], x(i, j) * d.orders[j]))
            return name + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + x(i, j).get_str() +
                   " is not a map Z/" + d.orders[j].get_str() + " -> Z/" + d.orders[i].get_str();
      return {};
    };
    if (auto s = well_defined(d.z, "z"); !s.empty()) return fail(s);
    for (std::size_t w = 0; w < d.w.size(); ++w)
      if (auto s = well_defined(d.w[w], "w[" + std::to_string(w) + "]"); !s.empty()) return fail(s);

    const IntPoly& phi = cyclotomic(r.n);
    IntMatrix acc(size, size), pw = IntMatrix::identity(size);
    for (const auto& c : phi.coeffs()) {
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) acc(i, j) += c * pw(i, j);
      pw = pw * d.z;
      reduce_rows(pw, d.orders);
    }
    if (auto s = nonzero_entry(acc, d.orders); !s.empty())
      return fail("Phi_" + std::to_string(r.n) + "(Z) != 0: " + s);
    if (size > 0) {
      if (auto s = nonzero_entry(d.w[0] - IntMatrix::identity(size), d.orders); !s.empty())
        return fail("w[0] is not the identity: " + s);
      for (unsigned a = 0; a < r.m; ++a)
        for (unsigned b = 0; b < r.m; ++b)
          if (auto s = nonzero_entry(d.w[a] * d.w[b] - d.w[r.weyl_table[a][b]], d.orders); !s.empty())
            return fail("w[" + std::to_string(a) + "] w[" + std::to_string(b) + "] != w[" +
                        std::to_string(r.weyl_table[a][b]) + "]: " + s);
      for (unsigned a = 0; a < r.m; ++a) {
        const IntMatrix lhs = d.w[a] * d.z;
        const IntMatrix rhs = mat_pow(d.z, r.weyl_units[a] % r.n, d.orders) * d.w[a];
        if (auto s = nonzero_entry(lhs - rhs, d.orders); !s.empty())
          return fail("w[" + std::to_string(a) + "] Z != Z^" + std::to_string(r.weyl_units[a] % r.n) + " w[" +
                      std::to_string(a) + "]: " + s);
      }
    }
  }
  return {};
}

AModObject suspend(const AModObject& m) {
  AModObject out = m;
  std::swap(out.degree[0], out.degree[1]);
  return out;
}

AModObject direct_sum(const AModObject& a, const AModObject& b) {
  require_same_ring(a, b);
  AModObject out = a;
  for (int deg = 0; deg < 2; ++deg) {
    const auto& x = a.degree[deg];
    const auto& y = b.degree[deg];
    auto& o = out.degree[deg];
    o.orders.insert(o.orders.end(), y.orders.begin(), y.orders.end());
    o.z = block_diagonal(x.z, y.z);
    for (std::size_t w = 0; w < o.w.size(); ++w) o.w[w] = block_diagonal(x.w[w], y.w[w]);
  }
  return out;
}

HomResult hom_group(const AModObject& m, const AModObject& n, int deg) {
  require_same_ring(m, n);
  require_finite(m);
  require_finite(n);
  HomResult out;
  for (int i = 0; i < 2; ++i) {
    const auto& a = m.degree[i];
    const auto& b = n.degree[(i + deg) & 1];
    auto block = hom_block(a, b);
    out.group = out.group.direct_sum(block.group);
    for (auto& f : block.maps) {
      std::array<IntMatrix, 2> pair{IntMatrix(n.degree[deg & 1].size(), m.degree[0].size()),
                                    IntMatrix(n.degree[(1 + deg) & 1].size(), m.degree[1].size())};
      pair[i] = std::move(f);
      out.maps.push_back(std::move(pair));
    }
  }
  return out;
}

FinAbGroup ext_group(const AModObject& m, const AModObject& n, int deg, unsigned extra_generators,
                     std::uint64_t seed) {
  require_same_ring(m, n);
  require_finite(m);
  require_finite(n);
  FinAbGroup out;
  std::optional<RegularRep> rep;
  for (int i = 0; i < 2; ++i) {
    const auto& a = m.degree[i];
    const auto& b = n.degree[(i + deg) & 1];
    if (a.size() == 0 || b.size() == 0) continue;
    if (!rep) rep = regular_representation(*m.ring);
    out = out.direct_sum(ext_block(*m.ring, *rep, a, b, extra_generators, seed + static_cast<std::uint64_t>(i)));
  }
  return out;
}

FinAbGroup ext2_group(const AModObject& m, const AModObject& n, int deg) {
  require_same_ring(m, n);
  require_finite(m);
  require_finite(n);
  FinAbGroup out;
  const auto rep = regular_representation(*m.ring);
  for (int i = 0; i < 2; ++i)
    out = out.direct_sum(ext2_block(*m.ring, rep, m.degree[i], n.degree[(i + deg) & 1]));
  return out;
}

AModFamily AModFamily::zero(const TargetCategoryReport& report) {
  AModFamily f;
  for (const auto& s : report.flattened()) f.modules.push_back(AModObject::zero(report.summand(s).ring));
  return f;
}

UCTOrderResult uct_order_serial(const TargetCategoryReport& report, const AModFamily& a, const AModFamily& b) {
  check_family(report, a, "A");
  check_family(report, b, "B");
  std::vector<std::array<UCTDegree, 2>> parts;
  for (std::size_t i = 0; i < a.modules.size(); ++i) parts.push_back(summand_terms(a.modules[i], b.modules[i]));
  return assemble(parts);
}

UCTOrderResult uct_order(const TargetCategoryReport& report, const AModFamily& a, const AModFamily& b) {
  check_family(report, a, "A");
  check_family(report, b, "B");
  const long count = static_cast<long>(a.modules.size());
  std::vector<std::array<UCTDegree, 2>> parts(a.modules.size());
  std::vector<std::exception_ptr> errors(a.modules.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (long i = 0; i < count; ++i) {
    try {
      parts[i] = summand_terms(a.modules[i], b.modules[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return assemble(parts);
}

std::vector<Int> act(const ModuleDegree& d, int generator, const std::vector<Int>& x) {
  const IntMatrix& mat = generator == 0 ? d.z : d.w.at(generator - 1);
  std::vector<Int> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < d.size(); ++j) acc += mat(i, j) * x[j];
    out[i] = mod_floor(acc, d.orders[i]);
  }
  return out;
}

}  // namespace workbench
