#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "workbench/amod.hpp"
#include "workbench/error.hpp"

using namespace workbench;

using oracle::class_ring;
using oracle::random_module;
using oracle::ring_of;
using oracle::small_rings;

TEST_CASE("validate examples") {
  auto z2 = ring_of(CrossedRing::local(1, 2));
  CHECK(validate(AModObject::zero(z2)).ok);
  CHECK(validate(AModObject::cyclic(z2, 3)).ok);
  auto r = ring_of(CrossedRing::make(2, 2, {{0, 1}, {1, 0}}, {1, 1}));
  auto m = AModObject::zero(r);
  m.degree[0] = AModObject::make_degree(*r, {5}, IntMatrix{{1}}, {IntMatrix{{1}}, IntMatrix{{1}}});
  auto rep = validate(m);
  CHECK(!rep.ok);
  CHECK(rep.degree == 0);
  CHECK(rep.violation.find("Phi_2") != std::string::npos);
  m.degree[0].z = IntMatrix{{4}};
  CHECK(validate(m).ok);
  // order not coprime to N
  CHECK(!validate(AModObject::cyclic(z2, 4)).ok);
  // an entry that is not a map Z/3 -> Z/9
  auto bad = AModObject::zero(z2);
  bad.degree[1] = AModObject::make_degree(*z2, {9, 3}, IntMatrix{{1, 1}, {0, 1}});
  auto br = validate(bad);
  CHECK(!br.ok);
  CHECK(br.degree == 1);
  // Weyl relation violated: w z != z^2 w over Z[theta3] x| Z/2
  auto s3 = class_ring("symmetric(3)", 2);
  auto reg = AModObject::regular_mod(s3, 5);
  CHECK(validate(reg).ok);
  auto broken = reg;
  broken.degree[0].w[1] = IntMatrix::identity(4);
  CHECK(!validate(broken).ok);
}

TEST_CASE("random submodules are valid") {
  std::mt19937_64 rng(1);
  for (const auto& r : small_rings())
    for (int t = 0; t < 10; ++t) {
      auto m = random_module(r, rng);
      auto v = validate(m);
      CHECK_MESSAGE(v.ok, v.violation);
    }
}

TEST_CASE("suspension and direct sums") {
  std::mt19937_64 rng(2);
  for (const auto& r : small_rings()) {
    auto m = random_module(r, rng), n = random_module(r, rng);
    CHECK(suspend(suspend(m)) == m);
    CHECK(suspend(AModObject::zero(r)) == AModObject::zero(r));
    CHECK(direct_sum(m, AModObject::zero(r)) == m);
    CHECK(validate(direct_sum(m, n)).ok);
  }
  auto z2 = ring_of(CrossedRing::local(1, 2));
  auto m = AModObject::cyclic(z2, 3);
  CHECK(suspend(m).degree[1] == m.degree[0]);
  CHECK(suspend(m).degree[0].size() == 0);
  CHECK_THROWS_AS(direct_sum(m, AModObject::zero(ring_of(CrossedRing::local(1, 3)))), Error);
}

TEST_CASE("hom and ext over Z[1/2] follow the gcd closed form") {
  auto z2 = ring_of(CrossedRing::local(1, 2));
  CHECK(hom_group(AModObject::cyclic(z2, 9), AModObject::cyclic(z2, 3), 0).group.factors == std::vector<Int>{3});
  CHECK(ext_group(AModObject::cyclic(z2, 3), AModObject::cyclic(z2, 3), 0).factors == std::vector<Int>{3});
  CHECK(ext_group(AModObject::cyclic(z2, 9), AModObject::cyclic(z2, 3), 0).factors == std::vector<Int>{3});
  CHECK(hom_group(AModObject::cyclic(z2, 3), AModObject::zero(z2), 0).group.is_trivial());
  CHECK(ext_group(AModObject::zero(z2), AModObject::cyclic(z2, 3), 0).is_trivial());
  for (long a : {1L, 3L, 5L, 9L, 15L, 27L, 45L, 81L})
    for (long b : {1L, 3L, 7L, 25L, 63L, 243L}) {
      const Int g = gcd(Int(a), Int(b));
      auto ma = AModObject::cyclic(z2, a), mb = AModObject::cyclic(z2, b);
      CHECK(hom_group(ma, mb, 0).group.order() == g);
      CHECK(ext_group(ma, mb, 0).order() == g);
      CHECK(hom_group(ma, mb, 1).group.order() == 1);
      CHECK(ext_group(ma, suspend(mb), 1).order() == g);
    }
}

TEST_CASE("hom generators are module maps") {
  std::mt19937_64 rng(3);
  for (const auto& r : small_rings())
    for (int t = 0; t < 4; ++t) {
      auto m = random_module(r, rng), n = random_module(r, rng);
      for (int d = 0; d < 2; ++d) {
        auto h = hom_group(m, n, d);
        for (const auto& pair : h.maps)
          for (int i = 0; i < 2; ++i) {
            const auto& a = m.degree[i];
            const auto& b = n.degree[(i + d) & 1];
            const auto& f = pair[i];
            for (std::size_t j = 0; j < a.size(); ++j) {
              std::vector<Int> e(a.size());
              e[j] = 1;
              for (int s = 0; s < static_cast<int>(r->m); ++s) {
                // f(s e_j) == s f(e_j)
                auto se = act(a, s, e);
                std::vector<Int> lhs(b.size()), fe(b.size());
                for (std::size_t i2 = 0; i2 < b.size(); ++i2) {
                  Int x = 0, y = 0;
                  for (std::size_t k = 0; k < a.size(); ++k) x += f(i2, k) * se[k];
                  y = f(i2, j);
                  lhs[i2] = mod_floor(x, b.orders[i2]);
                  fe[i2] = mod_floor(y, b.orders[i2]);
                }
                CHECK(lhs == act(b, s, fe));
              }
            }
          }
      }
    }
}

TEST_CASE("hom order matches brute-force enumeration") {
  std::mt19937_64 rng(4);
  int nontrivial = 0;
  for (const auto& r : small_rings())
    for (int t = 0; t < 8; ++t) {
      auto m = random_module(r, rng), n = random_module(r, rng);
      CAPTURE(r->label());
      for (int d = 0; d < 2; ++d) {
        const auto count = oracle::brute_hom_count(m, n, d);
        CHECK(hom_group(m, n, d).group.order() == count);
        nontrivial += count > 1;
      }
    }
  CHECK(nontrivial >= 16);
  MESSAGE("pairs with nonzero hom: " << nontrivial);
}

TEST_CASE("ext does not depend on the chosen generators") {
  std::mt19937_64 rng(5);
  for (const auto& r : small_rings())
    for (int t = 0; t < 4; ++t) {
      auto m = random_module(r, rng), n = random_module(r, rng);
      for (int d = 0; d < 2; ++d) {
        auto base = ext_group(m, n, d);
        CHECK(ext_group(m, n, d, 1, 11 + t) == base);
        CHECK(ext_group(m, n, d, 2, 97 + t) == base);
      }
    }
}

TEST_CASE("hom and ext have equal order for finite modules") {
  // the rings are separable away from N, so the Euler form vanishes on finite modules
  std::mt19937_64 rng(6);
  for (const auto& r : small_rings())
    for (int t = 0; t < 5; ++t) {
      auto m = random_module(r, rng), n = random_module(r, rng);
      for (int d = 0; d < 2; ++d) CHECK(hom_group(m, n, d).group.order() == ext_group(m, n, d).order());
    }
}

TEST_CASE("bifunctor additivity") {
  std::mt19937_64 rng(7);
  for (const auto& r : small_rings())
    for (int t = 0; t < 3; ++t) {
      auto m = random_module(r, rng, 25), m2 = random_module(r, rng, 25), n = random_module(r, rng, 25);
      for (int d = 0; d < 2; ++d) {
        CHECK(hom_group(direct_sum(m, m2), n, d).group.order() ==
              hom_group(m, n, d).group.order() * hom_group(m2, n, d).group.order());
        CHECK(hom_group(n, direct_sum(m, m2), d).group.order() ==
              hom_group(n, m, d).group.order() * hom_group(n, m2, d).group.order());
        CHECK(ext_group(direct_sum(m, m2), n, d) == ext_group(m, n, d).direct_sum(ext_group(m2, n, d)));
        CHECK(ext_group(n, direct_sum(m, m2), d) == ext_group(n, m, d).direct_sum(ext_group(n, m2, d)));
      }
    }
}

TEST_CASE("second syzygy step gives Ext^2 = 0 over split summands") {
  std::mt19937_64 rng(8);
  for (const auto& r : {ring_of(CrossedRing::local(1, 2)), ring_of(CrossedRing::local(3, 3)),
                        ring_of(CrossedRing::local(4, 2)), ring_of(CrossedRing::local(5, 5))})
    for (int t = 0; t < 5; ++t) {
      auto m = random_module(r, rng, 49), n = random_module(r, rng, 49);
      for (int d = 0; d < 2; ++d) CHECK(ext2_group(m, n, d).is_trivial());
    }
}

TEST_CASE("free modules and ring mismatches are rejected") {
  auto z2 = ring_of(CrossedRing::local(1, 2));
  auto free = AModObject::cyclic(z2, 0);
  CHECK(validate(free).ok);
  try {
    ext_group(free, AModObject::cyclic(z2, 3), 0);
    FAIL("expected FreeModuleUnsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FreeModuleUnsupported);
  }
  try {
    hom_group(AModObject::cyclic(z2, 3), AModObject::cyclic(ring_of(CrossedRing::local(1, 6)), 5), 0);
    FAIL("expected RingMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingMismatch);
  }
}

TEST_CASE("uct assembly") {
  auto report = target_category(preset_group("cyclic(2)"));
  auto zero = AModFamily::zero(report);
  auto r0 = uct_order(report, zero, zero);
  CHECK(r0.degree[0].kk_order == 1);
  CHECK(r0.degree[1].kk_order == 1);

  auto a = zero;
  a.modules[0] = AModObject::cyclic(a.modules[0].ring, 3);
  auto res = uct_order(report, a, a);
  CHECK(res.degree[0].hom.order() == 3);
  CHECK(res.degree[0].ext.order() == 1);
  CHECK(res.degree[0].kk_order == 3);
  CHECK(res.degree[1].hom.order() == 1);
  CHECK(res.degree[1].ext.order() == 3);
  CHECK(res.degree[1].kk_order == 3);
  CHECK(res == uct_order_serial(report, a, a));

  auto b = zero;
  b.modules[0] = AModObject::cyclic(b.modules[0].ring, 5);
  auto coprime = uct_order(report, a, b);
  CHECK(coprime.degree[0].kk_order == 1);
  CHECK(coprime.degree[1].kk_order == 1);

  // suspending B swaps the degrees
  auto sb = a;
  for (auto& m : sb.modules) m = suspend(m);
  auto swapped = uct_order(report, a, sb);
  CHECK(swapped.degree[0] == res.degree[1]);
  CHECK(swapped.degree[1] == res.degree[0]);

  auto short_family = zero;
  short_family.modules.pop_back();
  try {
    uct_order(report, short_family, zero);
    FAIL("expected FamilyMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FamilyMismatch);
  }
}

TEST_CASE("parallel and serial uct agree on random families") {
  std::mt19937_64 rng(9);
  for (const char* spec : {"klein_four", "symmetric(3)", "cyclic(6)"}) {
    auto report = target_category(preset_group(spec));
    auto a = AModFamily::zero(report), b = AModFamily::zero(report);
    for (std::size_t i = 0; i < a.modules.size(); ++i) {
      const auto& ring = a.modules[i].ring;
      if (ring->rank() > 4) continue;
      a.modules[i] = random_module(ring, rng, 49);
      b.modules[i] = random_module(ring, rng, 49);
    }
    auto par = uct_order(report, a, b);
    CHECK(par == uct_order_serial(report, a, b));
    for (const auto& d : par.degree) CHECK(d.kk_order == d.hom.order() * d.ext.order());
  }
}
