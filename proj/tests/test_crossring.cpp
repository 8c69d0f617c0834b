#include "doctest.h"

#include <random>

#include "workbench/crossring.hpp"
#include "workbench/error.hpp"
#include "workbench/numtheory.hpp"

using namespace workbench;

namespace {

std::vector<std::string> small_groups() {
  std::vector<std::string> out;
  for (int k = 1; k <= 24; ++k) out.push_back("cyclic(" + std::to_string(k) + ")");
  for (int k = 2; k <= 12; ++k) out.push_back("dihedral(" + std::to_string(k) + ")");
  for (const char* s : {"klein_four", "symmetric(3)", "symmetric(4)", "direct_product(cyclic(2),klein_four)",
                        "direct_product(cyclic(3),cyclic(3))", "direct_product(symmetric(3),cyclic(2))",
                        "direct_product(cyclic(2),cyclic(6))"})
    out.push_back(s);
  return out;
}

CrossedElt random_elt(std::mt19937_64& rng, const RingPtr& r) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> sparse(0, 2);
  auto e = CrossedElt::zero(r);
  const auto primes = prime_factors(r->N);
  for (auto& coeff : e.coeffs) {
    if (sparse(rng) == 0) continue;
    std::vector<Int> v(euler_phi(r->n));
    for (auto& x : v) x = c(rng);
    Int den = 1;
    if (!primes.empty() && sparse(rng) == 0) den = primes[rng() % primes.size()];
    coeff = CycEltN(r->n, r->N, v, den);
  }
  return e;
}

IntMatrix matrix_power(const IntMatrix& a, unsigned k) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

IntMatrix eval_poly(const IntPoly& p, const IntMatrix& a) {
  IntMatrix acc(a.rows(), a.cols());
  IntMatrix pw = IntMatrix::identity(a.rows());
  for (const auto& c : p.coeffs()) {
    IntMatrix term = pw;
    for (std::size_t i = 0; i < term.rows(); ++i)
      for (std::size_t j = 0; j < term.cols(); ++j) term(i, j) *= c;
    acc = acc + term;
    pw = pw * a;
  }
  return acc;
}

// Left multiplication by x on the Z-basis z^i w, scaled to integers by den.
IntMatrix left_matrix(const CrossedElt& x, const RegularRep& rep, Int& den) {
  den = 1;
  for (const auto& c : x.coeffs) den = lcm(den, c.den());
  const std::size_t size = rep.z.rows();
  IntMatrix acc(size, size);
  for (std::size_t w = 0; w < x.coeffs.size(); ++w) {
    const auto& c = x.coeffs[w];
    const Int f = den / c.den();
    for (std::size_t i = 0; i < c.num().size(); ++i) {
      if (c.num()[i] == 0) continue;
      IntMatrix term = matrix_power(rep.z, static_cast<unsigned>(i)) * rep.w[w];
      for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) term(a, b) *= c.num()[i] * f;
      acc = acc + term;
    }
  }
  return acc;
}

std::size_t matrix_rank(const IntMatrix& a) {
  std::size_t r = 0;
  for (const auto& d : snf(a).diagonal()) r += d != 0;
  return r;
}

}  // namespace

TEST_CASE("build_crossed_ring examples") {
  auto v = cyclic_classes(preset_group("klein_four"));
  auto r = build_crossed_ring(v[0], 4);
  CHECK(r.rank() == 4);
  CHECK(r.n == 1);
  auto s3 = cyclic_classes(preset_group("symmetric(3)"));
  auto c3 = build_crossed_ring(s3[2], 6);
  CHECK(c3.rank() == 4);
  CHECK(c3.weyl_units == std::vector<unsigned>{1, 2});
  CHECK(c3.label() == "Z[ϑ3,1/6]⋊Z/2");
  CHECK(build_crossed_ring(s3[0], 6, "S3").label() == "Z[1/6][S3]");
  auto c5 = cyclic_classes(preset_group("cyclic(5)"));
  auto full = build_crossed_ring(c5.back(), 5);
  CHECK(full.m == 1);
  CHECK(full.label() == "Z[ϑ5,1/5]");
  try {
    build_crossed_ring(s3[2], 2);
    FAIL("expected InsufficientInversion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientInversion);
  }
}

TEST_CASE("crossed_mul examples") {
  auto s3 = cyclic_classes(preset_group("symmetric(3)"));
  auto r = std::make_shared<const CrossedRing>(build_crossed_ring(s3[2], 6));
  auto w = CrossedElt::weyl(r, 1), z = CrossedElt::z_power(r, 1);
  auto wz = w * z;
  auto expected = CrossedElt::scalar(r, CycEltN(3, 6, {-1, -1})) * w;
  CHECK(wz == expected);
  CHECK(w * z * w == CrossedElt::z_power(r, 2));
  auto one = CrossedElt::one(r);
  CHECK(one * wz == wz);
  CHECK(wz * one == wz);

  auto c2 = cyclic_classes(preset_group("cyclic(2)"));
  auto g = std::make_shared<const CrossedRing>(build_crossed_ring(c2[0], 2));
  auto half = CrossedElt::scalar(g, CycEltN(1, 2, {1}, 2));
  auto e_plus = half * (CrossedElt::one(g) + CrossedElt::weyl(g, 1));
  auto e_minus = half * (CrossedElt::one(g) - CrossedElt::weyl(g, 1));
  CHECK(e_plus * e_plus == e_plus);
  CHECK((e_plus * e_minus).is_zero());

  CHECK_THROWS_AS(crossed_mul(w, e_plus), Error);
}

TEST_CASE("crossed products are associative and unital for groups of order <= 24") {
  std::mt19937_64 rng(101);
  for (const auto& spec : small_groups()) {
    auto g = preset_group(spec);
    for (const auto& c : cyclic_classes(g)) {
      auto r = std::make_shared<const CrossedRing>(build_crossed_ring(c, g.order()));
      if (r->m > 12) continue;  // keep the triple products cheap
      for (int t = 0; t < 3; ++t) {
        auto a = random_elt(rng, r), b = random_elt(rng, r), d = random_elt(rng, r);
        CAPTURE(spec);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * CrossedElt::one(r) == a);
        CHECK(CrossedElt::one(r) * a == a);
        CHECK(a * (b + d) == a * b + a * d);
      }
    }
  }
}

TEST_CASE("regular representation relations") {
  for (const auto& spec : small_groups()) {
    auto g = preset_group(spec);
    for (const auto& c : cyclic_classes(g)) {
      auto r = build_crossed_ring(c, g.order());
      if (r.rank() > 24) continue;
      CAPTURE(spec);
      auto rep = regular_representation(r);
      const std::size_t size = r.rank();
      CHECK(eval_poly(cyclotomic(r.n), rep.z).is_zero());
      CHECK(rep.w[0] == IntMatrix::identity(size));
      for (unsigned a = 0; a < r.m; ++a) {
        CHECK(rep.w[a] * rep.z == matrix_power(rep.z, r.weyl_units[a]) * rep.w[a]);
        for (unsigned b = 0; b < r.m; ++b) CHECK(rep.w[a] * rep.w[b] == rep.w[r.weyl_table[a][b]]);
      }
    }
  }
  auto z3 = regular_representation(CrossedRing::local(3, 3));
  CHECK(z3.z == IntMatrix{{0, -1}, {1, -1}});
  auto triv = regular_representation(CrossedRing::local(1, 1));
  CHECK(triv.z == IntMatrix{{1}});
}

TEST_CASE("regular representation agrees with crossed_mul") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"symmetric(3)", "dihedral(4)", "cyclic(6)", "klein_four"}) {
    auto g = preset_group(spec);
    for (const auto& c : cyclic_classes(g)) {
      auto r = std::make_shared<const CrossedRing>(build_crossed_ring(c, g.order()));
      auto rep = regular_representation(*r);
      const std::size_t phi = euler_phi(r->n);
      // z^i w is basis vector w * phi + i; multiply by generators
      for (unsigned w = 0; w < r->m; ++w)
        for (std::size_t i = 0; i < phi; ++i) {
          auto basis = CrossedElt::z_power(r, static_cast<unsigned>(i)) * CrossedElt::weyl(r, static_cast<int>(w));
          auto check = [&](const CrossedElt& x, const IntMatrix& mat) {
            auto prod = x * basis;
            for (unsigned v = 0; v < r->m; ++v)
              for (std::size_t j = 0; j < phi; ++j) {
                Int entry = prod.coeffs[v].num()[j];
                CHECK(prod.coeffs[v].den() == 1);
                CHECK(entry == mat(v * phi + j, w * phi + i));
              }
          };
          check(CrossedElt::z_power(r, 1), rep.z);
          for (unsigned v = 0; v < r->m; ++v) check(CrossedElt::weyl(r, static_cast<int>(v)), rep.w[v]);
        }
    }
  }
}

TEST_CASE("split_ring examples") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto rep = target_category(preset_group("cyclic(" + std::to_string(p) + ")"));
    CHECK(rep.total_summands() == 3);
    auto flat = rep.flattened();
    CHECK(rep.summand(flat[0]).kind == SummandKind::IntegralLocal);
    const auto expect = p == 2 ? SummandKind::IntegralLocal : SummandKind::CyclotomicLocal;
    CHECK(rep.summand(flat[1]).kind == expect);
    CHECK(rep.summand(flat[2]).kind == expect);
    CHECK(rep.summand(flat[0]).label() == "Z[1/" + std::to_string(p) + "]");
    if (p > 2) CHECK(rep.summand(flat[2]).label() == "Z[ϑ" + std::to_string(p) + ",1/" + std::to_string(p) + "]");
  }
  auto klein = target_category(preset_group("klein_four"));
  CHECK(klein.total_summands() == 10);
  for (const auto& f : klein.flattened()) CHECK(klein.summand(f).label() == "Z[1/2]");

  auto s3 = target_category(preset_group("symmetric(3)"));
  REQUIRE(s3.classes.size() == 3);
  CHECK(s3.classes[0].summands.size() == 1);
  CHECK(s3.classes[0].summands[0].kind == SummandKind::UnsplitCrossed);
  CHECK(s3.classes[0].summands[0].label() == "Z[1/6][S3]");
  CHECK(s3.classes[2].summands[0].kind == SummandKind::UnsplitCrossed);
  CHECK(s3.classes[2].summands[0].rank() == 4);
  CHECK(s3.classes[1].summands[0].label() == "Z[1/6]");

  auto trivial = target_category(preset_group("cyclic(1)"));
  CHECK(trivial.total_summands() == 1);
  CHECK(trivial.summand(trivial.flattened()[0]).label() == "Z");
}

TEST_CASE("split idempotents are complete, orthogonal, central and of the right rank") {
  for (const auto& spec : small_groups()) {
    auto g = preset_group(spec);
    auto report = target_category(g);
    CHECK(report.classes.size() == cyclic_classes(g).size());
    for (const auto& entry : report.classes) {
      const auto& r = entry.ring;
      CAPTURE(spec);
      std::size_t ranks = 0;
      std::vector<std::pair<CrossedElt, std::size_t>> ids;
      for (const auto& s : entry.summands) {
        CHECK(s.multiplicity >= 1);
        CHECK(s.idempotents.size() == s.multiplicity);
        ranks += s.rank() * s.multiplicity;
        for (const auto& e : s.idempotents) ids.emplace_back(e, s.rank());
      }
      CHECK(ranks == r->rank());
      if (r->m > 12) continue;
      auto sum = CrossedElt::zero(r);
      auto rep = regular_representation(*r);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        sum = sum + ids[i].first;
        for (std::size_t j = 0; j < ids.size(); ++j) {
          auto prod = ids[i].first * ids[j].first;
          if (i == j)
            CHECK(prod == ids[i].first);
          else
            CHECK(prod.is_zero());
        }
        // central: commutes with z and every w
        auto z = CrossedElt::z_power(r, 1);
        CHECK(ids[i].first * z == z * ids[i].first);
        for (unsigned w = 0; w < r->m; ++w) {
          auto x = CrossedElt::weyl(r, static_cast<int>(w));
          CHECK(ids[i].first * x == x * ids[i].first);
        }
        Int den;
        CHECK(matrix_rank(left_matrix(ids[i].first, rep, den)) == ids[i].second);
      }
      CHECK(sum == CrossedElt::one(r));
    }
  }
}

TEST_CASE("split_ring falls back honestly") {
  auto s3 = cyclic_classes(preset_group("symmetric(3)"));
  auto r = std::make_shared<const CrossedRing>(build_crossed_ring(s3[2], 6));
  auto parts = split_ring(r);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].kind == SummandKind::UnsplitCrossed);
  CHECK(parts[0].ring == r);
  // C3 inside C3 x C3: trivial action but exponent 3 > 2 with n > 1
  auto g = preset_group("direct_product(cyclic(3),cyclic(3))");
  auto rep = target_category(g);
  CHECK(rep.classes[0].summands.size() == 2);  // Z[1/3] + 4 Z[theta3]
  CHECK(rep.classes[0].summands[1].multiplicity == 4);
  CHECK(rep.classes[1].summands[0].kind == SummandKind::UnsplitCrossed);
}

TEST_CASE("CrossedRing::make validates") {
  CHECK_THROWS_AS(CrossedRing::make(3, 3, {{0, 1}, {1, 0}}, {1, 1, 1}), Error);
  CHECK_THROWS_AS(CrossedRing::make(3, 3, {{0, 1}, {1, 1}}, {1, 2}), Error);
  CHECK_THROWS_AS(CrossedRing::make(5, 5, {{0, 1}, {1, 0}}, {1, 2}), Error);  // 2*2 = 4 != 1 mod 5
  auto ok = CrossedRing::make(5, 5, {{0, 1}, {1, 0}}, {1, 4});
  CHECK(ok.rank() == 8);
}
