// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "workbench/amod.hpp"
#include "workbench/crossring.hpp"
#include "workbench/group.hpp"
#include "workbench/verify.hpp"

using namespace workbench;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs >= limit_s) {
    o.ok = false;
    o.detail = "runtime limit exceeded";
  }
  failures += !o.ok;
  std::printf("%s %2d  %s  (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

Outcome suite_outcome(Suite s, unsigned bound) {
  Outcome o;
  const auto r = run_suite(s, bound, 0);
  o.expect(r.items == bound, "not every n was visited");
  o.expect(r.passed, r.counterexample);
  std::ostringstream ss;
  ss << r.checked << " identities";
  if (o.ok) o.detail = ss.str();
  return o;
}

// Cyclic subgroups of a table group found by brute force, grouped into
// conjugacy classes.
struct BruteClass {
  std::set<int> rep;
  int class_size;
  int normalizer;
  std::set<unsigned> units;  // exponents k with x h x^-1 = h^k for x in N(H)
};

std::vector<BruteClass> brute_cyclic_classes(const FiniteGroup& g) {
  const int n = g.order();
  auto power = [&](int a, int k) {
    int r = g.identity();
    for (int i = 0; i < k; ++i) r = g.mul(r, a);
    return r;
  };
  std::set<std::set<int>> subgroups;
  for (int a = 0; a < n; ++a) {
    std::set<int> h;
    for (int k = 0; k < n; ++k) h.insert(power(a, k));
    subgroups.insert(h);
  }
  auto conj = [&](const std::set<int>& h, int x) {
    std::set<int> out;
    for (int y : h) out.insert(g.mul(g.mul(x, y), g.inverse(x)));
    return out;
  };
  std::vector<BruteClass> out;
  std::set<std::set<int>> seen;
  for (const auto& h : subgroups) {
    if (seen.count(h)) continue;
    std::set<std::set<int>> orbit;
    int normalizer = 0;
    for (int x = 0; x < n; ++x) {
      auto c = conj(h, x);
      orbit.insert(c);
      normalizer += c == h;
    }
    seen.insert(orbit.begin(), orbit.end());
    BruteClass b{h, static_cast<int>(orbit.size()), normalizer, {}};
    int gen = g.identity();
    for (int a : h)
      if (g.element_order(a) == static_cast<int>(h.size())) gen = a;
    for (int x = 0; x < n; ++x) {
      if (conj(h, x) != h) continue;
      const int img = g.mul(g.mul(x, gen), g.inverse(x));
      for (unsigned k = 1; k <= h.size(); ++k)
        if (power(gen, static_cast<int>(k)) == img) b.units.insert(k);
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "klein four target category has 10 summands Z[1/2]", 1, [] {
    Outcome o;
    const auto r = target_category(preset_group("klein_four"));
    const auto flat = r.flattened();
    o.expect(flat.size() == 10, "summand count " + std::to_string(flat.size()));
    for (const auto& f : flat) {
      const auto& s = r.summand(f);
      o.expect(s.kind == SummandKind::IntegralLocal && s.label() == "Z[1/2]" && s.rank() == 1,
               "unexpected summand " + s.label());
    }
    return o;
  });

  criterion(2, "Z/p target category is Z[1/p] plus two Z[theta_p,1/p] (p = 2,3,5,7)", 4, [] {
    Outcome o;
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      const auto r = target_category(preset_group("cyclic(" + std::to_string(p) + ")"));
      const auto flat = r.flattened();
      const std::string ps = std::to_string(p);
      o.expect(flat.size() == 3, "p=" + ps + ": " + std::to_string(flat.size()) + " summands");
      if (flat.size() != 3) continue;
      // Z[theta_2] = Z, so for p = 2 all three summands are Z[1/2]
      const std::string cyc = p == 2 ? "Z[1/2]" : "Z[ϑ" + ps + ",1/" + ps + "]";
      std::multiset<std::string> labels, expect{"Z[1/" + ps + "]", cyc, cyc};
      std::multiset<std::size_t> ranks, expect_ranks{1, p - 1, p - 1};
      for (const auto& f : flat) {
        labels.insert(r.summand(f).label());
        ranks.insert(r.summand(f).rank());
      }
      o.expect(labels == expect, "p=" + ps + ": labels differ");
      o.expect(ranks == expect_ranks, "p=" + ps + ": ranks differ");
    }
    return o;
  });

  criterion(3, "psi idempotent identities and integrality for n <= 100", 60,
            [] { return suite_outcome(Suite::PsiIdentities, 100); });
  criterion(4, "psi characters are order indicators for n <= 100", 120,
            [] { return suite_outcome(Suite::Characters, 100); });
  criterion(5, "Frobenius and projection formula for k | n <= 60", 120,
            [] { return suite_outcome(Suite::Frobenius, 60); });
  criterion(6, "CRT split/join round trip and multiplicativity for n <= 30", 30,
            [] { return suite_outcome(Suite::Crt, 30); });

  criterion(7, "S3 cyclic classes and the unsplit C3 crossed product", 1, [] {
    Outcome o;
    const auto g = preset_group("symmetric(3)");
    const auto classes = cyclic_classes(g);
    auto brute = brute_cyclic_classes(g);
    std::sort(brute.begin(), brute.end(), [](const auto& a, const auto& b) { return a.rep.size() < b.rep.size(); });
    o.expect(classes.size() == 3 && brute.size() == 3, "expected three classes");
    if (!o.ok) return o;
    const int sizes[3] = {1, 2, 3}, class_sizes[3] = {1, 3, 1}, weyl[3] = {6, 1, 2};
    for (int i = 0; i < 3; ++i) {
      const auto& c = classes[i];
      const auto& b = brute[i];
      const std::string tag = "class " + std::to_string(i) + ": ";
      o.expect(c.representative.n == sizes[i] && static_cast<int>(b.rep.size()) == sizes[i], tag + "order");
      o.expect(c.class_size == class_sizes[i] && b.class_size == class_sizes[i], tag + "class size");
      o.expect(c.weyl_order == weyl[i] && b.normalizer / sizes[i] == weyl[i], tag + "Weyl order");
      std::set<unsigned> units(c.weyl_units.begin(), c.weyl_units.end());
      o.expect(units == b.units, tag + "Weyl units differ from enumeration");
    }
    o.expect(brute[2].units == std::set<unsigned>{1, 2}, "C3 Weyl action is not by -1");
    const auto report = target_category(g);
    const auto& c3 = report.classes[2];
    o.expect(c3.summands.size() == 1 && c3.summands[0].kind == SummandKind::UnsplitCrossed &&
                 c3.summands[0].multiplicity == 1,
             "C3 ring split");
    o.expect(c3.ring->rank() == 4 && c3.summands[0].rank() == 4, "C3 ring rank");
    o.expect(c3.ring->label() == "Z[ϑ3,1/6]⋊Z/2", "C3 ring label " + c3.ring->label());
    return o;
  });

  criterion(8, "hom order equals brute-force count on 200+ random pairs", 300, [] {
    Outcome o;
    std::mt19937_64 rng(20261015);
    const auto rings = oracle::small_rings();
    int pairs = 0, nontrivial = 0;
    for (int t = 0; t < 26; ++t)
      for (const auto& r : rings) {
        o.expect(r->rank() <= 4, "ring rank above 4");
        const auto m = oracle::random_module(r, rng), n = oracle::random_module(r, rng);
        for (int d = 0; d < 2; ++d) {
          const auto expect = oracle::brute_hom_count(m, n, d);
          const auto got = hom_group(m, n, d).group.order();
          nontrivial += expect > 1;
          o.expect(got == expect, r->label() + ": solver " + got.get_str() + " vs brute force " + std::to_string(expect));
        }
        ++pairs;
      }
    o.expect(pairs >= 200, "too few pairs");
    o.expect(nontrivial >= 50, "too few pairs with nonzero hom");
    if (o.ok) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(nontrivial) + " nonzero blocks";
    return o;
  });

  criterion(9, "Hom and Ext^1 of cyclic modules have order gcd(a,b); Ext is generator independent", 120, [] {
    Outcome o;
    const auto report = target_category(preset_group("klein_four"));
    const auto ring = report.summand(report.flattened()[0]).ring;  // Z[1/2]
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> pick(1, 729);
    int pairs = 0, nontrivial = 0;
    while (pairs < 50) {
      const long a = pick(rng), b = pick(rng);
      if (a % 2 == 0 || b % 2 == 0) continue;
      ++pairs;
      const auto ma = AModObject::cyclic(ring, a), mb = AModObject::cyclic(ring, b);
      const Int g = std::gcd(a, b);
      nontrivial += g > 1;
      const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      o.expect(hom_group(ma, mb, 0).group.order() == g, tag + " hom");
      o.expect(ext_group(ma, mb, 0).order() == g, tag + " ext");
      // both modules sit in degree 0, so the odd parts vanish
      o.expect(hom_group(ma, mb, 1).group.order() == 1, tag + " odd hom");
      o.expect(ext_group(ma, mb, 1).order() == 1, tag + " odd ext");
    }
    const auto rings = oracle::small_rings();
    for (int t = 0; t < 50; ++t) {
      const auto& r = rings[t % rings.size()];
      const auto m = oracle::random_module(r, rng), n = oracle::random_module(r, rng);
      for (int d = 0; d < 2; ++d) {
        const auto base = ext_group(m, n, d);
        o.expect(ext_group(m, n, d, 1 + t % 3, 1000 + t) == base, "instance " + std::to_string(t) + ": ext changed");
      }
    }
    o.expect(nontrivial >= 10, "too few pairs with a common factor");
    if (o.ok) o.detail = std::to_string(nontrivial) + " of 50 pairs with gcd > 1";
    return o;
  });

  criterion(10, "UCT orders for A = B = Z/3 over cyclic(2), and suspension swaps degrees", 5, [] {
    Outcome o;
    const auto report = target_category(preset_group("cyclic(2)"));
    const auto ring = report.summand(report.flattened()[0]).ring;
    o.expect(ring->label() == "Z[1/2]", "summand 0 is " + ring->label());
    auto a = AModFamily::zero(report);
    a.modules[0] = AModObject::cyclic(ring, 3);
    const auto r = uct_order(report, a, a);
    o.expect(r.degree[0].kk_order == 3 && r.degree[1].kk_order == 3, "kk orders " + r.degree[0].kk_order.get_str() +
                                                                           ", " + r.degree[1].kk_order.get_str());
    auto b = a;
    b.modules[0] = suspend(b.modules[0]);
    const auto s = uct_order(report, a, b);
    o.expect(s.degree[0] == r.degree[1] && s.degree[1] == r.degree[0], "suspension does not swap the degrees");
    o.expect(uct_order_serial(report, a, b) == s, "serial result differs");
    return o;
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
