// Serial reference vs OpenMP kernels: verification suites and UCT assembly.
#include <chrono>
#include <cstdio>
#include <random>

#include "CLI11.hpp"
#include "workbench/amod.hpp"
#include "workbench/parallel.hpp"
#include "workbench/verify.hpp"

using namespace workbench;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "equal" : "DIFFER");
}

// A family with one Z/q^e cyclic module per Z[1/N] summand in both degrees.
AModFamily cyclic_family(const TargetCategoryReport& report, std::mt19937_64& rng) {
  auto fam = AModFamily::zero(report);
  const auto flat = report.flattened();
  const long qs[] = {3, 9, 27, 5, 25};
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const auto& ring = report.summand(flat[i]).ring;
    if (ring->n != 1 || ring->m != 1) continue;
    auto m = AModObject::cyclic(ring, qs[rng() % 5], 0);
    m.degree[1] = AModObject::cyclic(ring, qs[rng() % 5], 0).degree[0];
    fam.modules[i] = m;
  }
  return fam;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare serial and parallel kernels"};
  int reps = 3;
  unsigned scale = 1;
  app.add_option("--reps", reps, "Repetitions per measurement (best time is reported)")->check(CLI::PositiveNumber);
  app.add_option("--scale", scale, "Multiplier for the suite bounds")->check(CLI::Range(1u, 4u));
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", worker_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  struct Case {
    Suite suite;
    unsigned bound;
  };
  const Case cases[] = {{Suite::PsiIdentities, 100}, {Suite::Characters, 100}, {Suite::Frobenius, 40},
                        {Suite::Crt, 30},            {Suite::CrossedRelations, 24}};
  for (const auto& c : cases) {
    const unsigned bound = c.bound * scale;
    SuiteReport s, p;
    const double ts = best_of(reps, [&] { s = run_suite_serial(c.suite, bound, 1); });
    const double tp = best_of(reps, [&] { p = run_suite(c.suite, bound, 1); });
    const std::string name = std::string(suite_name(c.suite)) + " n<=" + std::to_string(bound);
    row(name.c_str(), ts, tp, s == p);
  }

  const auto report = target_category(preset_group("klein_four"));
  std::mt19937_64 rng(3);
  const auto a = cyclic_family(report, rng), b = cyclic_family(report, rng);
  UCTOrderResult s, p;
  const double ts = best_of(reps, [&] { s = uct_order_serial(report, a, b); });
  const double tp = best_of(reps, [&] { p = uct_order(report, a, b); });
  row("uct klein_four", ts, tp, s == p);
  return 0;
}
