#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "workbench/crossring.hpp"
#include "workbench/zlinalg.hpp"

namespace workbench {

/// One degree of a module: Z/orders[0] + ... with z and each Weyl element
/// acting by integer matrices on column vectors, entries read mod the orders.
/// An order of 0 stands for a free Z[1/N] summand.
struct ModuleDegree {
  std::vector<Int> orders;
  IntMatrix z;
  std::vector<IntMatrix> w;  // w[0] is the identity coset

  std::size_t size() const noexcept { return orders.size(); }
  friend bool operator==(const ModuleDegree&, const ModuleDegree&) = default;
};

struct AModObject {
  RingPtr ring;
  std::array<ModuleDegree, 2> degree;

  static AModObject zero(RingPtr r);
  /// Z/order concentrated in one degree with z and W acting trivially;
  /// valid over rings with n = 1.
  static AModObject cyclic(RingPtr r, const Int& order, int deg = 0);
  /// R/(q) for an integer q: the regular representation read mod q.
  static AModObject regular_mod(RingPtr r, const Int& q, int deg = 0);
  /// Builds one degree from orders and matrices, filling identity defaults.
  static ModuleDegree make_degree(const CrossedRing& r, std::vector<Int> orders, IntMatrix z = {},
                                  std::vector<IntMatrix> w = {});

  bool is_zero() const { return degree[0].size() == 0 && degree[1].size() == 0; }
  bool has_free_part() const;
  /// Order of the underlying abelian group (0 when infinite).
  Int group_order() const;
};

bool operator==(const AModObject& a, const AModObject& b);

struct ValidationReport {
  bool ok = true;
  int degree = -1;
  std::string violation;
};

/// Checks shapes, coprimality of the orders to N, well-definedness of every
/// matrix entry, Phi_n(Z) = 0, the Weyl table relations and
/// W_w Z = Z^{units(w)} W_w; reports the first failure.
ValidationReport validate(const AModObject& m);

AModObject suspend(const AModObject& m);
AModObject direct_sum(const AModObject& a, const AModObject& b);

struct HomResult {
  FinAbGroup group;
  /// generating maps; maps[g][i] sends degree i of M to degree i + d of N
  std::vector<std::array<IntMatrix, 2>> maps;
};

/// Module maps shifting degree by `deg` that commute with z and all of W.
/// Throws RingMismatch, FreeModuleUnsupported.
HomResult hom_group(const AModObject& m, const AModObject& n, int deg);

/// Ext^1 by a free presentation. `extra_generators` random generators are
/// added to the coordinate ones (the result must not depend on them).
FinAbGroup ext_group(const AModObject& m, const AModObject& n, int deg, unsigned extra_generators = 0,
                     std::uint64_t seed = 0);

/// Ext^2 through a second kernel step; zero when the ring is hereditary.
FinAbGroup ext2_group(const AModObject& m, const AModObject& n, int deg);

/// One module per flattened summand of a target category report.
struct AModFamily {
  std::vector<AModObject> modules;

  static AModFamily zero(const TargetCategoryReport& report);
};

struct UCTDegree {
  FinAbGroup hom;
  FinAbGroup ext;
  Int kk_order = 1;
  friend bool operator==(const UCTDegree&, const UCTDegree&) = default;
};

struct UCTOrderResult {
  std::array<UCTDegree, 2> degree;
  friend bool operator==(const UCTOrderResult&, const UCTOrderResult&) = default;
};

/// Per degree d: hom = sum_i hom_group(A_i, B_i, d), ext = sum_i
/// ext_group(A_i, suspend(B_i), d). Summands are evaluated in parallel.
/// Throws FamilyMismatch when a family does not fit the report.
UCTOrderResult uct_order(const TargetCategoryReport& report, const AModFamily& a, const AModFamily& b);
/// Same result, computed serially.
UCTOrderResult uct_order_serial(const TargetCategoryReport& report, const AModFamily& a, const AModFamily& b);

/// Applies a ring generator (0 = z, 1 + w = Weyl element w) to a vector of
/// one degree, reduced mod the orders.
std::vector<Int> act(const ModuleDegree& d, int generator, const std::vector<Int>& x);

}  // namespace workbench
