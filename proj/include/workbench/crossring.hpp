#pragma once

#include <memory>
#include <string>
#include <vector>

#include "workbench/cyclotomic.hpp"
#include "workbench/group.hpp"

namespace workbench {

/// Presentation of Z[theta_n, 1/N] x| W: W is given by its multiplication
/// table (index 0 is the identity) and acts on theta_n through weyl_units.
struct CrossedRing {
  unsigned n = 1;
  Int N = 1;
  unsigned m = 1;
  std::vector<std::vector<int>> weyl_table;
  std::vector<unsigned> weyl_units;
  std::string weyl_name;

  /// Validating constructor: W must be a group with identity 0 and the units
  /// a homomorphism to (Z/n)^x.
  static CrossedRing make(unsigned n, Int N, std::vector<std::vector<int>> table,
                          std::vector<unsigned> units, std::string weyl_name = "");
  /// As make, for tables already validated by group-core: only sizes and the
  /// unit range are checked.
  static CrossedRing trusted(unsigned n, Int N, std::vector<std::vector<int>> table,
                             std::vector<unsigned> units, std::string weyl_name = "");
  /// Z[theta_d, 1/N] with trivial W.
  static CrossedRing local(unsigned d, Int N);

  std::size_t rank() const;
  int weyl_inverse(int w) const;
  bool trivial_action() const;
  std::string label() const;

  friend bool operator==(const CrossedRing& a, const CrossedRing& b) {
    return a.n == b.n && a.N == b.N && a.weyl_table == b.weyl_table && a.weyl_units == b.weyl_units;
  }
};

using RingPtr = std::shared_ptr<const CrossedRing>;

/// "Z", "Z[1/6]", "Z[ϑ5,1/5]": the localization is shown by its radical.
std::string local_ring_label(unsigned d, const Int& N);

/// Element sum_w coeffs[w] * w.
struct CrossedElt {
  RingPtr ring;
  std::vector<CycEltN> coeffs;

  static CrossedElt zero(RingPtr r);
  static CrossedElt one(RingPtr r);
  static CrossedElt scalar(RingPtr r, const CycEltN& a);
  static CrossedElt weyl(RingPtr r, int w);
  /// theta_n^i as an element
  static CrossedElt z_power(RingPtr r, unsigned i);

  friend CrossedElt operator+(const CrossedElt& a, const CrossedElt& b);
  friend CrossedElt operator-(const CrossedElt& a, const CrossedElt& b);
  friend CrossedElt operator*(const CrossedElt& a, const CrossedElt& b);
  friend bool operator==(const CrossedElt& a, const CrossedElt& b);
  bool is_zero() const;
  std::string to_string() const;
};

/// (a_w w)(b_v v) = a_w galois(b_v, units(w)) (wv). Throws RingMismatch.
CrossedElt crossed_mul(const CrossedElt& a, const CrossedElt& b);

/// Throws InsufficientInversion unless every prime of |G| divides N.
CrossedRing build_crossed_ring(const CyclicClass& c, const Int& N, const std::string& group_name = "");

/// Left multiplication matrices on the Z-basis z^i w (index w * phi(n) + i),
/// acting on column vectors.
struct RegularRep {
  IntMatrix z;
  std::vector<IntMatrix> w;
};
RegularRep regular_representation(const CrossedRing& r);

enum class SummandKind { IntegralLocal, CyclotomicLocal, UnsplitCrossed };
const char* summand_kind_name(SummandKind k);

struct RingSummand {
  SummandKind kind = SummandKind::UnsplitCrossed;
  unsigned d = 1;  // the summand ring is Z[theta_d, 1/N] for the local kinds
  unsigned multiplicity = 1;
  std::string provenance;
  /// One central idempotent of the parent ring per copy.
  std::vector<CrossedElt> idempotents;
  /// The ring the copies are modules over: local(d, N) or the parent itself.
  RingPtr ring;

  std::string label() const;
  /// Rank of one copy as a Z[1/N]-module.
  std::size_t rank() const;
};

/// Splits r along central idempotents when W is abelian, acts trivially,
/// and either n = 1 or W has exponent <= 2; otherwise one unsplit summand.
std::vector<RingSummand> split_ring(const RingPtr& r, std::size_t class_id = 0);

struct TargetClassEntry {
  CyclicClass cls;
  RingPtr ring;
  std::vector<RingSummand> summands;
};

struct FlatSummand {
  std::size_t class_index;
  std::size_t summand_index;
  unsigned copy;
};

struct TargetCategoryReport {
  std::string group_name;
  int group_order = 1;
  Int N = 1;
  std::vector<TargetClassEntry> classes;

  /// One entry per copy, in report order; module families index into this.
  std::vector<FlatSummand> flattened() const;
  std::size_t total_summands() const;
  const RingSummand& summand(const FlatSummand& f) const { return classes[f.class_index].summands[f.summand_index]; }
};

TargetCategoryReport target_category(const FiniteGroup& g);

/// "S3" for symmetric(3), "V" for klein_four and so on.
std::string group_display_name(const std::string& preset_name);

}  // namespace workbench
