#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace workbench {

/// Finite group given by its full Cayley table. Elements are indices
/// 0..order()-1; immutable after construction.
class FiniteGroup {
 public:
  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return static_cast<int>(table_[static_cast<std::size_t>(a) * order_ + b]); }
  int inverse(int a) const { return inverse_[a]; }
  int power(int a, long long k) const;
  int element_order(int a) const;
  bool is_abelian() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(int a) const;
  const std::string& name() const noexcept { return name_; }

  /// Validating constructor; see group_from_table.
  static FiniteGroup from_table(const std::vector<std::vector<long long>>& table,
                                std::vector<std::string> labels = {});
  /// Trusted constructor for tables produced by the preset builders.
  static FiniteGroup from_trusted(int order, std::vector<std::uint32_t> table, int identity,
                                  std::vector<std::string> labels, std::string name);

 private:
  FiniteGroup() = default;
  void finish();

  int order_ = 0;
  int identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Validates a square multiplication table. Checks, in order: shape and
/// range (InvalidInput), two-sided identity (NoIdentity), associativity over
/// all triples (NonAssociativeError with the lexicographically first
/// failing triple), and the Latin-square property (NoInverse).
FiniteGroup group_from_table(const std::vector<std::vector<long long>>& table,
                             std::vector<std::string> labels = {});

/// Presets: "cyclic(n)", "dihedral(n)" (order 2n), "symmetric(n)" (n <= 7),
/// "klein_four", "direct_product(A,B)" with A, B presets.
FiniteGroup preset_group(std::string_view spec);

struct CyclicSubgroup {
  int generator = 0;           // smallest element index generating the subgroup
  int n = 1;                   // order
  std::vector<int> elements;   // sorted
};

struct CyclicClass {
  CyclicSubgroup representative;
  int group_order = 1;
  int class_size = 1;
  std::vector<int> normalizer;               // sorted element indices of N_H
  int weyl_order = 1;                        // |N_H| / n
  std::vector<int> coset_reps;               // coset_reps[0] is the identity
  std::vector<unsigned> weyl_units;          // g h g^-1 = h^k for the generator h
  std::vector<std::vector<int>> weyl_table;  // coset multiplication
};

/// One entry per conjugacy class of cyclic subgroups, including the trivial
/// subgroup. The representative of a class is the conjugate with the
/// lexicographically smallest sorted element list; classes are sorted by
/// (n, generator of the representative).
std::vector<CyclicClass> cyclic_classes(const FiniteGroup& g);

unsigned weyl_action_on_units(const CyclicClass& c, int coset);

}  // namespace workbench
