#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace workbench {

using Int = mpz_class;
using Rat = mpq_class;

/// Least non-negative residue of a modulo m; m == 0 returns a unchanged.
Int mod_floor(const Int& a, const Int& m);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Int> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  IntMatrix transpose() const;
  bool is_zero() const;
  void append_row(std::span<const Int> values);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Finitely generated abelian group Z/d_1 + ... + Z/d_r + Z^free_rank with d_i | d_{i+1}.
struct FinAbGroup {
  std::vector<Int> factors;
  std::size_t free_rank = 0;

  /// Normalizes an arbitrary list of cyclic orders (0 meaning Z, 1 dropped).
  static FinAbGroup from_orders(std::vector<Int> orders);

  bool is_finite() const noexcept { return free_rank == 0; }
  bool is_trivial() const noexcept { return factors.empty() && free_rank == 0; }
  /// Group order; 0 when the group is infinite.
  Int order() const;
  FinAbGroup direct_sum(const FinAbGroup& other) const;
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

struct HnfResult {
  IntMatrix H;  // row Hermite form
  IntMatrix U;  // unimodular, U * A == H
};

/// Row Hermite normal form: upper echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Pivot rule: smallest absolute value, then topmost.
HnfResult hnf(const IntMatrix& a);

struct SnfResult {
  IntMatrix D;
  IntMatrix U, V;          // U * A * V == D
  IntMatrix U_inv, V_inv;  // exact inverses of U and V
  std::vector<Int> diagonal() const;
};

/// Smith normal form with d_i | d_{i+1}. Pivot rule: smallest absolute
/// nonzero entry, ties broken leftmost then topmost.
SnfResult snf(const IntMatrix& a);

/// Row basis (echelon) of {x in Z^cols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Upper-triangular row basis (cols x cols) of rowspan(gens) + M * Z^cols; M > 0.
IntMatrix lattice_hnf_mod(const IntMatrix& gens, const Int& modulus);

/// Row basis of {x in Z^cols : A x == 0 mod row_moduli[i] for each row i}.
/// If col_moduli is non-empty, requires row_moduli[i] | A(i,j) * col_moduli[j].
IntMatrix solution_lattice(const IntMatrix& a, std::span<const Int> row_moduli,
                           std::span<const Int> col_moduli = {});

/// Row basis of {x in Z^cols : A x == 0 in Z[1/N] / m_i Z[1/N] per row}.
/// The N-part of every modulus is a unit after localization, so only the
/// prime-to-N part constrains the lattice. The result is always full rank.
IntMatrix lattice_kernel_localized(const IntMatrix& a, std::span<const Int> row_moduli,
                                   const Int& localize = 1);
IntMatrix lattice_kernel_localized(const IntMatrix& a, const Int& modulus, const Int& localize = 1);

/// Coordinates of v in the lattice spanned by the rows of an echelon basis.
/// Returns nullopt when v is not in the lattice.
std::optional<std::vector<Int>> express_in_basis(const IntMatrix& echelon_basis,
                                                 std::span<const Int> v);

struct QuotientResult {
  FinAbGroup group;
  /// One row per cyclic factor of `group` (torsion first, then free), as
  /// vectors of the ambient Z^cols.
  IntMatrix generators;
};

/// Structure of L / S where L has the given full row basis and S is spanned
/// by the rows of sub_generators (each must lie in L).
QuotientResult lattice_quotient(const IntMatrix& basis, const IntMatrix& sub_generators);

struct ModSolution {
  FinAbGroup group;
  /// Rows generate the solution group; row i has order group.factors[i].
  IntMatrix generators;
};

/// Solution group {x in (+)_j Z/c_j : A x == 0 mod m_i}. When col_moduli is
/// empty every unknown is taken modulo lcm(row_moduli).
ModSolution solve_mod(const IntMatrix& a, std::span<const Int> row_moduli,
                      std::span<const Int> col_moduli = {});

using RatMatrix = std::vector<std::vector<Rat>>;

/// One solution of A x = b over Q (free variables set to zero), or nullopt.
std::optional<std::vector<Rat>> solve_rational(RatMatrix a, std::vector<Rat> b);

}  // namespace workbench
