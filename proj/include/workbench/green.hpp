#pragma once

#include <string>
#include <vector>

#include "workbench/cyclotomic.hpp"

namespace workbench {

/// Element of R(H) (x) Z[1/N] for H cyclic of order n, i.e. Z[1/N][z]/(z^n - 1),
/// where z is the character sending the chosen generator h to theta_n.
struct RepElt {
  CycPoly value;

  unsigned n() const noexcept { return value.n(); }
  friend RepElt operator+(const RepElt& a, const RepElt& b) { return {a.value + b.value}; }
  friend RepElt operator-(const RepElt& a, const RepElt& b) { return {a.value - b.value}; }
  friend RepElt operator*(const RepElt& a, const RepElt& b) { return {a.value * b.value}; }
  friend bool operator==(const RepElt&, const RepElt&) = default;
};

/// Class function on Z/n: values[j] is the value at h^j, in Z[theta_n, 1/N].
struct CharFn {
  unsigned n = 1;
  std::vector<CycEltN> values;

  friend bool operator==(const CharFn&, const CharFn&) = default;
};

CharFn to_character(const RepElt& x);

/// Inverse of to_character by discrete Fourier inversion over Q(theta_n).
/// Throws Internal when the function is not the character of an element of
/// R(H) (x) Z[1/N].
RepElt from_character(const CharFn& chi);

/// Restriction to the subgroup K of order k generated by h^{n/k}; z maps to z.
RepElt restrict(const RepElt& x, unsigned k);

/// Character-level restriction, descending each value from Z[theta_n] to
/// Z[theta_k]. Throws DescentFailure if a value does not lie in the subring.
CharFn restrict_character(const CharFn& chi, unsigned k);

/// chi'(h^j) = |H:K| chi(h^j) for h^j in K, and 0 off K.
CharFn induce_character(const CharFn& chi, unsigned n);

/// Induction from K (order x.n()) to H of order n, obtained by inverting the
/// induced character.
RepElt induce(const RepElt& x, unsigned n);

/// Relabeling z -> z^unit, the action of an automorphism h -> h^unit.
RepElt conjugate_rep(const RepElt& x, long long unit);

struct FrobeniusReport {
  unsigned n = 1, k = 1;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

/// Checks ind(p_{k,k}) = |H:K| p_{n,k} (on characters and on R(H)) and the
/// Frobenius identity ind(res(y) x) = y ind(x) on monomial bases of R(K), R(H).
FrobeniusReport frobenius_check(unsigned n, unsigned k, const Int& localization = 0);

struct GeneratorSummand {
  unsigned k = 1;        // the summand is cut out by p_{n,k}
  RepElt idempotent;     // p_{n,k} = psi_{n,k}
  bool induced = false;  // k < n: a summand of the generator for the order-k subgroup
};

/// The complete orthogonal family {p_{n,k}}_{k | n} splitting C(G/H) after
/// localization, ordered by k.
std::vector<GeneratorSummand> decompose_generator(unsigned n, const Int& localization);

}  // namespace workbench
