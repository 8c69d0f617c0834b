#include "workbench/zlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "workbench/error.hpp"

namespace workbench {

Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) return a;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Gcdext {
  Int g, x, y;  // g = x*a + y*b, g >= 0
};

Gcdext gcdext(const Int& a, const Int& b) {
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm_of(std::span<const Int> values) {
  Int l = 1;
  for (const auto& v : values) {
    if (v != 0) l = lcm(l, v);
  }
  return l;
}

void reduce_vector(std::vector<Int>& v, std::size_t from, const Int& m) {
  for (std::size_t i = from; i < v.size(); ++i) v[i] = mod_floor(v[i], m);
}

bool all_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Int> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::append_row(std::span<const Int> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorCode::InvalidInput, "append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Int& s = (*this)(src, j);
    if (s != 0) (*this)(dst, j) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::InvalidInput, "matrix sum: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::InvalidInput, "matrix difference: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

FinAbGroup FinAbGroup::from_orders(std::vector<Int> orders) {
  FinAbGroup g;
  if (orders.empty()) return g;
  for (auto& o : orders) o = abs(o);
  const auto d = snf(IntMatrix::diagonal(orders)).diagonal();
  for (const auto& x : d) {
    if (x == 0)
      ++g.free_rank;
    else if (x != 1)
      g.factors.push_back(x);
  }
  return g;
}

Int FinAbGroup::order() const {
  if (free_rank) return 0;
  Int o = 1;
  for (const auto& f : factors) o *= f;
  return o;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<Int> all = factors;
  all.insert(all.end(), other.factors.begin(), other.factors.end());
  auto g = from_orders(std::move(all));
  g.free_rank = free_rank + other.free_rank;
  return g;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    os << (first ? "" : " + ") << "Z/" << f;
    first = false;
  }
  if (free_rank) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      have_pivot = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Int q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SnfResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult s{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
              IntMatrix::identity(n)};
  IntMatrix& d = s.D;

  auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    s.U.add_row_multiple(dst, src, f);
    s.U_inv.add_col_multiple(src, dst, -f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    d.add_col_multiple(dst, src, f);
    s.V.add_col_multiple(dst, src, f);
    s.V_inv.add_row_multiple(src, dst, -f);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    d.swap_rows(x, y);
    s.U.swap_rows(x, y);
    s.U_inv.swap_cols(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    d.swap_cols(x, y);
    s.V.swap_cols(x, y);
    s.V_inv.swap_rows(x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest |entry|, leftmost column, then topmost row
      std::size_t pi = m, pj = n;
      for (std::size_t j = t; j < n; ++j)
        for (std::size_t i = t; i < m; ++i) {
          if (d(i, j) == 0) continue;
          if (pi == m || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return s;  // remaining block is zero
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
      s.U_inv.negate_col(t);
    }
  }
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const auto h = hnf(a.transpose());
  IntMatrix k(0, a.cols());
  for (std::size_t i = 0; i < h.H.rows(); ++i) {
    bool zero = true;
    for (const auto& x : h.H.row(i)) {
      if (x != 0) {
        zero = false;
        break;
      }
    }
    if (zero) k.append_row(h.U.row(i));
  }
  if (k.rows() == 0) return k;
  const auto reduced = hnf(k).H;
  IntMatrix out(0, a.cols());
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    bool zero = true;
    for (const auto& x : reduced.row(i)) zero = zero && x == 0;
    if (!zero) out.append_row(reduced.row(i));
  }
  return out;
}

IntMatrix lattice_hnf_mod(const IntMatrix& gens, const Int& modulus) {
  if (modulus <= 0) throw Error(ErrorCode::InvalidInput, "lattice_hnf_mod: modulus must be positive");
  const std::size_t c = gens.cols();
  std::vector<std::vector<Int>> work;
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    std::vector<Int> w(gens.row(i).begin(), gens.row(i).end());
    reduce_vector(w, 0, modulus);
    if (!all_zero(w)) work.push_back(std::move(w));
  }

  IntMatrix basis(c, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Int> p(c);
    p[j] = modulus;
    for (auto& w : work) {
      if (w[j] == 0) continue;
      const auto e = gcdext(p[j], w[j]);
      const Int a = p[j] / e.g, b = w[j] / e.g;
      for (std::size_t l = j; l < c; ++l) {
        const Int pl = p[l], wl = w[l];
        p[l] = e.x * pl + e.y * wl;
        w[l] = a * wl - b * pl;
      }
      reduce_vector(p, j + 1, modulus);
      reduce_vector(w, j + 1, modulus);
    }
    std::erase_if(work, [](const std::vector<Int>& w) { return all_zero(w); });

    // M e_j = (M / g) p - extra, with extra[j] == 0
    std::vector<Int> extra(c);
    const Int scale = modulus / p[j];
    for (std::size_t l = j + 1; l < c; ++l) extra[l] = mod_floor(scale * p[l], modulus);
    if (!all_zero(extra)) work.push_back(std::move(extra));

    for (std::size_t l = 0; l < c; ++l) basis(j, l) = p[l];
  }
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Int q = floor_div(basis(i, j), basis(j, j));
      if (q != 0) basis.add_row_multiple(i, j, -q);
    }
  return basis;
}

IntMatrix solution_lattice(const IntMatrix& a, std::span<const Int> row_moduli,
                           std::span<const Int> col_moduli) {
  const std::size_t c = a.cols();
  if (row_moduli.size() != a.rows())
    throw Error(ErrorCode::InvalidInput, "solution_lattice: one modulus per row required");
  if (!col_moduli.empty() && col_moduli.size() != c)
    throw Error(ErrorCode::InvalidInput, "solution_lattice: one modulus per column required");
  for (const auto& m : row_moduli)
    if (m < 1) throw Error(ErrorCode::InvalidInput, "solution_lattice: moduli must be >= 1");
  for (const auto& m : col_moduli)
    if (m < 1) throw Error(ErrorCode::InvalidInput, "solution_lattice: moduli must be >= 1");

  for (std::size_t i = 0; i < a.rows() && !col_moduli.empty(); ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!mpz_divisible_p(Int(a(i, j) * col_moduli[j]).get_mpz_t(), row_moduli[i].get_mpz_t()))
        throw Error(ErrorCode::InvalidInput,
                    "solution_lattice: equation " + std::to_string(i) +
                        " is not well defined on column " + std::to_string(j));

  Int big = lcm_of(row_moduli);
  big = lcm(big, lcm_of(col_moduli));

  std::vector<std::vector<Int>> gens(c, std::vector<Int>(c));
  for (std::size_t j = 0; j < c; ++j) gens[j][j] = 1;

  std::vector<Int> v(c);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Int& mi = row_moduli[i];
    if (mi == 1) continue;
    const auto arow = a.row(i);
    bool any = false;
    for (std::size_t l = 0; l < c; ++l) {
      Int s = 0;
      for (std::size_t j = 0; j < c; ++j)
        if (arow[j] != 0 && gens[l][j] != 0) s += arow[j] * gens[l][j];
      v[l] = mod_floor(s, mi);
      any = any || v[l] != 0;
    }
    if (!any) continue;

    std::size_t acc = c;
    for (std::size_t l = 0; l < c; ++l) {
      if (v[l] == 0) continue;
      if (acc == c) {
        acc = l;
        continue;
      }
      const auto e = gcdext(v[acc], v[l]);
      const Int x = v[acc] / e.g, y = v[l] / e.g;
      for (std::size_t j = 0; j < c; ++j) {
        const Int ga = gens[acc][j], gl = gens[l][j];
        gens[acc][j] = mod_floor(e.x * ga + e.y * gl, big);
        gens[l][j] = mod_floor(x * gl - y * ga, big);
      }
      v[acc] = e.g;
      v[l] = 0;
    }
    const Int scale = mi / gcd(v[acc], mi);
    for (auto& g : gens[acc]) g = mod_floor(g * scale, big);
  }

  IntMatrix g(c, c);
  for (std::size_t l = 0; l < c; ++l)
    for (std::size_t j = 0; j < c; ++j) g(l, j) = gens[l][j];
  return lattice_hnf_mod(g, big);
}

IntMatrix lattice_kernel_localized(const IntMatrix& a, std::span<const Int> row_moduli,
                                   const Int& localize) {
  if (localize < 1) throw Error(ErrorCode::InvalidInput, "lattice_kernel_localized: N must be >= 1");
  std::vector<Int> stripped(row_moduli.begin(), row_moduli.end());
  for (auto& m : stripped) {
    if (m < 1) throw Error(ErrorCode::InvalidInput, "lattice_kernel_localized: moduli must be >= 1");
    for (Int g = gcd(m, localize); g != 1; g = gcd(m, g)) m /= g;
  }
  return solution_lattice(a, stripped);
}

IntMatrix lattice_kernel_localized(const IntMatrix& a, const Int& modulus, const Int& localize) {
  std::vector<Int> mods(a.rows(), modulus);
  return lattice_kernel_localized(a, mods, localize);
}

std::optional<std::vector<Int>> express_in_basis(const IntMatrix& echelon_basis,
                                                 std::span<const Int> v) {
  if (v.size() != echelon_basis.cols())
    throw Error(ErrorCode::InvalidInput, "express_in_basis: width mismatch");
  std::vector<Int> rest(v.begin(), v.end());
  std::vector<Int> coords(echelon_basis.rows());
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < echelon_basis.rows(); ++r) {
    while (pivot < echelon_basis.cols() && echelon_basis(r, pivot) == 0) {
      if (rest[pivot] != 0) return std::nullopt;
      ++pivot;
    }
    if (pivot == echelon_basis.cols()) break;
    const Int& p = echelon_basis(r, pivot);
    if (!mpz_divisible_p(rest[pivot].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    coords[r] = rest[pivot] / p;
    if (coords[r] != 0)
      for (std::size_t j = pivot; j < rest.size(); ++j) rest[j] -= coords[r] * echelon_basis(r, j);
    ++pivot;
  }
  if (!all_zero(rest)) return std::nullopt;
  return coords;
}

QuotientResult lattice_quotient(const IntMatrix& basis, const IntMatrix& sub_generators) {
  const std::size_t d = basis.rows();
  if (sub_generators.cols() != basis.cols())
    throw Error(ErrorCode::InvalidInput, "lattice_quotient: width mismatch");
  IntMatrix coords(sub_generators.rows(), d);
  for (std::size_t i = 0; i < sub_generators.rows(); ++i) {
    auto x = express_in_basis(basis, sub_generators.row(i));
    if (!x) throw Error(ErrorCode::Internal, "lattice_quotient: generator outside the lattice");
    for (std::size_t j = 0; j < d; ++j) coords(i, j) = (*x)[j];
  }

  QuotientResult out;
  out.generators = IntMatrix(0, basis.cols());
  if (d == 0) return out;

  std::vector<Int> diag(d, Int(0));
  IntMatrix v_inv = IntMatrix::identity(d);
  if (coords.rows() > 0) {
    auto s = snf(coords);
    const auto sd = s.diagonal();
    std::copy(sd.begin(), sd.end(), diag.begin());
    v_inv = std::move(s.V_inv);
  }
  // torsion generators first, then free ones
  IntMatrix f(1, d);
  auto emit = [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) f(0, j) = v_inv(i, j);
    const IntMatrix g = f * basis;
    out.generators.append_row(g.row(0));
  };
  for (std::size_t i = 0; i < d; ++i)
    if (diag[i] > 1) {
      out.group.factors.push_back(diag[i]);
      emit(i);
    }
  for (std::size_t i = 0; i < d; ++i)
    if (diag[i] == 0) {
      ++out.group.free_rank;
      emit(i);
    }
  return out;
}

ModSolution solve_mod(const IntMatrix& a, std::span<const Int> row_moduli,
                      std::span<const Int> col_moduli) {
  std::vector<Int> cols(col_moduli.begin(), col_moduli.end());
  if (cols.empty()) cols.assign(a.cols(), lcm_of(row_moduli));
  const IntMatrix lattice = solution_lattice(a, row_moduli, cols);
  const auto q = lattice_quotient(lattice, IntMatrix::diagonal(cols));
  ModSolution out{q.group, q.generators};
  for (std::size_t i = 0; i < out.generators.rows(); ++i)
    for (std::size_t j = 0; j < out.generators.cols(); ++j)
      out.generators(i, j) = mod_floor(out.generators(i, j), cols[j]);
  return out;
}

std::optional<std::vector<Rat>> solve_rational(RatMatrix a, std::vector<Rat> b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  if (b.size() != m) throw Error(ErrorCode::InvalidInput, "solve_rational: shape mismatch");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j < n; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

}  // namespace workbench
