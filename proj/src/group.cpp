#include "workbench/group.hpp"

#include <algorithm>
#include <map>

#include "workbench/error.hpp"

namespace workbench {

int FiniteGroup::power(int a, long long k) const {
  const int ord = element_order(a);
  k %= ord;
  if (k < 0) k += ord;
  int r = identity_;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::label(int a) const {
  if (static_cast<std::size_t>(a) < labels_.size()) return labels_[a];
  return std::to_string(a);
}

void FiniteGroup::finish() {
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
}

FiniteGroup FiniteGroup::from_trusted(int order, std::vector<std::uint32_t> table, int identity,
                                      std::vector<std::string> labels, std::string name) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<long long>>& table,
                                    std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty multiplication table");
  if (n > 4096) throw Error(ErrorCode::UnsupportedSize, "table input limited to order 4096");
  std::vector<std::uint32_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error(ErrorCode::InvalidInput, "row " + std::to_string(i) + " has length " +
                                               std::to_string(table[i].size()) + ", expected " +
                                               std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const long long v = table[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorCode::InvalidInput, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") = " + std::to_string(v) + " out of range");
      flat[i * n + j] = static_cast<std::uint32_t>(v);
    }
  }
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::InvalidInput, "labels must have one entry per element");

  auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };
  int identity = -1;
  for (std::size_t e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = static_cast<int>(e);
  }
  if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw NonAssociativeError(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c));
    }

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      row_seen[at(a, b)] = 1;
      col_seen[at(b, a)] = 1;
    }
    if (std::find(row_seen.begin(), row_seen.end(), 0) != row_seen.end() ||
        std::find(col_seen.begin(), col_seen.end(), 0) != col_seen.end())
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  return from_trusted(static_cast<int>(n), std::move(flat), identity, std::move(labels), "table");
}

FiniteGroup group_from_table(const std::vector<std::vector<long long>>& table,
                             std::vector<std::string> labels) {
  return FiniteGroup::from_table(table, std::move(labels));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> generated_subgroup(const FiniteGroup& g, int x) {
  std::vector<int> elems{g.identity()};
  for (int y = x; y != g.identity(); y = g.mul(y, x)) elems.push_back(y);
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> conjugate_set(const FiniteGroup& g, int x, const std::vector<int>& h) {
  std::vector<int> out;
  out.reserve(h.size());
  const int xi = g.inverse(x);
  for (int e : h) out.push_back(g.mul(g.mul(x, e), xi));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CyclicClass> cyclic_classes(const FiniteGroup& g) {
  // every cyclic subgroup, keyed by its sorted element list
  std::map<std::vector<int>, int> smallest_generator;
  for (int x = 0; x < g.order(); ++x) smallest_generator.try_emplace(generated_subgroup(g, x), x);

  std::map<std::vector<int>, bool> assigned;
  std::vector<CyclicClass> classes;
  for (const auto& [elems, gen] : smallest_generator) {
    if (assigned[elems]) continue;
    std::vector<std::vector<int>> orbit;
    for (int x = 0; x < g.order(); ++x) {
      auto c = conjugate_set(g, x, elems);
      if (!assigned[c]) {
        assigned[c] = true;
        orbit.push_back(std::move(c));
      }
    }
    const auto& rep_elems = *std::min_element(orbit.begin(), orbit.end());

    CyclicClass cls;
    cls.group_order = g.order();
    cls.class_size = static_cast<int>(orbit.size());
    cls.representative.elements = rep_elems;
    cls.representative.n = static_cast<int>(rep_elems.size());
    cls.representative.generator = smallest_generator.at(rep_elems);
    for (int x = 0; x < g.order(); ++x)
      if (conjugate_set(g, x, rep_elems) == rep_elems) cls.normalizer.push_back(x);
    cls.weyl_order = static_cast<int>(cls.normalizer.size()) / cls.representative.n;
    classes.push_back(std::move(cls));
  }

  std::sort(classes.begin(), classes.end(), [](const CyclicClass& a, const CyclicClass& b) {
    if (a.representative.n != b.representative.n) return a.representative.n < b.representative.n;
    return a.representative.generator < b.representative.generator;
  });

  for (auto& cls : classes) {
    const auto& h = cls.representative.elements;
    auto coset_key = [&](int x) {
      int best = g.mul(x, h.front());
      for (int e : h) best = std::min(best, g.mul(x, e));
      return best;
    };
    std::map<int, int> key_to_index;
    key_to_index[coset_key(g.identity())] = 0;
    cls.coset_reps = {g.identity()};
    std::vector<int> keys;
    for (int x : cls.normalizer) keys.push_back(coset_key(x));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int k : keys)
      if (key_to_index.try_emplace(k, static_cast<int>(cls.coset_reps.size())).second)
        cls.coset_reps.push_back(k);

    const int m = static_cast<int>(cls.coset_reps.size());
    cls.weyl_table.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        cls.weyl_table[a][b] = key_to_index.at(coset_key(g.mul(cls.coset_reps[a], cls.coset_reps[b])));

    const int gen = cls.representative.generator;
    std::vector<int> powers(cls.representative.n);
    powers[0] = g.identity();
    for (int k = 1; k < cls.representative.n; ++k) powers[k] = g.mul(powers[k - 1], gen);
    for (int rep : cls.coset_reps) {
      const int c = g.mul(g.mul(rep, gen), g.inverse(rep));
      const auto it = std::find(powers.begin(), powers.end(), c);
      if (it == powers.end()) throw Error(ErrorCode::Internal, "normalizer element does not fix H");
      cls.weyl_units.push_back(static_cast<unsigned>(it - powers.begin()) %
                               static_cast<unsigned>(cls.representative.n));
    }
    if (cls.representative.n == 1) cls.weyl_units.assign(m, 1);
  }
  return classes;
}

unsigned weyl_action_on_units(const CyclicClass& c, int coset) {
  if (coset < 0 || coset >= c.weyl_order)
    throw Error(ErrorCode::InvalidInput, "coset index " + std::to_string(coset) + " out of range");
  return c.weyl_units[coset];
}

}  // namespace workbench
