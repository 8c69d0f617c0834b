#include <algorithm>
#include <cctype>
#include <numeric>

#include "workbench/error.hpp"
#include "workbench/group.hpp"

namespace workbench {

namespace {

constexpr int kMaxPresetOrder = 5040;

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::UnsupportedSize, "cyclic(n) needs n >= 1");
  if (n > kMaxPresetOrder) throw Error(ErrorCode::UnsupportedSize, "cyclic(n) limited to n <= 5040");
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return FiniteGroup::from_trusted(n, std::move(t), 0, std::move(labels),
                                   "cyclic(" + std::to_string(n) + ")");
}

// r^i s^j has index i + n*j; s r s = r^-1.
FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error(ErrorCode::UnsupportedSize, "dihedral(n) needs n >= 1");
  if (2 * n > kMaxPresetOrder) throw Error(ErrorCode::UnsupportedSize, "dihedral(n) limited to n <= 2520");
  const int order = 2 * n;
  std::vector<std::uint32_t> t(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    const int i = x % n, j = x / n;
    std::string l = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    if (j) l += "s";
    labels.push_back(l.empty() ? "e" : l);
    for (int y = 0; y < order; ++y) {
      const int k = y % n, l2 = y / n;
      const int rot = ((j ? i - k : i + k) % n + n) % n;
      t[static_cast<std::size_t>(x) * order + y] = rot + n * ((j + l2) % 2);
    }
  }
  return FiniteGroup::from_trusted(order, std::move(t), 0, std::move(labels),
                                   "dihedral(" + std::to_string(n) + ")");
}

// Permutations of {0..n-1} in lexicographic order; (a*b)(x) = a(b(x)).
FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::UnsupportedSize, "symmetric(n) supports 1 <= n <= 7");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto rank = [&](const std::vector<int>& q) {
    // lexicographic rank via Lehmer code
    int r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j) smaller += q[j] < q[i];
      int f = 1;
      for (int k = 2; k <= n - 1 - i; ++k) f *= k;
      r += smaller * f;
    }
    return r;
  };

  const int order = static_cast<int>(perms.size());
  std::vector<std::uint32_t> t(static_cast<std::size_t>(order) * order);
  std::vector<int> c(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[static_cast<std::size_t>(a) * order + b] = rank(c);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string l = "[";
    for (int i = 0; i < n; ++i) l += (i ? "," : "") + std::to_string(q[i]);
    labels.push_back(l + "]");
  }
  return FiniteGroup::from_trusted(order, std::move(t), 0, std::move(labels),
                                   "symmetric(" + std::to_string(n) + ")");
}

FiniteGroup klein_four_group() {
  // e, a, b, ab with a^2 = b^2 = (ab)^2 = 1
  std::vector<std::uint32_t> t(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t[x * 4 + y] = x ^ y;
  return FiniteGroup::from_trusted(4, std::move(t), 0, {"e", "a", "b", "ab"}, "klein_four");
}

FiniteGroup direct_product_group(const FiniteGroup& a, const FiniteGroup& b) {
  const long long order = static_cast<long long>(a.order()) * b.order();
  if (order > kMaxPresetOrder) throw Error(ErrorCode::UnsupportedSize, "direct product too large");
  const int na = a.order();
  std::vector<std::uint32_t> t(static_cast<std::size_t>(order * order));
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    labels.push_back("(" + a.label(x % na) + "," + b.label(x / na) + ")");
    for (int y = 0; y < order; ++y)
      t[static_cast<std::size_t>(x) * order + y] =
          a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  }
  const int identity = a.identity() + na * b.identity();
  return FiniteGroup::from_trusted(static_cast<int>(order), std::move(t), identity, std::move(labels),
                                   "direct_product(" + a.name() + "," + b.name() + ")");
}

class PresetParser {
 public:
  explicit PresetParser(std::string_view s) : s_(s) {}

  FiniteGroup parse() {
    auto g = group();
    skip_space();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::InvalidInput,
                "preset '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a preset name");
    return std::string(s_.substr(start, pos_ - start));
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small positive integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  FiniteGroup group() {
    const std::string name = ident();
    if (name == "klein_four") return klein_four_group();
    if (name == "direct_product") {
      expect('(');
      auto a = group();
      expect(',');
      auto b = group();
      expect(')');
      return direct_product_group(a, b);
    }
    expect('(');
    const int n = integer();
    expect(')');
    if (name == "cyclic") return cyclic_group(n);
    if (name == "dihedral") return dihedral_group(n);
    if (name == "symmetric") return symmetric_group(n);
    fail("unknown preset '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup preset_group(std::string_view spec) { return PresetParser(spec).parse(); }

}  // namespace workbench
