#pragma once

#include <metstruct/structure.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace metstruct {

using CayleyTable = std::vector<std::vector<int>>;

/// Reports closure, identity, inverse and associativity failures of a Cayley table.
inline ValidationReport validate_group(const CayleyTable& table) {
  ValidationReport report;
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    report.violations.push_back({"nonempty", {}});
    return report;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      report.violations.push_back({"square", {a}});
      return report;
    }
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n) report.violations.push_back({"closure", {a, b}});
  }
  if (!report.ok()) return report;

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool works = true;
    for (int a = 0; a < n && works; ++a) works = table[e][a] == a && table[a][e] == a;
    if (works) identity = e;
  }
  if (identity < 0) {
    report.violations.push_back({"identity", {}});
  } else {
    for (int a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (int b = 0; b < n && !has_inverse; ++b)
        has_inverse = table[a][b] == identity && table[b][a] == identity;
      if (!has_inverse) report.violations.push_back({"inverse", {a}});
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) report.violations.push_back({"associativity", {a, b, c}});
  return report;
}

inline std::string describe(const ValidationReport& report) {
  std::string out;
  for (const auto& v : report.violations) {
    if (!out.empty()) out += "; ";
    out += v.axiom;
    if (!v.witness.empty()) {
      out += " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) out += (i ? "," : "") + std::to_string(v.witness[i]);
      out += ")";
    }
  }
  return out;
}

/// Finite group given by its Cayley table. Always valid once constructed.
class FiniteGroup {
 public:
  explicit FiniteGroup(CayleyTable table) : table_(std::move(table)) {
    const ValidationReport report = validate_group(table_);
    if (!report.ok()) throw InvalidInput("not a group: " + describe(report));
    const int n = order();
    for (int e = n - 1; e >= 0; --e) {
      bool works = table_[e] == identity_row(n);
      for (int a = 0; a < n && works; ++a) works = table_[a][e] == a;
      if (works) identity_ = e;
    }
    inverse_.resize(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table_[a][b] == identity_) inverse_[a] = b;
  }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const CayleyTable& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  static std::vector<int> identity_row(int n) {
    std::vector<int> row(n);
    std::iota(row.begin(), row.end(), 0);
    return row;
  }

  CayleyTable table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Smallest subgroup containing the given elements.
inline std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int s : gens) {
      const int next = g.mul(members[i], s);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool generates(const FiniteGroup& g, const std::vector<int>& gens) {
  for (int s : gens)
    if (s < 0 || s >= g.order()) throw InvalidInput("element index out of range");
  return static_cast<int>(generated_subgroup(g, gens).size()) == g.order();
}

/// Group transported along f: element a becomes f[a].
inline FiniteGroup relabel(const FiniteGroup& g, const Bijection& f) {
  if (!is_permutation_of_size(f, g.order())) throw InvalidInput("relabel: not a permutation");
  CayleyTable t(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) t[f[a]][f[b]] = f[g.mul(a, b)];
  return FiniteGroup(std::move(t));
}

inline bool is_group_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const Bijection& f) {
  if (g.order() != h.order() || !is_permutation_of_size(f, g.order())) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
  return true;
}

// Small-group catalog.

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidInput("cyclic_group: order must be positive");
  CayleyTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

/// Elements (a, b) encoded as a * |H| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order();
  const int n = g.order() * m;
  CayleyTable t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  return FiniteGroup(std::move(t));
}

/// Symmetries of the regular m-gon, order 2m. Element r^i s^j encoded as i + m*j.
inline FiniteGroup dihedral_group(int m) {
  if (m < 1) throw InvalidInput("dihedral_group: m must be positive");
  const int n = 2 * m;
  CayleyTable t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = x % m, j = x / m, k = y % m, l = y / m;
      // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
      const int rot = ((j == 0 ? i + k : i - k) % m + m) % m;
      t[x][y] = rot + m * ((j + l) % 2);
    }
  return FiniteGroup(std::move(t));
}

/// All permutations of {0..k-1} in lexicographic order, composed as (p*q)(x) = p(q(x)).
inline FiniteGroup symmetric_group(int k) {
  if (k < 1 || k > 5) throw InvalidInput("symmetric_group: degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  CayleyTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(t));
}

/// Quaternion group Q8: elements 1, i, j, k, -1, -i, -j, -k as 0..7.
inline FiniteGroup quaternion_group() {
  // unit products for {1,i,j,k}: (index, sign)
  static constexpr int unit[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  CayleyTable t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int sign = (x < 4 ? 1 : -1) * (y < 4 ? 1 : -1) * unit[x % 4][y % 4][1];
      t[x][y] = unit[x % 4][y % 4][0] + (sign < 0 ? 4 : 0);
    }
  return FiniteGroup(std::move(t));
}

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// One representative of every isomorphism type of order at most 8.
inline std::vector<NamedGroup> groups_up_to_order_8() {
  const FiniteGroup z2 = cyclic_group(2);
  return {
      {"Z1", cyclic_group(1)},
      {"Z2", z2},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(z2, z2)},
      {"Z5", cyclic_group(5)},
      {"Z6", cyclic_group(6)},
      {"S3", symmetric_group(3)},
      {"Z7", cyclic_group(7)},
      {"Z8", cyclic_group(8)},
      {"Z4xZ2", direct_product(cyclic_group(4), z2)},
      {"Z2xZ2xZ2", direct_product(direct_product(z2, z2), z2)},
      {"D4", dihedral_group(4)},
      {"Q8", quaternion_group()},
  };
}

/// All subgroups, each as a sorted element list.
inline std::vector<std::vector<int>> subgroups(const FiniteGroup& g) {
  if (g.order() > 20) throw InvalidInput("subgroups: order too large for subset enumeration");
  std::vector<std::vector<int>> out;
  const std::uint32_t full = 1u << g.order();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!(mask >> g.identity() & 1u)) continue;
    bool closed = true;
    for (int a = 0; a < g.order() && closed; ++a)
      if (mask >> a & 1u)
        for (int b = 0; b < g.order() && closed; ++b)
          if (mask >> b & 1u) closed = (mask >> g.mul(a, g.inverse(b))) & 1u;
    if (!closed) continue;
    std::vector<int> members;
    for (int a = 0; a < g.order(); ++a)
      if (mask >> a & 1u) members.push_back(a);
    out.push_back(std::move(members));
  }
  return out;
}

/// Every left coset of every subgroup, deduplicated and sorted.
inline std::vector<std::vector<int>> left_cosets_of_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> cosets;
  for (const auto& sub : subgroups(g))
    for (int x = 0; x < g.order(); ++x) {
      std::vector<int> coset;
      for (int h : sub) coset.push_back(g.mul(x, h));
      std::sort(coset.begin(), coset.end());
      cosets.insert(std::move(coset));
    }
  return {cosets.begin(), cosets.end()};
}

}  // namespace metstruct
