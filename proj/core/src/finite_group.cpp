#include "igcob/finite_group.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "igcob/errors.hpp"

namespace igcob {

FiniteGroup::FiniteGroup() : names_{"e"}, table_{{0}}, inverse_{0}, identity_(0) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = names.size();
  if (n == 0) throw InvalidGroup("empty group");
  if (std::set<std::string>(names.begin(), names.end()).size() != n) throw InvalidGroup("duplicate element names");
  if (table.size() != n) throw InvalidGroup("table has wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidGroup("table row has wrong length");
    for (std::size_t x : row) {
      if (x >= n) throw InvalidGroup("table entry out of range");
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity == n) throw InvalidGroup("no identity element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InvalidGroup("multiplication is not associative");
      }
    }
  }

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == identity && table[b][a] == identity) inverse[a] = b;
    }
    if (inverse[a] == n) throw InvalidGroup("element '" + names[a] + "' has no inverse");
  }

  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.identity_ = identity;
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t k) {
  if (k == 0) throw InvalidGroup("cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < k; ++b) table[a][b] = (a + b) % k;
  }
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::klein_four() {
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
  }
  return from_table({"e", "a", "b", "c"}, std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> composite{};
      for (std::size_t x = 0; x < 3; ++x) composite[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), composite) - perms.begin());
    }
  }
  return from_table(std::move(names), std::move(table));
}

std::size_t FiniteGroup::find(const std::string& name) const {
  return static_cast<std::size_t>(std::find(names_.begin(), names_.end(), name) - names_.begin());
}

std::string FiniteGroup::describe() const {
  if (*this == cyclic(order())) return "cyclic:" + std::to_string(order());
  std::string out = "table " + std::to_string(order());
  for (const auto& row : table_) {
    for (std::size_t x : row) out += ' ' + std::to_string(x);
  }
  return out;
}

}  // namespace igcob
