#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace igcob {

/// A finite group given by its multiplication table. Elements are indices
/// 0..order-1 with display names.
class FiniteGroup {
 public:
  /// Trivial group.
  FiniteGroup();

  /// Throws InvalidGroup when the table is not a group.
  static FiniteGroup from_table(std::vector<std::string> names,
                                std::vector<std::vector<std::size_t>> table);

  static FiniteGroup trivial() { return {}; }
  static FiniteGroup cyclic(std::size_t k);
  static FiniteGroup klein_four();
  /// S3 on {0,1,2}; element 0 is the identity.
  static FiniteGroup symmetric3();

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  /// Index of the element named `name`, or order() when absent.
  std::size_t find(const std::string& name) const;

  /// "cyclic:k" when the table is the standard cyclic one, else "table ...".
  std::string describe() const;

  /// Same multiplication table; element names are display-only.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

}  // namespace igcob
