#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcb {

/// Integer partition: weakly decreasing positive rows; the empty partition has no rows.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> rows);
  /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
  explicit Partition(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  /// Number of rows.
  int length() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  /// Row length at 1-based index; 0 beyond the last row.
  int row(int index) const {
    return index >= 1 && index <= length() ? rows_[static_cast<std::size_t>(index - 1)] : 0;
  }
  int size() const;

  Partition transpose() const;
  /// Adds a box at the end of the given 1-based row (row == length()+1 opens a new row).
  /// Caller guarantees the box is addable.
  Partition with_box_added(int row) const;
  /// Removes the last box of the given 1-based row. Caller guarantees it is removable.
  Partition with_box_removed(int row) const;

  /// No `e` equal rows (rows of equal length are consecutive).
  bool is_e_regular(int e) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> rows_;
};

/// Ordered tuple of partitions; the tuple length is the level.
struct Multipartition {
  std::vector<Partition> components;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> comps) : components(std::move(comps)) {}
  Multipartition(std::initializer_list<Partition> comps) : components(comps) {}

  /// Level-r tuple of empty partitions.
  static Multipartition empty(int level);

  int level() const { return static_cast<int>(components.size()); }
  int size() const;
  const Partition& operator[](int u) const { return components[static_cast<std::size_t>(u)]; }
  Partition& operator[](int u) { return components[static_cast<std::size_t>(u)]; }

  /// e.g. "[(3),∅]" or "[(2,1),(1^2)]"
  std::string to_string() const;

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
  friend bool operator==(const Multipartition&, const Multipartition&) = default;
};

/// Staircase (n, n-1, ..., 1) for n > 0; empty otherwise.
Partition triangular(int n);
/// Rows of p followed by rows of q; throws std::invalid_argument if not weakly decreasing.
Partition vee(const Partition& p, const Partition& q);
/// U^n_1 = (n+1) v T_{n-2} and U^n_2 = T_{n-1} v (1^2); n >= 1.
Partition u_family(int variant, int n);
/// A single row of length n (empty for n <= 0).
Partition row_partition(int n);

/// Reverse the component order and transpose every component.
Multipartition conjugate(const Multipartition& mp);
/// Transpose every component, order preserved.
Multipartition transpose_each(const Multipartition& mp);

/// Dominance mu >= lam via cumulative prefix sums over the concatenated components.
/// Throws std::invalid_argument on mismatched level or total size.
bool dominates(const Multipartition& mu, const Multipartition& lam);
/// dominates(mu, lam) && mu != lam, without the size/level checks throwing
/// (returns false on mismatch).
bool strictly_dominates(const Multipartition& mu, const Multipartition& lam);

bool is_e_regular(const Multipartition& mp, int e);

/// All partitions of n, rows in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All level-r multipartitions of total size n, deterministic order.
std::vector<Multipartition> multipartitions_of(int n, int level);

}  // namespace kcb
