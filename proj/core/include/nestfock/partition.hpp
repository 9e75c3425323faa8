#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "nestfock/rational.hpp"

namespace nestfock {

// Cell of a Young diagram. row is the z-exponent, col the w-exponent, both
// 0-based: the monomial z^a w^b sits at (a, b), and (r, c) lies in D_λ iff
// c < λ_{r+1}.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing sequence of positive integers. Always canonical.
//
// Ordering: by size first, then reverse-lexicographic, so that within one
// size the order agrees with enumerate_partitions ((2) before (1,1)).
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts and drops zeros; negative entries throw DomainError.
  static Partition from_multiset(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // λ_{r+1} in 1-based notation; 0 past the end.
  int part(int r) const {
    return r >= 0 && r < length() ? parts_[static_cast<std::size_t>(r)] : 0;
  }
  int multiplicity(int value) const;
  bool contains(Cell c) const { return c.row >= 0 && c.col >= 0 && c.col < part(c.row); }

  Partition conjugate() const;
  // Copy with one more part of the given value.
  Partition with_part(int value) const;
  // Copy with one part of the given value removed; DomainError if absent.
  Partition without_part(int value) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int n);
std::int64_t partition_count(int n);

int arm_length(const Partition& lambda, Cell c);
int leg_length(const Partition& lambda, Cell c);
// DomainError if c is outside D_λ.
int hook_length(const Partition& lambda, Cell c);
Integer hook_product(const Partition& lambda);

int step_length(const Partition& lambda);
// Π_j j^{m_j} m_j!
Integer z_factor(const Partition& nu);
// Partial sums of a never exceed those of b. False when sizes differ.
bool dominance_le(const Partition& a, const Partition& b);

// Addable corner α_j of D_λ with its gaps to the neighbouring corners.
// p is defined for j < m, q for 1 <= j <= m, where m = s(λ).
struct Corner {
  int index = 0;
  Cell cell;
  bool has_p = false;
  int p = 0;
  bool has_q = false;
  int q = 0;
};

// α_0..α_m ordered by increasing row. α_j has row p_0+...+p_{j-1} and column
// equal to the j-th distinct part value from the top (0 for α_m). ∅ has the
// single corner (0,0).
std::vector<Corner> canonical_generators(const Partition& lambda);

// λ with the cell c added; DomainError if c is not an addable corner.
Partition add_cell(const Partition& lambda, Cell c);

}  // namespace nestfock
