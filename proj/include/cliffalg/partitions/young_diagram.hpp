#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cliffalg::partitions {

// A partition: weakly decreasing positive row lengths. The empty list is the
// empty diagram. Ordering is lexicographic on the row lists.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  // Throws InvalidInput unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);
  YoungDiagram(std::initializer_list<int> rows) : YoungDiagram(std::vector<int>(rows)) {}

  const std::vector<int>& rows() const { return rows_; }
  // Row i (0-based); 0 past the last row.
  int row(std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }
  int size() const;
  int length() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  bool fits_rows(int n) const { return length() <= n; }

  YoungDiagram transpose() const;
  // max{t : row t (1-based) >= t}
  int diag_length() const;
  bool is_symmetric() const { return transpose() == *this; }

  // "(2,1)"; the empty diagram prints as "()".
  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

// All diagrams with at most n rows and i boxes, in decreasing lexicographic
// order: (3), (2,1), (1,1,1).
std::vector<YoungDiagram> enumerate_diagrams(int n, int i);

// Symmetric diagrams inside the n x n box, ordered by size, then decreasing
// lexicographic order. There are 2^n of them.
std::vector<YoungDiagram> enumerate_symmetric_diagrams(int n);

// The nested hooks of a symmetric diagram, outermost first. Hook t has arm
// and leg row(t) - t, so it has 2(row(t) - t) + 1 boxes.
// Throws InvalidInput for non-symmetric input.
std::vector<YoungDiagram> hooks(const YoungDiagram& alpha);

// Every row doubled.
YoungDiagram doubled(const YoungDiagram& beta);

// alpha -> (beta, p) with beta_t = floor(alpha_t / 2) and p = |alpha| - 2|beta|;
// alpha is obtained from 2*beta by adding a vertical strip of p boxes.
std::pair<YoungDiagram, int> halving_bijection(const YoungDiagram& alpha);

}  // namespace cliffalg::partitions
