#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flagchow {

// Dimension vector of the flag variety F(d1,...,ds; n) of nested subspaces
// V_d1 in ... in V_ds in k^n. Entries strictly increase within [1, n-1].
// An empty vector (a point) only arises as a merged line-component shape.
class FlagShape {
 public:
  FlagShape(unsigned n, std::vector<unsigned> dims);
  static FlagShape grassmannian(unsigned d, unsigned n) { return FlagShape(n, {d}); }
  static FlagShape complete(unsigned n);

  unsigned n() const noexcept { return n_; }
  const std::vector<unsigned>& dims() const noexcept { return dims_; }
  std::size_t length() const noexcept { return dims_.size(); }
  // d_i for 0 <= i <= s+1 with d_0 = 0 and d_(s+1) = n.
  unsigned dim(std::size_t i) const;
  bool is_complete() const;

  // "F(1,3;4)".
  std::string literal() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

 private:
  unsigned n_;
  std::vector<unsigned> dims_;
};

enum class LineCase { I, II };

std::string to_string(LineCase c);

// The i-th family of lines on a flag variety: lines obtained by moving V_di
// between V_(di-1) and V_(di+1) with everything else fixed. The family is
// parameterized by `shape`, the flag with d_i replaced by d_i-1, d_i+1 after
// merging repeats and dropping 0 and n.
struct LineComponent {
  std::size_t index;  // i, 1-based
  FlagShape shape;
  LineCase line_case;
  // Rank of the relative cotangent bundle restricted to a line of the
  // correspondence, d_(i+1) - d_(i-1) - 2. Case II only.
  std::optional<unsigned> cotangent_rank;
};

std::vector<LineComponent> line_components(const FlagShape& shape);

// Multiset of integers a_1 >= ... >= a_r; sorted descending on construction.
class SplittingType {
 public:
  explicit SplittingType(std::vector<std::int64_t> entries);

  std::size_t rank() const noexcept { return entries_.size(); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t operator[](std::size_t j) const { return entries_[j]; }
  bool is_constant() const;
  SplittingType shifted(std::int64_t c) const;

  // "(0,0,-2)".
  std::string literal() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

// Lexicographic order on Z^r; throws ValidationError on rank mismatch.
std::strong_ordering lex_compare(const SplittingType& a, const SplittingType& b);

// Twist so the largest entry is 0.
SplittingType normalize(const SplittingType& t);
// Negated and re-sorted.
SplittingType dual_type(const SplittingType& t);
// (a_1 + ... + a_r) / r, exact.
mpq_class slope(const SplittingType& t);

// Necessary condition for i-semistability with respect to a line family:
// Case II allows adjacent gaps of at most 1, Case I forces a constant type.
struct GapAudit {
  bool pass;
  // First violating 1-based j (a_j vs a_(j+1)) on failure.
  std::optional<std::size_t> witness;
};
GapAudit gap_audit(const SplittingType& t, LineCase c);

}  // namespace flagchow
