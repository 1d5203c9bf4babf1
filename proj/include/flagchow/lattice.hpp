#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace flagchow {

using IntVector = std::vector<mpz_class>;

// Sublattice of Z^n spanned by a finite set of generators, kept in column
// Hermite normal form: every basis vector has a distinct pivot row, is zero
// above it, has a positive pivot, and its entries at later pivot rows are
// reduced into [0, pivot).
class IntegerLattice {
 public:
  struct BasisVector {
    std::size_t pivot_row;
    IntVector entries;
  };

  IntegerLattice(std::size_t dimension, std::vector<IntVector> generators);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<BasisVector>& basis() const noexcept { return basis_; }

  bool contains(const IntVector& v) const;
  // Canonical representative of v modulo the lattice; all-zero iff v is in
  // the lattice.
  IntVector residue(const IntVector& v) const;

 private:
  std::size_t dimension_;
  std::vector<BasisVector> basis_;
};

// A subset of Z of the form {}, {a}, or a + s*Z with s > 0.
class IntegerSolutionSet {
 public:
  static IntegerSolutionSet empty() { return IntegerSolutionSet(true, 0, 0); }
  static IntegerSolutionSet all() { return IntegerSolutionSet(false, 0, 1); }
  static IntegerSolutionSet singleton(const mpz_class& a) { return IntegerSolutionSet(false, a, 0); }
  // offset + step*Z; step 0 means the singleton {offset}.
  static IntegerSolutionSet coset(const mpz_class& offset, const mpz_class& step);

  bool is_empty() const noexcept { return empty_; }
  bool is_singleton() const noexcept { return !empty_ && step_ == 0; }
  bool is_all() const noexcept { return !empty_ && step_ == 1; }
  // Smallest nonnegative member for a coset, the member for a singleton.
  const mpz_class& offset() const noexcept { return offset_; }
  const mpz_class& step() const noexcept { return step_; }

  bool contains(const mpz_class& a) const;
  IntegerSolutionSet intersect(const IntegerSolutionSet& other) const;

  // "{}", "{5}", "Z", "2 + 3Z".
  std::string to_string() const;

  friend bool operator==(const IntegerSolutionSet&, const IntegerSolutionSet&) = default;

 private:
  IntegerSolutionSet(bool empty, mpz_class offset, mpz_class step)
      : empty_(empty), offset_(std::move(offset)), step_(std::move(step)) {}

  bool empty_;
  mpz_class offset_;
  mpz_class step_;
};

// All integers a with target - a*extra in the lattice spanned by generators.
IntegerSolutionSet solve_multiple(std::size_t dimension, std::vector<IntVector> generators,
                                  const IntVector& extra, const IntVector& target);

}  // namespace flagchow
