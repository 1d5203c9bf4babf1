#pragma once

#include <span>
#include <vector>

#include "flagchow/chow.hpp"
#include "flagchow/polynomial.hpp"

namespace flagchow {

// Homogeneous degree-1 form (or zero) in the X/H variables, e.g. b*X1.
class LinearRoot {
 public:
  LinearRoot() = default;
  explicit LinearRoot(IntPolynomial form);

  const IntPolynomial& form() const noexcept { return form_; }
  LinearRoot operator-() const { return LinearRoot(-form_); }

  friend bool operator==(const LinearRoot&, const LinearRoot&) = default;

 private:
  IntPolynomial form_;
};

// Chern polynomial of a rank-r bundle, stored by its classes c_1..c_r with
//
//   c(T) = T^r - c_1 T^(r-1) + c_2 T^(r-2) - ... + (-1)^r c_r.
//
// Each c_k is homogeneous of degree k (or zero) and free of T. Rank 0 is the
// unit, c(T) = 1.
class ChernPolynomial {
 public:
  ChernPolynomial() = default;
  explicit ChernPolynomial(std::vector<IntPolynomial> classes);
  // Reads the classes off a polynomial that is monic in T.
  static ChernPolynomial from_expanded(const IntPolynomial& p);

  unsigned rank() const noexcept { return static_cast<unsigned>(classes_.size()); }
  const std::vector<IntPolynomial>& classes() const noexcept { return classes_; }
  // c_0 = 1; c_k = 0 beyond the rank.
  IntPolynomial c(unsigned k) const;
  IntPolynomial expand() const;

  friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

 private:
  std::vector<IntPolynomial> classes_;
};

// prod (T + root_i).
ChernPolynomial chern_from_roots(std::span<const LinearRoot> roots);
// Whitney product: expand(result) = expand(p) * expand(q).
ChernPolynomial chern_product(const ChernPolynomial& p, const ChernPolynomial& q);
// Roots negated: c_k -> (-1)^k c_k.
ChernPolynomial chern_dual(const ChernPolynomial& p);
// Every root shifted by shift, computed as the substitution T -> T + shift.
ChernPolynomial chern_twist(const ChernPolynomial& p, const LinearRoot& shift);

enum class Tautological { Sub, Quot };

// Rank-1 tautological line bundles on Fbar(d,n): T + Xd for the dual of the
// tautological subbundle side, T - X(d+1) for the quotient side.
ChernPolynomial tautological_chern(Tautological which, const ChowContext& ctx);

// c(T) = prod_{i<=d} (T + b Xi) split as the destabilizing rank-(d-1) piece
// prod_{i<d} (T + b Xi) times the rank-1 quotient T + b Xd.
struct HnSplit {
  ChernPolynomial sub;
  ChernPolynomial quotient;
  bool verified;
};
HnSplit hn_split_factorization(unsigned d, unsigned n, long b);

// Both sides of
//   h_(n-d)(T, bX1..bXd) - b^(n-d) h_(n-d)(X1..X(d+1))
//     = (T - b X(d+1)) * h_(n-d-1)(T, bX1..bX(d+1))
// fully expanded in the free polynomial ring.
struct ShiftFactorization {
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool equal;
};
ShiftFactorization quotient_shift_factorization(unsigned d, unsigned n, long beta);

}  // namespace flagchow
