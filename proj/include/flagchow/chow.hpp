#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagchow/lattice.hpp"
#include "flagchow/polynomial.hpp"

namespace flagchow {

namespace detail {
struct DegreeSpaceCache;
}

// A presented quotient ring.
//
//   ProjSpace{m}:        Z[H] / (H^(m+1)), the Chow ring of P^m.
//   IncidenceFlag{d,n}:  Z[X1..X(d+1)] symmetric in X1..X(d-1), modulo the
//                        ideal generated by the complete homogeneous sums
//                        h_i(X1..X(d+1)) for n-d-1 < i <= n; the Chow ring of
//                        the incidence variety F(d-1,d,d+1; n).
//
// Membership in the ideal is decided degree by degree by an exact integer
// lattice computation over the monomials of that degree. Multiplying by
// arbitrary (not only symmetric) monomials gives the same ideal: Z[X] is free
// over the symmetric subring with 1 as a basis element, so the coefficient of
// 1 is a subring-linear projection that fixes symmetric elements.
//
// Contexts are cheap to copy; copies share a thread-safe cache of the
// per-degree lattices.
class ChowContext {
 public:
  enum class Kind { ProjSpace, IncidenceFlag };

  static ChowContext projective_space(unsigned m);
  // Requires 2 <= d <= n - d.
  static ChowContext incidence_flag(unsigned d, unsigned n);

  Kind kind() const noexcept { return kind_; }
  // ProjSpace only.
  unsigned m() const noexcept { return m_; }
  // IncidenceFlag only.
  unsigned d() const noexcept { return d_; }
  unsigned n() const noexcept { return n_; }

  // H for ProjSpace, X1..X(d+1) for IncidenceFlag.
  const std::vector<VarId>& variables() const noexcept { return vars_; }
  // Variables an element must be symmetric in: X1..X(d-1), or none.
  std::vector<VarId> symmetric_block() const;

  // Highest degree accepted by membership queries. Defaults to n + d for
  // IncidenceFlag and to no limit for ProjSpace.
  std::optional<unsigned> degree_cap() const noexcept { return degree_cap_; }
  ChowContext with_degree_cap(std::optional<unsigned> cap) const;

  // "P(2)", "Fbar(2,4)".
  std::string literal() const;
  // "A(P^2)", "A(Fbar(2,4))".
  std::string ring_name() const;

  friend bool operator==(const ChowContext& a, const ChowContext& b) {
    return a.kind_ == b.kind_ && a.m_ == b.m_ && a.d_ == b.d_ && a.n_ == b.n_;
  }

  // Monomials of degree k in the context variables (grlex, leading first)
  // together with the Hermite-reduced lattice of the degree-k ideal part.
  struct DegreeSpace {
    std::vector<Monomial> monomials;
    IntegerLattice lattice;

    IntVector coordinates(const IntPolynomial& homogeneous) const;
  };
  std::shared_ptr<const DegreeSpace> degree_space(unsigned k) const;

 private:
  ChowContext(Kind kind, unsigned m, unsigned d, unsigned n);

  Kind kind_;
  unsigned m_ = 0;
  unsigned d_ = 0;
  unsigned n_ = 0;
  std::vector<VarId> vars_;
  std::optional<unsigned> degree_cap_;
  std::shared_ptr<detail::DegreeSpaceCache> cache_;
};

// An element of the quotient ring given by a representative. For
// IncidenceFlag the representative must be symmetric in X1..X(d-1).
class ChowElement {
 public:
  ChowElement(ChowContext context, IntPolynomial value);

  const ChowContext& context() const noexcept { return context_; }
  const IntPolynomial& value() const noexcept { return value_; }

 private:
  ChowContext context_;
  IntPolynomial value_;
};

// H^(m+1), or h_i(X1..X(d+1)) for n-d-1 < i <= n in increasing degree.
std::vector<IntPolynomial> ideal_generators(const ChowContext& ctx);

// Spanning set of the degree-k part of the ideal: every m*g with g a
// generator and m a monomial of degree k - deg g.
std::vector<IntPolynomial> ideal_degree_basis(const ChowContext& ctx, unsigned k);

// Monomials of total degree k in vars, grlex order, leading first.
std::vector<Monomial> monomials_of_degree(unsigned k, std::span<const VarId> vars);

struct DegreeResidue {
  unsigned degree;
  std::vector<Monomial> monomials;
  IntVector residue;
};

// Per-degree outcome of a membership test; `failures` lists each homogeneous
// component outside the ideal with its canonical lattice residue.
struct MembershipReport {
  bool is_zero = true;
  std::vector<DegreeResidue> failures;
};

MembershipReport membership_report(const ChowContext& ctx, const IntPolynomial& p);
bool is_zero_in_chow(const ChowContext& ctx, const IntPolynomial& p);
bool chow_equal(const ChowContext& ctx, const IntPolynomial& p, const IntPolynomial& q);

// Every integer a with lhs - rhs - a*gen zero in the quotient. lhs, rhs and
// gen must be homogeneous of gen's degree (zero is allowed for lhs, rhs).
IntegerSolutionSet solve_residual(const ChowContext& ctx, const IntPolynomial& lhs,
                                  const IntPolynomial& rhs, const IntPolynomial& gen);

}  // namespace flagchow
