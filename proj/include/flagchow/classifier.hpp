#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagchow/chern.hpp"
#include "flagchow/chow.hpp"
#include "flagchow/flags.hpp"
#include "flagchow/lattice.hpp"

namespace flagchow {

// Characteristic of the (algebraically closed) ground field.
class FieldChar {
 public:
  static FieldChar zero() { return FieldChar(0); }
  // Throws ValidationError unless p is prime.
  static FieldChar positive(std::uint64_t p);

  bool is_zero() const noexcept { return p_ == 0; }
  std::uint64_t p() const noexcept { return p_; }
  // m with p^m == value (m = 0 for value 1 in characteristic zero), if any.
  std::optional<unsigned> frobenius_exponent(std::uint64_t value) const;
  std::string literal() const { return std::to_string(p_); }

  friend bool operator==(const FieldChar&, const FieldChar&) = default;

 private:
  explicit FieldChar(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t p);

// Isomorphism classes of uniform rank-d bundles on G(d,n), up to twist:
//   DirectSumOfLineBundles        sum of O(a_i)
//   FrobeniusUniversalSub{m}      F^m* H_d            type (0,...,0,-p^m)
//   FrobeniusUniversalSubDual{m}  F^m* H_d^dual       type (p^m,0,...,0)
//   FrobeniusQuotient{m}          F^m* Q_(n-d)        type (p^m,0,...,0), d = n-d
//   FrobeniusQuotientDual{m}      F^m* Q_(n-d)^dual   type (0,...,0,-p^m), d = n-d
enum class BundleClass {
  DirectSumOfLineBundles,
  FrobeniusUniversalSub,
  FrobeniusUniversalSubDual,
  FrobeniusQuotient,
  FrobeniusQuotientDual,
};

struct Possibility {
  BundleClass kind;
  // Frobenius exponent m; absent for DirectSumOfLineBundles.
  std::optional<unsigned> frobenius_power;

  // "DirectSumOfLineBundles", "FrobeniusUniversalSub{m=1}".
  std::string to_string() const;
  friend auto operator<=>(const Possibility&, const Possibility&) = default;
};

std::string class_name(BundleClass kind);

struct ClassificationVerdict {
  std::vector<Possibility> possibilities;  // sorted, no duplicates
  std::vector<std::string> notes;
  SplittingType normalized;

  bool includes(const Possibility& p) const;
  bool has_frobenius_variant() const;
};

// Every bundle class compatible with a uniform rank-r bundle on G(d,n) of
// the given splitting type. Throws ValidationError on bad (d, n, r, type)
// and UnsupportedError for r > d.
ClassificationVerdict classify_uniform(unsigned d, unsigned n, unsigned r, const SplittingType& t,
                                       const FieldChar& ch);

// Normalized rank-d types (0,...,0,b), 1 <= -b <= bound, that carry a
// non-split uniform bundle, in increasing order of -b.
std::vector<SplittingType> admissible_nonsplit_types(unsigned d, unsigned n, const FieldChar& ch,
                                                     std::uint64_t bound);

// Total Chern classes of a rank-t subbundle and rank-(r-t) quotient of a
// trivial bundle on P^(d-1): coefficients of H^1.. in Z[H]/(H^d).
struct UnitFactorization {
  std::vector<std::int64_t> sub;
  std::vector<std::int64_t> quot;

  friend auto operator<=>(const UnitFactorization&, const UnitFactorization&) = default;
};

// (1 + sum sub_k H^k)(1 + sum quot_k H^k) == 1 in Z[H]/(H^d).
bool is_unit_factorization(unsigned d, const UnitFactorization& f);

struct UnitSolveResult {
  enum class Status {
    Unique,          // only the all-zero solution
    NonUnique,       // `solution` is a solution that is nonzero modulo H^d
    NoWitnessFound,  // r >= d but no nonzero solution within the search bound
  };
  Status status;
  UnitFactorization solution;
};

std::string to_string(UnitSolveResult::Status s);

// Solves c(sub) c(quot) = 1 in Z[H]/(H^d) with deg sub <= t, deg quot <= r-t.
// For r < d only the zero solution exists. For r >= d a nonzero witness is
// produced in closed form when one side can absorb a full inverse series,
// and otherwise searched for with coefficients in [-witness_bound, witness_bound].
UnitSolveResult unit_factorization_solve(unsigned d, unsigned r, unsigned t,
                                         std::int64_t witness_bound = 3);

// Brute-force oracle: every coefficient tuple in [-bound, bound]^r that
// satisfies the unit equation, in lexicographic order. `parallel` splits the
// enumeration across threads with identical output.
std::vector<UnitFactorization> unit_factorization_search(unsigned d, unsigned r, unsigned t,
                                                         std::int64_t bound, bool parallel = false);

// One block O(u)^(rank) of the splitting type, u strictly decreasing.
struct HnBlock {
  std::int64_t u;
  unsigned rank;
};

struct ResidualComponent {
  unsigned t_power;
  unsigned degree;  // degree in the X variables
  IntegerSolutionSet solutions;
};

struct ResidualAudit {
  IntPolynomial lhs;
  IntPolynomial product;
  std::vector<ResidualComponent> components;
  // Integers a with lhs = product + a * h_(n-d)(X1..X(d+1)) in A(Fbar(d,n)).
  IntegerSolutionSet admissible;
};

// Compares a pulled-back Chern polynomial with the Whitney product of its
// Harder-Narasimhan pieces, component by component in T, and returns the
// admissible multiples of h_(n-d)(X1..X(d+1)) in the difference.
ResidualAudit whitney_residual_sets(const ChowContext& ctx, const IntPolynomial& lhs,
                                    const IntPolynomial& product);

// Builds the pieces from consecutive blocks of lhs_roots (sizes from the
// grouping) and runs whitney_residual_sets. `lhs_shift` adds a multiple of
// h_(n-d)(X1..X(d+1)) to the left-hand side.
ResidualAudit whitney_residual_audit(unsigned d, unsigned n, std::span<const HnBlock> grouping,
                                     std::span<const LinearRoot> lhs_roots,
                                     const mpz_class& lhs_shift = 0);

struct StrongUniformAudit {
  bool pass;
  std::optional<std::size_t> component;  // failing 1-based component
  std::string reason;
  std::optional<std::int64_t> common_value;  // a with E|L = O(a)^r on pass
};

// Necessary condition for a strongly uniform, semistable bundle on the
// complete flag F(1,...,n-1; n): every family's type is constant and all
// families share the same value.
StrongUniformAudit strongly_uniform_audit(const FlagShape& shape,
                                          std::span<const SplittingType> types);

}  // namespace flagchow
