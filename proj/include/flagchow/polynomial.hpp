#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagchow {

// A polynomial variable: one of X1, X2, ..., the Chern variable T, or the
// hyperplane class H. Variables are totally ordered X1 < X2 < ... < T < H.
class VarId {
 public:
  enum class Kind : std::uint8_t { X = 0, T = 1, H = 2 };

  static VarId x(unsigned index);
  static VarId t() { return VarId(Kind::T, 0); }
  static VarId h() { return VarId(Kind::H, 0); }

  Kind kind() const noexcept { return kind_; }
  // Meaningful only for Kind::X.
  unsigned index() const noexcept { return index_; }

  std::string name() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;

 private:
  VarId(Kind kind, unsigned index) : kind_(kind), index_(index) {}

  Kind kind_;
  unsigned index_;
};

std::ostream& operator<<(std::ostream& os, VarId v);

// Convenience: X1..Xk.
std::vector<VarId> x_vars(unsigned count);

// Sparse exponent vector, sorted by variable, zero exponents never stored.
class Monomial {
 public:
  using Factor = std::pair<VarId, unsigned>;

  Monomial() = default;
  // Zero exponents are dropped and repeated variables merged.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(VarId v, unsigned exponent = 1);

  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(VarId v) const noexcept;
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  // Exchange the exponents of a and b.
  Monomial swapped(VarId a, VarId b) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Graded lexicographic comparison: total degree first, then the exponent
// vector read in variable order X1, X2, ..., T, H.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

// Orders the term map with the leading (grlex-largest) monomial first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

class IntPolynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class, GrlexDescending>;

  IntPolynomial() = default;
  IntPolynomial(long c);  // NOLINT(google-explicit-constructor)
  IntPolynomial(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  static IntPolynomial var(VarId v);
  static IntPolynomial term(const mpz_class& coefficient, Monomial m);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  mpz_class coefficient(const Monomial& m) const;
  mpz_class constant_term() const { return coefficient(Monomial{}); }
  std::set<VarId> variables() const;
  bool uses_only(std::span<const VarId> allowed) const;

  // Decomposition by powers of v: result[j] is the coefficient of v^j.
  std::map<unsigned, IntPolynomial> coefficients_in(VarId v) const;

  IntPolynomial& operator+=(const IntPolynomial& q);
  IntPolynomial& operator-=(const IntPolynomial& q);
  IntPolynomial& operator*=(const IntPolynomial& q);

  friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
  friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  IntPolynomial operator-() const;

  IntPolynomial pow(unsigned e) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void add_term(const Monomial& m, const mpz_class& c);

  TermMap terms_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const IntPolynomial& p, const mpz_class& c);

// Canonical text form: grlex order, leading term first, explicit '*' and '^'.
std::string to_string(const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Sum of all monomials of total degree k in vars, every coefficient 1.
// k = 0 gives 1; empty vars with k > 0 gives 0.
IntPolynomial complete_homogeneous(unsigned k, std::span<const VarId> vars);
// Same sum evaluated at arbitrary polynomial arguments, e.g. (T, bX1, ..., bXd).
IntPolynomial complete_homogeneous(unsigned k, std::span<const IntPolynomial> args);

// Sum of all squarefree degree-k monomials; 0 when k > |vars|.
IntPolynomial elementary_symmetric(unsigned k, std::span<const VarId> vars);
IntPolynomial elementary_symmetric(unsigned k, std::span<const IntPolynomial> args);

using Substitution = std::map<VarId, IntPolynomial>;

// Throws ValidationError("incomplete substitution") when p has a variable
// the map does not cover.
IntPolynomial substitute(const IntPolynomial& p, const Substitution& map);

// True iff p is fixed by every transposition of adjacent members of subset.
bool is_symmetric_in(const IntPolynomial& p, std::span<const VarId> subset);

IntPolynomial homogeneous_component(const IntPolynomial& p, unsigned k);

// Checks h_k(S+u) - h_k(S+v) == (u - v) * h_{k-1}(S+u+v) by full expansion.
bool verify_h_shift_identity(std::span<const VarId> s, VarId u, VarId v, unsigned k);

}  // namespace flagchow
