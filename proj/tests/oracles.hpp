#pragma once

// Independent brute-force references used by the unit and acceptance suites.
// Nothing here calls the symmetric-function constructors or the lattice code
// under test.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <unordered_set>
#include <vector>

#include "flagchow/polynomial.hpp"

namespace oracle {

using flagchow::IntPolynomial;
using flagchow::Monomial;
using flagchow::VarId;

// Every exponent vector of length m with entries summing to k, by odometer
// over [0, k]^m.
inline std::vector<std::vector<unsigned>> exponent_vectors(unsigned k, std::size_t m) {
  std::vector<std::vector<unsigned>> out;
  if (m == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(m, 0);
  for (;;) {
    unsigned sum = 0;
    for (auto x : e) sum += x;
    if (sum == k) out.push_back(e);
    std::size_t i = 0;
    while (i < m && e[i] == k) e[i++] = 0;
    if (i == m) break;
    ++e[i];
  }
  return out;
}

inline Monomial monomial(const std::vector<VarId>& vars, const std::vector<unsigned>& e) {
  std::vector<Monomial::Factor> f;
  for (std::size_t i = 0; i < vars.size(); ++i) f.emplace_back(vars[i], e[i]);
  return Monomial(std::move(f));
}

// Sum of all degree-k monomials, built term by term.
inline IntPolynomial h(unsigned k, const std::vector<VarId>& vars) {
  IntPolynomial out;
  for (const auto& e : exponent_vectors(k, vars.size())) out += IntPolynomial::term(1, monomial(vars, e));
  return out;
}

// h_k evaluated at polynomial arguments: sum over exponent vectors of
// products of powers.
inline IntPolynomial h(unsigned k, const std::vector<IntPolynomial>& args) {
  IntPolynomial out;
  for (const auto& e : exponent_vectors(k, args.size())) {
    IntPolynomial term = 1;
    for (std::size_t i = 0; i < args.size(); ++i) {
      for (unsigned j = 0; j < e[i]; ++j) term *= args[i];
    }
    out += term;
  }
  return out;
}

// Sum of squarefree degree-k monomials, by subset bitmask.
inline IntPolynomial e(unsigned k, const std::vector<VarId>& vars) {
  IntPolynomial out;
  for (std::uint32_t mask = 0; mask < (1U << vars.size()); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    std::vector<unsigned> ex(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) ex[i] = (mask >> i) & 1U;
    out += IntPolynomial::term(1, monomial(vars, ex));
  }
  return out;
}

inline IntPolynomial product_of_linear(const std::vector<IntPolynomial>& roots) {
  IntPolynomial out = 1;
  for (const auto& r : roots) out *= IntPolynomial::var(VarId::t()) + r;
  return out;
}

// Coefficient vector of a homogeneous polynomial against a fixed monomial list
// (every monomial of p must appear).
inline std::vector<long> coords(const IntPolynomial& p, const std::vector<Monomial>& mons) {
  std::vector<long> out(mons.size(), 0);
  for (const auto& [m, c] : p.terms()) {
    std::size_t i = 0;
    while (i < mons.size() && !(mons[i] == m)) ++i;
    if (i == mons.size()) throw std::logic_error("monomial outside coordinate list");
    out[i] = c.get_si();
  }
  return out;
}

struct VecHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// Decides whether target = sum c_i * spanning[i] with every c_i in
// [-bound, bound]. Meet in the middle: the sums over the first half of the
// spanning vectors are tabulated once, the second half is enumerated per query.
class CombinationSearch {
 public:
  CombinationSearch(std::vector<std::vector<long>> spanning, std::size_t dim, long bound)
      : spanning_(std::move(spanning)), dim_(dim), bound_(bound), half_(spanning_.size() / 2) {
    sums(0, half_, [&](const std::vector<long>& v) {
      left_.insert(v);
      return false;
    });
  }

  bool contains(const std::vector<long>& target) const {
    return sums(half_, spanning_.size(), [&](const std::vector<long>& v) {
      std::vector<long> need(dim_);
      for (std::size_t j = 0; j < dim_; ++j) need[j] = target[j] - v[j];
      return left_.contains(need);
    });
  }

 private:
  bool sums(std::size_t lo, std::size_t hi, const std::function<bool(const std::vector<long>&)>& visit) const {
    std::vector<long> coef(hi - lo, -bound_);
    for (;;) {
      std::vector<long> v(dim_, 0);
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) v[j] += coef[i - lo] * spanning_[i][j];
      }
      if (visit(v)) return true;
      std::size_t i = 0;
      while (i < coef.size() && coef[i] == bound_) coef[i++] = -bound_;
      if (i == coef.size()) return false;
      ++coef[i];
    }
  }

  std::vector<std::vector<long>> spanning_;
  std::size_t dim_;
  long bound_;
  std::size_t half_;
  std::unordered_set<std::vector<long>, VecHash> left_;
};

inline bool small_combination_exists(const std::vector<long>& target,
                                      const std::vector<std::vector<long>>& spanning, long bound) {
  return CombinationSearch(spanning, target.size(), bound).contains(target);
}

// Truncated product (1 + sum a_k H^k)(1 + sum b_k H^k) mod H^d equals 1,
// computed with polynomial arithmetic in H.
inline bool unit_product(unsigned d, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const IntPolynomial hv = IntPolynomial::var(VarId::h());
  IntPolynomial pa = 1;
  IntPolynomial pb = 1;
  for (std::size_t k = 0; k < a.size(); ++k) pa += flagchow::scale(hv.pow(k + 1), static_cast<long>(a[k]));
  for (std::size_t k = 0; k < b.size(); ++k) pb += flagchow::scale(hv.pow(k + 1), static_cast<long>(b[k]));
  const IntPolynomial prod = pa * pb;
  for (unsigned k = 0; k < d; ++k) {
    if (prod.coefficient(Monomial::of(VarId::h(), k)) != (k == 0 ? 1 : 0)) return false;
  }
  return true;
}

// Random polynomial in vars with up to `terms` terms, total degree <= max_degree
// and coefficients in [-coef, coef].
inline IntPolynomial random_polynomial(std::mt19937_64& rng, const std::vector<VarId>& vars, unsigned max_degree,
                                       unsigned terms, long coef) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<long> c(-coef, coef);
  IntPolynomial out;
  const unsigned count = std::uniform_int_distribution<unsigned>(0, terms)(rng);
  for (unsigned i = 0; i < count; ++i) {
    std::vector<Monomial::Factor> f;
    const unsigned k = deg(rng);
    for (unsigned j = 0; j < k; ++j) f.emplace_back(vars[pick(rng)], 1);
    out += IntPolynomial::term(c(rng), Monomial(std::move(f)));
  }
  return out;
}

// Random homogeneous polynomial of degree k.
inline IntPolynomial random_homogeneous(std::mt19937_64& rng, const std::vector<VarId>& vars, unsigned k,
                                        unsigned terms, long coef) {
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<long> c(-coef, coef);
  IntPolynomial out;
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<Monomial::Factor> f;
    for (unsigned j = 0; j < k; ++j) f.emplace_back(vars[pick(rng)], 1);
    out += IntPolynomial::term(c(rng), Monomial(std::move(f)));
  }
  return out;
}

}  // namespace oracle
