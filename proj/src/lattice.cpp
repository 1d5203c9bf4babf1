#include "flagchow/lattice.hpp"

#include <algorithm>
#include <utility>

#include "flagchow/errors.hpp"

namespace flagchow {

namespace {

// v -= q * w, entries from `from` onward (earlier entries of w are zero).
void sub_multiple(IntVector& v, const mpz_class& q, const IntVector& w, std::size_t from) {
  if (q == 0) return;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (w[i] != 0) v[i] -= q * w[i];
  }
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t dimension, std::vector<IntVector> generators)
    : dimension_(dimension) {
  for (const auto& g : generators) {
    if (g.size() != dimension) throw ValidationError("lattice generator has the wrong dimension");
  }
  std::erase_if(generators, is_zero_vector);

  // Row-by-row echelon elimination with unimodular column operations.
  // Within a row, a Euclid-style loop repeatedly reduces every column by the
  // one with the smallest nonzero entry.
  for (std::size_t row = 0; row < dimension_ && !generators.empty(); ++row) {
    for (;;) {
      std::size_t best = generators.size();
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < generators.size(); ++j) {
        if (generators[j][row] == 0) continue;
        ++nonzero;
        if (best == generators.size() ||
            mpz_cmpabs(generators[j][row].get_mpz_t(), generators[best][row].get_mpz_t()) < 0) {
          best = j;
        }
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        IntVector pivot = std::move(generators[best]);
        generators.erase(generators.begin() + static_cast<std::ptrdiff_t>(best));
        if (pivot[row] < 0) {
          for (auto& x : pivot) x = -x;
        }
        basis_.push_back({row, std::move(pivot)});
        break;
      }
      const IntVector& p = generators[best];
      for (std::size_t j = 0; j < generators.size(); ++j) {
        if (j == best || generators[j][row] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), generators[j][row].get_mpz_t(), p[row].get_mpz_t());
        sub_multiple(generators[j], q, p, row);
      }
    }
    std::erase_if(generators, is_zero_vector);
  }

  // Reduce entries at later pivot rows into [0, pivot).
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t r = basis_[k].pivot_row;
    const mpz_class& piv = basis_[k].entries[r];
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), basis_[j].entries[r].get_mpz_t(), piv.get_mpz_t());
      sub_multiple(basis_[j].entries, q, basis_[k].entries, r);
    }
  }
}

IntVector IntegerLattice::residue(const IntVector& v) const {
  if (v.size() != dimension_) throw ValidationError("vector has the wrong dimension");
  IntVector rest = v;
  for (const auto& b : basis_) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), rest[b.pivot_row].get_mpz_t(), b.entries[b.pivot_row].get_mpz_t());
    sub_multiple(rest, q, b.entries, b.pivot_row);
  }
  return rest;
}

bool IntegerLattice::contains(const IntVector& v) const { return is_zero_vector(residue(v)); }

// ---------------------------------------------------------------------------

IntegerSolutionSet IntegerSolutionSet::coset(const mpz_class& offset, const mpz_class& step) {
  if (step < 0) return coset(offset, -step);
  if (step == 0) return singleton(offset);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), offset.get_mpz_t(), step.get_mpz_t());
  return IntegerSolutionSet(false, r, step);
}

bool IntegerSolutionSet::contains(const mpz_class& a) const {
  if (empty_) return false;
  if (step_ == 0) return a == offset_;
  mpz_class diff = a - offset_;
  return mpz_divisible_p(diff.get_mpz_t(), step_.get_mpz_t()) != 0;
}

IntegerSolutionSet IntegerSolutionSet::intersect(const IntegerSolutionSet& other) const {
  if (empty_ || other.empty_) return empty();
  if (step_ == 0) return other.contains(offset_) ? *this : empty();
  if (other.step_ == 0) return contains(other.offset_) ? other : empty();
  // Chinese remainder: offset_ + step_*k = other.offset_ (mod other.step_).
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), step_.get_mpz_t(), other.step_.get_mpz_t());
  mpz_class diff = other.offset_ - offset_;
  if (mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()) == 0) return empty();
  const mpz_class s = step_ / g;
  const mpz_class t = other.step_ / g;
  mpz_class k = diff / g;
  if (t != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
    k = k * inv;
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), t.get_mpz_t());
  } else {
    k = 0;
  }
  return coset(offset_ + step_ * k, step_ * t);
}

std::string IntegerSolutionSet::to_string() const {
  if (empty_) return "{}";
  if (step_ == 0) return "{" + offset_.get_str() + "}";
  if (step_ == 1) return "Z";
  if (offset_ == 0) return step_.get_str() + "Z";
  return offset_.get_str() + " + " + step_.get_str() + "Z";
}

IntegerSolutionSet solve_multiple(std::size_t dimension, std::vector<IntVector> generators,
                                  const IntVector& extra, const IntVector& target) {
  if (extra.size() != dimension || target.size() != dimension) {
    throw ValidationError("vector has the wrong dimension");
  }
  // Append a tag coordinate recording the multiple of `extra` used: the
  // lattice {(B c + a*extra, a)} contains (target, a) exactly for the wanted a.
  for (auto& g : generators) {
    if (g.size() != dimension) throw ValidationError("lattice generator has the wrong dimension");
    g.emplace_back(0);
  }
  IntVector tagged = extra;
  tagged.emplace_back(1);
  generators.push_back(std::move(tagged));
  const IntegerLattice lattice(dimension + 1, std::move(generators));

  IntVector probe = target;
  probe.emplace_back(0);
  const IntVector rest = lattice.residue(probe);
  for (std::size_t i = 0; i < dimension; ++i) {
    if (rest[i] != 0) return IntegerSolutionSet::empty();
  }
  // probe - (lattice vector) = (0, tau), so (target, -tau) lies in the lattice.
  const mpz_class tau = rest[dimension];
  mpz_class step = 0;
  for (const auto& b : lattice.basis()) {
    if (b.pivot_row == dimension) step = b.entries[dimension];
  }
  return IntegerSolutionSet::coset(-tau, step);
}

}  // namespace flagchow
