#include "flagchow/classifier.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "flagchow/errors.hpp"

namespace flagchow {

// ---------------------------------------------------------------------------
// Field characteristic

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q <= p / q; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

FieldChar FieldChar::positive(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not a prime");
  return FieldChar(p);
}

std::optional<unsigned> FieldChar::frobenius_exponent(std::uint64_t value) const {
  if (p_ == 0) return value == 1 ? std::optional<unsigned>(0) : std::nullopt;
  std::uint64_t power = 1;
  for (unsigned m = 0;; ++m) {
    if (power == value) return m;
    if (power > value || power > std::numeric_limits<std::uint64_t>::max() / p_) return std::nullopt;
    power *= p_;
  }
}

// ---------------------------------------------------------------------------
// Verdicts

std::string class_name(BundleClass kind) {
  switch (kind) {
    case BundleClass::DirectSumOfLineBundles:
      return "DirectSumOfLineBundles";
    case BundleClass::FrobeniusUniversalSub:
      return "FrobeniusUniversalSub";
    case BundleClass::FrobeniusUniversalSubDual:
      return "FrobeniusUniversalSubDual";
    case BundleClass::FrobeniusQuotient:
      return "FrobeniusQuotient";
    case BundleClass::FrobeniusQuotientDual:
      return "FrobeniusQuotientDual";
  }
  return "?";
}

std::string Possibility::to_string() const {
  std::string out = class_name(kind);
  if (frobenius_power) out += "{m=" + std::to_string(*frobenius_power) + "}";
  return out;
}

bool ClassificationVerdict::includes(const Possibility& p) const {
  return std::find(possibilities.begin(), possibilities.end(), p) != possibilities.end();
}

bool ClassificationVerdict::has_frobenius_variant() const {
  return std::any_of(possibilities.begin(), possibilities.end(),
                     [](const Possibility& p) { return p.frobenius_power.has_value(); });
}

namespace {

void check_grassmannian(unsigned d, unsigned n) {
  if (d < 2 || 2 * d > n) {
    throw ValidationError("G(d,n) needs 2 <= d <= n-d (got d=" + std::to_string(d) +
                          ", n=" + std::to_string(n) + ")");
  }
}

// (0,...,0,b) with b < 0: one entry below a block of zeros.
std::optional<std::int64_t> low_jump(const SplittingType& normalized) {
  const auto& e = normalized.entries();
  if (e.back() >= 0) return std::nullopt;
  for (std::size_t j = 0; j + 1 < e.size(); ++j) {
    if (e[j] != 0) return std::nullopt;
  }
  return e.back();
}

// (0,b,...,b) with b < 0: one entry above a constant block.
std::optional<std::int64_t> high_jump(const SplittingType& normalized) {
  const auto& e = normalized.entries();
  if (e.size() < 2 || e[1] >= 0) return std::nullopt;
  for (std::size_t j = 1; j < e.size(); ++j) {
    if (e[j] != e[1]) return std::nullopt;
  }
  return e[1];
}

}  // namespace

ClassificationVerdict classify_uniform(unsigned d, unsigned n, unsigned r, const SplittingType& t,
                                       const FieldChar& ch) {
  check_grassmannian(d, n);
  if (r < 1) throw ValidationError("rank must be at least 1");
  if (t.rank() != r) {
    throw ValidationError("splitting type " + t.literal() + " does not have rank " + std::to_string(r));
  }
  if (r > d) {
    throw UnsupportedError("rank " + std::to_string(r) + " > d = " + std::to_string(d) +
                           " is outside the classification");
  }

  ClassificationVerdict verdict{{{BundleClass::DirectSumOfLineBundles, std::nullopt}}, {}, normalize(t)};
  auto& notes = verdict.notes;
  const SplittingType& norm = verdict.normalized;

  if (r < d) {
    notes.push_back("rank " + std::to_string(r) + " < d = " + std::to_string(d) +
                    ": every uniform bundle of this rank splits as a sum of line bundles");
    return verdict;
  }
  if (norm.is_constant()) {
    notes.push_back("constant splitting type: only sums of line bundles");
    return verdict;
  }

  const auto low = low_jump(norm);
  const auto high = high_jump(norm);
  if (!low && !high) {
    notes.push_back("normalized type " + norm.literal() +
                    " is neither (0,...,0,b) nor its dual (0,b,...,b): no non-split uniform bundle");
    return verdict;
  }
  const std::int64_t b = low ? *low : *high;
  const auto m = ch.frobenius_exponent(static_cast<std::uint64_t>(-b));
  if (!m) {
    if (ch.is_zero()) {
      notes.push_back("characteristic 0 admits a non-split bundle only for b = -1, got b = " +
                      std::to_string(b));
    } else {
      notes.push_back(std::to_string(-b) + " is not a power of " + ch.literal() +
                      ": a Frobenius pullback needs -b = p^m");
    }
    return verdict;
  }

  const bool square = 2 * d == n;
  auto& out = verdict.possibilities;
  if (low) {
    out.push_back({BundleClass::FrobeniusUniversalSub, *m});
    if (square) out.push_back({BundleClass::FrobeniusQuotientDual, *m});
  }
  if (high) {
    out.push_back({BundleClass::FrobeniusUniversalSubDual, *m});
    if (square) out.push_back({BundleClass::FrobeniusQuotient, *m});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  notes.push_back("-b = " + std::to_string(-b) + " = " + ch.literal() + "^" + std::to_string(*m) +
                  ": Frobenius pullbacks of the tautological bundles are possible");
  if (square) {
    notes.push_back("d = n-d: the quotient bundle has rank d and contributes its Frobenius pullbacks");
  } else {
    notes.push_back("d < n-d: quotient-bundle variants excluded");
  }
  return verdict;
}

std::vector<SplittingType> admissible_nonsplit_types(unsigned d, unsigned n, const FieldChar& ch,
                                                     std::uint64_t bound) {
  check_grassmannian(d, n);
  if (bound < 1) throw ValidationError("bound must be at least 1");
  std::vector<SplittingType> out;
  auto emit = [&](std::uint64_t jump) {
    std::vector<std::int64_t> e(d, 0);
    e.back() = -static_cast<std::int64_t>(jump);
    out.emplace_back(std::move(e));
  };
  if (ch.is_zero()) {
    emit(1);
    return out;
  }
  for (std::uint64_t power = 1; power <= bound; power *= ch.p()) {
    emit(power);
    if (power > bound / ch.p()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unit equation in Z[H]/(H^d)

namespace {

// Coefficients 1..d-1 of 1 + sum c_k H^k, entries of degree >= d dropped.
std::vector<std::int64_t> truncated(unsigned d, const std::vector<std::int64_t>& c) {
  std::vector<std::int64_t> out(d, 0);
  out[0] = 1;
  for (std::size_t k = 1; k <= c.size() && k < d; ++k) out[k] = c[k - 1];
  return out;
}

// Coefficients 0..d-1 of the inverse power series of a (a[0] == 1).
std::vector<std::int64_t> inverse_series(const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> e(a.size(), 0);
  e[0] = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    for (std::size_t i = 1; i <= k; ++i) e[k] -= a[i] * e[k - i];
  }
  return e;
}

void check_unit_args(unsigned d, unsigned r, unsigned t) {
  if (d < 2) throw ValidationError("the unit equation needs d >= 2");
  if (t < 1 || t >= r) throw ValidationError("the unit equation needs 1 <= t < r");
}

// Completes `side` (degrees 1..len) with the truncated inverse on the other
// side, padded or cut to other_len; nullopt if the inverse does not fit.
std::optional<std::vector<std::int64_t>> complement(unsigned d, const std::vector<std::int64_t>& side,
                                                    unsigned other_len) {
  const auto inv = inverse_series(truncated(d, side));
  std::vector<std::int64_t> other(other_len, 0);
  for (std::size_t k = 1; k < d; ++k) {
    if (inv[k] == 0) continue;
    if (k > other_len) return std::nullopt;
    other[k - 1] = inv[k];
  }
  return other;
}

}  // namespace

bool is_unit_factorization(unsigned d, const UnitFactorization& f) {
  const auto a = truncated(d, f.sub);
  const auto b = truncated(d, f.quot);
  for (std::size_t k = 1; k < d; ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i <= k; ++i) sum += a[i] * b[k - i];
    if (sum != 0) return false;
  }
  return true;
}

std::string to_string(UnitSolveResult::Status s) {
  switch (s) {
    case UnitSolveResult::Status::Unique:
      return "unique";
    case UnitSolveResult::Status::NonUnique:
      return "non-unique";
    case UnitSolveResult::Status::NoWitnessFound:
      return "no-witness-found";
  }
  return "?";
}

UnitSolveResult unit_factorization_solve(unsigned d, unsigned r, unsigned t, std::int64_t witness_bound) {
  check_unit_args(d, r, t);
  const UnitFactorization zero{std::vector<std::int64_t>(t, 0), std::vector<std::int64_t>(r - t, 0)};
  if (r < d) {
    // deg(sub * quot) <= r < d, so the identity holds in Z[H] itself. Reading
    // it from the top degree down, the leading coefficient of the product is
    // the product of the two nonzero leading coefficients, which must vanish
    // unless both factors are constant; hence sub = quot = 1.
    return {UnitSolveResult::Status::Unique, zero};
  }

  // One side long enough to hold the full inverse of 1 + H.
  if (r - t >= d - 1) {
    std::vector<std::int64_t> sub(t, 0);
    sub[0] = 1;
    return {UnitSolveResult::Status::NonUnique, {sub, *complement(d, sub, r - t)}};
  }
  if (t >= d - 1) {
    std::vector<std::int64_t> quot(r - t, 0);
    quot[0] = 1;
    return {UnitSolveResult::Status::NonUnique, {*complement(d, quot, t), quot}};
  }

  // Both sides shorter than d-1: search the sub side, smallest entries first.
  std::vector<std::vector<std::int64_t>> candidates;
  std::vector<std::int64_t> cur(t, -witness_bound);
  for (;;) {
    candidates.push_back(cur);
    std::size_t i = t;
    while (i > 0 && cur[i - 1] == witness_bound) cur[--i] = -witness_bound;
    if (i == 0) break;
    ++cur[i - 1];
  }
  auto norm = [](const std::vector<std::int64_t>& v) {
    std::int64_t m = 0;
    for (auto x : v) m = std::max(m, x < 0 ? -x : x);
    return m;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) { return norm(a) < norm(b); });
  for (const auto& sub : candidates) {
    if (norm(sub) == 0) continue;
    if (auto quot = complement(d, sub, r - t)) {
      return {UnitSolveResult::Status::NonUnique, {sub, *quot}};
    }
  }
  return {UnitSolveResult::Status::NoWitnessFound, zero};
}

std::vector<UnitFactorization> unit_factorization_search(unsigned d, unsigned r, unsigned t,
                                                         std::int64_t bound, bool parallel) {
  check_unit_args(d, r, t);
  if (bound < 1) throw ValidationError("coefficient bound must be at least 1");

  // All solutions whose first coordinate is `head`, in lexicographic order.
  auto scan = [=](std::int64_t head) {
    std::vector<UnitFactorization> found;
    std::vector<std::int64_t> cur(r, -bound);
    cur[0] = head;
    for (;;) {
      UnitFactorization f{{cur.begin(), cur.begin() + t}, {cur.begin() + t, cur.end()}};
      if (is_unit_factorization(d, f)) found.push_back(std::move(f));
      std::size_t i = r;
      while (i > 1 && cur[i - 1] == bound) cur[--i] = -bound;
      if (i == 1) break;
      ++cur[i - 1];
    }
    return found;
  };

  std::vector<std::vector<UnitFactorization>> parts;
  if (parallel) {
    std::vector<std::future<std::vector<UnitFactorization>>> jobs;
    for (std::int64_t head = -bound; head <= bound; ++head) {
      jobs.push_back(std::async(std::launch::async, scan, head));
    }
    for (auto& job : jobs) parts.push_back(job.get());
  } else {
    for (std::int64_t head = -bound; head <= bound; ++head) parts.push_back(scan(head));
  }
  std::vector<UnitFactorization> out;
  for (auto& part : parts) {
    for (auto& f : part) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whitney residual

ResidualAudit whitney_residual_sets(const ChowContext& ctx, const IntPolynomial& lhs,
                                    const IntPolynomial& product) {
  if (ctx.kind() != ChowContext::Kind::IncidenceFlag) {
    throw ValidationError("the Whitney residual lives on Fbar(d,n), not " + ctx.literal());
  }
  const IntPolynomial gen = complete_homogeneous(ctx.n() - ctx.d(), ctx.variables());
  const unsigned gen_degree = ctx.n() - ctx.d();

  ResidualAudit audit{lhs, product, {}, IntegerSolutionSet::all()};
  const auto lhs_parts = lhs.coefficients_in(VarId::t());
  const auto prod_parts = product.coefficients_in(VarId::t());
  std::set<unsigned> powers;
  for (const auto& [j, c] : lhs_parts) powers.insert(j);
  for (const auto& [j, c] : prod_parts) powers.insert(j);

  for (unsigned j : powers) {
    const IntPolynomial l = lhs_parts.contains(j) ? lhs_parts.at(j) : IntPolynomial();
    const IntPolynomial p = prod_parts.contains(j) ? prod_parts.at(j) : IntPolynomial();
    const int top = std::max(l.degree(), p.degree());
    for (int k = 0; k <= top; ++k) {
      const IntPolynomial lk = homogeneous_component(l, static_cast<unsigned>(k));
      const IntPolynomial pk = homogeneous_component(p, static_cast<unsigned>(k));
      if (lk.is_zero() && pk.is_zero()) continue;
      IntegerSolutionSet set = IntegerSolutionSet::empty();
      if (static_cast<unsigned>(k) == gen_degree) {
        set = solve_residual(ctx, lk, pk, gen);
      } else {
        set = chow_equal(ctx, lk, pk) ? IntegerSolutionSet::all() : IntegerSolutionSet::empty();
      }
      audit.admissible = audit.admissible.intersect(set);
      audit.components.push_back({j, static_cast<unsigned>(k), std::move(set)});
    }
  }
  return audit;
}

ResidualAudit whitney_residual_audit(unsigned d, unsigned n, std::span<const HnBlock> grouping,
                                     std::span<const LinearRoot> lhs_roots, const mpz_class& lhs_shift) {
  const ChowContext ctx = ChowContext::incidence_flag(d, n);
  unsigned total = 0;
  for (std::size_t i = 0; i < grouping.size(); ++i) {
    if (grouping[i].rank < 1) throw ValidationError("every block needs rank >= 1");
    if (i > 0 && grouping[i].u >= grouping[i - 1].u) {
      throw ValidationError("block degrees must strictly decrease (u_1 > u_2 > ...)");
    }
    total += grouping[i].rank;
  }
  if (total > d) {
    throw ValidationError("block ranks sum to " + std::to_string(total) + " > d = " + std::to_string(d));
  }
  if (total != lhs_roots.size()) {
    throw ValidationError("degree mismatch: blocks have total rank " + std::to_string(total) + " but " +
                          std::to_string(lhs_roots.size()) + " roots were given");
  }
  for (const auto& root : lhs_roots) {
    if (!root.form().uses_only(ctx.variables())) {
      throw ValidationError("root " + to_string(root.form()) + " uses variables outside X1..X" +
                            std::to_string(d + 1));
    }
  }

  ChernPolynomial product;
  std::size_t offset = 0;
  for (const auto& block : grouping) {
    product = chern_product(product, chern_from_roots(lhs_roots.subspan(offset, block.rank)));
    offset += block.rank;
  }
  IntPolynomial lhs = chern_from_roots(lhs_roots).expand();
  lhs += scale(complete_homogeneous(n - d, ctx.variables()), lhs_shift);
  return whitney_residual_sets(ctx, lhs, product.expand());
}

// ---------------------------------------------------------------------------
// Complete flags

StrongUniformAudit strongly_uniform_audit(const FlagShape& shape, std::span<const SplittingType> types) {
  if (!shape.is_complete()) {
    throw ValidationError(shape.literal() + " is not a complete flag F(1,...,n-1; n)");
  }
  if (types.size() != shape.length()) {
    throw ValidationError("need one splitting type per line family (" + std::to_string(shape.length()) +
                          "), got " + std::to_string(types.size()));
  }
  for (const auto& t : types) {
    if (t.rank() != types.front().rank()) throw ValidationError("splitting types must share one rank");
  }

  const auto components = line_components(shape);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& t = types[i];
    const auto gap = gap_audit(t, components[i].line_case);
    if (!gap.pass) {
      return {false, i + 1,
              "type " + t.literal() + " fails the Case " + to_string(components[i].line_case) +
                  " gap bound at j=" + std::to_string(*gap.witness),
              std::nullopt};
    }
    if (!t.is_constant()) {
      return {false, i + 1, "type " + t.literal() + " is not constant", std::nullopt};
    }
    if (t[0] != types.front()[0]) {
      return {false, i + 1,
              "constant value " + std::to_string(t[0]) + " differs from " + std::to_string(types.front()[0]) +
                  " on the first family",
              std::nullopt};
    }
  }
  return {true, std::nullopt, "", types.front()[0]};
}

}  // namespace flagchow
