#include "flagchow/chow.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "flagchow/errors.hpp"

namespace flagchow {

namespace detail {
struct DegreeSpaceCache {
  std::mutex mutex;
  std::map<unsigned, std::shared_ptr<const ChowContext::DegreeSpace>> spaces;
};
}  // namespace detail

ChowContext::ChowContext(Kind kind, unsigned m, unsigned d, unsigned n)
    : kind_(kind), m_(m), d_(d), n_(n), cache_(std::make_shared<detail::DegreeSpaceCache>()) {
  if (kind == Kind::ProjSpace) {
    vars_ = {VarId::h()};
  } else {
    vars_ = x_vars(d + 1);
    degree_cap_ = n + d;
  }
}

ChowContext ChowContext::projective_space(unsigned m) {
  if (m < 1) throw ValidationError("P(m) needs m >= 1");
  return ChowContext(Kind::ProjSpace, m, 0, 0);
}

ChowContext ChowContext::incidence_flag(unsigned d, unsigned n) {
  if (d < 2 || 2 * d > n) {
    throw ValidationError("Fbar(d,n) needs 2 <= d <= n-d (got d=" + std::to_string(d) +
                          ", n=" + std::to_string(n) + ")");
  }
  return ChowContext(Kind::IncidenceFlag, 0, d, n);
}

std::vector<VarId> ChowContext::symmetric_block() const {
  if (kind_ == Kind::ProjSpace) return {};
  return x_vars(d_ - 1);
}

ChowContext ChowContext::with_degree_cap(std::optional<unsigned> cap) const {
  ChowContext out = *this;
  out.degree_cap_ = cap;
  return out;
}

std::string ChowContext::literal() const {
  if (kind_ == Kind::ProjSpace) return "P(" + std::to_string(m_) + ")";
  return "Fbar(" + std::to_string(d_) + "," + std::to_string(n_) + ")";
}

std::string ChowContext::ring_name() const {
  if (kind_ == Kind::ProjSpace) return "A(P^" + std::to_string(m_) + ")";
  return "A(" + literal() + ")";
}

std::vector<Monomial> monomials_of_degree(unsigned k, std::span<const VarId> vars) {
  // complete_homogeneous already enumerates exactly these monomials in order.
  const IntPolynomial all = complete_homogeneous(k, vars);
  std::vector<Monomial> out;
  for (const auto& [m, c] : all.terms()) out.push_back(m);
  return out;
}

IntVector ChowContext::DegreeSpace::coordinates(const IntPolynomial& homogeneous) const {
  IntVector v(monomials.size());
  std::size_t i = 0;
  // Both sequences are grlex-descending, so a single merge pass suffices.
  for (const auto& [m, c] : homogeneous.terms()) {
    while (i < monomials.size() && !(monomials[i] == m)) ++i;
    if (i == monomials.size()) throw ValidationError("monomial outside the degree space");
    v[i] = c;
  }
  return v;
}

std::shared_ptr<const ChowContext::DegreeSpace> ChowContext::degree_space(unsigned k) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->spaces.find(k); it != cache_->spaces.end()) return it->second;
  }
  // Built outside the lock; a racing duplicate computes the same value.
  std::vector<Monomial> monomials = monomials_of_degree(k, vars_);
  DegreeSpace probe{monomials, IntegerLattice(monomials.size(), {})};
  std::vector<IntVector> generators;
  for (const auto& g : ideal_degree_basis(*this, k)) generators.push_back(probe.coordinates(g));
  auto space = std::make_shared<const DegreeSpace>(
      DegreeSpace{std::move(monomials), IntegerLattice(probe.monomials.size(), std::move(generators))});
  std::lock_guard lock(cache_->mutex);
  return cache_->spaces.try_emplace(k, std::move(space)).first->second;
}

ChowElement::ChowElement(ChowContext context, IntPolynomial value)
    : context_(std::move(context)), value_(std::move(value)) {
  if (!value_.uses_only(context_.variables())) {
    throw ValidationError("element uses variables outside " + context_.ring_name());
  }
  if (!is_symmetric_in(value_, context_.symmetric_block())) {
    throw ValidationError("element of " + context_.ring_name() +
                          " must be symmetric in X1..X" + std::to_string(context_.d() - 1));
  }
}

std::vector<IntPolynomial> ideal_generators(const ChowContext& ctx) {
  if (ctx.kind() == ChowContext::Kind::ProjSpace) {
    return {IntPolynomial::var(VarId::h()).pow(ctx.m() + 1)};
  }
  std::vector<IntPolynomial> out;
  for (unsigned i = ctx.n() - ctx.d(); i <= ctx.n(); ++i) {
    out.push_back(complete_homogeneous(i, ctx.variables()));
  }
  return out;
}

std::vector<IntPolynomial> ideal_degree_basis(const ChowContext& ctx, unsigned k) {
  std::vector<IntPolynomial> out;
  for (const auto& g : ideal_generators(ctx)) {
    const auto gd = static_cast<unsigned>(g.degree());
    if (gd > k) continue;
    for (const auto& m : monomials_of_degree(k - gd, ctx.variables())) {
      out.push_back(IntPolynomial::term(1, m) * g);
    }
  }
  return out;
}

namespace {

void check_variables(const ChowContext& ctx, const IntPolynomial& p) {
  for (VarId v : p.variables()) {
    const auto& vars = ctx.variables();
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw ValidationError("variable " + v.name() + " is not a generator of " + ctx.ring_name());
    }
  }
}

void check_degree(const ChowContext& ctx, int degree) {
  if (ctx.degree_cap() && degree > static_cast<int>(*ctx.degree_cap())) {
    throw ValidationError("degree " + std::to_string(degree) + " exceeds the membership cap " +
                          std::to_string(*ctx.degree_cap()) + " of " + ctx.ring_name());
  }
}

}  // namespace

MembershipReport membership_report(const ChowContext& ctx, const IntPolynomial& p) {
  check_variables(ctx, p);
  check_degree(ctx, p.degree());
  MembershipReport report;
  for (int k = 0; k <= p.degree(); ++k) {
    const IntPolynomial part = homogeneous_component(p, static_cast<unsigned>(k));
    if (part.is_zero()) continue;
    const auto space = ctx.degree_space(static_cast<unsigned>(k));
    IntVector residue = space->lattice.residue(space->coordinates(part));
    if (std::any_of(residue.begin(), residue.end(), [](const mpz_class& x) { return x != 0; })) {
      report.is_zero = false;
      report.failures.push_back({static_cast<unsigned>(k), space->monomials, std::move(residue)});
    }
  }
  return report;
}

bool is_zero_in_chow(const ChowContext& ctx, const IntPolynomial& p) {
  return membership_report(ctx, p).is_zero;
}

bool chow_equal(const ChowContext& ctx, const IntPolynomial& p, const IntPolynomial& q) {
  return is_zero_in_chow(ctx, p - q);
}

IntegerSolutionSet solve_residual(const ChowContext& ctx, const IntPolynomial& lhs,
                                  const IntPolynomial& rhs, const IntPolynomial& gen) {
  if (gen.is_zero()) throw ValidationError("solve_residual needs a nonzero generator");
  for (const auto* p : {&lhs, &rhs, &gen}) check_variables(ctx, *p);
  const int k = gen.degree();
  for (const auto* p : {&lhs, &rhs, &gen}) {
    if (!p->is_homogeneous() || (!p->is_zero() && p->degree() != k)) {
      throw ValidationError("solve_residual needs lhs, rhs and gen homogeneous of degree " +
                            std::to_string(k));
    }
  }
  check_degree(ctx, k);
  const auto space = ctx.degree_space(static_cast<unsigned>(k));
  std::vector<IntVector> generators;
  for (const auto& b : space->lattice.basis()) generators.push_back(b.entries);
  return solve_multiple(space->monomials.size(), std::move(generators), space->coordinates(gen),
                        space->coordinates(lhs - rhs));
}

}  // namespace flagchow
