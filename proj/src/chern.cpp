#include "flagchow/chern.hpp"

#include "flagchow/errors.hpp"

namespace flagchow {

namespace {

const IntPolynomial& chern_t() {
  static const IntPolynomial t = IntPolynomial::var(VarId::t());
  return t;
}

bool mentions_t(const IntPolynomial& p) { return p.variables().contains(VarId::t()); }

}  // namespace

LinearRoot::LinearRoot(IntPolynomial form) : form_(std::move(form)) {
  if (!form_.is_zero() && (form_.degree() != 1 || !form_.is_homogeneous())) {
    throw ValidationError("root " + to_string(form_) + " is not a linear form");
  }
  if (mentions_t(form_)) throw ValidationError("root " + to_string(form_) + " involves T");
}

ChernPolynomial::ChernPolynomial(std::vector<IntPolynomial> classes) : classes_(std::move(classes)) {
  for (std::size_t k = 1; k <= classes_.size(); ++k) {
    const IntPolynomial& c = classes_[k - 1];
    if (c.is_zero()) continue;
    if (!c.is_homogeneous() || c.degree() != static_cast<int>(k)) {
      throw ValidationError("c_" + std::to_string(k) + " = " + to_string(c) +
                            " is not homogeneous of degree " + std::to_string(k));
    }
    if (mentions_t(c)) throw ValidationError("c_" + std::to_string(k) + " involves T");
  }
}

ChernPolynomial ChernPolynomial::from_expanded(const IntPolynomial& p) {
  const auto by_power = p.coefficients_in(VarId::t());
  if (by_power.empty()) throw ValidationError("zero is not a Chern polynomial");
  const unsigned rank = by_power.rbegin()->first;
  if (by_power.rbegin()->second != IntPolynomial(1)) {
    throw ValidationError(to_string(p) + " is not monic in T");
  }
  std::vector<IntPolynomial> classes(rank);
  for (const auto& [power, coeff] : by_power) {
    if (power == rank) continue;
    const unsigned k = rank - power;
    classes[k - 1] = (k % 2 == 0) ? coeff : -coeff;
  }
  return ChernPolynomial(std::move(classes));
}

IntPolynomial ChernPolynomial::c(unsigned k) const {
  if (k == 0) return 1;
  if (k > classes_.size()) return {};
  return classes_[k - 1];
}

IntPolynomial ChernPolynomial::expand() const {
  const unsigned r = rank();
  IntPolynomial out = chern_t().pow(r);
  for (unsigned k = 1; k <= r; ++k) {
    const IntPolynomial term = classes_[k - 1] * chern_t().pow(r - k);
    if (k % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

ChernPolynomial chern_from_roots(std::span<const LinearRoot> roots) {
  IntPolynomial product(1);
  for (const auto& root : roots) product *= chern_t() + root.form();
  return ChernPolynomial::from_expanded(product);
}

ChernPolynomial chern_product(const ChernPolynomial& p, const ChernPolynomial& q) {
  return ChernPolynomial::from_expanded(p.expand() * q.expand());
}

ChernPolynomial chern_dual(const ChernPolynomial& p) {
  std::vector<IntPolynomial> classes = p.classes();
  for (std::size_t k = 1; k <= classes.size(); k += 2) classes[k - 1] = -classes[k - 1];
  return ChernPolynomial(std::move(classes));
}

ChernPolynomial chern_twist(const ChernPolynomial& p, const LinearRoot& shift) {
  Substitution map;
  map.emplace(VarId::t(), chern_t() + shift.form());
  for (VarId v : p.expand().variables()) map.try_emplace(v, IntPolynomial::var(v));
  return ChernPolynomial::from_expanded(substitute(p.expand(), map));
}

ChernPolynomial tautological_chern(Tautological which, const ChowContext& ctx) {
  if (ctx.kind() != ChowContext::Kind::IncidenceFlag) {
    throw ValidationError("tautological classes live on Fbar(d,n), not " + ctx.literal());
  }
  if (which == Tautological::Sub) {
    return ChernPolynomial({-IntPolynomial::var(VarId::x(ctx.d()))});
  }
  return ChernPolynomial({IntPolynomial::var(VarId::x(ctx.d() + 1))});
}

namespace {

void check_grassmannian(unsigned d, unsigned n) {
  if (d < 2 || 2 * d > n) {
    throw ValidationError("needs 2 <= d <= n-d (got d=" + std::to_string(d) +
                          ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

HnSplit hn_split_factorization(unsigned d, unsigned n, long b) {
  check_grassmannian(d, n);
  if (b >= 0) throw ValidationError("the split needs b < 0");
  std::vector<LinearRoot> roots;
  for (unsigned i = 1; i <= d; ++i) {
    roots.emplace_back(scale(IntPolynomial::var(VarId::x(i)), b));
  }
  ChernPolynomial sub = chern_from_roots(std::span(roots).first(d - 1));
  ChernPolynomial quotient = chern_from_roots(std::span(roots).last(1));
  const bool verified = chern_product(sub, quotient).expand() == chern_from_roots(roots).expand();
  return {std::move(sub), std::move(quotient), verified};
}

ShiftFactorization quotient_shift_factorization(unsigned d, unsigned n, long beta) {
  check_grassmannian(d, n);
  if (beta >= 0) throw ValidationError("the factorization needs beta < 0");
  const unsigned k = n - d;
  const IntPolynomial t = chern_t();

  std::vector<IntPolynomial> scaled;  // beta X1 .. beta X(d+1)
  for (unsigned i = 1; i <= d + 1; ++i) scaled.push_back(scale(IntPolynomial::var(VarId::x(i)), beta));

  std::vector<IntPolynomial> pullback_args{t};  // (T, beta X1, ..., beta Xd)
  pullback_args.insert(pullback_args.end(), scaled.begin(), scaled.end() - 1);
  std::vector<IntPolynomial> sub_args{t};  // (T, beta X1, ..., beta X(d+1))
  sub_args.insert(sub_args.end(), scaled.begin(), scaled.end());

  mpz_class beta_power;
  mpz_pow_ui(beta_power.get_mpz_t(), mpz_class(beta).get_mpz_t(), k);
  const auto xs = x_vars(d + 1);

  IntPolynomial lhs =
      complete_homogeneous(k, pullback_args) - scale(complete_homogeneous(k, xs), beta_power);
  IntPolynomial rhs = (t - scaled.back()) * complete_homogeneous(k - 1, sub_args);
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

}  // namespace flagchow
