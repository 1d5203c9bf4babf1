#include "flagchow/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "flagchow/errors.hpp"

namespace flagchow {

VarId VarId::x(unsigned index) {
  if (index == 0) throw ValidationError("X-variable indices start at 1");
  return VarId(Kind::X, index);
}

std::string VarId::name() const {
  switch (kind_) {
    case Kind::X:
      return "X" + std::to_string(index_);
    case Kind::T:
      return "T";
    case Kind::H:
      return "H";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, VarId v) { return os << v.name(); }

std::vector<VarId> x_vars(unsigned count) {
  std::vector<VarId> out;
  out.reserve(count);
  for (unsigned i = 1; i <= count; ++i) out.push_back(VarId::x(i));
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(VarId v, unsigned exponent) { return Monomial({{v, exponent}}); }

unsigned Monomial::exponent(VarId v) const noexcept {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::swapped(VarId a, VarId b) const {
  std::vector<Factor> f = factors_;
  for (auto& [v, e] : f) {
    if (v == a) {
      v = b;
    } else if (v == b) {
      v = a;
    }
  }
  return Monomial(std::move(f));
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() && ib != fb.end()) {
    if (ia->first < ib->first) return std::strong_ordering::greater;
    if (ib->first < ia->first) return std::strong_ordering::less;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
    ++ia;
    ++ib;
  }
  if (ia != fa.end()) return std::strong_ordering::greater;
  if (ib != fb.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

IntPolynomial::IntPolynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

IntPolynomial IntPolynomial::var(VarId v) { return term(1, Monomial::of(v)); }

IntPolynomial IntPolynomial::term(const mpz_class& coefficient, Monomial m) {
  IntPolynomial p;
  if (coefficient != 0) p.terms_.emplace(std::move(m), coefficient);
  return p;
}

void IntPolynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int IntPolynomial::degree() const {
  // The map is grlex-descending, so the first term has the top degree.
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool IntPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

mpz_class IntPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::set<VarId> IntPolynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) out.insert(v);
  }
  return out;
}

bool IntPolynomial::uses_only(std::span<const VarId> allowed) const {
  for (VarId v : variables()) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
  }
  return true;
}

std::map<unsigned, IntPolynomial> IntPolynomial::coefficients_in(VarId v) const {
  std::map<unsigned, IntPolynomial> out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> rest;
    unsigned power = 0;
    for (const auto& f : m.factors()) {
      if (f.first == v) {
        power = f.second;
      } else {
        rest.push_back(f);
      }
    }
    out[power].add_term(Monomial(std::move(rest)), c);
  }
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial out;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
  }
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& q) {
  *this = *this * q;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) { return p - q; }
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial scale(const IntPolynomial& p, const mpz_class& c) {
  if (c == 0) return {};
  IntPolynomial out;
  for (const auto& [m, coeff] : p.terms()) out += IntPolynomial::term(coeff * c, m);
  return out;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.is_one() || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (need_star) os << '*';
      os << v.name();
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// Symmetric functions

namespace {

// Calls visit(exps) for every composition of k into exps.size() nonnegative parts.
template <typename Visit>
void for_each_composition(unsigned k, std::vector<unsigned>& exps, std::size_t pos, Visit&& visit) {
  if (pos + 1 == exps.size()) {
    exps[pos] = k;
    visit(exps);
    return;
  }
  for (unsigned e = k + 1; e-- > 0;) {
    exps[pos] = e;
    for_each_composition(k - e, exps, pos + 1, visit);
  }
}

// Cached powers of one argument polynomial.
class PowerTable {
 public:
  explicit PowerTable(const IntPolynomial& base) : powers_{IntPolynomial(1)}, base_(base) {}
  const IntPolynomial& operator[](unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
    return powers_[e];
  }

 private:
  std::vector<IntPolynomial> powers_;
  IntPolynomial base_;
};

}  // namespace

IntPolynomial complete_homogeneous(unsigned k, std::span<const VarId> vars) {
  if (k == 0) return 1;
  if (vars.empty()) return {};
  IntPolynomial out;
  std::vector<unsigned> exps(vars.size());
  for_each_composition(k, exps, 0, [&](const std::vector<unsigned>& e) {
    std::vector<Monomial::Factor> f;
    for (std::size_t i = 0; i < vars.size(); ++i) f.emplace_back(vars[i], e[i]);
    out += IntPolynomial::term(1, Monomial(std::move(f)));
  });
  return out;
}

IntPolynomial complete_homogeneous(unsigned k, std::span<const IntPolynomial> args) {
  if (k == 0) return 1;
  if (args.empty()) return {};
  std::vector<PowerTable> tables;
  tables.reserve(args.size());
  for (const auto& a : args) tables.emplace_back(a);
  IntPolynomial out;
  std::vector<unsigned> exps(args.size());
  for_each_composition(k, exps, 0, [&](const std::vector<unsigned>& e) {
    IntPolynomial term(1);
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (e[i] != 0) term *= tables[i][e[i]];
    }
    out += term;
  });
  return out;
}

IntPolynomial elementary_symmetric(unsigned k, std::span<const IntPolynomial> args) {
  // e_j over the first i arguments, built one argument at a time.
  std::vector<IntPolynomial> e(k + 1);
  e[0] = 1;
  for (const auto& a : args) {
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * a;
  }
  return e[k];
}

IntPolynomial elementary_symmetric(unsigned k, std::span<const VarId> vars) {
  std::vector<IntPolynomial> args;
  args.reserve(vars.size());
  for (VarId v : vars) args.push_back(IntPolynomial::var(v));
  return elementary_symmetric(k, args);
}

IntPolynomial substitute(const IntPolynomial& p, const Substitution& map) {
  std::map<VarId, PowerTable> tables;
  for (VarId v : p.variables()) {
    auto it = map.find(v);
    if (it == map.end()) {
      throw ValidationError("incomplete substitution: no image for " + v.name());
    }
    tables.emplace(v, PowerTable(it->second));
  }
  IntPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    IntPolynomial term(c);
    for (const auto& [v, e] : m.factors()) term *= tables.at(v)[e];
    out += term;
  }
  return out;
}

bool is_symmetric_in(const IntPolynomial& p, std::span<const VarId> subset) {
  for (std::size_t i = 0; i + 1 < subset.size(); ++i) {
    for (const auto& [m, c] : p.terms()) {
      if (p.coefficient(m.swapped(subset[i], subset[i + 1])) != c) return false;
    }
  }
  return true;
}

IntPolynomial homogeneous_component(const IntPolynomial& p, unsigned k) {
  IntPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == k) out += IntPolynomial::term(c, m);
  }
  return out;
}

bool verify_h_shift_identity(std::span<const VarId> s, VarId u, VarId v, unsigned k) {
  if (u == v) throw ValidationError("h-shift identity needs distinct u and v");
  if (std::find(s.begin(), s.end(), u) != s.end() || std::find(s.begin(), s.end(), v) != s.end()) {
    throw ValidationError("h-shift identity needs u, v outside S");
  }
  if (k == 0) throw ValidationError("h-shift identity needs k >= 1");
  std::vector<VarId> with_u(s.begin(), s.end());
  with_u.push_back(u);
  std::vector<VarId> with_v(s.begin(), s.end());
  with_v.push_back(v);
  std::vector<VarId> with_both = with_u;
  with_both.push_back(v);
  const IntPolynomial lhs = complete_homogeneous(k, with_u) - complete_homogeneous(k, with_v);
  const IntPolynomial rhs = (IntPolynomial::var(u) - IntPolynomial::var(v)) *
                            complete_homogeneous(k - 1, with_both);
  return lhs == rhs;
}

}  // namespace flagchow
