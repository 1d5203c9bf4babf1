#include "flagchow/flags.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "flagchow/errors.hpp"

namespace flagchow {

FlagShape::FlagShape(unsigned n, std::vector<unsigned> dims) : n_(n), dims_(std::move(dims)) {
  if (n_ < 2) throw ValidationError("a flag variety needs n >= 2");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1 || dims_[i] > n_ - 1) {
      throw ValidationError("flag dimension " + std::to_string(dims_[i]) + " is outside [1, " +
                            std::to_string(n_ - 1) + "]");
    }
    if (i > 0 && dims_[i] <= dims_[i - 1]) {
      throw ValidationError("flag dimensions must be strictly increasing");
    }
  }
}

FlagShape FlagShape::complete(unsigned n) {
  std::vector<unsigned> dims(n > 1 ? n - 1 : 0);
  std::iota(dims.begin(), dims.end(), 1U);
  return FlagShape(n, std::move(dims));
}

unsigned FlagShape::dim(std::size_t i) const {
  if (i == 0) return 0;
  if (i == dims_.size() + 1) return n_;
  return dims_.at(i - 1);
}

bool FlagShape::is_complete() const { return dims_.size() + 1 == n_; }

std::string FlagShape::literal() const {
  std::string out = "F(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(dims_[i]);
  }
  return out + ";" + std::to_string(n_) + ")";
}

std::string to_string(LineCase c) { return c == LineCase::I ? "I" : "II"; }

std::vector<LineComponent> line_components(const FlagShape& shape) {
  std::vector<LineComponent> out;
  const std::size_t s = shape.length();
  for (std::size_t i = 1; i <= s; ++i) {
    const unsigned di = shape.dim(i);
    const unsigned below = shape.dim(i - 1);
    const unsigned above = shape.dim(i + 1);

    std::vector<unsigned> merged;
    for (std::size_t j = 1; j <= s; ++j) {
      if (j == i) {
        merged.push_back(di - 1);
        merged.push_back(di + 1);
      } else {
        merged.push_back(shape.dim(j));
      }
    }
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::erase_if(merged, [&](unsigned x) { return x == 0 || x == shape.n(); });

    const bool case_one = di - 1 == below && di + 1 == above;
    LineComponent component{i, FlagShape(shape.n(), std::move(merged)),
                            case_one ? LineCase::I : LineCase::II, std::nullopt};
    if (!case_one) component.cotangent_rank = above - below - 2;
    out.push_back(std::move(component));
  }
  return out;
}

SplittingType::SplittingType(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("a splitting type needs rank >= 1");
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

bool SplittingType::is_constant() const {
  return entries_.front() == entries_.back();
}

SplittingType SplittingType::shifted(std::int64_t c) const {
  std::vector<std::int64_t> e = entries_;
  for (auto& x : e) x += c;
  return SplittingType(std::move(e));
}

std::string SplittingType::literal() const {
  std::string out = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(entries_[j]);
  }
  return out + ")";
}

std::strong_ordering lex_compare(const SplittingType& a, const SplittingType& b) {
  if (a.rank() != b.rank()) {
    throw ValidationError("cannot compare splitting types of ranks " + std::to_string(a.rank()) +
                          " and " + std::to_string(b.rank()));
  }
  return a.entries() <=> b.entries();
}

SplittingType normalize(const SplittingType& t) { return t.shifted(-t[0]); }

SplittingType dual_type(const SplittingType& t) {
  std::vector<std::int64_t> e = t.entries();
  for (auto& x : e) x = -x;
  return SplittingType(std::move(e));
}

mpq_class slope(const SplittingType& t) {
  mpz_class sum = 0;
  for (auto x : t.entries()) sum += mpz_class(static_cast<long>(x));
  mpq_class q(sum, mpz_class(static_cast<unsigned long>(t.rank())));
  q.canonicalize();
  return q;
}

GapAudit gap_audit(const SplittingType& t, LineCase c) {
  const std::int64_t allowed = c == LineCase::I ? 0 : 1;
  for (std::size_t j = 0; j + 1 < t.rank(); ++j) {
    if (t[j] - t[j + 1] > allowed) return {false, j + 1};
  }
  return {true, std::nullopt};
}

}  // namespace flagchow
