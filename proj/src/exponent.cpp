#include "monoclose/exponent.hpp"

#include <ostream>
#include <sstream>

namespace monoclose {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent multiplication overflow");
  return r;
}

ExponentVector::ExponentVector(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch, "exponent dimension must be 1.." + std::to_string(kMaxDim));
  }
}

ExponentVector::ExponentVector(std::initializer_list<std::int64_t> coords)
    : ExponentVector(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

ExponentVector::ExponentVector(std::span<const std::int64_t> coords) : ExponentVector(coords.size()) {
  for (std::size_t i = 0; i < dim_; ++i) c_[i] = coords[i];
}

std::int64_t ExponentVector::degree() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s = checked_add(s, c_[i]);
  return s;
}

bool ExponentVector::nonnegative() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c_[i] < 0) return false;
  }
  return true;
}

bool ExponentVector::is_zero() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool ExponentVector::leq(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c_[i] > other.c_[i]) return false;
  }
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  require_same_dim(o, dim_);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  require_same_dim(o, dim_);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
  return *this;
}

ExponentVector operator*(std::int64_t k, const ExponentVector& v) {
  ExponentVector r = v;
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = checked_mul(k, v[i]);
  return r;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

void require_same_dim(const ExponentVector& a, std::size_t dim) {
  if (a.dim() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected dimension " + std::to_string(dim) + ", got " + a.to_string());
  }
}

}  // namespace monoclose
