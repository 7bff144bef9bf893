#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

#include "monoclose/errors.hpp"

namespace monoclose {

inline constexpr std::size_t kMaxDim = 3;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Exponent of a monomial x_1^{a_1} ... x_d^{a_d}, d <= 3.
///
/// Coordinates are unrestricted integers so differences can be formed; the
/// nonnegativity invariant is enforced where exponents enter an ideal or a
/// semigroup. Arithmetic is overflow-checked.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim);
  ExponentVector(std::initializer_list<std::int64_t> coords);
  explicit ExponentVector(std::span<const std::int64_t> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }

  std::span<const std::int64_t> coords() const noexcept { return {c_.data(), dim_}; }

  /// Total degree a_1 + ... + a_d.
  std::int64_t degree() const;
  bool nonnegative() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise order.
  bool leq(const ExponentVector& other) const noexcept;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(std::int64_t k, const ExponentVector& v);

  /// Lexicographic, dimension first.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (std::size_t i = 0; i < a.dim_; ++i) {
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    return (a <=> b) == 0;
  }

  std::string to_string() const;

 private:
  std::array<std::int64_t, kMaxDim> c_{};
  std::size_t dim_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

void require_same_dim(const ExponentVector& a, std::size_t dim);

struct ExponentHash {
  std::size_t operator()(const ExponentVector& v) const noexcept {
    std::size_t h = v.dim();
    for (std::size_t i = 0; i < v.dim(); ++i) {
      h ^= std::hash<std::int64_t>{}(v[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace monoclose
