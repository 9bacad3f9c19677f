#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vnq {

/// Ordered list of tensor-factor dimensions of a composite register.
///
/// Basis indices map to mixed-radix digit strings: the FIRST factor is the
/// most significant digit. A program register placed before a data register
/// therefore selects contiguous blocks of the amplitude vector, which is the
/// index order every conditional operator in this library relies on.
class RegisterLayout {
 public:
  /// Each factor dimension must be >= 2.
  explicit RegisterLayout(std::vector<std::int64_t> factors);

  std::size_t num_factors() const noexcept { return factors_.size(); }
  std::int64_t factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::int64_t total_dim() const noexcept { return total_dim_; }

  /// Stride of factor i: the product of all factor dimensions after i.
  std::int64_t stride(std::size_t i) const { return strides_.at(i); }

  /// Mixed-radix digits of a basis index, most significant first.
  std::vector<std::int64_t> digits_of(std::int64_t index) const;

  /// Basis index of a digit string; inverse of digits_of.
  std::int64_t index_of(std::span<const std::int64_t> digits) const;

  /// Layout of the combined register, this register's factors first.
  RegisterLayout concat(const RegisterLayout& other) const;

  bool operator==(const RegisterLayout& other) const noexcept {
    return factors_ == other.factors_;
  }
  bool operator!=(const RegisterLayout& other) const noexcept {
    return !(*this == other);
  }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t total_dim_ = 1;
};

}  // namespace vnq
