#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace vnq {

using cx = std::complex<double>;

/// Default tolerance for validity checks (norms, unitarity).
inline constexpr double kValidityTol = 1e-10;
/// Default tolerance for identities that hold up to rounding only.
inline constexpr double kIdentityTol = 1e-12;

/// Square complex matrix checked to be unitary on construction.
class DenseUnitary {
 public:
  /// Throws E_UNITARY if max|U†U - I| exceeds tol; the message carries the
  /// measured deviation.
  explicit DenseUnitary(Eigen::MatrixXcd entries, double tol = kValidityTol);

  static DenseUnitary identity(std::int64_t dim);

  std::int64_t dim() const noexcept { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  DenseUnitary adjoint() const;

  /// Max|U†U - I| for an arbitrary square matrix.
  static double unitarity_deviation(const Eigen::MatrixXcd& m);

 private:
  Eigen::MatrixXcd entries_;
};

}  // namespace vnq
