#pragma once

// Dense complex linear algebra on truncated, possibly composite, mode spaces.
//
// A DenseOperator carries its tensor-factor layout (the space tag) so that
// partial trace and partial transpose can address a factor by index instead of
// relying on the caller to remember how a composite space was assembled.
// Factor indices are zero-based and refer to positions in the space tag, with
// the leftmost factor being the most significant in the row/column index.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace rqit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdClampTol = 1e-10;
inline constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 20;

class DenseOperator {
 public:
  DenseOperator() = default;

  // Throws ArgumentError when the matrix is not square or the tag product
  // does not match its dimension.
  DenseOperator(Matrix entries, std::vector<int> space_tag);

  // Single-factor operator; the tag is {rows}.
  explicit DenseOperator(Matrix entries);

  static DenseOperator zero(std::vector<int> space_tag);
  static DenseOperator identity(std::vector<int> space_tag);
  // |v><v| for an unnormalized ket.
  static DenseOperator projector(const Ket& ket, std::vector<int> space_tag);
  static DenseOperator projector(const Ket& ket);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const std::vector<int>& space_tag() const { return space_tag_; }
  int factor_count() const { return static_cast<int>(space_tag_.size()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  Complex trace() const { return entries_.trace(); }
  double max_abs_entry() const;
  // max |A - A^dagger| entry.
  double hermiticity_error() const;
  bool is_hermitian(double tol = kHermitianTol) const;

  DenseOperator adjoint() const;
  // Same tag, transformed entries.
  DenseOperator with_entries(Matrix entries) const;

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator-=(const DenseOperator& other);
  DenseOperator& operator*=(Complex scale);

  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
  friend DenseOperator operator*(DenseOperator a, Complex s) { return a *= s; }
  friend DenseOperator operator*(Complex s, DenseOperator a) { return a *= s; }
  // Operator product; the tags must agree.
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

 private:
  Matrix entries_;
  std::vector<int> space_tag_;
};

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns are eigenvectors
};

// The single decomposition primitive behind sqrt, trace norm and PSD checks.
// Throws ArgumentError if the input is not Hermitian within tolerance.
HermitianEigen hermitian_eigen(const DenseOperator& a, double tol = kHermitianTol);

// Smallest eigenvalue of a Hermitian operator.
double min_eigenvalue(const DenseOperator& a);

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b,
                     std::size_t entry_cap = kDefaultEntryCap);

DenseOperator partial_trace(const DenseOperator& a, int factor_index);
DenseOperator partial_transpose(const DenseOperator& a, int factor_index);

// Principal square root of a PSD operator; eigenvalues in [-kPsdClampTol, 0)
// are clamped to zero, anything lower raises NotPsdError.
DenseOperator matrix_sqrt(const DenseOperator& a);

// Sum of |eigenvalues|. Hermitian input only.
double trace_norm(const DenseOperator& a);

// Validates the density-operator role: Hermitian, real trace, eigenvalues above
// the clamp threshold. Trace may be below one.
void require_density(const DenseOperator& a);

// Hermitian part with eigenvalues in [-kPsdClampTol, 0) set to zero.
DenseOperator clamp_psd(const DenseOperator& a);

}  // namespace rqit
