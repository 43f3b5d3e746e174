#include "rqit/fock_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "rqit/errors.hpp"

namespace rqit {
namespace {

long long tag_product(const std::vector<int>& tag) {
  long long p = 1;
  for (int d : tag) {
    if (d <= 0) throw ArgumentError("space tag entries must be positive");
    p *= d;
  }
  return p;
}

std::string tag_string(const std::vector<int>& tag) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < tag.size(); ++i) os << (i ? "," : "") << tag[i];
  os << '}';
  return os.str();
}

// Splits the space around one factor: dim = outer * mid * inner.
struct FactorSplit {
  int outer;
  int mid;
  int inner;
};

FactorSplit split_at(const DenseOperator& a, int factor_index) {
  const auto& tag = a.space_tag();
  if (factor_index < 0 || factor_index >= static_cast<int>(tag.size())) {
    throw ArgumentError("factor index " + std::to_string(factor_index) +
                        " out of range for space " + tag_string(tag));
  }
  FactorSplit s{1, tag[factor_index], 1};
  for (int i = 0; i < factor_index; ++i) s.outer *= tag[i];
  for (int i = factor_index + 1; i < static_cast<int>(tag.size()); ++i) s.inner *= tag[i];
  return s;
}

double hermitian_scale(const DenseOperator& a) { return std::max(1.0, a.max_abs_entry()); }

}  // namespace

DenseOperator::DenseOperator(Matrix entries, std::vector<int> space_tag)
    : entries_(std::move(entries)), space_tag_(std::move(space_tag)) {
  if (entries_.rows() != entries_.cols()) throw ArgumentError("operator must be square");
  if (space_tag_.empty()) throw ArgumentError("space tag must not be empty");
  if (tag_product(space_tag_) != entries_.rows()) {
    throw ArgumentError("space tag " + tag_string(space_tag_) + " does not match dimension " +
                        std::to_string(entries_.rows()));
  }
}

DenseOperator::DenseOperator(Matrix entries)
    : entries_(std::move(entries)), space_tag_{static_cast<int>(entries_.rows())} {
  if (entries_.rows() != entries_.cols()) throw ArgumentError("operator must be square");
}

DenseOperator DenseOperator::zero(std::vector<int> space_tag) {
  const auto d = tag_product(space_tag);
  return DenseOperator(Matrix::Zero(d, d), std::move(space_tag));
}

DenseOperator DenseOperator::identity(std::vector<int> space_tag) {
  const auto d = tag_product(space_tag);
  return DenseOperator(Matrix::Identity(d, d), std::move(space_tag));
}

DenseOperator DenseOperator::projector(const Ket& ket, std::vector<int> space_tag) {
  return DenseOperator(ket * ket.adjoint(), std::move(space_tag));
}

DenseOperator DenseOperator::projector(const Ket& ket) { return DenseOperator(ket * ket.adjoint()); }

double DenseOperator::max_abs_entry() const {
  return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
}

double DenseOperator::hermiticity_error() const {
  return entries_.size() == 0 ? 0.0 : (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

bool DenseOperator::is_hermitian(double tol) const {
  return hermiticity_error() <= tol * hermitian_scale(*this);
}

DenseOperator DenseOperator::adjoint() const { return with_entries(entries_.adjoint()); }

DenseOperator DenseOperator::with_entries(Matrix entries) const {
  return DenseOperator(std::move(entries), space_tag_);
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  if (other.space_tag_ != space_tag_) throw ArgumentError("operator sum: space tags differ");
  entries_ += other.entries_;
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& other) {
  if (other.space_tag_ != space_tag_) throw ArgumentError("operator difference: space tags differ");
  entries_ -= other.entries_;
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex scale) {
  entries_ *= scale;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.space_tag() != b.space_tag()) throw ArgumentError("operator product: space tags differ");
  return a.with_entries(a.matrix() * b.matrix());
}

HermitianEigen hermitian_eigen(const DenseOperator& a, double tol) {
  if (!a.is_hermitian(tol)) {
    throw ArgumentError("operator is not Hermitian (max |A - A^dagger| = " +
                        std::to_string(a.hermiticity_error()) + ")");
  }
  const Matrix sym = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const DenseOperator& a) {
  const auto eig = hermitian_eigen(a);
  return eig.values.size() ? eig.values.minCoeff() : 0.0;
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b, std::size_t entry_cap) {
  const auto da = static_cast<std::size_t>(a.dim());
  const auto db = static_cast<std::size_t>(b.dim());
  const std::size_t d = da * db;
  if (d != 0 && d > entry_cap / d) {
    throw SizeError("tensor product of dimension " + std::to_string(d) + " exceeds entry cap " +
                    std::to_string(entry_cap));
  }
  Matrix out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  const auto na = static_cast<Eigen::Index>(da);
  const auto nb = static_cast<Eigen::Index>(db);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
    }
  }
  std::vector<int> tag = a.space_tag();
  tag.insert(tag.end(), b.space_tag().begin(), b.space_tag().end());
  return DenseOperator(std::move(out), std::move(tag));
}

DenseOperator partial_trace(const DenseOperator& a, int factor_index) {
  const auto [outer, mid, inner] = split_at(a, factor_index);
  std::vector<int> tag = a.space_tag();
  tag.erase(tag.begin() + factor_index);
  if (tag.empty()) tag.push_back(1);

  const Matrix& m = a.matrix();
  const int d = outer * inner;
  Matrix out = Matrix::Zero(d, d);
  for (int o = 0; o < outer; ++o) {
    for (int op = 0; op < outer; ++op) {
      for (int k = 0; k < mid; ++k) {
        out.block(o * inner, op * inner, inner, inner) +=
            m.block((o * mid + k) * inner, (op * mid + k) * inner, inner, inner);
      }
    }
  }
  return DenseOperator(std::move(out), std::move(tag));
}

DenseOperator partial_transpose(const DenseOperator& a, int factor_index) {
  const auto [outer, mid, inner] = split_at(a, factor_index);
  const Matrix& m = a.matrix();
  Matrix out(m.rows(), m.cols());
  // Swap the chosen factor's row and column indices, blockwise over the rest.
  for (int o = 0; o < outer; ++o) {
    for (int op = 0; op < outer; ++op) {
      for (int k = 0; k < mid; ++k) {
        for (int kp = 0; kp < mid; ++kp) {
          out.block((o * mid + k) * inner, (op * mid + kp) * inner, inner, inner) =
              m.block((o * mid + kp) * inner, (op * mid + k) * inner, inner, inner);
        }
      }
    }
  }
  return a.with_entries(std::move(out));
}

DenseOperator matrix_sqrt(const DenseOperator& a) {
  const auto eig = hermitian_eigen(a);
  Eigen::VectorXd roots(eig.values.size());
  const double scale = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  // Eigenvalues at rounding level are zero; their square roots would not be.
  const double floor = static_cast<double>(eig.values.size()) *
                       std::numeric_limits<double>::epsilon() * scale;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double v = eig.values(i);
    if (v < -kPsdClampTol) {
      throw NotPsdError("matrix_sqrt: eigenvalue " + std::to_string(v) + " below -1e-10");
    }
    roots(i) = v > floor ? std::sqrt(v) : 0.0;
  }
  return a.with_entries(eig.vectors * roots.asDiagonal() * eig.vectors.adjoint());
}

double trace_norm(const DenseOperator& a) {
  return hermitian_eigen(a).values.cwiseAbs().sum();
}

void require_density(const DenseOperator& a) {
  if (!a.is_hermitian()) throw ArgumentError("density operator must be Hermitian");
  if (std::abs(a.trace().imag()) > kHermitianTol) throw ArgumentError("density trace is not real");
  const double lo = min_eigenvalue(a);
  if (lo < -kPsdClampTol) {
    throw NotPsdError("density operator has eigenvalue " + std::to_string(lo));
  }
}

DenseOperator clamp_psd(const DenseOperator& a) {
  const auto eig = hermitian_eigen(a);
  Eigen::VectorXd vals = eig.values;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -kPsdClampTol) throw NotPsdError("clamp_psd: eigenvalue " + std::to_string(vals(i)));
    vals(i) = std::max(vals(i), 0.0);
  }
  return a.with_entries(eig.vectors * vals.asDiagonal() * eig.vectors.adjoint());
}

}  // namespace rqit
