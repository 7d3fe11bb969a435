#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cstdint>
#include <variant>

#include "spgscls/errors.hpp"

namespace spgscls {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using SpMatrix = Eigen::SparseMatrix<double>;
using Index = Eigen::Index;

/// A real matrix held either dense or sparse (compressed column).
/// Value semantics; which storage is used is decided by the producer.
class RealMatrix {
 public:
  RealMatrix() : mat_(Matrix(0, 0)) {}
  explicit RealMatrix(Matrix m) : mat_(std::move(m)) {}
  explicit RealMatrix(SpMatrix m) : mat_(std::move(m)) {
    std::get<SpMatrix>(mat_).makeCompressed();
  }

  bool is_sparse() const { return std::holds_alternative<SpMatrix>(mat_); }

  Index rows() const {
    return is_sparse() ? sparse().rows() : dense().rows();
  }
  Index cols() const {
    return is_sparse() ? sparse().cols() : dense().cols();
  }

  const Matrix& dense() const { return std::get<Matrix>(mat_); }
  const SpMatrix& sparse() const { return std::get<SpMatrix>(mat_); }

  Vector apply(const Vector& x) const {
    return is_sparse() ? Vector(sparse() * x) : Vector(dense() * x);
  }
  Vector apply_transpose(const Vector& x) const {
    return is_sparse() ? Vector(sparse().transpose() * x)
                       : Vector(dense().transpose() * x);
  }

  Matrix to_dense() const { return is_sparse() ? Matrix(sparse()) : dense(); }

  /// Sparse view; exact zeros of a dense matrix are dropped.
  SpMatrix to_sparse() const {
    if (is_sparse()) return sparse();
    SpMatrix s = dense().sparseView(0.0, 0.0);
    s.makeCompressed();
    return s;
  }

  /// Number of stored nonzero entries (exact-zero aware for dense storage).
  std::int64_t nnz() const {
    if (is_sparse()) {
      std::int64_t c = 0;
      for (Index k = 0; k < sparse().outerSize(); ++k)
        for (SpMatrix::InnerIterator it(sparse(), k); it; ++it)
          if (it.value() != 0.0) ++c;
      return c;
    }
    return (dense().array() != 0.0).count();
  }

  double fill_ratio() const {
    const double total = static_cast<double>(rows()) * static_cast<double>(cols());
    return total > 0 ? static_cast<double>(nnz()) / total : 0.0;
  }

  bool all_finite() const {
    if (is_sparse()) {
      for (Index k = 0; k < sparse().outerSize(); ++k)
        for (SpMatrix::InnerIterator it(sparse(), k); it; ++it)
          if (!std::isfinite(it.value())) return false;
      return true;
    }
    return dense().allFinite();
  }

 private:
  std::variant<Matrix, SpMatrix> mat_;
};

/// Raw game instance: features X (m samples by n features), true labels y,
/// provider targets z, and the manipulation regularization weight gamma.
struct ProblemData {
  RealMatrix X;
  Vector y;
  Vector z;
  double gamma = 0.1;

  Index num_samples() const { return X.rows(); }
  Index num_features() const { return X.cols(); }
};

/// Compiled quadratic form on the unit sphere:
///   f(r) = || Lhat r - (y - z/2) ||^2 = r' H r + 2 g' r + p
/// with Lhat = [ (sqrt(gamma)/2) X , z/2 ],  H = Lhat' Lhat.
struct SclsProblem {
  RealMatrix Lhat;  // m x (n+1)
  RealMatrix H;     // (n+1) x (n+1), symmetric PSD
  Vector g;         // n+1
  double p = 0.0;
  Index dim = 0;    // n+1
  double gamma = 0.1;  // carried for solution recovery
};

enum class InitPolicy { LastAxis, RandomUnit };

struct SolverConfig {
  double rho = 5.0;
  double eps = 1e-8;
  int max_iters = 10000;
  InitPolicy init = InitPolicy::LastAxis;
  std::uint64_t init_seed = 0;
  bool record_trace = false;

  void validate() const {
    if (!(rho > 0.0))
      throw Error(ErrorCode::InvalidConfig, "penalty rho must be positive");
    if (!(eps > 0.0))
      throw Error(ErrorCode::InvalidConfig, "tolerance eps must be positive");
    if (max_iters < 1)
      throw Error(ErrorCode::InvalidConfig, "max_iters must be at least 1");
  }
};

}  // namespace spgscls
