#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace swinv {

/// Summation rule for discrete inner products on a Grid.
///  - rectangle: every node weighted by the spacing (i = 0..n inclusive)
///  - trapezoid: end nodes weighted by half the spacing
enum class Quadrature { rectangle, trapezoid };

/// Uniform partition of [a, b] into n cells (n + 1 nodes).
class Grid {
 public:
  /// Throws DomainError unless b > a and n >= 1.
  static Grid uniform(double a, double b, std::size_t n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t cells() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ + 1; }
  double spacing() const noexcept { return spacing_; }

  double operator[](std::size_t i) const { return points_[static_cast<Eigen::Index>(i)]; }
  const Eigen::VectorXd& points() const noexcept { return points_; }

  /// Left endpoints of the n cells (points[0..n-1]).
  Eigen::VectorXd left_nodes() const { return points_.head(static_cast<Eigen::Index>(n_)); }

 private:
  Grid(double a, double b, std::size_t n);

  double a_;
  double b_;
  std::size_t n_;
  double spacing_;
  Eigen::VectorXd points_;
};

Grid make_uniform_grid(double a, double b, std::size_t n);

/// Dirichlet eigenbasis of -d²/dx² on [0, L]:
///   phi_k(x) = sqrt(2/L) sin(k pi x / L),  lambda_k = (k pi / L)².
/// With L = pi this is sqrt(2/pi) sin(kx) and lambda_k = k².
class SineBasis {
 public:
  SineBasis(double length, int modes);

  double length() const noexcept { return length_; }
  int modes() const noexcept { return modes_; }

  double eigenvalue(int k) const;
  double operator()(int k, double x) const;

 private:
  void check_mode(int k) const;

  double length_;
  int modes_;
};

double eval_eigenfunction(const SineBasis& basis, int k, double x);

/// Discrete inner product sum_i values_i phi_k(x_i) w_i on a grid over [0, L].
double project(const Eigen::Ref<const Eigen::VectorXd>& values, const Grid& grid,
               const SineBasis& basis, int k, Quadrature rule = Quadrature::rectangle);

/// Coefficients for k = 1..basis.modes().
Eigen::VectorXd project_all(const Eigen::Ref<const Eigen::VectorXd>& values, const Grid& grid,
                            const SineBasis& basis, Quadrature rule = Quadrature::rectangle);

/// Pointwise sum_k coeffs_k phi_k(x_i); coeffs.size() must equal basis.modes().
Eigen::VectorXd synthesize(const Eigen::Ref<const Eigen::VectorXd>& coeffs, const SineBasis& basis,
                           const Grid& grid);

/// K × (n+1) table phi_k(x_i), rows k = 1..K.
Eigen::MatrixXd eigenfunction_table(const SineBasis& basis, const Grid& grid);

}  // namespace swinv
