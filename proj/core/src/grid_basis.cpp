#include "swinv/grid_basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "swinv/errors.hpp"

namespace swinv {

Grid::Grid(double a, double b, std::size_t n)
    : a_(a), b_(b), n_(n), spacing_((b - a) / static_cast<double>(n)),
      points_(static_cast<Eigen::Index>(n + 1)) {
  for (std::size_t i = 0; i <= n; ++i) {
    points_[static_cast<Eigen::Index>(i)] = a + static_cast<double>(i) * spacing_;
  }
  // Pin the right endpoint; a + n*h can be off by an ulp.
  points_[static_cast<Eigen::Index>(n)] = b;
}

Grid Grid::uniform(double a, double b, std::size_t n) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw DomainError("grid: need finite endpoints with b > a, got [" + std::to_string(a) + ", " +
                      std::to_string(b) + "]");
  }
  if (n == 0) throw DomainError("grid: cell count must be >= 1");
  return Grid(a, b, n);
}

Grid make_uniform_grid(double a, double b, std::size_t n) { return Grid::uniform(a, b, n); }

SineBasis::SineBasis(double length, int modes) : length_(length), modes_(modes) {
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("sine basis: length must be > 0");
  if (modes < 1) throw DomainError("sine basis: mode count must be >= 1");
}

void SineBasis::check_mode(int k) const {
  if (k < 1 || k > modes_) {
    throw DomainError("sine basis: mode " + std::to_string(k) + " outside 1.." +
                      std::to_string(modes_));
  }
}

double SineBasis::eigenvalue(int k) const {
  check_mode(k);
  const double w = k * (std::numbers::pi / length_);
  return w * w;
}

double SineBasis::operator()(int k, double x) const {
  check_mode(k);
  const double slack = 1e-12 * length_;
  if (!(x >= -slack && x <= length_ + slack)) {
    throw DomainError("sine basis: x = " + std::to_string(x) + " outside [0, L]");
  }
  return std::sqrt(2.0 / length_) * std::sin(k * (std::numbers::pi / length_) * x);
}

double eval_eigenfunction(const SineBasis& basis, int k, double x) { return basis(k, x); }

namespace {

void check_span(const Grid& grid, const SineBasis& basis) {
  const double tol = 1e-12 * basis.length();
  if (std::abs(grid.a()) > tol || std::abs(grid.b() - basis.length()) > tol) {
    throw DomainError("sine basis: grid must span [0, L]");
  }
}

double weight(const Grid& grid, std::size_t i, Quadrature rule) {
  if (rule == Quadrature::trapezoid && (i == 0 || i == grid.cells())) return 0.5 * grid.spacing();
  return grid.spacing();
}

}  // namespace

double project(const Eigen::Ref<const Eigen::VectorXd>& values, const Grid& grid,
               const SineBasis& basis, int k, Quadrature rule) {
  check_span(grid, basis);
  if (static_cast<std::size_t>(values.size()) != grid.size()) {
    throw DomainError("project: " + std::to_string(values.size()) + " values on a grid of " +
                      std::to_string(grid.size()) + " nodes");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    sum += values[ii] * basis(k, grid[i]) * weight(grid, i, rule);
  }
  return sum;
}

Eigen::VectorXd project_all(const Eigen::Ref<const Eigen::VectorXd>& values, const Grid& grid,
                            const SineBasis& basis, Quadrature rule) {
  Eigen::VectorXd out(basis.modes());
  for (int k = 1; k <= basis.modes(); ++k) out[k - 1] = project(values, grid, basis, k, rule);
  return out;
}

Eigen::MatrixXd eigenfunction_table(const SineBasis& basis, const Grid& grid) {
  check_span(grid, basis);
  Eigen::MatrixXd table(basis.modes(), static_cast<Eigen::Index>(grid.size()));
  for (int k = 1; k <= basis.modes(); ++k) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      table(k - 1, static_cast<Eigen::Index>(i)) = basis(k, grid[i]);
    }
  }
  return table;
}

Eigen::VectorXd synthesize(const Eigen::Ref<const Eigen::VectorXd>& coeffs, const SineBasis& basis,
                           const Grid& grid) {
  if (coeffs.size() != basis.modes()) {
    throw DomainError("synthesize: " + std::to_string(coeffs.size()) + " coefficients for " +
                      std::to_string(basis.modes()) + " modes");
  }
  const Eigen::MatrixXd table = eigenfunction_table(basis, grid);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(table.cols());
  for (Eigen::Index k = 0; k < table.rows(); ++k) out += coeffs[k] * table.row(k).transpose();
  return out;
}

}  // namespace swinv
