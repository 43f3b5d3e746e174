#pragma once

// Geometry of the effective (low-acceleration) qubit state space.
//
// Distances use D(rho, sigma) = 2 [Tr rho Tr sigma - F(rho, sigma)] with
// F = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, which vanishes at sigma = rho even
// for the subnormalized low-acceleration family. Line elements are normalized
// so that ds^2 = D / 2 for a Bloch displacement dn; with that convention the
// unaccelerated metric is the round Bures metric (1/4)[dn^2 + (n.dn)^2/(1-n^2)].

#include <array>
#include <functional>
#include <string_view>

#include <Eigen/Dense>

#include "rqit/fock_linalg.hpp"
#include "rqit/unruh_channel.hpp"

namespace rqit {

enum class Chart {
  kCartesianBloch,  // (x, y, z)
  kPolar,           // (xi_c, theta, phi); xi_c is the Bloch radius
};

struct MetricValue {
  std::array<double, 3> point{};
  Chart chart = Chart::kCartesianBloch;
  Eigen::Matrix3d tensor = Eigen::Matrix3d::Zero();
};

double fidelity(const DenseOperator& rho, const DenseOperator& sigma);
double generalized_bures_distance(const DenseOperator& rho, const DenseOperator& sigma);

// Low-acceleration metric in Bloch coordinates:
// (1/4C^4) { dn^2 + T^2 dz^2 + dS^2/(1-n^2) [1 - T^2 (1+z)^2/(1-n^2)] }, dS = n.dn.
// Throws DomainError for n^2 >= 1 - 1e-9.
MetricValue metric_cartesian(const BlochVector& bloch, const AccelerationParam& r);

// The off-diagonal entry of the polar perturbation h carries a bare factor
// that can be read as the radial coordinate or as the acceleration parameter.
enum class HReading {
  kRadialCoordinate,
  kAccelerationParameter,
};

std::string_view to_string(HReading reading);

// (g + h) / (4C^4) in (xi_c, theta, phi). Throws DomainError when xi_c or
// sin(theta) is within 1e-6 of a chart singularity, or xi_c >= 1.
MetricValue metric_polar(double xi_c, double theta, const AccelerationParam& r,
                         HReading reading);
// Uses selected_h_reading().
MetricValue metric_polar(double xi_c, double theta, const AccelerationParam& r);

// Cartesian metric pulled back through (x,y,z) = xi_c (sin t cos p, sin t sin p, cos t).
MetricValue pullback_to_polar(double xi_c, double theta, double phi, const AccelerationParam& r);

struct HReadingSelection {
  HReading selected = HReading::kRadialCoordinate;
  // Root-mean-square Frobenius distance to the pulled-back Cartesian metric
  // over the comparison grid, per reading.
  double radial_discrepancy = 0.0;
  double acceleration_discrepancy = 0.0;
};

// Compares both readings against pullback_to_polar on a fixed interior grid of
// (xi_c, theta) at r in {0.05, 0.1, 0.2} and keeps the closer one.
HReadingSelection select_h_reading();
HReading selected_h_reading();

// Geometric evaluations stay inside this Bloch radius; the metric diverges at
// the pure-state boundary.
inline constexpr double kGeometryRadius = 0.9;

// Quadratic form recovered from D on the low-acceleration family by central
// second differences along the three axes and three mixed diagonals, at the
// given step and twice it, combined by one Richardson pass.
// Requires r <= kSmallRLimit and |n| + 2 sqrt(2) step <= kGeometryRadius.
MetricValue numeric_metric(const BlochVector& bloch, const AccelerationParam& r,
                           double step = 1e-3);

// Largest first-order (odd) part of D along the six differencing directions:
// max_v |D(n, n + eps v) - D(n, n - eps v)| / (2 eps). Vanishes when the
// trace-product and fidelity linear terms cancel.
double distance_linear_residue(const BlochVector& bloch, const AccelerationParam& r,
                               double step = 1e-3);

using MetricField = std::function<Eigen::Matrix3d(const Eigen::Vector3d&)>;

// Scalar curvature of a metric field at a point from finite-difference
// Christoffel symbols (central differences with the given step, then one
// Richardson pass against twice the step).
double scalar_curvature(const MetricField& metric, const Eigen::Vector3d& point,
                        double step = 1e-4);

// Scalar curvature of metric_polar (selected reading) at (xi_c, theta).
// Requires 1e-6 < xi_c <= kGeometryRadius and sin(theta) > 1e-6 with room for
// the differencing stencil.
double scalar_curvature_numeric(double xi_c, double theta, const AccelerationParam& r);

// Closed-form (24 + dR) cosh^4 r, with the cos(theta) and cos(2 theta) groups
// inside dR's bracket multiplied together.
// Throws DomainError at xi_c^2 (xi_c^2 - 1) = 0.
double scalar_curvature_closed_form(double xi_c, double theta, const AccelerationParam& r);

struct CurvatureResult {
  double xi_c = 0.0;
  double theta = 0.0;
  double r = 0.0;
  double numeric_R = 0.0;
  double closed_form_R = 0.0;
  double discrepancy = 0.0;  // closed_form_R - numeric_R
};

CurvatureResult compare_curvature(double xi_c, double theta, const AccelerationParam& r);

}  // namespace rqit
