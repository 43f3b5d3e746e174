#include "rqit/state_geometry.hpp"

#include <array>
#include <cmath>

#include "rqit/distinguishability.hpp"
#include "rqit/errors.hpp"

namespace rqit {
namespace {

using Christoffel = std::array<Eigen::Matrix3d, 3>;  // [a](b, c) = Gamma^a_bc

Christoffel christoffel(const MetricField& metric, const Eigen::Vector3d& p, double h) {
  std::array<Eigen::Matrix3d, 3> dg;  // [k] = d_k g
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d e = h * Eigen::Vector3d::Unit(k);
    dg[static_cast<std::size_t>(k)] = (metric(p + e) - metric(p - e)) / (2.0 * h);
  }
  const Eigen::Matrix3d inv = metric(p).inverse();
  Christoffel gamma;
  for (int a = 0; a < 3; ++a) {
    Eigen::Matrix3d& ga = gamma[static_cast<std::size_t>(a)];
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int d = 0; d < 3; ++d) {
          s += inv(a, d) * (dg[static_cast<std::size_t>(b)](d, c) +
                            dg[static_cast<std::size_t>(c)](d, b) -
                            dg[static_cast<std::size_t>(d)](b, c));
        }
        ga(b, c) = 0.5 * s;
      }
    }
  }
  return gamma;
}

double curvature_at_step(const MetricField& metric, const Eigen::Vector3d& p, double h) {
  const Christoffel gamma = christoffel(metric, p, h);
  std::array<Christoffel, 3> dgamma;  // [k][a](b, c) = d_k Gamma^a_bc
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d e = h * Eigen::Vector3d::Unit(k);
    const Christoffel plus = christoffel(metric, p + e, h);
    const Christoffel minus = christoffel(metric, p - e, h);
    for (std::size_t a = 0; a < 3; ++a) {
      dgamma[static_cast<std::size_t>(k)][a] = (plus[a] - minus[a]) / (2.0 * h);
    }
  }
  // Ric_bc = d_a G^a_bc - d_c G^a_ba + G^a_ad G^d_bc - G^a_cd G^d_ba
  Eigen::Matrix3d ricci = Eigen::Matrix3d::Zero();
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (std::size_t a = 0; a < 3; ++a) {
        s += dgamma[a][a](b, c) - dgamma[static_cast<std::size_t>(c)][a](b, static_cast<int>(a));
        for (std::size_t d = 0; d < 3; ++d) {
          s += gamma[a](static_cast<int>(a), static_cast<int>(d)) * gamma[d](b, c) -
               gamma[a](c, static_cast<int>(d)) * gamma[d](b, static_cast<int>(a));
        }
      }
      ricci(b, c) = s;
    }
  }
  return (metric(p).inverse().cwiseProduct(ricci)).sum();
}

void require_polar_chart(double xi_c, double theta) {
  if (!(xi_c > 1e-6) || !(xi_c < 1.0)) {
    throw DomainError("polar chart requires 1e-6 < xi_c < 1");
  }
  if (!(std::sin(theta) > 1e-6)) throw DomainError("polar chart singular at sin(theta) <= 1e-6");
}

Eigen::Matrix3d polar_tensor(double xi, double theta, double r, HReading reading) {
  const double ch = std::cosh(r);
  const double t2 = std::tanh(r) * std::tanh(r);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double factor = reading == HReading::kRadialCoordinate ? xi : r;

  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  g(0, 0) = 1.0 / (1.0 - xi * xi);
  g(1, 1) = xi * xi;
  g(2, 2) = xi * xi * s * s;

  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  h(0, 0) = t2 * (1.0 + xi * c) * (1.0 + xi * c) + 0.5 * t2 * c * c;
  h(0, 1) = h(1, 0) = -0.5 * t2 * factor * s * c;
  h(1, 1) = 0.5 * t2 * xi * xi * s * s;

  return (g + h) / (4.0 * ch * ch * ch * ch);
}

Eigen::Matrix3d cartesian_tensor(const Eigen::Vector3d& n, double r) {
  const double ch = std::cosh(r);
  const double t2 = std::tanh(r) * std::tanh(r);
  const double n2 = n.squaredNorm();
  if (!(n2 < 1.0 - 1e-9)) throw DomainError("metric diverges at the pure-state boundary");
  const double one_minus = 1.0 - n2;
  const double bracket = 1.0 - t2 * (1.0 + n.z()) * (1.0 + n.z()) / one_minus;
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(2, 2) += t2;
  m += (n * n.transpose()) * (bracket / one_minus);
  return m / (4.0 * ch * ch * ch * ch);
}

BlochVector to_bloch(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

// Displacement directions: three axes then the three mixed diagonals.
std::array<Eigen::Vector3d, 6> differencing_directions() {
  return {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0), Eigen::Vector3d(0, 0, 1),
          Eigen::Vector3d(1, 1, 0), Eigen::Vector3d(1, 0, 1), Eigen::Vector3d(0, 1, 1)};
}

void require_numeric_domain(const BlochVector& bloch, const AccelerationParam& r, double step) {
  if (r.r() > kSmallRLimit) throw ArgumentError("numeric_metric requires r <= 0.3");
  if (!(step > 0.0)) throw ArgumentError("differencing step must be positive");
  if (std::sqrt(bloch.norm_squared()) + std::sqrt(2.0) * step > kGeometryRadius) {
    throw DomainError("numeric metric stencil leaves the |n| <= 0.9 region");
  }
}

}  // namespace

double fidelity(const DenseOperator& rho, const DenseOperator& sigma) {
  const double root = root_fidelity(rho, sigma);
  return root * root;
}

double generalized_bures_distance(const DenseOperator& rho, const DenseOperator& sigma) {
  return 2.0 * (rho.trace().real() * sigma.trace().real() - fidelity(rho, sigma));
}

MetricValue metric_cartesian(const BlochVector& bloch, const AccelerationParam& r) {
  const Eigen::Vector3d n(bloch.x, bloch.y, bloch.z);
  return {{bloch.x, bloch.y, bloch.z}, Chart::kCartesianBloch, cartesian_tensor(n, r.r())};
}

std::string_view to_string(HReading reading) {
  return reading == HReading::kRadialCoordinate ? "radial_coordinate" : "acceleration_parameter";
}

MetricValue metric_polar(double xi_c, double theta, const AccelerationParam& r, HReading reading) {
  require_polar_chart(xi_c, theta);
  return {{xi_c, theta, 0.0}, Chart::kPolar, polar_tensor(xi_c, theta, r.r(), reading)};
}

MetricValue metric_polar(double xi_c, double theta, const AccelerationParam& r) {
  return metric_polar(xi_c, theta, r, selected_h_reading());
}

MetricValue pullback_to_polar(double xi_c, double theta, double phi, const AccelerationParam& r) {
  require_polar_chart(xi_c, theta);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double sp = std::sin(phi);
  const double cp = std::cos(phi);
  const Eigen::Vector3d n = xi_c * Eigen::Vector3d(st * cp, st * sp, ct);
  Eigen::Matrix3d jac;
  jac << st * cp, xi_c * ct * cp, -xi_c * st * sp,
         st * sp, xi_c * ct * sp, xi_c * st * cp,
         ct, -xi_c * st, 0.0;
  const Eigen::Matrix3d g = jac.transpose() * cartesian_tensor(n, r.r()) * jac;
  return {{xi_c, theta, phi}, Chart::kPolar, 0.5 * (g + g.transpose())};
}

HReadingSelection select_h_reading() {
  constexpr std::array<double, 4> kRadii{0.2, 0.4, 0.6, 0.8};
  constexpr std::array<double, 5> kPolar{0.4, 0.9, 1.4, 1.9, 2.4};
  constexpr std::array<double, 3> kAccel{0.05, 0.1, 0.2};
  constexpr double kPhi = 0.3;
  double radial = 0.0;
  double accel = 0.0;
  int count = 0;
  for (double r : kAccel) {
    const AccelerationParam a(r);
    for (double xi : kRadii) {
      for (double th : kPolar) {
        const Eigen::Matrix3d ref = pullback_to_polar(xi, th, kPhi, a).tensor;
        radial += (metric_polar(xi, th, a, HReading::kRadialCoordinate).tensor - ref).squaredNorm();
        accel +=
            (metric_polar(xi, th, a, HReading::kAccelerationParameter).tensor - ref).squaredNorm();
        ++count;
      }
    }
  }
  HReadingSelection sel;
  sel.radial_discrepancy = std::sqrt(radial / count);
  sel.acceleration_discrepancy = std::sqrt(accel / count);
  sel.selected = sel.radial_discrepancy <= sel.acceleration_discrepancy
                     ? HReading::kRadialCoordinate
                     : HReading::kAccelerationParameter;
  return sel;
}

HReading selected_h_reading() {
  static const HReading reading = select_h_reading().selected;
  return reading;
}

namespace {

Eigen::Matrix3d quadratic_form(const BlochVector& bloch, const AccelerationParam& r, double step) {
  const Eigen::Vector3d n(bloch.x, bloch.y, bloch.z);
  const DenseOperator rho = small_r_qubit(bloch, r);
  // q(v) = v^T Q v + O(step^2) with D = 2 ds^2.
  const auto q = [&](const Eigen::Vector3d& v) {
    const double forward = generalized_bures_distance(rho, small_r_qubit(to_bloch(n + step * v), r));
    const double backward =
        generalized_bures_distance(rho, small_r_qubit(to_bloch(n - step * v), r));
    return (forward + backward) / (4.0 * step * step);
  };
  const auto dirs = differencing_directions();
  std::array<double, 6> values{};
  for (std::size_t k = 0; k < dirs.size(); ++k) values[k] = q(dirs[k]);

  Eigen::Matrix3d form;
  form(0, 0) = values[0];
  form(1, 1) = values[1];
  form(2, 2) = values[2];
  form(0, 1) = form(1, 0) = 0.5 * (values[3] - values[0] - values[1]);
  form(0, 2) = form(2, 0) = 0.5 * (values[4] - values[0] - values[2]);
  form(1, 2) = form(2, 1) = 0.5 * (values[5] - values[1] - values[2]);
  return form;
}

}  // namespace

MetricValue numeric_metric(const BlochVector& bloch, const AccelerationParam& r, double step) {
  require_numeric_domain(bloch, r, 2.0 * step);
  const Eigen::Matrix3d fine = quadratic_form(bloch, r, step);
  const Eigen::Matrix3d coarse = quadratic_form(bloch, r, 2.0 * step);
  return {{bloch.x, bloch.y, bloch.z}, Chart::kCartesianBloch, (4.0 * fine - coarse) / 3.0};
}

double distance_linear_residue(const BlochVector& bloch, const AccelerationParam& r, double step) {
  require_numeric_domain(bloch, r, step);
  const Eigen::Vector3d n(bloch.x, bloch.y, bloch.z);
  const DenseOperator rho = small_r_qubit(bloch, r);
  double worst = 0.0;
  for (const auto& v : differencing_directions()) {
    const double forward = generalized_bures_distance(rho, small_r_qubit(to_bloch(n + step * v), r));
    const double backward =
        generalized_bures_distance(rho, small_r_qubit(to_bloch(n - step * v), r));
    worst = std::max(worst, std::abs(forward - backward) / (2.0 * step));
  }
  return worst;
}

double scalar_curvature(const MetricField& metric, const Eigen::Vector3d& point, double step) {
  if (!(step > 0.0)) throw ArgumentError("curvature step must be positive");
  const double fine = curvature_at_step(metric, point, step);
  const double coarse = curvature_at_step(metric, point, 2.0 * step);
  return (4.0 * fine - coarse) / 3.0;
}

double scalar_curvature_numeric(double xi_c, double theta, const AccelerationParam& r) {
  constexpr double kStep = 1e-4;
  constexpr double kReach = 4.0 * kStep;  // two nested stencils at twice the step
  require_polar_chart(xi_c, theta);
  if (xi_c > kGeometryRadius) throw DomainError("curvature evaluated only for xi_c <= 0.9");
  if (xi_c - kReach <= 1e-6 || std::sin(theta) - kReach <= 1e-6) {
    throw DomainError("curvature stencil reaches a chart singularity");
  }
  const HReading reading = selected_h_reading();
  const double accel = r.r();
  const MetricField field = [reading, accel](const Eigen::Vector3d& p) {
    return polar_tensor(p.x(), p.y(), accel, reading);
  };
  return scalar_curvature(field, Eigen::Vector3d(xi_c, theta, 0.0), kStep);
}

double scalar_curvature_closed_form(double xi_c, double theta, const AccelerationParam& r) {
  const double x2 = xi_c * xi_c;
  const double pole = x2 * (x2 - 1.0);
  if (std::abs(pole) < 1e-14) throw DomainError("closed-form curvature has a pole at xi_c in {0, 1}");
  const double t2 = r.tanh() * r.tanh();
  const double x4 = x2 * x2;
  const double x6 = x4 * x2;
  const double bracket = 4.0 + 8.0 * x2 - 15.0 * x4 + 5.0 * x6 -
                         8.0 * xi_c * (2.0 * xi_c - 3.0) * std::cos(theta) *
                             (4.0 + 8.0 * x2 - 11.0 * x4 + 5.0 * x6) * std::cos(2.0 * theta);
  const double delta = 2.0 * t2 / pole * bracket;
  const double c4 = std::pow(r.cosh(), 4);
  return (24.0 + delta) * c4;
}

CurvatureResult compare_curvature(double xi_c, double theta, const AccelerationParam& r) {
  CurvatureResult out;
  out.xi_c = xi_c;
  out.theta = theta;
  out.r = r.r();
  out.numeric_R = scalar_curvature_numeric(xi_c, theta, r);
  out.closed_form_R = scalar_curvature_closed_form(xi_c, theta, r);
  out.discrepancy = out.closed_form_R - out.numeric_R;
  return out;
}

}  // namespace rqit
