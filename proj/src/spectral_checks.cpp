#include "hcdirac/spectral_checks.hpp"

#include "hcdirac/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hcdirac {

namespace {

Eigen::MatrixXcd scale_rows(const Eigen::VectorXd& s, const Eigen::MatrixXcd& m) {
  return (m.array().colwise() * s.cast<Complex>().array()).matrix();
}

GridPtr line_grid(Eigen::Index points, double halfwidth) {
  GridSpec spec{1, static_cast<int>(points), halfwidth};
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
  return SpectralGrid::make(spec);
}

}  // namespace

FourierCheck fourier_1d_check(const Eigen::VectorXcd& f, double halfwidth, double shift, double tail_limit) {
  const GridPtr grid = line_grid(f.size(), halfwidth);
  FourierCheck out;
  out.tail = grid->spectral_tail(f);
  if (out.tail > tail_limit) {
    std::ostringstream os;
    os << "fourier_1d_check: test function is not resolved (spectral tail " << out.tail << ")";
    throw PreconditionError(os.str());
  }
  const double h = grid->spec().spacing();
  const Eigen::VectorXcd df = grid->derivative(Eigen::MatrixXcd(f), 0).col(0);
  out.norm_sq = f.squaredNorm() * h;
  out.lhs = shift * shift * out.norm_sq;
  out.rhs = (df - shift * f).squaredNorm() * h;
  if (!(out.norm_sq > 0)) throw std::domain_error("fourier_1d_check: zero function");
  out.quotient = out.rhs / out.norm_sq;
  return out;
}

Eigen::VectorXcd random_bump_1d(int points, double halfwidth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double quarter = halfwidth / 4;
  const double center = quarter * (2 * unit(rng) - 1);
  const double width = quarter * (0.5 + 0.5 * unit(rng));
  Complex coeffs[4];
  for (auto& z : coeffs) {
    const double re = 2 * unit(rng) - 1;
    const double im = 2 * unit(rng) - 1;
    z = Complex(re, im);
  }
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(points);
  const double h = 2 * halfwidth / points;
  for (int i = 0; i < points; ++i) {
    const double s = (-halfwidth + h * i - center) / width;
    if (std::abs(s) >= 1) continue;
    Complex poly = 0;
    for (int q = 3; q >= 0; --q) poly = poly * s + coeffs[q];
    f[i] = std::exp(1 - 1 / (1 - s * s)) * poly;
  }
  return f;
}

SpinorField apply_angular(const CliffordRepd& rep, const SpinorField& u) {
  if (u.grid->dim() != rep.n || u.m != rep.m) throw std::invalid_argument("apply_angular: shape mismatch");
  const auto& grid = *u.grid;
  std::vector<Eigen::MatrixXcd> grads;
  for (int j = 0; j < rep.n; ++j) grads.push_back(grid.derivative(u.values, j));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(u.values.rows(), u.values.cols());
  for (int j = 0; j < rep.n; ++j)
    for (int k = j + 1; k < rep.n; ++k) {
      const Eigen::MatrixXcd rot = scale_rows(grid.coordinate(j), grads[k]) - scale_rows(grid.coordinate(k), grads[j]);
      out += rot * (rep.alphas[j] * rep.alphas[k]).transpose();
    }
  return {u.grid, u.m, out, u.support};
}

double HarmonicPolynomial::operator()(const double* x) const {
  double total = 0;
  for (const auto& [coef, powers] : terms) {
    double t = coef;
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (int e = 0; e < powers[j]; ++e) t *= x[j];
    total += t;
  }
  return total;
}

std::vector<HarmonicPolynomial> harmonic_basis(int n, int l) {
  if (n < 1) throw std::invalid_argument("harmonic_basis: n must be >= 1");
  auto mono = [n](std::initializer_list<std::pair<int, int>> axis_power) {
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    for (auto [axis, power] : axis_power) p[static_cast<std::size_t>(axis)] += power;
    return p;
  };
  auto x = [](int j) { return "x" + std::to_string(j + 1); };
  std::vector<HarmonicPolynomial> out;
  switch (l) {
    case 0:
      out.push_back({0, "1", {{1.0, mono({})}}});
      break;
    case 1:
      for (int j = 0; j < n; ++j) out.push_back({1, x(j), {{1.0, mono({{j, 1}})}}});
      break;
    case 2:
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) out.push_back({2, x(j) + x(k), {{1.0, mono({{j, 1}, {k, 1}})}}});
      for (int j = 0; j + 1 < n; ++j)
        out.push_back({2, x(j) + "^2-" + x(j + 1) + "^2", {{1.0, mono({{j, 2}})}, {-1.0, mono({{j + 1, 2}})}}});
      break;
    default:
      throw std::invalid_argument("harmonic_basis: degrees 0, 1, 2 are supported");
  }
  return out;
}

SpinorField harmonic_field(const GridPtr& grid, int m, const HarmonicPolynomial& poly, double sigma,
                           std::uint64_t seed) {
  if (!(sigma > 0)) throw std::invalid_argument("harmonic_field: sigma must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd w(m);
  for (int c = 0; c < m; ++c) {
    const double re = normal(rng);
    const double im = normal(rng);
    w[c] = Complex(re, im);
  }
  w.normalize();
  const int n = grid->dim();
  Eigen::VectorXd profile(grid->size());
  std::vector<double> x(static_cast<std::size_t>(n));
  for (Eigen::Index p = 0; p < grid->size(); ++p) {
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = grid->coordinate(j)[p];
    const double r = grid->radius()[p];
    profile[p] = poly(x.data()) * std::exp(-r * r / (2 * sigma * sigma));
  }
  return {grid, m, profile.cast<Complex>() * w.transpose(), std::nullopt};
}

AngularReport angular_identity_check(const CliffordRepd& rep, const GridSpec& spec, const std::vector<int>& degrees,
                                     double sigma, std::uint64_t seed, double tail_limit) {
  if (spec.n != rep.n) throw PreconditionError("angular_identity_check: grid and representation dimensions differ");
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
  const GridPtr grid = SpectralGrid::make(spec);
  const double shift = rep.n - 2;
  AngularReport report;
  report.grid = spec;
  report.sigma = sigma;
  int index = 0;
  for (int l : degrees) {
    for (const auto& poly : harmonic_basis(rep.n, l)) {
      const SpinorField u = harmonic_field(grid, rep.m, poly, sigma, seed + static_cast<std::uint64_t>(index++));
      AngularSample s;
      s.l = l;
      s.label = poly.label;
      s.eigenvalue = l * (l + shift);
      s.tail = grid->spectral_tail(u.values);
      if (s.tail > tail_limit) {
        std::ostringstream os;
        os << "angular_identity_check: test field " << poly.label << " is not resolved (spectral tail " << s.tail
           << ")";
        throw PreconditionError(os.str());
      }
      const Eigen::MatrixXcd lu = apply_angular(rep, u).values;
      const Eigen::MatrixXcd llu = apply_angular(rep, {u.grid, u.m, lu, std::nullopt}).values;
      const double scale = std::max(1.0, s.eigenvalue) * u.values.norm();
      const Eigen::MatrixXcd stated = llu + shift * lu - s.eigenvalue * u.values;
      const Eigen::MatrixXcd corrected = llu - shift * lu - s.eigenvalue * u.values;
      s.residual_stated = stated.norm() / scale;
      s.residual_corrected = corrected.norm() / scale;
      s.expectation_stated = (u.values.conjugate().cwiseProduct(llu + shift * lu)).sum().real() / u.values.squaredNorm();
      report.worst_stated = std::max(report.worst_stated, s.residual_stated);
      report.worst_corrected = std::max(report.worst_corrected, s.residual_corrected);
      report.samples.push_back(s);
    }
  }
  return report;
}

}  // namespace hcdirac
