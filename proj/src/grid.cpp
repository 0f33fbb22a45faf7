#include "hcdirac/grid.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcdirac {

namespace {

constexpr std::int64_t kMaxPoints = std::int64_t(1) << 26;

bool has_small_factors_only(int v) {
  for (int p : {2, 3, 5})
    while (v % p == 0) v /= p;
  return v == 1;
}

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine;
  return engine;
}

}  // namespace

double GridSpec::cell_volume() const { return std::pow(spacing(), n); }

std::int64_t GridSpec::total_points() const {
  std::int64_t total = 1;
  for (int j = 0; j < n; ++j) total *= points_per_axis;
  return total;
}

void validate(const GridSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("grid: dimension must be >= 1");
  if (spec.points_per_axis < 16) throw std::invalid_argument("grid: points_per_axis must be >= 16");
  if (spec.points_per_axis % 2 != 0 || !has_small_factors_only(spec.points_per_axis))
    throw std::invalid_argument("grid: points_per_axis must be even with prime factors 2, 3, 5 only (got " +
                                std::to_string(spec.points_per_axis) + ")");
  if (!(spec.box_halfwidth > 0)) throw std::invalid_argument("grid: box half-width must be positive");
  double total = std::pow(double(spec.points_per_axis), spec.n);
  if (total > double(kMaxPoints))
    throw std::invalid_argument("grid: " + std::to_string(spec.points_per_axis) + "^" + std::to_string(spec.n) +
                                " points exceeds the supported size");
}

int default_points(int n) {
  switch (n) {
    case 1: return 256;
    case 2: return 128;
    case 3: return 48;
    default: return 16;
  }
}

SpectralGrid::SpectralGrid(GridSpec spec) : spec_(spec) {
  validate(spec_);
  const int N = spec_.points_per_axis;
  const double h = spec_.spacing();
  const double dk = std::numbers::pi / spec_.box_halfwidth;
  size_ = static_cast<Eigen::Index>(spec_.total_points());

  axis_coords_.resize(N);
  axis_waves_.resize(N);
  for (int i = 0; i < N; ++i) {
    axis_coords_[i] = -spec_.box_halfwidth + h * i;
    axis_waves_[i] = dk * (i < N / 2 ? i : i - N);
  }

  coords_.assign(spec_.n, Eigen::VectorXd(size_));
  waves_.assign(spec_.n, Eigen::VectorXd(size_));
  radius_ = Eigen::VectorXd::Zero(size_);
  Eigen::Index stride = 1;
  for (int j = 0; j < spec_.n; ++j) {
    for (Eigen::Index p = 0; p < size_; ++p) {
      const auto i = (p / stride) % N;
      coords_[j][p] = axis_coords_[i];
      waves_[j][p] = axis_waves_[i];
    }
    radius_ += coords_[j].cwiseAbs2();
    stride *= N;
  }
  radius_ = radius_.cwiseSqrt();
}

double SpectralGrid::nyquist() const { return std::numbers::pi / spec_.spacing(); }

void SpectralGrid::transform(Eigen::Ref<Eigen::VectorXcd> data, bool inverse) const {
  if (data.size() != size_) throw std::invalid_argument("grid transform: sample count does not match grid");
  const Eigen::Index N = spec_.points_per_axis;
  auto& engine = fft_engine();
  std::vector<Complex> in(static_cast<std::size_t>(N)), out(static_cast<std::size_t>(N));
  Eigen::Index stride = 1;
  for (int axis = 0; axis < spec_.n; ++axis) {
    const Eigen::Index block = stride * N;
    for (Eigen::Index base = 0; base < size_; base += block) {
      for (Eigen::Index offset = 0; offset < stride; ++offset) {
        Complex* line = data.data() + base + offset;
        for (Eigen::Index i = 0; i < N; ++i) in[i] = line[i * stride];
        if (inverse)
          engine.inv(out.data(), in.data(), N);
        else
          engine.fwd(out.data(), in.data(), N);
        for (Eigen::Index i = 0; i < N; ++i) line[i * stride] = out[i];
      }
    }
    stride = block;
  }
}

void SpectralGrid::forward(Eigen::Ref<Eigen::VectorXcd> data) const { transform(data, false); }
void SpectralGrid::inverse(Eigen::Ref<Eigen::VectorXcd> data) const { transform(data, true); }

Eigen::MatrixXcd SpectralGrid::forward(const Eigen::MatrixXcd& cols) const {
  Eigen::MatrixXcd out = cols;
  for (Eigen::Index c = 0; c < out.cols(); ++c) transform(out.col(c), false);
  return out;
}

Eigen::MatrixXcd SpectralGrid::inverse(const Eigen::MatrixXcd& cols) const {
  Eigen::MatrixXcd out = cols;
  for (Eigen::Index c = 0; c < out.cols(); ++c) transform(out.col(c), true);
  return out;
}

Eigen::MatrixXcd SpectralGrid::derivative(const Eigen::MatrixXcd& cols, int j) const {
  Eigen::MatrixXcd hat = forward(cols);
  hat = (hat.array().colwise() * (Complex(0, 1) * waves_.at(j).cast<Complex>()).array()).matrix();
  return inverse(hat);
}

Eigen::VectorXd SpectralGrid::derivative(const Eigen::VectorXd& f, int j) const {
  Eigen::MatrixXcd col = f.cast<Complex>();
  return derivative(col, j).col(0).real();
}

Eigen::MatrixXcd SpectralGrid::laplacian(const Eigen::MatrixXcd& cols) const {
  Eigen::VectorXd k2 = Eigen::VectorXd::Zero(size_);
  for (const auto& k : waves_) k2 += k.cwiseAbs2();
  Eigen::MatrixXcd hat = forward(cols);
  hat = (hat.array().colwise() * (-k2).cast<Complex>().array()).matrix();
  return inverse(hat);
}

double SpectralGrid::spectral_tail(const Eigen::MatrixXcd& cols) const {
  const Eigen::MatrixXcd hat = forward(cols);
  const double cutoff = 0.5 * nyquist();
  double tail = 0, total = 0;
  for (Eigen::Index p = 0; p < size_; ++p) {
    bool high = false;
    for (const auto& k : waves_) high = high || std::abs(k[p]) > cutoff;
    const double e = hat.row(p).squaredNorm();
    total += e;
    if (high) tail += e;
  }
  return total > 0 ? std::sqrt(tail / total) : 0.0;
}

}  // namespace hcdirac
