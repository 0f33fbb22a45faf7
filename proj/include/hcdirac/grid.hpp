// Uniform periodic grid on [-R, R)^n with Fourier-multiplier differentiation.
#ifndef HCDIRAC_GRID_HPP
#define HCDIRAC_GRID_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <memory>

namespace hcdirac {

using Complex = std::complex<double>;

struct GridSpec {
  int n = 3;                    // spatial dimension
  int points_per_axis = 48;     // even, >= 16, factors 2/3/5 only
  double box_halfwidth = 3.0;   // R

  double spacing() const { return 2.0 * box_halfwidth / points_per_axis; }
  double cell_volume() const;
  std::int64_t total_points() const;
  /// Same box, twice the points per axis.
  GridSpec refined() const { return {n, 2 * points_per_axis, box_halfwidth}; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Throws std::invalid_argument when the spec is unusable.
void validate(const GridSpec& spec);

/// Default points per axis for dimension n: 256, 128, 48, then 16.
int default_points(int n);

/// Precomputed coordinates and wavenumbers for a GridSpec. Point p has axis
/// index (p / N^j) % N along axis j (axis 0 fastest).
class SpectralGrid {
 public:
  explicit SpectralGrid(GridSpec spec);

  static std::shared_ptr<const SpectralGrid> make(const GridSpec& spec) {
    return std::make_shared<const SpectralGrid>(spec);
  }

  const GridSpec& spec() const { return spec_; }
  int dim() const { return spec_.n; }
  int points_per_axis() const { return spec_.points_per_axis; }
  Eigen::Index size() const { return size_; }
  double cell_volume() const { return spec_.cell_volume(); }

  /// Coordinate x_j at every grid point.
  const Eigen::VectorXd& coordinate(int j) const { return coords_[j]; }
  /// Angular wavenumber k_j at every grid point (numpy fftfreq ordering, the
  /// Nyquist mode carries -N/2).
  const Eigen::VectorXd& wavenumber(int j) const { return waves_[j]; }
  const Eigen::VectorXd& radius() const { return radius_; }
  double nyquist() const;

  /// In-place n-dimensional DFT of one column of samples. The inverse is
  /// normalized so that inverse(forward(f)) == f.
  void forward(Eigen::Ref<Eigen::VectorXcd> data) const;
  void inverse(Eigen::Ref<Eigen::VectorXcd> data) const;
  /// Column-wise transforms.
  Eigen::MatrixXcd forward(const Eigen::MatrixXcd& cols) const;
  Eigen::MatrixXcd inverse(const Eigen::MatrixXcd& cols) const;

  /// Spectral partial derivative d/dx_j of every column.
  Eigen::MatrixXcd derivative(const Eigen::MatrixXcd& cols, int j) const;
  /// Spectral derivative of a real scalar field (imaginary part discarded).
  Eigen::VectorXd derivative(const Eigen::VectorXd& f, int j) const;
  /// Spectral Laplacian, multiplier -|k|^2.
  Eigen::MatrixXcd laplacian(const Eigen::MatrixXcd& cols) const;

  /// sqrt of the spectral energy fraction in modes with some |k_j| above half
  /// the Nyquist wavenumber. Small values mean the samples are resolved.
  double spectral_tail(const Eigen::MatrixXcd& cols) const;

 private:
  void transform(Eigen::Ref<Eigen::VectorXcd> data, bool inverse) const;

  GridSpec spec_;
  Eigen::Index size_;
  Eigen::VectorXd axis_coords_;
  Eigen::VectorXd axis_waves_;
  std::vector<Eigen::VectorXd> coords_;
  std::vector<Eigen::VectorXd> waves_;
  Eigen::VectorXd radius_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

}  // namespace hcdirac

#endif  // HCDIRAC_GRID_HPP
