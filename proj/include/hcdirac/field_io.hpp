// Field snapshots for external plotting.
//
// CSV:
//   # hcdirac spinor field
//   # n=<n> points_per_axis=<N> box_halfwidth=<R> m=<m> r_min=<a> r_max=<b>
//   index,x1,..,xn,re0,im0,..,re<m-1>,im<m-1>
//   one row per grid point, point index p with axis 0 fastest
// r_min/r_max are "none" when the field carries no support annulus.
//
// Binary (little-endian):
//   char[8]  magic "HCDSPF01"
//   int32    n, points_per_axis, m, has_support
//   float64  box_halfwidth, r_min, r_max
//   float64  re, im for each point p, then each component c (point-major)
#ifndef HCDIRAC_FIELD_IO_HPP
#define HCDIRAC_FIELD_IO_HPP

#include "hcdirac/field.hpp"

#include <iosfwd>
#include <string>

namespace hcdirac {

void write_field_csv(std::ostream& os, const SpinorField& u);
SpinorField read_field_csv(std::istream& is);

void write_field_binary(std::ostream& os, const SpinorField& u);
SpinorField read_field_binary(std::istream& is);

/// Picks the format from the extension: ".bin" is binary, anything else CSV.
void save_field(const std::string& path, const SpinorField& u);
SpinorField load_field(const std::string& path);

}  // namespace hcdirac

#endif  // HCDIRAC_FIELD_IO_HPP
