#pragma once

// Precision-mode plumbing. Every numeric kernel is templated on the scalar R;
// the two supported instantiations are double (standard, ~16 digits) and
// DD (extended, ~31 digits). A mode is fixed once per pipeline run.

#include <string>
#include <type_traits>

#include "fgkp/cx.hpp"
#include "fgkp/dd.hpp"

namespace fgkp {

enum class Precision { standard, extended };

inline const char* precision_name(Precision p) {
  return p == Precision::standard ? "standard" : "extended";
}

template <class R>
struct RealTraits;

template <>
struct RealTraits<double> {
  static constexpr Precision mode = Precision::standard;
  static constexpr double eps() { return 2.220446049250313e-16; }
  static double from_double(double x) { return x; }
  static double to_double(double x) { return x; }
  static double from_string(const std::string& s) { return std::stod(s); }
  static std::string to_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

template <>
struct RealTraits<DD> {
  static constexpr Precision mode = Precision::extended;
  static constexpr double eps() { return 4.93e-32; }  // 2^-104
  static DD from_double(double x) { return DD(x); }
  static double to_double(DD x) { return double(x); }
  static DD from_string(const std::string& s) { return dd_from_string(s); }
  static std::string to_string(DD x) { return dd_to_string(x); }
};

template <class R>
inline double to_d(R x) { return RealTraits<R>::to_double(x); }

template <class R>
inline double to_double_mag(R v) {
  using std::fabs;
  using fgkp::fabs;
  return double(fabs(v));
}

template <class R>
inline Cx<double> to_cd(Cx<R> z) { return {to_d(z.re), to_d(z.im)}; }

template <class R>
inline R pi_v() {
  if constexpr (std::is_same_v<R, double>) return 3.14159265358979323846;
  else return dd_pi;
}

}  // namespace fgkp
