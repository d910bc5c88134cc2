#pragma once

#include <complex>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace equibasis {

/// 100 significant decimal digits. Used where a double-precision elimination
/// on a Vandermonde-like matrix would be dominated by roundoff.
using wide_complex = boost::multiprecision::cpp_complex_100;
using wide_real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                                boost::multiprecision::et_off>;

template <typename Complex>
struct real_of;

template <typename R>
struct real_of<std::complex<R>> {
  using type = R;
};

template <typename Backend, boost::multiprecision::expression_template_option Et>
struct real_of<boost::multiprecision::number<Backend, Et>> {
  using type = typename boost::multiprecision::component_type<boost::multiprecision::number<Backend, Et>>::type;
};

/// 250 digits, for inverses of matrices whose condition number exhausts wide_complex.
using deep_complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<250>>, boost::multiprecision::et_off>;

template <typename Complex>
using real_of_t = typename real_of<Complex>::type;

template <typename Real>
Real pi_constant() {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::numbers::pi_v<Real>;
  } else {
    return boost::math::constants::pi<Real>();
  }
}

/// exp(i * angle) for any supported complex type.
template <typename Complex>
Complex unit_phase(const real_of_t<Complex>& angle) {
  using std::cos;
  using std::sin;
  return Complex(cos(angle), sin(angle));
}

}  // namespace equibasis
