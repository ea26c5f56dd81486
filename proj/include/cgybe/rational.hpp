#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/version.hpp>

#include <iterator>
#include <type_traits>

#if BOOST_VERSION < 107700
// Older Boost.Multiprecision probes every argument type with a const_iterator
// for a byte-range constructor. Eigen 3.4 expressions declare
// const_iterator = void, which turns that probe into a hard error.
namespace boost::multiprecision::detail {
template <class C>
struct is_byte_container_imp<C, true> {
  static constexpr bool value = [] {
    if constexpr (std::is_void_v<typename C::const_iterator>) {
      return false;
    } else {
      using V = std::remove_cv_t<typename std::iterator_traits<typename C::const_iterator>::value_type>;
      return std::is_integral_v<V> && sizeof(V) == 1;
    }
  }();
};
}  // namespace boost::multiprecision::detail
#endif

namespace cgybe {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Expression templates are disabled so the type behaves like a
/// plain value inside containers and Eigen matrices.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Always "num/den", e.g. "3/2", "-1/1", "0/1".
std::string to_fraction_string(const Rational& x);

/// "3/2", "-1", "0": the denominator is omitted when it is 1.
std::string to_compact_string(const Rational& x);

/// Accepts "n", "-n", "n/d" with d != 0. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// x^e for any integer e; throws std::domain_error for 0 raised to e < 0.
Rational pow(const Rational& x, int e);

}  // namespace cgybe
