#pragma once

// Exact scalar types and dense exact matrices. All geometry in this library
// is computed over arbitrary-precision integers and rationals; no floating
// point is used anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

// Boost's is_byte_container trait is not SFINAE-safe: instantiating it with a
// two-dimensional Eigen type (whose STL iterator typedef is void) reads
// iterator_traits<void>::value_type, a hard error. The trait sits on the
// implicit-conversion path that Eigen's scalar*matrix overload probes during
// overload resolution of every matrix product, so without these
// specializations plain products such as A * B fail to compile.
namespace boost {
namespace multiprecision {
namespace detail {
template <typename S, int... I>
struct is_byte_container<Eigen::Matrix<S, I...>> : std::false_type {};
template <typename X>
struct is_byte_container<Eigen::Transpose<X>> : std::false_type {};
template <typename L, typename R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : std::false_type {};
template <typename X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>> : std::false_type {};
template <typename Op, typename L, typename R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : std::false_type {};
template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : std::false_type {};
template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, X>> : std::false_type {};
}  // namespace detail
}  // namespace multiprecision
}  // namespace boost

namespace toricgit {

using Int = boost::multiprecision::cpp_int;
// Rationals are kept reduced with positive denominator by the backend.
using Rat = boost::multiprecision::cpp_rational;

// Exponent vector of a monomial, one entry per variable, entries >= 0.
using Monomial = std::vector<int>;

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Entrywise comparisons. Eigen's matrix-level operator== does not mix with
// multiprecision scalars, so expressions are evaluated and compared directly.
template <typename Derived>
bool exact_zero(const Eigen::EigenBase<Derived>& expr) {
  typename Derived::PlainObject m = expr.derived();
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename DA, typename DB>
bool exact_eq(const Eigen::EigenBase<DA>& lhs, const Eigen::EigenBase<DB>& rhs) {
  typename DA::PlainObject a = lhs.derived();
  typename DB::PlainObject b = rhs.derived();
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// "p" or "p/q" with q > 0 after reduction.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

MatQ to_rational(const MatZ& m);
VecQ to_rational(const VecZ& v);

// Exact conversion; throws std::invalid_argument on non-integer entries.
VecZ to_integer(const VecQ& v);

// Divide by the gcd of the entries (gcd taken positive, direction kept).
// The zero vector is returned unchanged.
VecZ primitive(const VecZ& v);

// Scale a rational vector to the primitive integer vector on the same ray.
VecZ clear_denominators(const VecQ& v);

Int binomial(long n, long k);

// Construction helpers used throughout the tests and builtins.
MatZ matz(std::initializer_list<std::initializer_list<long>> rows);
VecZ vecz(std::initializer_list<long> entries);
MatQ matq(std::initializer_list<std::initializer_list<Rat>> rows);
VecQ vecq(std::initializer_list<Rat> entries);

}  // namespace toricgit
