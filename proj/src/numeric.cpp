#include "toricgit/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace toricgit {

std::string rat_to_string(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rat(Int(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw std::invalid_argument("bad rational literal: " + s);
  Int qq(q);
  if (qq == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(Int(p), qq);
}

MatQ to_rational(const MatZ& m) {
  MatQ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

VecQ to_rational(const VecZ& v) {
  VecQ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

VecZ to_integer(const VecQ& v) {
  VecZ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (den(v(i)) != 1) throw std::invalid_argument("non-integer entry: " + rat_to_string(v(i)));
    r(i) = num(v(i));
  }
  return r;
}

VecZ primitive(const VecZ& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
  if (g == 0 || g == 1) return v;
  VecZ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i) / g;
  return r;
}

VecZ clear_denominators(const VecQ& v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, den(v(i)));
  VecZ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = num(v(i)) * (l / den(v(i)));
  return primitive(r);
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return r;
}

MatZ matz(std::initializer_list<std::initializer_list<long>> rows) {
  MatZ m(static_cast<Eigen::Index>(rows.size()),
         rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != m.cols())
      throw std::invalid_argument("ragged matrix literal");
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

VecZ vecz(std::initializer_list<long> entries) {
  VecZ v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long x : entries) v(i++) = x;
  return v;
}

MatQ matq(std::initializer_list<std::initializer_list<Rat>> rows) {
  MatQ m(static_cast<Eigen::Index>(rows.size()),
         rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != m.cols())
      throw std::invalid_argument("ragged matrix literal");
    Eigen::Index j = 0;
    for (const Rat& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

VecQ vecq(std::initializer_list<Rat> entries) {
  VecQ v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Rat& x : entries) v(i++) = x;
  return v;
}

}  // namespace toricgit
