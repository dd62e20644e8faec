#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace multideg {

// GMP-backed exact scalars. Expression templates are disabled so that `auto`
// always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

// "3", "-5/2"
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p" or "p/q" with optional leading sign; throws ValidationError.
Rational parse_rational(const std::string& text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Exact determinant of a square integer matrix (fraction-free Gaussian
// elimination). The empty matrix has determinant 1.
Integer integer_det(std::vector<std::vector<Integer>> m);

// Rank of a rational matrix given as rows.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

// Basis of the right null space {x : A x = 0}; one vector per free column.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows,
                                              std::size_t cols);

}  // namespace multideg
