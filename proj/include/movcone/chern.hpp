#pragma once

#include "movcone/exact.hpp"
#include "movcone/fano.hpp"

#include <array>
#include <vector>

namespace movcone {

// Total Chern or Segre class truncated at degree 4, as the coefficients of
// H^0..H^4 on a Picard-rank-1 base. Every class in scope is a polynomial in
// the fundamental divisor, so five rationals suffice.
struct ChernVector {
    enum class Kind { chern, segre };
    std::array<Rational, 5> c{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
    Kind kind = Kind::chern;

    const Rational& operator[](int k) const { return c[static_cast<size_t>(k)]; }
    Rational& operator[](int k) { return c[static_cast<size_t>(k)]; }

    friend bool operator==(const ChernVector& a, const ChernVector& b) { return a.c == b.c; }
};

// c_k = e_k(a_1, ..., a_{n+1}) truncated at degree 4.
ChernVector chern_split(const std::vector<int>& twists);

// c_k(B^dual) = (-1)^k c_k(B)
ChernVector dual(const ChernVector& cv);

// Truncated product of two class vectors.
ChernVector convolve(const ChernVector& u, const ChernVector& v);

// Multiplicative inverse of a total class, truncated at degree 4.
ChernVector series_inverse(const ChernVector& cv);

// s(B^dual) through the four closed formulas
//   s1 = c1,  s2 = c1^2 - c2,  s3 = c1^3 - 2 c1 c2 + c3,
//   s4 = c1^4 - 3 c1^2 c2 + 2 c1 c3 + c2^2 - c4.
ChernVector segre_dual(const ChernVector& cv);

enum class VirtualDirection { F_minus_Edual, E_minus_Fdual };

// c(A - B^dual) = c(A) * s(B^dual), truncated at degree 4.
ChernVector virtual_chern(const SplitPair& pair, VirtualDirection dir);

// d_M * (c2(F-E^dual)^2 - c1(F-E^dual) c3(F-E^dual)); the node count of the
// determinantal hypersurface. Throws "malformed case" when not a nonnegative
// integer, "not Calabi-Yau" when the twist sums are off.
long long odp_count(const SplitPair& pair);

std::string chern_to_json(const ChernVector& cv); // five "p/q" strings

} // namespace movcone
