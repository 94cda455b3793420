#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace movcone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exit-code buckets shared with the CLI.
enum class Errc {
    unknown_case = 2,
    not_calabi_yau = 3,
    solver_failure = 4,
    verification_failure = 5,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

inline int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }
long long to_int64(const Rational& r);

std::string to_string(const Rational& r);          // "p/q", "p" when q == 1
Rational rational_from_string(const std::string&); // accepts "p" and "p/q"

// n >= 0 decomposed as s^2 * d with d square-free. Perfect squares give d = 1,
// zero gives (0, 0). Trial division; inputs in scope stay tiny.
std::pair<BigInt, BigInt> sqrt_decompose(const BigInt& n);

// Element a + b*sqrt(d) of Q(sqrt(d)), d square-free and nonnegative.
// Normalized so that b == 0 implies d == 0; d in {0,1} folds into a.
struct QuadExt {
    Rational a;
    Rational b;
    BigInt d;

    QuadExt() : a(0), b(0), d(0) {}
    QuadExt(Rational rat) : a(std::move(rat)), b(0), d(0) {}
    QuadExt(long long n) : a(n), b(0), d(0) {}
    QuadExt(Rational ra, Rational rb, BigInt rd);

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
    Rational rational_value() const; // throws when irrational

    QuadExt conj() const { return QuadExt(a, -b, d); }
    Rational norm() const { return a * a - b * b * Rational(d); }
    int sign() const;
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    QuadExt operator-() const { return QuadExt(-a, -b, d); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
    friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
    friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
    friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
    friend bool operator==(const QuadExt& l, const QuadExt& r) {
        return l.a == r.a && l.b == r.b && l.d == r.d;
    }
    friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }
    friend bool operator<(const QuadExt& l, const QuadExt& r) { return (l - r).sign() < 0; }
    friend bool operator>(const QuadExt& l, const QuadExt& r) { return (l - r).sign() > 0; }
};

std::string to_string(const QuadExt& q); // "26+15*sqrt(3)", "-1/2", ...

// Both roots of a*X^2 + b*X + c = 0, exact over Q(sqrt(D)), larger root first.
// Throws "no real root" when the discriminant is negative.
std::pair<QuadExt, QuadExt> solve_quadratic(const Rational& a, const Rational& b,
                                            const Rational& c);

// 2x2 exact matrix; the columns are the images of the domain basis vectors.
struct Mat2 {
    std::array<std::array<Rational, 2>, 2> m{};
    std::pair<std::string, std::string> domain_basis{"L", "H"};
    std::pair<std::string, std::string> codomain_basis{"L", "H"};

    static Mat2 identity();
    static Mat2 from_rows(std::array<long long, 4> rows); // {m00, m01, m10, m11}

    Rational det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Rational trace() const { return m[0][0] + m[1][1]; }
    bool is_integral() const;
    bool is_identity() const;
    Mat2 inverse() const; // throws on det == 0

    friend Mat2 operator*(const Mat2& l, const Mat2& r);
    friend bool operator==(const Mat2& l, const Mat2& r) { return l.m == r.m; }
    friend bool operator!=(const Mat2& l, const Mat2& r) { return !(l == r); }
};

std::string to_string(const Mat2& m); // bracket layout, one row per line

// Divisor class x*L + y*H with coordinates in Q(sqrt(d)).
struct DivClass {
    QuadExt l;
    QuadExt h;

    DivClass() = default;
    DivClass(QuadExt vl, QuadExt vh) : l(std::move(vl)), h(std::move(vh)) {}
    DivClass(long long vl, long long vh) : l(vl), h(vh) {}

    bool is_zero() const { return l.is_zero() && h.is_zero(); }
    bool is_rational() const { return l.is_rational() && h.is_rational(); }
    bool is_integral() const;

    friend bool operator==(const DivClass& x, const DivClass& y) {
        return x.l == y.l && x.h == y.h;
    }
    friend bool operator!=(const DivClass& x, const DivClass& y) { return !(x == y); }
};

DivClass apply(const Mat2& m, const DivClass& v);
QuadExt cross(const DivClass& u, const DivClass& v); // u.l*v.h - u.h*v.l
DivClass primitive_ray(const DivClass& v);           // rational input, gcd 1, first nonzero > 0
bool same_ray(const DivClass& u, const DivClass& v); // positive multiple of each other

std::string to_string(const DivClass& v); // "4L-5H", "490H-101L", "-4L+(10+sqrt(30))H"

enum class RayNormalization { primitive_integer, match_paper };

struct EigenPair {
    QuadExt value;
    DivClass ray;
};

// Exact spectrum of a 2x2 rational matrix: eigenvalues sorted descending.
// match_paper scales irrational rays so the H-coordinate reads u + sqrt(D);
// rational rays fall back to primitive integers either way.
std::array<EigenPair, 2> eigen2(const Mat2& m,
                                RayNormalization norm = RayNormalization::match_paper);

} // namespace movcone
