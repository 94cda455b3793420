#include "movcone/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace movcone {

long long to_int64(const Rational& r) {
    if (!is_integer(r))
        throw Error(Errc::solver_failure, "expected integer, got " + to_string(r));
    return numerator(r).convert_to<long long>();
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0)
            throw std::runtime_error("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw Error(Errc::unknown_case, "bad rational literal: " + s);
    }
}

std::pair<BigInt, BigInt> sqrt_decompose(const BigInt& n) {
    if (n < 0)
        throw Error(Errc::solver_failure, "sqrt_decompose on negative input");
    if (n == 0)
        return {0, 0};
    BigInt root = boost::multiprecision::sqrt(n);
    if (root * root == n)
        return {root, 1};
    BigInt s = 1, d = 1, rest = n;
    for (BigInt p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i)
            s *= p;
        if (e % 2 != 0)
            d *= p;
    }
    if (rest > 1)
        d *= rest;
    return {s, d};
}

QuadExt::QuadExt(Rational ra, Rational rb, BigInt rd) : a(std::move(ra)), b(std::move(rb)), d(std::move(rd)) {
    if (d < 0)
        throw Error(Errc::solver_failure, "negative radicand");
    if (d == 0)
        b = 0;
    if (d == 1) {
        a += b;
        b = 0;
        d = 0;
    }
    if (b == 0)
        d = 0;
}

Rational QuadExt::rational_value() const {
    if (!is_rational())
        throw Error(Errc::solver_failure, "irrational value where a rational was required");
    return a;
}

int QuadExt::sign() const {
    if (b == 0)
        return sgn(a);
    if (a == 0)
        return sgn(b);
    int sa = sgn(a), sb = sgn(b);
    if (sa == sb)
        return sa;
    // Opposite signs: compare |a| with |b|*sqrt(d) via squares.
    Rational aa = a * a, bbd = b * b * Rational(d);
    if (aa == bbd)
        return 0;
    return (aa > bbd) ? sa : sb;
}

namespace {

void require_compatible(const QuadExt& l, const QuadExt& r) {
    if (l.b != 0 && r.b != 0 && l.d != r.d)
        throw Error(Errc::solver_failure, "radicand mismatch: sqrt(" + l.d.str() + ") vs sqrt(" + r.d.str() + ")");
}

} // namespace

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    require_compatible(*this, o);
    BigInt rd = (b != 0) ? d : o.d;
    *this = QuadExt(a + o.a, b + o.b, rd);
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    require_compatible(*this, o);
    BigInt rd = (b != 0) ? d : o.d;
    Rational na = a * o.a + b * o.b * Rational(rd);
    Rational nb = a * o.b + b * o.a;
    *this = QuadExt(na, nb, rd);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    require_compatible(*this, o);
    if (o.is_zero())
        throw Error(Errc::solver_failure, "division by zero");
    if (o.b == 0) {
        *this = QuadExt(a / o.a, b / o.a, d);
        return *this;
    }
    Rational n = o.norm();
    if (n == 0)
        throw Error(Errc::solver_failure, "division by zero norm element");
    QuadExt c = o.conj();
    *this *= c;
    a /= n;
    b /= n;
    *this = QuadExt(a, b, d);
    return *this;
}

std::string to_string(const QuadExt& q) {
    if (q.is_rational())
        return to_string(q.a);
    std::string radical = "sqrt(" + q.d.str() + ")";
    std::string rad_part;
    if (q.b == 1)
        rad_part = radical;
    else if (q.b == -1)
        rad_part = "-" + radical;
    else
        rad_part = to_string(q.b) + "*" + radical;
    if (q.a == 0)
        return rad_part;
    if (q.b > 0)
        return to_string(q.a) + "+" + rad_part;
    return to_string(q.a) + rad_part;
}

std::pair<QuadExt, QuadExt> solve_quadratic(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0)
        throw Error(Errc::solver_failure, "quadratic with vanishing leading coefficient");
    Rational disc = b * b - 4 * a * c;
    if (disc < 0)
        throw Error(Errc::solver_failure, "no real root");
    // sqrt(p/q) = sqrt(p*q)/q with p*q = s^2 * d, d square-free
    auto [s, d] = sqrt_decompose(numerator(disc) * denominator(disc));
    Rational root_rat(s, denominator(disc)); // sqrt(disc) = root_rat * sqrt(d)
    QuadExt plus((-b) / (2 * a), root_rat / (2 * a), d);
    QuadExt minus((-b) / (2 * a), -root_rat / (2 * a), d);
    if (plus < minus)
        std::swap(plus, minus);
    return {plus, minus};
}

Mat2 Mat2::identity() {
    Mat2 r;
    r.m = {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    return r;
}

Mat2 Mat2::from_rows(std::array<long long, 4> rows) {
    Mat2 r;
    r.m[0][0] = rows[0];
    r.m[0][1] = rows[1];
    r.m[1][0] = rows[2];
    r.m[1][1] = rows[3];
    return r;
}

bool Mat2::is_integral() const {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!is_integer(e))
                return false;
    return true;
}

bool Mat2::is_identity() const {
    return m[0][0] == 1 && m[0][1] == 0 && m[1][0] == 0 && m[1][1] == 1;
}

Mat2 Mat2::inverse() const {
    Rational dt = det();
    if (dt == 0)
        throw Error(Errc::solver_failure, "singular matrix");
    Mat2 r;
    r.m[0][0] = m[1][1] / dt;
    r.m[0][1] = -m[0][1] / dt;
    r.m[1][0] = -m[1][0] / dt;
    r.m[1][1] = m[0][0] / dt;
    r.domain_basis = codomain_basis;
    r.codomain_basis = domain_basis;
    return r;
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.m[i][j] = l.m[i][0] * r.m[0][j] + l.m[i][1] * r.m[1][j];
    out.domain_basis = r.domain_basis;
    out.codomain_basis = l.codomain_basis;
    return out;
}

std::string to_string(const Mat2& m) {
    std::ostringstream os;
    os << "[ " << to_string(m.m[0][0]) << " " << to_string(m.m[0][1]) << " ]\n";
    os << "[ " << to_string(m.m[1][0]) << " " << to_string(m.m[1][1]) << " ]";
    return os.str();
}

bool DivClass::is_integral() const {
    return is_rational() && is_integer(l.a) && is_integer(h.a);
}

DivClass apply(const Mat2& m, const DivClass& v) {
    QuadExt nl = QuadExt(m.m[0][0]) * v.l + QuadExt(m.m[0][1]) * v.h;
    QuadExt nh = QuadExt(m.m[1][0]) * v.l + QuadExt(m.m[1][1]) * v.h;
    return DivClass(nl, nh);
}

QuadExt cross(const DivClass& u, const DivClass& v) { return u.l * v.h - u.h * v.l; }

DivClass primitive_ray(const DivClass& v) {
    if (!v.is_rational())
        throw Error(Errc::solver_failure, "primitive_ray needs a rational class");
    if (v.is_zero())
        return v;
    Rational x = v.l.a, y = v.h.a;
    BigInt num_gcd = boost::multiprecision::gcd(numerator(x) < 0 ? BigInt(-numerator(x)) : numerator(x),
                                                numerator(y) < 0 ? BigInt(-numerator(y)) : numerator(y));
    BigInt den_lcm = boost::multiprecision::lcm(denominator(x), denominator(y));
    Rational scale(den_lcm, num_gcd == 0 ? BigInt(1) : num_gcd);
    x *= scale;
    y *= scale;
    return DivClass(QuadExt(x), QuadExt(y));
}

bool same_ray(const DivClass& u, const DivClass& v) {
    if (u.is_zero() || v.is_zero())
        return u.is_zero() && v.is_zero();
    if (cross(u, v).sign() != 0)
        return false;
    QuadExt dot = u.l * v.l + u.h * v.h;
    return dot.sign() > 0;
}

std::string to_string(const DivClass& v) {
    auto term = [](const QuadExt& c, const char* sym, bool leading) -> std::string {
        if (c.is_zero())
            return "";
        std::string out;
        if (c.is_rational()) {
            Rational r = c.a;
            if (r > 0 && !leading)
                out += "+";
            if (r == 1)
                out += sym;
            else if (r == -1)
                out += std::string("-") + sym;
            else
                out += to_string(r) + sym;
        } else {
            if (!leading)
                out += "+";
            out += "(" + to_string(c) + ")" + sym;
        }
        return out;
    };
    if (v.is_zero())
        return "0";
    // Paper convention: when the L-coefficient is negative and the class is
    // rational, lead with the H term ("5H-L", "490H-101L").
    bool h_first = v.is_rational() && v.l.sign() < 0 && v.h.sign() > 0;
    std::string first = h_first ? term(v.h, "H", true) : term(v.l, "L", true);
    if (first.empty())
        return h_first ? term(v.l, "L", true) : term(v.h, "H", true);
    std::string second = h_first ? term(v.l, "L", false) : term(v.h, "H", false);
    return first + second;
}

std::array<EigenPair, 2> eigen2(const Mat2& m, RayNormalization norm) {
    std::pair<QuadExt, QuadExt> roots;
    try {
        roots = solve_quadratic(Rational(1), -m.trace(), m.det());
    } catch (const Error&) {
        throw Error(Errc::solver_failure, "no real spectrum");
    }
    if (roots.first == roots.second)
        throw Error(Errc::solver_failure, "degenerate spectrum");

    auto ray_for = [&](const QuadExt& lambda) -> DivClass {
        QuadExt m00(m.m[0][0]), m01(m.m[0][1]), m10(m.m[1][0]), m11(m.m[1][1]);
        DivClass v;
        if (!(m01.is_zero() && (m00 - lambda).is_zero()))
            v = DivClass(m01, lambda - m00);
        else
            v = DivClass(lambda - m11, m10);
        if (v.is_zero())
            throw Error(Errc::solver_failure, "degenerate spectrum");
        if (norm == RayNormalization::match_paper && !v.h.is_rational()) {
            QuadExt scale(v.h.b); // make the H-coordinate read u + sqrt(D)
            v = DivClass(v.l / scale, v.h / scale);
        } else if (v.is_rational()) {
            v = primitive_ray(v);
            if (v.l.sign() < 0 || (v.l.is_zero() && v.h.sign() < 0))
                v = DivClass(-v.l, -v.h);
        }
        return v;
    };

    return {EigenPair{roots.first, ray_for(roots.first)},
            EigenPair{roots.second, ray_for(roots.second)}};
}

} // namespace movcone
