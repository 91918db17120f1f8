#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lplab/rational.hpp"

namespace lplab {

/// Dense univariate polynomial over Q, coefficients low to high, no trailing
/// zeros (the zero polynomial has no coefficients).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c);
    /// (s * (t - shift))^k expanded in t.
    static UPoly shifted_power(const Rational& shift, unsigned k, int sign = 1);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& t) const;
    int sign_at(const Rational& t) const { return sgn((*this)(t)); }

    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& s, const UPoly& a);
    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct DivMod {
    UPoly quotient;
    UPoly remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);

/// Resultant of two univariate polynomials over Q.
Rational resultant(const UPoly& f, const UPoly& g);

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Every real root has absolute value below the returned bound.
Rational cauchy_root_bound(const UPoly& f);

class SturmSequence {
public:
    explicit SturmSequence(const UPoly& squarefree);
    /// Number of distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const;
    const UPoly& base() const { return seq_.front(); }

private:
    int variations(const Rational& t) const;
    std::vector<UPoly> seq_;
};

/// A real root of a squarefree polynomial isolated in [lo, hi]. Either
/// lo == hi (exact rational root) or the polynomial is nonzero with opposite
/// signs at lo and hi and has exactly one root in (lo, hi).
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

/// Isolates the distinct real roots of f in the closed interval [a, b].
std::vector<RootInterval> isolate_roots(const UPoly& f, const Rational& a, const Rational& b);

/// Halves an isolating interval of squarefree f until its width is <= width.
void refine_root(const UPoly& squarefree, RootInterval& r, const Rational& width);

/// Dense bivariate polynomial, c[i][j] multiplies x^i y^j.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 from_x(const UPoly& a);
    static Poly2 from_y(const UPoly& b);
    /// a(x) * b(y)
    static Poly2 product(const UPoly& a, const UPoly& b);

    Rational operator()(const Rational& x, const Rational& y) const;
    int total_degree() const;
    bool is_zero() const;

    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b);

    /// Coefficient grid scaled by a positive rational to coprime integers.
    std::vector<std::vector<Integer>> integer_coefficients() const;
    const std::vector<std::vector<Rational>>& coefficients() const { return c_; }
    static Poly2 from_coefficients(std::vector<std::vector<Rational>> c);

    /// Polynomial with the coefficient grid normalised to primitive integers
    /// with positive leading term; used to deduplicate zero sets.
    Poly2 normalized() const;

private:
    void trim();
    std::vector<std::vector<Rational>> c_;
};

}  // namespace lplab
