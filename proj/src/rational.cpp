#include "lplab/rational.hpp"

#include <cctype>
#include <functional>

#include "lplab/errors.hpp"

namespace lplab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::CapacityExceeded: return "CapacityExceeded";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::NumericalBudgetExceeded: return "NumericalBudgetExceeded";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::IdenticalCurves: return "IdenticalCurves";
        case ErrorKind::DegeneratePosition: return "DegeneratePosition";
        case ErrorKind::ContractViolation: return "ContractViolation";
        case ErrorKind::EmptyAfterPruning: return "EmptyAfterPruning";
        case ErrorKind::NoCover: return "NoCover";
        case ErrorKind::StallDetected: return "StallDetected";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) fail(ErrorKind::InvalidInput, "not an integer: '" + std::string(s) + "'");
    std::string text(s.front() == '+' ? s.substr(1) : s);
    return Integer(text, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail(ErrorKind::InvalidInput, "empty number");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return make_rational(parse_integer(trim(s.substr(0, slash))),
                             parse_integer(trim(s.substr(slash + 1))));
    }
    bool negative = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        Integer ez = parse_integer(body.substr(e + 1));
        if (!ez.fits_slong_p() || abs(ez) > 4096) fail(ErrorKind::InvalidInput, "exponent out of range");
        exponent = ez.get_si();
        body = body.substr(0, e);
    }
    std::string digits;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            fail(ErrorKind::InvalidInput, "malformed number: '" + std::string(s) + "'");
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(body)) fail(ErrorKind::InvalidInput, "malformed number: '" + std::string(s) + "'");
        digits = std::string(body);
    }
    Integer num(digits, 10);
    if (negative) num = -num;
    Integer scale = pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? make_rational(num, scale) : Rational(num * scale);
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer pow(const Integer& base, unsigned exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r;
}

Rational signed_pow(const Rational& t, unsigned exponent) {
    Rational r = pow(abs(t), exponent);
    return sgn(t) < 0 ? Rational(-r) : r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_between(-hi, -lo);
    Integer fl = floor_of(lo);
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return Rational(fl + 1);
    // Both ends share the integer part; recurse on the reciprocals of the fractional parts.
    Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
    return Rational(fl) + 1 / inner;
}

Rational limit_denominator(const Rational& q, const Integer& max_den) {
    if (max_den < 1) fail(ErrorKind::InvalidParameter, "denominator bound must be >= 1");
    if (q.get_den() <= max_den) return q;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer n = q.get_num(), d = q.get_den();
    while (true) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        Integer q2 = q0 + a * q1;
        if (q2 > max_den) break;
        Integer np0 = p1, nq0 = q1;
        p1 = p0 + a * p1;
        q1 = q2;
        p0 = np0;
        q0 = nq0;
        Integer nn = d;
        d = n - a * d;
        n = nn;
    }
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), Integer(max_den - q0).get_mpz_t(), q1.get_mpz_t());
    Rational bound1 = make_rational(p0 + k * p1, q0 + k * q1);
    Rational bound2 = make_rational(p1, q1);
    return abs(bound2 - q) <= abs(bound1 - q) ? bound2 : bound1;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    return make_rational(num, den);
}

double to_double(const Rational& q) { return q.get_d(); }

std::size_t IntegerHash::operator()(const Integer& z) const noexcept {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(p->_mp_size) * 0x9e3779b97f4a7c15ULL;
    int limbs = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
    for (int i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t RationalHash::operator()(const Rational& q) const noexcept {
    IntegerHash zh;
    std::size_t a = zh(q.get_num());
    std::size_t b = zh(q.get_den());
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace lplab
