#include "lplab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lplab/errors.hpp"

namespace lplab {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::shifted_power(const Rational& shift, unsigned k, int sign) {
    // (s (t - c))^k = s^k sum_i C(k,i) t^i (-c)^(k-i)
    std::vector<Rational> c(k + 1);
    Integer binom = 1;
    for (unsigned i = 0; i <= k; ++i) {
        c[i] = Rational(binom) * pow(Rational(-shift), k - i);
        binom = binom * (k - i) / (i + 1);
    }
    if (sign < 0 && k % 2 == 1)
        for (auto& v : c) v = -v;
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

Rational UPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    Rational lc = leading();
    std::vector<Rational> d(c_);
    for (auto& v : d) v /= lc;
    return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v *= s;
    return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << "(" << lplab::to_string(c_[i]) << ")";
        if (i > 0) os << "*" << var << "^" << i;
        first = false;
    }
    return os.str();
}

DivMod divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(ErrorKind::ContractViolation, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo(a.degree() - b.degree() + 1);
    const Rational& lb = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / lb;
        quo[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.coeffs()[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f;
    UPoly g = gcd(f, f.derivative());
    return divmod(f, g).quotient.monic();
}

Rational resultant(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    int m = f.degree(), n = g.degree();
    if (n == 0) return pow(g.leading(), m);
    if (m == 0) return pow(f.leading(), n);
    UPoly r = divmod(f, g).remainder;
    if (r.is_zero()) return 0;
    Rational sign = (m % 2 == 1 && n % 2 == 1) ? -1 : 1;
    return sign * pow(g.leading(), m - r.degree()) * resultant(g, r);
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly result;
    UPoly basis = UPoly::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        result = result + dd[i] * basis;
        basis = basis * UPoly({Rational(-xs[i]), Rational(1)});
    }
    return result;
}

Rational cauchy_root_bound(const UPoly& f) {
    if (f.degree() <= 0) return 1;
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeffs()[i] / f.leading())));
    return m + 1;
}

SturmSequence::SturmSequence(const UPoly& squarefree) {
    seq_.push_back(squarefree);
    if (squarefree.degree() <= 0) return;
    seq_.push_back(squarefree.derivative());
    while (seq_.back().degree() > 0) {
        UPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
        if (r.is_zero()) break;
        // Positive rescaling keeps the sign pattern while taming coefficient growth.
        Rational lc = abs(r.leading());
        seq_.push_back(Rational(-1 / lc) * r);
    }
}

int SturmSequence::variations(const Rational& t) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(t);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
    if (a >= b) return 0;
    return variations(a) - variations(b);
}

namespace {

void isolate_open(const UPoly& f, const SturmSequence& s, const Rational& lo, const Rational& hi, int cnt,
                  std::vector<RootInterval>& out) {
    if (cnt <= 0) return;
    if (cnt == 1 && f.sign_at(lo) != 0 && f.sign_at(hi) != 0) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (f.sign_at(mid) == 0) {
        out.push_back({mid, mid});
        int left = s.count(lo, mid) - 1;
        isolate_open(f, s, lo, mid, left, out);
        isolate_open(f, s, mid, hi, cnt - left - 1, out);
    } else {
        int left = s.count(lo, mid);
        isolate_open(f, s, lo, mid, left, out);
        isolate_open(f, s, mid, hi, cnt - left, out);
    }
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UPoly& f, const Rational& a, const Rational& b) {
    std::vector<RootInterval> out;
    if (f.is_zero()) fail(ErrorKind::ContractViolation, "isolating roots of the zero polynomial");
    if (f.degree() == 0 || a > b) return out;
    UPoly sf = squarefree_part(f);
    if (a == b) {
        if (sf.sign_at(a) == 0) out.push_back({a, a});
        return out;
    }
    SturmSequence s(sf);
    if (sf.sign_at(a) == 0) out.push_back({a, a});
    int cnt = s.count(a, b);
    if (sf.sign_at(b) == 0) {
        out.push_back({b, b});
        --cnt;
    }
    isolate_open(sf, s, a, b, cnt, out);
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

void refine_root(const UPoly& squarefree, RootInterval& r, const Rational& width) {
    if (r.exact()) return;
    int slo = squarefree.sign_at(r.lo);
    while (r.hi - r.lo > width) {
        Rational mid = (r.lo + r.hi) / 2;
        int sm = squarefree.sign_at(mid);
        if (sm == 0) {
            r.lo = r.hi = mid;
            return;
        }
        if (sm == slo) r.lo = mid;
        else r.hi = mid;
    }
    Rational s = simplest_between(r.lo, r.hi);
    if (squarefree.sign_at(s) == 0) r.lo = r.hi = s;
}

Poly2 Poly2::from_x(const UPoly& a) {
    Poly2 p;
    for (int i = 0; i <= a.degree(); ++i) p.c_.push_back({a.coeffs()[i]});
    p.trim();
    return p;
}

Poly2 Poly2::from_y(const UPoly& b) {
    Poly2 p;
    if (!b.is_zero()) p.c_.push_back(b.coeffs());
    p.trim();
    return p;
}

Poly2 Poly2::product(const UPoly& a, const UPoly& b) {
    Poly2 p;
    for (int i = 0; i <= a.degree(); ++i) {
        std::vector<Rational> row;
        for (int j = 0; j <= b.degree(); ++j) row.push_back(a.coeffs()[i] * b.coeffs()[j]);
        p.c_.push_back(std::move(row));
    }
    p.trim();
    return p;
}

Poly2 Poly2::from_coefficients(std::vector<std::vector<Rational>> c) {
    Poly2 p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void Poly2::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

Rational Poly2::operator()(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rational inner = 0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) inner = inner * y + *jt;
        acc = acc * x + inner;
    }
    return acc;
}

int Poly2::total_degree() const {
    int d = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j)
            if (c_[i][j] != 0) d = std::max(d, static_cast<int>(i + j));
    return d;
}

bool Poly2::is_zero() const { return c_.empty(); }

Poly2 operator+(const Poly2& a, const Poly2& b) {
    std::vector<std::vector<Rational>> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t la = i < a.c_.size() ? a.c_[i].size() : 0;
        std::size_t lb = i < b.c_.size() ? b.c_[i].size() : 0;
        c[i].resize(std::max(la, lb));
        for (std::size_t j = 0; j < la; ++j) c[i][j] += a.c_[i][j];
        for (std::size_t j = 0; j < lb; ++j) c[i][j] += b.c_[i][j];
    }
    return Poly2::from_coefficients(std::move(c));
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
    auto neg = b.c_;
    for (auto& row : neg)
        for (auto& v : row) v = -v;
    return a + Poly2::from_coefficients(std::move(neg));
}

bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

std::vector<std::vector<Integer>> Poly2::integer_coefficients() const {
    Integer den = 1, num = 0;
    for (const auto& row : c_)
        for (const auto& v : row) {
            if (v == 0) continue;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        }
    for (const auto& row : c_)
        for (const auto& v : row) {
            if (v == 0) continue;
            Integer scaled = v.get_num() * (den / v.get_den());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
        }
    if (num == 0) num = 1;
    std::vector<std::vector<Integer>> out;
    for (const auto& row : c_) {
        std::vector<Integer> r;
        for (const auto& v : row) r.push_back(v.get_num() * (den / v.get_den()) / num);
        out.push_back(std::move(r));
    }
    return out;
}

Poly2 Poly2::normalized() const {
    auto ints = integer_coefficients();
    std::vector<std::vector<Rational>> c;
    int lead_sign = 0;
    for (std::size_t i = ints.size(); i-- > 0 && lead_sign == 0;)
        for (std::size_t j = ints[i].size(); j-- > 0;)
            if (ints[i][j] != 0) {
                lead_sign = sgn(ints[i][j]);
                break;
            }
    for (const auto& row : ints) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(lead_sign < 0 ? Rational(-v) : Rational(v));
        c.push_back(std::move(r));
    }
    return from_coefficients(std::move(c));
}

}  // namespace lplab
