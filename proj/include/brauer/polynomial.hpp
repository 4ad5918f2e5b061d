#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// Univariate polynomial over the integers, dense ascending-degree storage.
/// Canonical form: no trailing zero at top degree; the zero polynomial is the
/// empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) { if (c != 0) coeffs_.push_back(c); }
    Polynomial(BigInt c) { if (c != 0) coeffs_.push_back(std::move(c)); }
    explicit Polynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
        trim();
    }

    /// The indeterminate.
    static Polynomial x() { return Polynomial(std::vector<BigInt>{0, 1}); }

    /// Builds from coefficients as conventionally printed, highest degree first.
    static Polynomial from_descending(std::initializer_list<long long> cs) {
        std::vector<BigInt> v;
        v.reserve(cs.size());
        for (auto it = std::rbegin(cs); it != std::rend(cs); ++it) v.emplace_back(*it);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// degree() of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& operator[](std::size_t i) const {
        static const BigInt kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    const BigInt& leading() const {
        static const BigInt kZero = 0;
        return coeffs_.empty() ? kZero : coeffs_.back();
    }
    const BigInt& constant_term() const { return (*this)[0]; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
        return Polynomial(std::move(v));
    }
    Polynomial operator-() const {
        std::vector<BigInt> v(coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const BigInt& c, const Polynomial& p) {
        if (c == 0) return {};
        std::vector<BigInt> v(p.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
        for (std::size_t i = a.coeffs_.size(); i-- > 0;)
            if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
        return false;
    }

    /// Multiplies by x^k.
    Polynomial shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<BigInt> v(coeffs_.size() + k, BigInt(0));
        std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
        return Polynomial(std::move(v));
    }

    /// Non-negative gcd of all coefficients; content of 0 is 0.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            g = gcd(g, abs(c));
            if (g == 1) break;
        }
        return g;
    }

    /// p / content(p), keeping the sign of the leading coefficient.
    Polynomial primitive_part() const {
        if (is_zero()) return {};
        BigInt ct = content();
        if (ct == 1) return *this;
        std::vector<BigInt> v(coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] / ct;
        return Polynomial(std::move(v));
    }

    /// Exact division; throws if the divisor does not divide exactly.
    friend Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
        if (a.is_zero()) return {};
        if (a.degree() < b.degree()) throw std::domain_error("Polynomial: inexact division");
        std::vector<BigInt> rem = a.coeffs_;
        std::vector<BigInt> quo(a.degree() - b.degree() + 1, BigInt(0));
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            BigInt top = rem[k + b.degree()];
            if (top == 0) continue;
            if (top % b.leading() != 0) throw std::domain_error("Polynomial: inexact division");
            BigInt q = top / b.leading();
            quo[k] = q;
            for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.coeffs_[i];
        }
        for (const auto& c : rem)
            if (c != 0) throw std::domain_error("Polynomial: inexact division");
        return Polynomial(std::move(quo));
    }

    /// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b.
    friend Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial: pseudo_rem by zero");
        Polynomial r = a;
        int e = a.degree() - b.degree() + 1;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Polynomial t = (b.leading() * r) - (r.leading() * b.shifted(k));
            r = std::move(t);
            --e;
        }
        while (e-- > 0) r = b.leading() * r;
        return r;
    }

    BigInt eval(const BigInt& x0) const {
        BigInt acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x0 + coeffs_[i];
        return acc;
    }

    Rational eval(const Rational& x0) const {
        // p(a/b) = sum c_i a^i b^(d-i) / b^d
        if (is_zero()) return Rational(0);
        BigInt acc = 0;
        BigInt bpow = 1;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x0.num() + coeffs_[i] * bpow;
            bpow *= x0.den();
        }
        BigInt dpow = 1;
        for (int i = 0; i < degree(); ++i) dpow *= x0.den();
        return Rational(acc, dpow);
    }

    std::string str(const std::string& var = "d") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            BigInt a = abs(c);
            if (out.empty())
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            bool unit = (a == 1) && i > 0;
            if (!unit) out += a.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// Gcd in Z[x]: gcd of contents times gcd of primitive parts, with positive
/// leading coefficient. Computed by the primitive PRS, exact throughout.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    auto positive = [](Polynomial p) { return p.leading() < 0 ? -p : p; };
    if (a.is_zero()) return positive(b);
    if (b.is_zero()) return positive(a);
    BigInt cg = gcd(a.content(), b.content());
    Polynomial r0 = a.primitive_part();
    Polynomial r1 = b.primitive_part();
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Polynomial r2 = pseudo_rem(r0, r1).primitive_part();
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return cg * positive(r0.primitive_part());
}

inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return div_exact(a * b, gcd(a, b));
}

/// All integer roots of a nonzero polynomial. Nonzero roots divide the lowest
/// nonzero coefficient; 0 is a root iff that coefficient sits above degree 0.
inline std::set<BigInt> integer_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
    std::set<BigInt> roots;
    std::size_t low = 0;
    while (p[low] == 0) ++low;
    if (low > 0) roots.insert(0);
    if (static_cast<int>(low) == p.degree()) return roots;
    std::vector<BigInt> rest(p.coeffs().begin() + low, p.coeffs().end());
    Polynomial q{std::vector<BigInt>(rest)};
    BigInt a0 = abs(q.constant_term());
    std::vector<BigInt> divisors;
    for (BigInt i = 1; i * i <= a0; ++i) {
        if (a0 % i == 0) {
            divisors.push_back(i);
            divisors.push_back(a0 / i);
        }
    }
    for (const auto& d : divisors) {
        if (q.eval(d) == 0) roots.insert(d);
        if (q.eval(BigInt(-d)) == 0) roots.insert(-d);
    }
    return roots;
}

}  // namespace brauer
