#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "brauer/polynomial.hpp"
#include "brauer/rational.hpp"

namespace brauer {

/// Specialization hit a genuine pole (non-removable, since fractions are kept
/// reduced).
class PoleError : public std::runtime_error {
public:
    explicit PoleError(Rational at, std::string what = "")
        : std::runtime_error(what.empty() ? "pole at delta = " + at.str() : std::move(what)),
          at_(std::move(at)) {}
    const Rational& at() const { return at_; }

private:
    Rational at_;
};

/// Element of Q(d), the field of rational functions in one indeterminate.
///
/// Canonical form: denominator nonzero with positive leading coefficient, the
/// primitive parts of numerator and denominator coprime, and their integer
/// contents coprime. Equal field elements then have identical representations,
/// so operator== is componentwise.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(int v) : num_(v), den_(1) {}
    RationalFunction(const Rational& r) : num_(r.num()), den_(r.den()) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    /// True iff the value is a constant rational.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("RationalFunction: not constant");
        return Rational(num_.constant_term(), den_.constant_term());
    }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// Membership in K = { f/g : f,g in Z[d], g monic, deg f <= deg g }.
    /// In canonical form this is: zero, or (denominator monic and
    /// deg num <= deg den). The monic condition subsumes content 1.
    bool in_K() const {
        if (is_zero()) return true;
        return den_.is_monic() && num_.degree() <= den_.degree();
    }

    /// Image in K / K*d^-1, identified with Z: the leading-coefficient ratio
    /// when degrees match, 0 otherwise. Requires in_K().
    BigInt k_residue() const {
        if (!in_K()) throw std::domain_error("k_residue: element not in K");
        if (is_zero() || num_.degree() < den_.degree()) return 0;
        return num_.leading();
    }

    /// Exact evaluation at d = at. Throws PoleError when the (reduced)
    /// denominator vanishes there; removable singularities cannot occur.
    Rational specialize(const Rational& at) const {
        Rational d = den_.eval(at);
        if (d.is_zero()) throw PoleError(at);
        return num_.eval(at) / d;
    }

    std::string str(const std::string& var = "d") const {
        if (den_ == Polynomial(1)) return num_.str(var);
        std::string n = num_.str(var);
        if (num_.degree() > 0) n = "(" + n + ")";
        std::string d = den_.str(var);
        if (den_.degree() > 0 || den_.constant_term() < 0) d = "(" + d + ")";
        return n + "/" + d;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
        return os << f.str();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g != Polynomial(1)) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// The indeterminate as a field element.
inline RationalFunction rf_delta() { return RationalFunction(Polynomial::x()); }

}  // namespace brauer
