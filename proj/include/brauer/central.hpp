#pragma once

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/parallel.hpp"
#include "brauer/rational_function.hpp"
#include "brauer/spore.hpp"

namespace brauer {

/// A diagram-basis vector was expected to be constant on a conjugation orbit
/// but is not. Doubles as a centrality diagnostic.
class NonInvariantError : public std::runtime_error {
public:
    NonInvariantError(SporeTableau cls, std::string what)
        : std::runtime_error(std::move(what)), class_(std::move(cls)) {}
    const SporeTableau& spore_class() const { return class_; }

private:
    SporeTableau class_;
};

/// Finite linear combination of diagrams, zero coefficients absent. Ordered
/// by canonical partner arrays, so iteration is deterministic.
class DiagramVector {
public:
    DiagramVector() : n_(0) {}
    explicit DiagramVector(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Diagram, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RationalFunction coeff(const Diagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    void add(const Diagram& d, const RationalFunction& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const DiagramVector& a, const DiagramVector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiagramVector& a, const DiagramVector& b) { return !(a == b); }

private:
    int n_;
    std::map<Diagram, RationalFunction> terms_;
};

/// S_n-conjugation-invariant element of B_n: a finite map from Spore classes
/// to coefficients, representing the sum of coeff * (orbit sum of the class).
class CentralElement {
public:
    CentralElement() : n_(0) {}
    explicit CentralElement(int n) : n_(n) {}

    static CentralElement one(int n) {
        CentralElement e(n);
        e.set(SporeTableau::identity(n), RationalFunction(1));
        return e;
    }

    int n() const { return n_; }
    const std::map<SporeTableau, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RationalFunction coeff(const SporeTableau& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    void set(const SporeTableau& t, const RationalFunction& c) {
        if (t.n() != n_) throw std::invalid_argument("CentralElement: tableau size mismatch");
        if (c.is_zero())
            terms_.erase(t);
        else
            terms_[t] = c;
    }

    void add(const SporeTableau& t, const RationalFunction& c) { set(t, coeff(t) + c); }

    friend bool operator==(const CentralElement& a, const CentralElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CentralElement& a, const CentralElement& b) { return !(a == b); }

    friend CentralElement operator+(const CentralElement& a, const CentralElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("CentralElement: size mismatch");
        CentralElement r = a;
        for (const auto& [t, c] : b.terms_) r.add(t, c);
        return r;
    }
    friend CentralElement operator-(const CentralElement& a, const CentralElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("CentralElement: size mismatch");
        CentralElement r = a;
        for (const auto& [t, c] : b.terms_) r.add(t, -c);
        return r;
    }
    friend CentralElement operator*(const RationalFunction& s, const CentralElement& a) {
        CentralElement r(a.n_);
        if (s.is_zero()) return r;
        for (const auto& [t, c] : a.terms_) r.set(t, s * c);
        return r;
    }

private:
    int n_;
    std::map<SporeTableau, RationalFunction> terms_;
};

/// Orbit-sum expansion into the plain diagram basis.
inline DiagramVector expand(const CentralElement& x) {
    DiagramVector v(x.n());
    for (const auto& [t, c] : x.terms())
        for (const Diagram& d : orbit_support(t, x.n())) v.add(d, c);
    return v;
}

/// Inverse of expand. Throws NonInvariantError unless the vector is constant
/// on every conjugation orbit (absent diagrams count as zero).
inline CentralElement contract(const DiagramVector& v) {
    CentralElement x(v.n());
    std::map<SporeTableau, std::pair<RationalFunction, long>> seen;
    for (const auto& [d, c] : v.terms()) {
        SporeTableau t = spore(d);
        auto it = seen.find(t);
        if (it == seen.end()) {
            seen.emplace(t, std::make_pair(c, 1L));
        } else {
            if (it->second.first != c)
                throw NonInvariantError(
                    t, "contract: class " + t.str() + " carries distinct coefficients " +
                           it->second.first.str() + " and " + c.str() + " (at " + d.str() + ")");
            ++it->second.second;
        }
    }
    for (const auto& [t, cc] : seen) {
        long orbit = static_cast<long>(orbit_support(t, v.n()).size());
        if (cc.second != orbit)
            throw NonInvariantError(t, "contract: class " + t.str() + " covered on " +
                                           std::to_string(cc.second) + " of " +
                                           std::to_string(orbit) + " diagrams");
        x.set(t, cc.first);
    }
    return x;
}

enum class Side { left, right };

/// scale * (d composed with v) on the chosen side, in the diagram basis.
inline DiagramVector mul_by_diagram(const DiagramVector& v, const Diagram& d, Side side,
                                    const RationalFunction& scale = RationalFunction(1)) {
    if (v.n() != d.n()) throw std::invalid_argument("mul_by_diagram: size mismatch");
    DiagramVector out(v.n());
    for (const auto& [a, c] : v.terms()) {
        auto [prod, loops] = side == Side::left ? compose(d, a) : compose(a, d);
        out.add(prod, scale * c * RationalFunction(Polynomial(1).shifted(loops)));
    }
    return out;
}

inline DiagramVector mul_by_diagram(const CentralElement& a, const Diagram& d, Side side,
                                    const RationalFunction& scale = RationalFunction(1)) {
    return mul_by_diagram(expand(a), d, side, scale);
}

/// True iff the expansion commutes with every generator u_i, sigma_i.
/// Spore-invariance already forces the sigma_i; the u_i checks are the
/// substantive ones.
inline bool is_central(const CentralElement& a) {
    DiagramVector v = expand(a);
    for (int i = 1; i < a.n(); ++i) {
        for (const Diagram& g : {generator_u(i, a.n()), generator_sigma(i, a.n())}) {
            if (mul_by_diagram(v, g, Side::left) != mul_by_diagram(v, g, Side::right))
                return false;
        }
    }
    return true;
}

/// Product in the centralizer algebra: expands both factors, composes every
/// diagram pair accumulating the loop powers of d, and contracts.
///
/// Coefficients are pulled onto a common denominator per factor first, so the
/// double loop accumulates integer polynomials; each resulting coefficient is
/// reduced once at the end.
inline CentralElement mul(const CentralElement& a, const CentralElement& b, unsigned jobs = 1) {
    if (a.n() != b.n()) throw std::invalid_argument("mul: size mismatch");
    const int n = a.n();
    if (a.is_zero() || b.is_zero()) return CentralElement(n);

    struct Term {
        const std::vector<Diagram>* orbit;
        Polynomial num;
    };
    auto flatten = [&](const CentralElement& x, Polynomial& common) {
        common = Polynomial(1);
        for (const auto& [t, c] : x.terms()) common = lcm(common, c.den());
        std::vector<Term> terms;
        for (const auto& [t, c] : x.terms())
            terms.push_back({&orbit_support(t, n), c.num() * div_exact(common, c.den())});
        return terms;
    };
    Polynomial ga, gb;
    std::vector<Term> ta = flatten(a, ga);
    std::vector<Term> tb = flatten(b, gb);

    std::vector<std::vector<Polynomial>> pairnum(ta.size(), std::vector<Polynomial>(tb.size()));
    for (std::size_t i = 0; i < ta.size(); ++i)
        for (std::size_t j = 0; j < tb.size(); ++j) pairnum[i][j] = ta[i].num * tb[j].num;

    // Work items: every diagram of every left orbit.
    std::vector<std::pair<std::size_t, const Diagram*>> work;
    for (std::size_t i = 0; i < ta.size(); ++i)
        for (const Diagram& d : *ta[i].orbit) work.emplace_back(i, &d);

    if (jobs == 0) jobs = 1;
    std::vector<std::map<Diagram, Polynomial>> partial(std::max<unsigned>(jobs, 1));
    parallel_chunks(work.size(), jobs, [&](unsigned w, std::size_t lo, std::size_t hi) {
        auto& acc = partial[w];
        for (std::size_t k = lo; k < hi; ++k) {
            auto [i, aDiag] = work[k];
            for (std::size_t j = 0; j < tb.size(); ++j) {
                for (const Diagram& bDiag : *tb[j].orbit) {
                    auto [prod, loops] = compose(*aDiag, bDiag);
                    acc[prod] += pairnum[i][j].shifted(loops);
                }
            }
        }
    });

    std::map<Diagram, Polynomial> total;
    for (auto& part : partial)
        for (auto& [d, p] : part) total[d] += p;

    Polynomial den = ga * gb;
    DiagramVector prod(n);
    for (auto& [d, p] : total) prod.add(d, RationalFunction(std::move(p), den));
    return contract(prod);
}

}  // namespace brauer
