#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauer/central.hpp"
#include "brauer/polynomial.hpp"
#include "brauer/rational.hpp"
#include "brauer/rational_function.hpp"
#include "brauer/spore.hpp"

namespace brauer {

/// Where the coefficients of a central element blow up, and how deep into the
/// propagating filtration the divergence reaches.
struct PoleReport {
    std::set<Rational> poles;
    std::map<SporeTableau, std::set<Rational>> by_class;
    std::map<Rational, int> max_prop_at_pole;
};

/// Integer roots of every coefficient denominator, with per-class attribution
/// and, per pole, the largest propagating count among diverging classes.
/// Denominators in this algebra are integer multiples of monic polynomials,
/// so all of their rational roots are integers.
inline PoleReport poles(const CentralElement& x) {
    PoleReport rep;
    for (const auto& [t, c] : x.terms()) {
        if (c.den().degree() < 1) continue;
        std::set<Rational> here;
        for (const BigInt& r : integer_roots(c.den())) here.insert(Rational(r));
        if (here.empty()) continue;
        for (const Rational& p : here) {
            rep.poles.insert(p);
            auto [it, inserted] = rep.max_prop_at_pole.emplace(p, t.prop_count());
            if (!inserted && t.prop_count() > it->second) it->second = t.prop_count();
        }
        rep.by_class.emplace(t, std::move(here));
    }
    return rep;
}

/// Signed sum of central elements; coefficients are fully reduced, so common
/// poles cancel here.
inline CentralElement combine(const std::vector<std::pair<int, CentralElement>>& terms) {
    if (terms.empty()) throw std::invalid_argument("combine: no terms");
    CentralElement out(terms.front().second.n());
    for (const auto& [sign, x] : terms) {
        if (x.n() != out.n()) throw std::invalid_argument("combine: size mismatch");
        if (sign != 1 && sign != -1) throw std::invalid_argument("combine: sign must be +1 or -1");
        for (const auto& [t, c] : x.terms()) out.add(t, sign == 1 ? c : -c);
    }
    return out;
}

/// Specialization failed on specific classes.
class ElementPoleError : public PoleError {
public:
    ElementPoleError(Rational at, std::vector<SporeTableau> classes)
        : PoleError(at, build_message(at, classes)), classes_(std::move(classes)) {}
    const std::vector<SporeTableau>& classes() const { return classes_; }

private:
    static std::string build_message(const Rational& at,
                                     const std::vector<SporeTableau>& classes) {
        std::string msg = "pole at delta = " + at.str() + " in classes:";
        for (const auto& t : classes) msg += " [" + t.str() + "]";
        return msg;
    }
    std::vector<SporeTableau> classes_;
};

/// Evaluates every coefficient at delta = at. All-or-nothing: throws
/// ElementPoleError naming every offending class if any denominator vanishes.
inline CentralElement specialize_element(const CentralElement& x, const Rational& at) {
    std::vector<SporeTableau> bad;
    for (const auto& [t, c] : x.terms())
        if (c.den().eval(at).is_zero()) bad.push_back(t);
    if (!bad.empty()) throw ElementPoleError(at, std::move(bad));
    CentralElement out(x.n());
    for (const auto& [t, c] : x.terms()) out.set(t, RationalFunction(c.specialize(at)));
    return out;
}

}  // namespace brauer
