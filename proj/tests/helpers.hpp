#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/rational.hpp"
#include "brauer/rational_function.hpp"

namespace brauer::testing {

/// Diagram from pair labels, e.g. {{"1","4"},{"2","4'"},{"3","5"},...}.
inline Diagram make_diagram(int n, const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto index = [n](const std::string& s) {
        if (s.back() == '\'') return n + std::stoi(s.substr(0, s.size() - 1)) - 1;
        return std::stoi(s) - 1;
    };
    std::vector<int> m(2 * n, -1);
    for (const auto& [x, y] : pairs) {
        m[index(x)] = index(y);
        m[index(y)] = index(x);
    }
    return Diagram(n, std::move(m));
}

inline Polynomial random_poly(std::mt19937& rng, int maxdeg = 4, bool nonzero = false) {
    std::uniform_int_distribution<int> coeff(-8, 8), deg(0, maxdeg);
    while (true) {
        int d = deg(rng);
        std::vector<BigInt> cs(d + 1);
        for (auto& c : cs) c = coeff(rng);
        Polynomial p{std::move(cs)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline RationalFunction random_rf(std::mt19937& rng, int maxdeg = 3) {
    return RationalFunction(random_poly(rng, maxdeg), random_poly(rng, maxdeg, true));
}

inline unsigned long long double_factorial(int k) {
    unsigned long long r = 1;
    for (int i = k; i > 1; i -= 2) r *= static_cast<unsigned long long>(i);
    return r;
}

}  // namespace brauer::testing
