#pragma once

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "brauer/analysis.hpp"
#include "brauer/central.hpp"
#include "brauer/golden.hpp"
#include "brauer/solver.hpp"
#include "brauer/symgrp.hpp"

namespace brauer {

struct SelfTestResult {
    int checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

namespace selftest_detail {

inline void expect(SelfTestResult& r, bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.failures.push_back(what);
}

/// First mismatching coefficient, in canonical class order.
inline std::optional<std::string> diff_elements(const CentralElement& expected,
                                                const CentralElement& got) {
    for (const auto& [t, c] : expected.terms()) {
        if (got.coeff(t) != c)
            return "class [" + t.str() + "]: expected " + c.str() + ", got " +
                   got.coeff(t).str();
    }
    for (const auto& [t, c] : got.terms()) {
        if (expected.coeff(t) != c)
            return "class [" + t.str() + "]: expected " + expected.coeff(t).str() + ", got " +
                   c.str();
    }
    return std::nullopt;
}

inline RationalFunction random_rf(std::mt19937& rng, int maxdeg = 3) {
    std::uniform_int_distribution<int> coeff(-6, 6), deg(0, maxdeg);
    auto poly = [&](bool nonzero) {
        while (true) {
            int d = deg(rng);
            std::vector<BigInt> cs(d + 1);
            for (auto& c : cs) c = coeff(rng);
            Polynomial p{std::move(cs)};
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RationalFunction(poly(false), poly(true));
}

inline Polynomial random_poly(std::mt19937& rng, int maxdeg = 3, bool nonzero = false) {
    std::uniform_int_distribution<int> coeff(-6, 6), deg(0, maxdeg);
    while (true) {
        int d = deg(rng);
        std::vector<BigInt> cs(d + 1);
        for (auto& c : cs) c = coeff(rng);
        Polynomial p{std::move(cs)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

/// Random element of K built straight from the definition: f/g with g monic
/// and deg f <= deg g.
inline RationalFunction random_k_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 3);
    int dg = deg(rng);
    std::vector<BigInt> g(dg + 1);
    for (auto& c : g) c = coeff(rng);
    g.back() = 1;
    std::uniform_int_distribution<int> degf(0, dg);
    int df = degf(rng);
    std::vector<BigInt> f(df + 1);
    for (auto& c : f) c = coeff(rng);
    return RationalFunction(Polynomial(std::move(f)), Polynomial(std::move(g)));
}

inline CentralElement random_central(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    CentralElement x(n);
    for (const auto& t : enumerate_spores(n, n))
        x.set(t, RationalFunction(coeff(rng)));
    return x;
}

inline std::vector<std::pair<int, int>> valid_split_params(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= max_n; ++n)
        for (int ell = n % 2; ell <= n - 2; ell += 2) out.emplace_back(n, ell);
    return out;
}

}  // namespace selftest_detail

/// Replays every reference table: splitting idempotents, symmetric-group
/// idempotents, the reduced matrices, pole sets, the block sum, and the
/// counting facts. corrupt_golden perturbs one expected coefficient to
/// demonstrate the failure path.
inline SelfTestResult selftest_paper(bool corrupt_golden = false) {
    using namespace selftest_detail;
    SelfTestResult r;

    auto compare = [&](const std::string& id, const CentralElement& got) {
        CentralElement expected = golden_table(id).element();
        if (corrupt_golden && id == "phi_2_0") {
            auto t = SporeTableau::from_rows({"NS"});
            expected.set(t, expected.coeff(t) + RationalFunction(1));
        }
        ++r.checks;
        if (auto diff = diff_elements(expected, got))
            r.failures.push_back("table " + id + ": " + *diff);
    };

    compare("phi_2_0", splitting_idempotent(2, 0));
    compare("phi_4_0", splitting_idempotent(4, 0));
    compare("phi_4_2", splitting_idempotent(4, 2));
    compare("phi_6_0", splitting_idempotent(6, 0));
    compare("phi_6_2", splitting_idempotent(6, 2));
    compare("phi_6_4", splitting_idempotent(6, 4));
    compare("e_2", young_central_idempotent({2}));
    compare("e_1_1", young_central_idempotent({1, 1}));
    compare("e_3_1", young_central_idempotent({3, 1}));
    compare("phi_2_2", primitive_central_idempotent(2, {2}));
    compare("phi_2_1_1", primitive_central_idempotent(2, {1, 1}));
    compare("phi_4_3_1", primitive_central_idempotent(4, {3, 1}));

    CentralElement block = combine({{1, splitting_idempotent(4, 0)},
                                    {-1, splitting_idempotent(4, 2)},
                                    {1, primitive_central_idempotent(4, {3, 1})}});
    for (const auto& e : golden_table("block_sum_4").entries) {
        auto t = SporeTableau::from_rows(e.rows);
        expect(r, block.coeff(t) == e.coeff,
               "block sum " + e.label + ": expected " + e.coeff.str() + ", got " +
                   block.coeff(t).str());
    }

    for (const auto& gs : golden_systems()) {
        SplitSystem sys = build_system(gs.n, gs.ell, SystemMode::reduced);
        std::vector<std::size_t> idx;
        bool found_all = true;
        for (const auto& rows : gs.unknown_rows) {
            SporeTableau t = SporeTableau::from_rows(rows);
            std::size_t j = 0;
            while (j < sys.unknowns.size() && !(sys.unknowns[j] == t)) ++j;
            if (j == sys.unknowns.size()) found_all = false;
            idx.push_back(j);
        }
        expect(r, found_all, gs.id + ": tabulated unknowns present");
        if (!found_all) continue;
        bool same = true;
        for (std::size_t i = 0; i < idx.size() && same; ++i) {
            const auto& row = sys.rows[idx[i]];
            for (std::size_t j = 0; j < idx.size() && same; ++j)
                same = row.coeffs[idx[j]] == gs.matrix[i][j];
            same = same && row.rhs == gs.rhs[i];
        }
        expect(r, same, gs.id + ": reduced matrix matches tabulation");
        expect(r, structural_checks(sys).pass(), gs.id + ": residue structure");
    }

    expect(r, all_diagrams(6).size() == 10395, "diagram count for n = 6");
    expect(r, enumerate_spores(2, 2).size() == 3, "class count n = 2");
    expect(r, enumerate_spores(4, 4).size() == 12, "class count n = 4");
    expect(r, enumerate_spores(6, 4).size() == 33, "class count n = 6, prop <= 4");

    auto pole_set = [](const CentralElement& x) {
        std::set<Rational> s;
        for (const auto& p : poles(x).poles) s.insert(p);
        return s;
    };
    auto to_set = [](std::vector<int> v) {
        std::set<Rational> s;
        for (int x : v) s.insert(Rational(x));
        return s;
    };
    expect(r, pole_set(splitting_idempotent(4, 0)) == to_set({-2, 0, 1}), "poles of phi_4(0)");
    expect(r, pole_set(splitting_idempotent(4, 2)) == to_set({-4, -2, 0, 1, 2}),
           "poles of phi_4(2)");
    PoleReport p431 = poles(primitive_central_idempotent(4, {3, 1}));
    expect(r, p431.poles == to_set({-2, 0}), "poles of phi_4((3,1))");
    for (const auto& [p, m] : p431.max_prop_at_pole)
        expect(r, m == 2, "max propagating count at pole " + p.str());

    bool defined_at_minus2 = true;
    try {
        CentralElement sp = specialize_element(block, Rational(-2));
        expect(r, sp.coeff(SporeTableau::from_rows({"NSNS"})) == RationalFunction(Rational(1, 4)),
               "block sum at -2, single-cycle class value");
    } catch (const PoleError&) {
        defined_at_minus2 = false;
    }
    expect(r, defined_at_minus2, "block sum specializes at -2");
    bool phi42_poles_at_minus2 = false;
    try {
        specialize_element(splitting_idempotent(4, 2), Rational(-2));
    } catch (const ElementPoleError&) {
        phi42_poles_at_minus2 = true;
    }
    expect(r, phi42_poles_at_minus2, "phi_4(2) has a pole at -2");
    bool phi42_fine_at_5 = true;
    try {
        specialize_element(splitting_idempotent(4, 2), Rational(5));
    } catch (const PoleError&) {
        phi42_fine_at_5 = false;
    }
    expect(r, phi42_fine_at_5, "phi_4(2) specializes at 5");
    return r;
}

/// Randomized and exhaustive invariants at desk scale.
inline SelfTestResult selftest_properties(unsigned jobs = 1) {
    using namespace selftest_detail;
    SelfTestResult r;
    std::mt19937 rng(20240811);

    // Field arithmetic: canonical forms, field laws, K closure, residues.
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_poly(rng), g = random_poly(rng, 3, true),
                   h = random_poly(rng, 2, true);
        expect(r, RationalFunction(f * h, g * h) == RationalFunction(f, g),
               "canonical form independent of common factors");
    }
    for (int i = 0; i < 100; ++i) {
        RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        expect(r, (a + b) + c == a + (b + c), "addition associates");
        expect(r, (a * b) * c == a * (b * c), "multiplication associates");
        expect(r, a * (b + c) == a * b + a * c, "distributivity");
    }
    for (int i = 0; i < 100; ++i) {
        RationalFunction a = random_k_element(rng), b = random_k_element(rng);
        expect(r, a.in_K() && b.in_K(), "definition form lands in K");
        expect(r, (a + b).in_K() && (a * b).in_K(), "K closed under + and *");
        expect(r, (a * b).k_residue() == a.k_residue() * b.k_residue(),
               "residue multiplicative");
        expect(r, (a + b).k_residue() == a.k_residue() + b.k_residue(), "residue additive");
    }
    for (int i = 0; i < 60; ++i) {
        RationalFunction a = random_rf(rng), b = random_rf(rng);
        Rational at(std::uniform_int_distribution<int>(-5, 5)(rng));
        try {
            Rational lhs = (a * b).specialize(at);
            Rational rhs = a.specialize(at) * b.specialize(at);
            expect(r, lhs == rhs, "specialization multiplicative");
        } catch (const PoleError&) {
            // only defined-side instances are asserted
        }
    }

    // Diagram composition.
    for (int n = 2; n <= 5; ++n) {
        auto all = all_diagrams(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int i = 0; i < 60; ++i) {
            const Diagram &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
            auto [ab, vab] = compose(a, b);
            auto [ab_c, v1] = compose(ab, c);
            auto [bc, vbc] = compose(b, c);
            auto [a_bc, v2] = compose(a, bc);
            expect(r, ab_c == a_bc && vab + v1 == vbc + v2, "composition associates with loops");
            expect(r, ab.propagating_number() <=
                          std::min(a.propagating_number(), b.propagating_number()),
                   "propagating number cannot grow");
            int slack = vab - a.normalization_exponent() - b.normalization_exponent() +
                        ab.normalization_exponent();
            expect(r, slack <= 0, "normalized structure constants stay in K");
        }
    }

    // Spore separation and image characterization.
    for (int n = 2; n <= 4; ++n) {
        auto all = all_diagrams(n);
        std::map<Diagram, std::size_t> orbit_of;
        std::size_t next_orbit = 0;
        for (const auto& d : all) {
            if (orbit_of.count(d)) continue;
            // close under adjacent-transposition conjugation
            std::vector<Diagram> frontier{d};
            orbit_of[d] = next_orbit;
            while (!frontier.empty()) {
                Diagram cur = frontier.back();
                frontier.pop_back();
                for (int i = 0; i + 1 < n; ++i) {
                    std::vector<int> tr(n);
                    for (int j = 0; j < n; ++j) tr[j] = j;
                    std::swap(tr[i], tr[i + 1]);
                    Diagram conj = conjugate(cur, tr);
                    if (!orbit_of.count(conj)) {
                        orbit_of[conj] = next_orbit;
                        frontier.push_back(conj);
                    }
                }
            }
            ++next_orbit;
        }
        bool separation = true;
        for (const auto& a : all)
            for (const auto& b : all)
                if ((spore(a) == spore(b)) != (orbit_of[a] == orbit_of[b])) separation = false;
        expect(r, separation, "Spore separates exactly the conjugation orbits, n = " +
                                  std::to_string(n));
    }
    for (int n = 2; n <= 5; ++n) {
        std::set<SporeTableau> image;
        for (const auto& d : all_diagrams(n)) image.insert(spore(d));
        auto enumerated = enumerate_spores(n, n);
        std::set<SporeTableau> listed(enumerated.begin(), enumerated.end());
        expect(r, image == listed, "class enumeration equals bucketed image, n = " +
                                       std::to_string(n));
        bool roundtrip = true;
        for (const auto& t : enumerated)
            if (!(spore(representative(t, n)) == t)) roundtrip = false;
        expect(r, roundtrip, "representative round trip, n = " + std::to_string(n));
    }

    // Central algebra.
    for (int n = 2; n <= 4; ++n) {
        CentralElement a = random_central(rng, n), b = random_central(rng, n);
        expect(r, contract(expand(a)) == a, "expand/contract round trip, n = " + std::to_string(n));
        expect(r, mul(a, b, jobs) == mul(b, a, jobs), "central product commutes");
    }
    {
        CentralElement a = random_central(rng, 3), b = random_central(rng, 3),
                       c = random_central(rng, 3);
        expect(r, mul(mul(a, b, jobs), c, jobs) == mul(a, mul(b, c, jobs), jobs),
               "central product associates");
    }

    // Splitting idempotents at n <= 5.
    for (auto [n, ell] : valid_split_params(5)) {
        std::string tag = "(" + std::to_string(n) + "," + std::to_string(ell) + ")";
        CentralElement phi = splitting_idempotent(n, ell);
        expect(r, verify_fast(phi, ell).pass(), "fast checks " + tag);
        expect(r, mul(phi, phi, jobs) == phi, "idempotency " + tag);
        auto reduced = solve(build_system(n, ell, SystemMode::reduced));
        bool agree = true;
        for (const auto& [t, c] : reduced)
            if (phi.coeff(t) != c) agree = false;
        expect(r, agree, "full and reduced systems agree " + tag);
        expect(r, structural_checks(build_system(n, ell, SystemMode::reduced)).pass(),
               "residue structure " + tag);
        bool in_k = true;
        for (const auto& [t, c] : phi.terms())
            if (!c.in_K()) in_k = false;
        expect(r, in_k, "coefficients in K " + tag);
    }

    // Symmetric-group layer.
    for (int n = 2; n <= 5; ++n) {
        auto parts = partitions(n);
        CentralElement sum(n);
        for (const auto& lam : parts) {
            CentralElement e = young_central_idempotent(lam);
            sum = sum + e;
            expect(r, mul(e, e, jobs) == e, "e_lambda idempotent, " + partition_str(lam));
        }
        expect(r, sum == CentralElement::one(n), "sum of e_lambda is 1, n = " + std::to_string(n));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                expect(r, mul(young_central_idempotent(parts[i]),
                              young_central_idempotent(parts[j]), jobs)
                              .is_zero(),
                       "e_lambda orthogonal, n = " + std::to_string(n));
        BigInt sq = 0;
        for (const auto& lam : parts) sq += dimension(lam) * dimension(lam);
        expect(r, sq == factorial(n), "dimensions square-sum to n!");
    }
    for (int n = 2; n <= 4; ++n) {
        CentralElement sum(n);
        std::vector<CentralElement> prims;
        for (const auto& lam : partitions(n)) {
            CentralElement p = primitive_central_idempotent(n, lam, jobs);
            expect(r, mul(p, p, jobs) == p, "phi_n(lambda) idempotent, " + partition_str(lam));
            sum = sum + p;
            prims.push_back(std::move(p));
        }
        expect(r, sum == splitting_idempotent(n, n - 2),
               "sum of phi_n(lambda) equals phi_n(n-2), n = " + std::to_string(n));
        for (std::size_t i = 0; i < prims.size(); ++i)
            for (std::size_t j = i + 1; j < prims.size(); ++j)
                expect(r, mul(prims[i], prims[j], jobs).is_zero(), "phi_n(lambda) orthogonal");
    }

    // Specialized idempotents stay idempotent where defined; loop factors of
    // the specialized product evaluate at the specialization point.
    for (auto [n, ell] : valid_split_params(4)) {
        for (int at : {3, 5, -7}) {
            CentralElement spec = specialize_element(splitting_idempotent(n, ell), Rational(at));
            expect(r, specialize_element(mul(spec, spec, jobs), Rational(at)) == spec,
                   "specialized idempotent at delta = " + std::to_string(at));
        }
    }
    return r;
}

/// The expensive checks: full idempotency at n = 6 and the primitive
/// decomposition at n = 5.
inline SelfTestResult selftest_heavy(unsigned jobs = 1) {
    using namespace selftest_detail;
    SelfTestResult r;
    for (int ell : {0, 2, 4}) {
        CentralElement phi = splitting_idempotent(6, ell);
        expect(r, mul(phi, phi, jobs) == phi, "phi_6(" + std::to_string(ell) + ") idempotent");
    }
    CentralElement sum(5);
    for (const auto& lam : partitions(5))
        sum = sum + primitive_central_idempotent(5, lam, jobs);
    expect(r, sum == splitting_idempotent(5, 3), "sum of phi_5(lambda) equals phi_5(3)");
    return r;
}

}  // namespace brauer
