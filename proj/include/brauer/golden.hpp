#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauer/central.hpp"
#include "brauer/rational_function.hpp"
#include "brauer/solver.hpp"
#include "brauer/spore.hpp"

namespace brauer {

/// Reference coefficient tables for the splitting and primitive central
/// idempotents of B_2, B_4 and B_6, kept in the compact labelled form they
/// are conventionally tabulated in. Labels follow the tabulation order, which
/// differs from the canonical class order; entry rows are given as tabulated
/// and canonicalized on conversion.
struct GoldenEntry {
    std::string label;
    std::vector<std::string> rows;
    RationalFunction coeff;
};

struct GoldenTable {
    std::string id;
    int n = 0;
    /// Splitting-idempotent tables list only the proper-ideal coefficients;
    /// the identity class carries coefficient 1 implicitly.
    bool add_identity = false;
    /// The block-sum table is a list of combined coefficients, not a full
    /// element; only the listed classes are compared.
    bool coefficients_only = false;
    std::vector<GoldenEntry> entries;

    CentralElement element() const {
        CentralElement x(n);
        if (add_identity) x.set(SporeTableau::identity(n), RationalFunction(1));
        for (const auto& e : entries) x.add(SporeTableau::from_rows(e.rows), e.coeff);
        return x;
    }

    std::map<std::string, SporeTableau> label_map() const {
        std::map<std::string, SporeTableau> m;
        for (const auto& e : entries) m.emplace(e.label, SporeTableau::from_rows(e.rows));
        return m;
    }

    const GoldenEntry& entry(const std::string& label) const {
        for (const auto& e : entries)
            if (e.label == label) return e;
        throw std::invalid_argument("golden table " + id + ": no label " + label);
    }
};

/// The matrices the reduced systems must reproduce, in tabulation order.
struct GoldenSystem {
    std::string id;
    int n = 0;
    int ell = 0;
    std::vector<std::string> unknown_labels;           // order of columns/rows
    std::vector<std::vector<std::string>> unknown_rows;  // tableau per label
    std::vector<std::vector<RationalFunction>> matrix;
    std::vector<RationalFunction> rhs;
};

namespace golden_detail {

inline Polynomial d() { return Polynomial::x(); }
/// The linear factor d + c, matching factors as printed.
inline Polynomial lin(int c) { return Polynomial::x() + Polynomial(c); }
/// Numerator polynomial from printed coefficients, highest degree first.
inline Polynomial desc(std::initializer_list<long long> cs) {
    return Polynomial::from_descending(cs);
}
inline RationalFunction frac(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}
inline RationalFunction ratio(long long num, long long den) {
    return RationalFunction(Rational(BigInt(num), BigInt(den)));
}
inline RationalFunction dinv(int k = 1) {
    return RationalFunction(Polynomial(1), Polynomial(1).shifted(k));
}

inline GoldenTable phi_2_0() {
    GoldenTable t{"phi_2_0", 2, true, false, {}};
    t.entries = {
        {"s0_1", {"NS"}, frac(-1, d())},
    };
    return t;
}

inline GoldenTable phi_4_0() {
    GoldenTable t{"phi_4_0", 4, true, false, {}};
    Polynomial den = d() * lin(2) * lin(-1);
    t.entries = {
        {"t0_1", {"NSNS"}, frac(1, den)},
        {"t0_2", {"NS", "NS"}, frac(-lin(1), den)},
    };
    return t;
}

inline GoldenTable phi_4_2() {
    GoldenTable t{"phi_4_2", 4, true, false, {}};
    Polynomial q = lin(-2) * lin(-1) * lin(2) * lin(4);   // (d-2)(d-1)(d+2)(d+4)
    Polynomial r = lin(-2) * lin(2) * lin(4);             // (d-2)(d+2)(d+4)
    Polynomial s = d() * lin(-2) * lin(4);                // d(d-2)(d+4)
    Polynomial w = d() * lin(-2) * lin(2) * lin(4);       // d(d-2)(d+2)(d+4)
    t.entries = {
        {"t0_1", {"NSNS"}, frac(-desc({3, 2}), q)},
        {"t0_2", {"NS", "NS"}, frac(desc({1, 3, 6}), q)},
        {"t2_1", {"NSPP"}, frac(-1, r)},
        {"t2_2", {"NPSP"}, frac(-2, s)},
        {"t2_3", {"NSP", "P"}, frac(lin(3), r)},
        {"t2_4", {"NS", "PP"}, frac(4, w)},
        {"t2_5", {"NS", "P", "P"}, frac(-desc({1, 4, 0, -4}), w)},
    };
    return t;
}

inline GoldenTable e_2() {
    GoldenTable t{"e_2", 2, false, false, {}};
    t.entries = {
        {"s2_2", {"P", "P"}, ratio(1, 2)},
        {"s2_1", {"PP"}, ratio(1, 2)},
    };
    return t;
}

inline GoldenTable e_1_1() {
    GoldenTable t{"e_1_1", 2, false, false, {}};
    t.entries = {
        {"s2_2", {"P", "P"}, ratio(1, 2)},
        {"s2_1", {"PP"}, ratio(-1, 2)},
    };
    return t;
}

inline GoldenTable e_3_1() {
    GoldenTable t{"e_3_1", 4, false, false, {}};
    t.entries = {
        {"t4_1", {"PPPP"}, ratio(-1, 8)},
        {"t4_3", {"PP", "PP"}, ratio(-1, 8)},
        {"t4_4", {"PP", "P", "P"}, ratio(1, 8)},
        {"t4_5", {"P", "P", "P", "P"}, ratio(3, 8)},
    };
    return t;
}

inline GoldenTable phi_2_2() {
    GoldenTable t{"phi_2_2", 2, false, false, {}};
    t.entries = {
        {"s2_2", {"P", "P"}, ratio(1, 2)},
        {"s2_1", {"PP"}, ratio(1, 2)},
        {"s0_1", {"NS"}, frac(-1, d())},
    };
    return t;
}

inline GoldenTable phi_2_1_1() {
    GoldenTable t{"phi_2_1_1", 2, false, false, {}};
    t.entries = {
        {"s2_2", {"P", "P"}, ratio(1, 2)},
        {"s2_1", {"PP"}, ratio(-1, 2)},
    };
    return t;
}

inline GoldenTable phi_4_3_1() {
    GoldenTable t{"phi_4_3_1", 4, false, false, {}};
    Polynomial pre = BigInt(8) * (d() * lin(2));  // 8 d (d+2)
    t.entries = {
        {"t4_1", {"PPPP"}, ratio(-1, 8)},
        {"t4_3", {"PP", "PP"}, ratio(-1, 8)},
        {"t4_4", {"PP", "P", "P"}, ratio(1, 8)},
        {"t4_5", {"P", "P", "P", "P"}, ratio(3, 8)},
        {"t2_1", {"NSPP"}, frac(d(), pre)},
        {"t2_2", {"NPSP"}, frac(BigInt(2) * lin(2), pre)},
        {"t2_3", {"NSP", "P"}, frac(-d(), pre)},
        {"t2_4", {"NS", "PP"}, frac(-4, pre)},
        {"t2_5", {"NS", "P", "P"}, frac(BigInt(-4) * lin(1), pre)},
    };
    return t;
}

/// Combined coefficients of phi_4(0) - phi_4(2) + phi_4((3,1)) on the proper
/// ideal classes; well defined at d = -2 even though the summands are not.
inline GoldenTable block_sum_4() {
    GoldenTable t{"block_sum_4", 4, false, true, {}};
    Polynomial s = d() * lin(-2) * lin(4);  // d(d-2)(d+4)
    Polynomial r = lin(-2) * lin(4);        // (d-2)(d+4)
    t.entries = {
        {"t0_1", {"NSNS"}, frac(4, s)},
        {"t0_2", {"NS", "NS"}, frac(BigInt(-2) * lin(2), s)},
        {"t2_1", {"NSPP"}, frac(d(), BigInt(8) * r)},
        {"t2_2", {"NPSP"}, frac(lin(2), BigInt(4) * r)},
        {"t2_3", {"NSP", "P"}, frac(-lin(8), BigInt(8) * r)},
        {"t2_4", {"NS", "PP"}, frac(-1, BigInt(2) * r)},
        {"t2_5", {"NS", "P", "P"}, frac(lin(3), BigInt(2) * r)},
    };
    return t;
}

inline GoldenTable phi_6_0() {
    GoldenTable t{"phi_6_0", 6, true, false, {}};
    Polynomial a = d() * lin(-2) * lin(-1) * lin(2) * lin(4);
    Polynomial b = d() * lin(-2) * lin(-1) * lin(4);
    t.entries = {
        {"u0_1", {"NSNSNS"}, frac(-2, a)},
        {"u0_2", {"NSNS", "NS"}, frac(1, b)},
        // The three-row coefficient circulates with the opposite sign; the
        // sign stored here is the one forced by the splitting properties
        // (idempotency, ideal annihilation, centrality pin the element
        // uniquely, and only this sign passes).
        {"u0_3", {"NS", "NS", "NS"}, frac(-desc({1, 3, -2}), a)},
    };
    return t;
}

inline GoldenTable phi_6_2() {
    GoldenTable t{"phi_6_2", 6, true, false, {}};
    Polynomial q7 = lin(-3) * lin(-2) * lin(-1) * lin(1) * lin(2) * lin(4) * lin(6);
    Polynomial q6 = lin(-3) * lin(-2) * lin(-1) * lin(1) * lin(4) * lin(6);
    Polynomial w7 = d() * lin(-3) * lin(-2) * lin(1) * lin(2) * lin(4) * lin(6);
    Polynomial w6 = d() * lin(-3) * lin(-2) * lin(1) * lin(4) * lin(6);
    Polynomial v4 = lin(-3) * lin(-2) * lin(1) * lin(6);
    Polynomial v5 = lin(-3) * lin(-2) * lin(1) * lin(2) * lin(6);
    Polynomial v6 = lin(-3) * lin(-2) * lin(1) * lin(2) * lin(4) * lin(6);
    t.entries = {
        {"u0_1", {"NSNSNS"}, frac(desc({13, 25, 18}), q7)},
        {"u0_2", {"NSNS", "NS"}, frac(BigInt(-4) * desc({1, 3, 3}), q6)},
        {"u0_3", {"NS", "NS", "NS"}, frac(BigInt(2) * desc({1, 7, 13, 13, -6}), q7)},
        {"u2_1", {"NSNSPP"}, frac(BigInt(3) * desc({1, 1, 2}), w7)},
        {"u2_2", {"NSNPSP"}, frac(desc({5, 6}), w6)},
        {"u2_3", {"NSPNPS"}, frac(desc({5, 6}), w6)},
        {"u2_4", {"NSPNSP"}, frac(BigInt(2) * desc({2, 3, -6}), w7)},
        {"u2_5", {"NSNSP", "P"}, frac(-desc({2, 10, 3, -6}), w7)},
        {"u2_6", {"NSNS", "PP"}, frac(BigInt(-4) * desc({5, 6}), w7)},
        {"u2_7", {"NSPP", "NS"}, frac(-lin(3) * desc({1, 1, 2}), w7)},
        {"u2_8", {"NPSP", "NS"}, frac(-2, v4)},
        {"u2_9", {"NSNS", "P", "P"}, frac(desc({1, 7, 8, -8, -24}), w7)},
        {"u2_10", {"NSP", "NSP"}, frac(-desc({1, 6, 18, 12}), w7)},
        {"u2_11", {"NSP", "NS", "P"}, frac(desc({1, 7, 7, -11, -6}), w7)},
        {"u2_12", {"NS", "NS", "PP"}, frac(8, v5)},
        {"u2_13", {"NS", "NS", "P", "P"}, frac(-desc({1, 8, 7, -40, -44}), v6)},
    };
    return t;
}

inline GoldenTable phi_6_4() {
    GoldenTable t{"phi_6_4", 6, true, false, {}};
    // Denominators assembled from the printed linear factors.
    Polynomial g6 = lin(-4) * lin(-3) * lin(-2) * lin(1) * lin(6) * lin(8);
    Polynomial g7 = lin(-4) * lin(-3) * lin(-2) * lin(1) * lin(4) * lin(6) * lin(8);
    Polynomial full10 =
        d() * lin(-4) * lin(-3) * lin(-2) * lin(-1) * lin(1) * lin(2) * lin(4) * lin(6) * lin(8);
    Polynomial full9 =
        lin(-4) * lin(-3) * lin(-2) * lin(-1) * lin(1) * lin(2) * lin(4) * lin(6) * lin(8);
    Polynomial n8 = lin(-4) * lin(-3) * lin(-2) * lin(-1) * lin(2) * lin(4) * lin(6) * lin(8);
    Polynomial h8 = lin(-4) * lin(-3) * lin(-2) * lin(1) * lin(2) * lin(4) * lin(6) * lin(8);
    Polynomial h9 = d() * h8;
    Polynomial m9 = d() * lin(-4) * lin(-3) * lin(-2) * lin(-1) * lin(2) * lin(4) * lin(6) * lin(8);
    Polynomial p8 = lin(-3) * lin(-2) * lin(-1) * lin(1) * lin(2) * lin(4) * lin(6) * lin(8);
    Polynomial c7 = lin(-4) * lin(-3) * lin(-2) * lin(1) * lin(2) * lin(6) * lin(8);
    Polynomial e5 = lin(-2) * lin(-1) * lin(2) * lin(4) * lin(8);
    t.entries = {
        {"u0_1", {"NSNSNS"}, frac(-desc({17, -18}), g6)},
        {"u0_2", {"NSNS", "NS"}, frac(desc({3, 23, 66, -24}), g7)},
        {"u0_3", {"NS", "NS", "NS"}, frac(-desc({1, 10, 19, -2, 408}), g7)},
        {"u2_1", {"NSNSPP"}, frac(-desc({7, 11, -27, -78, 216, -192}), full10)},
        {"u2_2", {"NSNPSP"}, frac(-desc({11, 47, -6, -208, -96}), full9)},
        {"u2_3", {"NSPNPS"}, frac(-desc({11, 47, -6, -208, -96}), full9)},
        {"u2_4", {"NSPNSP"}, frac(BigInt(-2) * desc({4, 6, -29, 26, -136, 192}), full10)},
        {"u2_5", {"NSNSP", "P"}, frac(desc({5, 31, -62, -233, 298, 216, -192}), full10)},
        {"u2_6", {"NSNS", "PP"}, frac(BigInt(4) * desc({15, 10, -88}), n8)},
        {"u2_7", {"NSPP", "NS"}, frac(desc({1, 7, 31, -47, -78, 152, -192}), full10)},
        {"u2_8", {"NPSP", "NS"}, frac(BigInt(2) * desc({1, 9, 30, 0, -52, -240}), full9)},
        {"u2_9", {"NSNS", "P", "P"}, frac(-desc({3, 26, -29, -400, 192, 1256, -544}), full9)},
        {"u2_10", {"NSP", "NSP"}, frac(desc({1, 9, 70, 78, -588, -80, 384}), full10)},
        {"u2_11", {"NSP", "NS", "P"}, frac(-desc({1, 10, 20, -42, -249, 42, 536, -192}), full10)},
        {"u2_12", {"NS", "NS", "PP"}, frac(BigInt(-8) * desc({1, 7, 36, -26, -240, 96}), full10)},
        {"u2_13", {"NS", "NS", "P", "P"},
         frac(desc({1, 11, 7, -171, -148, 716, 16, -192, 768}), full10)},
        {"u4_1", {"NSPPPP"}, frac(-desc({1, -14, -28, -48}), h8)},
        {"u4_2", {"NPSPPP"}, frac(BigInt(-2) * desc({2, 4, -11, -18, -40}), full9)},
        {"u4_3", {"NPPSPP"}, frac(BigInt(-2) * desc({3, 12, -16, -128, 192}), m9)},
        {"u4_4", {"NSPPP", "P"}, frac(desc({1, 4, -22, -32, 28}), p8)},
        {"u4_5", {"NPSPP", "P"}, frac(desc({3, 20, -37, -200, 132, 208}), full9)},
        {"u4_6", {"NSPP", "PP"}, frac(BigInt(2) * desc({13, 10, -62, -24}), full9)},
        {"u4_7", {"NPSP", "PP"}, frac(BigInt(4) * desc({10, 23, -120, -72, 96}), full10)},
        {"u4_8", {"PPPP", "NS"}, frac(BigInt(8) * desc({1, -14, -28, -48}), h9)},
        {"u4_9", {"NSPP", "P", "P"}, frac(-desc({1, 4, -29, -2, 100}), c7)},
        {"u4_10", {"NPSP", "P", "P"},
         frac(BigInt(-2) * desc({1, 9, -9, -151, 20, 432, 16, -192}), full10)},
        {"u4_11", {"NSP", "PPP"}, frac(BigInt(21) * desc({1, 2, -4}), p8)},
        {"u4_12", {"NSP", "PP", "P"}, frac(BigInt(-4) * desc({3, 17, -27, -76}), h8)},
        {"u4_13", {"PPP", "NS", "P"}, frac(-6, e5)},
        {"u4_14", {"NSP", "P", "P", "P"},
         frac(desc({1, 10, -8, -212, -11, 1042, 60, -1008}), full9)},
        {"u4_15", {"NS", "PP", "PP"}, frac(BigInt(-16) * desc({13, 10, -62, -24}), full10)},
        {"u4_16", {"NS", "PP", "P", "P"}, frac(BigInt(4) * desc({1, 8, -1, -50, -16, 96}), h9)},
        {"u4_17", {"NS", "P", "P", "P", "P"},
         frac(-desc({1, 11, -7, -295, -106, 2252, 352, -4464, 96, 1152}), full10)},
    };
    return t;
}

inline GoldenSystem system_4_0() {
    GoldenSystem s;
    s.id = "system_4_0";
    s.n = 4;
    s.ell = 0;
    s.unknown_labels = {"t0_1", "t0_2"};
    s.unknown_rows = {{"NSNS"}, {"NS", "NS"}};
    RationalFunction one(1), zero(0);
    RationalFunction di = dinv();
    s.matrix = {
        {one + di, di},
        {RationalFunction(2) * di, one},
    };
    s.rhs = {zero, -dinv(2)};
    return s;
}

inline GoldenSystem system_4_2() {
    GoldenSystem s;
    s.id = "system_4_2";
    s.n = 4;
    s.ell = 2;
    s.unknown_labels = {"t0_1", "t0_2", "t2_1", "t2_2", "t2_3", "t2_4", "t2_5"};
    s.unknown_rows = {{"NSNS"}, {"NS", "NS"}, {"NSPP"}, {"NPSP"},
                      {"NSP", "P"}, {"NS", "PP"}, {"NS", "P", "P"}};
    RationalFunction one(1), zero(0);
    RationalFunction di = dinv();
    RationalFunction di2 = RationalFunction(2) * di;
    RationalFunction di4 = RationalFunction(4) * di;
    s.matrix = {
        {one + di, di, di2, zero, di2, zero, zero},
        {di2, one, zero, di2, zero, di, di},
        {zero, zero, one + di, di, di, di, zero},
        {zero, zero, di2, one, di2, zero, zero},
        {zero, zero, di, di, one + di, zero, di},
        {zero, zero, di4, zero, zero, one, zero},
        {zero, zero, zero, zero, di4, zero, one},
    };
    s.rhs = {zero, zero, zero, zero, zero, zero, -di};
    return s;
}

}  // namespace golden_detail

inline const std::vector<GoldenTable>& golden_tables() {
    static const std::vector<GoldenTable> tables = {
        golden_detail::phi_2_0(),   golden_detail::phi_4_0(),  golden_detail::phi_4_2(),
        golden_detail::phi_6_0(),   golden_detail::phi_6_2(),  golden_detail::phi_6_4(),
        golden_detail::e_2(),       golden_detail::e_1_1(),    golden_detail::e_3_1(),
        golden_detail::phi_2_2(),   golden_detail::phi_2_1_1(), golden_detail::phi_4_3_1(),
        golden_detail::block_sum_4(),
    };
    return tables;
}

inline const GoldenTable& golden_table(const std::string& id) {
    for (const auto& t : golden_tables())
        if (t.id == id) return t;
    throw std::invalid_argument("no golden table " + id);
}

inline const std::vector<GoldenSystem>& golden_systems() {
    static const std::vector<GoldenSystem> systems = {
        golden_detail::system_4_0(),
        golden_detail::system_4_2(),
    };
    return systems;
}

}  // namespace brauer
