#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauer/central.hpp"
#include "brauer/diagram.hpp"
#include "brauer/rational_function.hpp"
#include "brauer/spore.hpp"

namespace brauer {

enum class SystemMode { full, reduced };

/// One linear equation: it equates the coefficient of the witness diagram on
/// both sides of u-bar * X = -u-bar.
struct SplitRow {
    Diagram witness;
    std::vector<RationalFunction> coeffs;
    RationalFunction rhs;
};

/// The linear system determining the splitting coefficients c_t.
struct SplitSystem {
    int n = 0;
    int ell = 0;
    SystemMode mode = SystemMode::full;
    std::vector<SporeTableau> unknowns;
    std::vector<SplitRow> rows;
};

class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check_split_params(int n, int ell) {
    if (n < 2 || ell < 0 || ell > n - 2 || (n - ell) % 2 != 0)
        throw std::invalid_argument("splitting idempotent: need 0 <= ell <= n-2 with ell = n mod 2");
}

/// The diagram u_1 u_3 ... u_(n-ell-1): horizontal arcs on the first n-ell
/// positions in adjacent pairs, vertical strands after.
inline Diagram ideal_generator(int n, int ell) {
    check_split_params(n, ell);
    std::vector<int> m(2 * n, -1);
    for (int j = 0; 2 * j + 1 < n - ell; ++j) {
        m[2 * j] = 2 * j + 1;
        m[2 * j + 1] = 2 * j;
        m[n + 2 * j] = n + 2 * j + 1;
        m[n + 2 * j + 1] = n + 2 * j;
    }
    for (int i = n - ell; i < n; ++i) {
        m[i] = n + i;
        m[n + i] = i;
    }
    return Diagram(n, std::move(m));
}

/// Assembles the linear system for u-bar * X_n(ell) = -u-bar, with
/// u-bar = d^-((n-ell)/2) u_1 u_3 ... u_(n-ell-1).
///
/// Full mode emits one equation per distinct diagram appearing in any
/// u-bar * D_t or in u-bar itself (duplicate equations removed). Reduced mode
/// emits exactly the m equations reading off the coefficients of the anchored
/// representatives A_t, one per unknown, in unknown order.
inline SplitSystem build_system(int n, int ell, SystemMode mode) {
    check_split_params(n, ell);
    const int k = (n - ell) / 2;
    const Diagram u = ideal_generator(n, ell);

    SplitSystem sys;
    sys.n = n;
    sys.ell = ell;
    sys.mode = mode;
    sys.unknowns = enumerate_spores(n, ell);
    const std::size_t m = sys.unknowns.size();

    const RationalFunction neg_rhs(Polynomial(-1), Polynomial(1).shifted(k));

    // Coefficient of each product diagram in u-bar * D_t, per unknown t.
    std::map<Diagram, std::vector<RationalFunction>> columns;
    for (std::size_t j = 0; j < m; ++j) {
        for (const Diagram& b : orbit_support(sys.unknowns[j], n)) {
            auto [prod, loops] = compose(u, b);
            auto it = columns.find(prod);
            if (it == columns.end())
                it = columns.emplace(prod, std::vector<RationalFunction>(m)).first;
            it->second[j] += RationalFunction(Polynomial(1).shifted(loops), Polynomial(1).shifted(k));
        }
    }

    if (mode == SystemMode::full) {
        std::set<std::pair<std::vector<RationalFunction>, RationalFunction>> dedupe;
        for (auto& [witness, coeffs] : columns) {
            RationalFunction rhs = (witness == u) ? neg_rhs : RationalFunction(0);
            if (!dedupe.emplace(coeffs, rhs).second) continue;
            sys.rows.push_back({witness, coeffs, rhs});
        }
    } else {
        for (std::size_t j = 0; j < m; ++j) {
            Diagram rep = representative(sys.unknowns[j], n, ell);
            auto it = columns.find(rep);
            if (it == columns.end())
                throw std::logic_error("build_system: anchored representative missing from support");
            RationalFunction rhs = (rep == u) ? neg_rhs : RationalFunction(0);
            sys.rows.push_back({rep, it->second, rhs});
        }
    }
    return sys;
}

/// Exact Gaussian elimination over Q(d). Requires full rank and consistency
/// (anything else indicates a bug upstream) and that every solved coefficient
/// lies in the ring K.
inline std::map<SporeTableau, RationalFunction> solve(const SplitSystem& sys) {
    const std::size_t m = sys.unknowns.size();
    struct Work {
        std::vector<RationalFunction> coeffs;
        RationalFunction rhs;
        const Diagram* witness;
    };
    std::vector<Work> rows;
    rows.reserve(sys.rows.size());
    for (const auto& r : sys.rows) {
        if (r.coeffs.size() != m) throw std::invalid_argument("solve: ragged system");
        rows.push_back({r.coeffs, r.rhs, &r.witness});
    }

    std::vector<int> pivot_row(m, -1);
    std::vector<char> used(rows.size(), 0);
    for (std::size_t col = 0; col < m; ++col) {
        // Prefer the structurally smallest pivot: lowest denominator degree,
        // then lowest numerator degree.
        int best = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].coeffs[col].is_zero()) continue;
            if (best < 0) {
                best = static_cast<int>(r);
                continue;
            }
            const auto& cand = rows[r].coeffs[col];
            const auto& cur = rows[best].coeffs[col];
            auto key = [](const RationalFunction& f) {
                return std::make_pair(f.den().degree(), f.num().degree());
            };
            if (key(cand) < key(cur)) best = static_cast<int>(r);
        }
        if (best < 0)
            throw SolveError("solve: rank deficient at unknown " + sys.unknowns[col].str());
        used[best] = 1;
        pivot_row[col] = best;
        Work& p = rows[best];
        RationalFunction inv = RationalFunction(1) / p.coeffs[col];
        for (auto& c : p.coeffs) c *= inv;
        p.rhs *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(best)) continue;
            RationalFunction f = rows[r].coeffs[col];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < m; ++c)
                if (!p.coeffs[c].is_zero()) rows[r].coeffs[c] -= f * p.coeffs[c];
            rows[r].rhs -= f * p.rhs;
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        if (!rows[r].rhs.is_zero())
            throw SolveError("solve: inconsistent row, witness " + rows[r].witness->str());
    }

    std::map<SporeTableau, RationalFunction> sol;
    for (std::size_t col = 0; col < m; ++col) {
        const RationalFunction& c = rows[pivot_row[col]].rhs;
        if (!c.in_K())
            throw SolveError("solve: coefficient of " + sys.unknowns[col].str() +
                             " fell outside K: " + c.str());
        sol[sys.unknowns[col]] = c;
    }
    return sol;
}

/// The splitting idempotent phi_n(ell) = 1 + sum_t c_t D_t for the ideal of
/// diagrams with at most ell propagating lines.
inline CentralElement splitting_idempotent(int n, int ell,
                                           SystemMode mode = SystemMode::full) {
    SplitSystem sys = build_system(n, ell, mode);
    auto sol = solve(sys);
    CentralElement phi = CentralElement::one(n);
    for (const auto& [t, c] : sol) phi.set(t, c);
    return phi;
}

/// Structured result of the fast splitting-idempotent checks.
struct VerifyReport {
    bool support_ok = false;       // phi - 1 lies in the ideal
    bool annihilation_ok = false;  // phi kills the ideal generators, both sides
    bool central_ok = false;
    std::vector<std::string> failures;

    bool pass() const { return support_ok && annihilation_ok && central_ok; }

    std::string summary() const {
        if (pass()) return "ok";
        std::string s;
        for (const auto& f : failures) {
            if (!s.empty()) s += "; ";
            s += f;
        }
        return s;
    }
};

/// Checks (a) phi = 1 mod the ideal of <= ell propagating lines, (b)
/// phi U = U phi = 0 for U = u_1 u_3 ... u_(n-ell'-1) over every valid
/// ell' <= ell (with centrality this annihilates the whole ideal), and (c)
/// centrality. Reports, never throws.
inline VerifyReport verify_fast(const CentralElement& phi, int ell) {
    const int n = phi.n();
    VerifyReport rep;

    rep.support_ok = true;
    const SporeTableau id = SporeTableau::identity(n);
    if (phi.coeff(id) != RationalFunction(1)) {
        rep.support_ok = false;
        rep.failures.push_back("identity class coefficient is " + phi.coeff(id).str());
    }
    for (const auto& [t, c] : phi.terms()) {
        if (t == id) continue;
        if (t.prop_count() > ell) {
            rep.support_ok = false;
            rep.failures.push_back("support class " + t.str() + " has " +
                                   std::to_string(t.prop_count()) +
                                   " propagating entries, above " + std::to_string(ell));
        }
    }

    rep.annihilation_ok = true;
    DiagramVector v = expand(phi);
    for (int ellp = ell; ellp >= 0; ellp -= 2) {
        Diagram gen = ideal_generator(n, ellp);
        for (Side side : {Side::left, Side::right}) {
            if (!mul_by_diagram(v, gen, side).is_zero()) {
                rep.annihilation_ok = false;
                rep.failures.push_back(std::string("phi does not annihilate ") + gen.str() +
                                       (side == Side::left ? " from the left" : " from the right"));
            }
        }
    }

    rep.central_ok = is_central(phi);
    if (!rep.central_ok) rep.failures.push_back("element is not central");
    return rep;
}

/// Structural facts about the reduced matrix: unit diagonal and vanishing
/// off-diagonal residues mod K d^-1, determinant a unit of K.
struct StructuralReport {
    bool diagonal_ok = false;
    bool off_diagonal_ok = false;
    bool det_ok = false;
    BigInt det_residue = 0;
    std::vector<std::string> failures;

    bool pass() const { return diagonal_ok && off_diagonal_ok && det_ok; }
};

inline RationalFunction determinant(std::vector<std::vector<RationalFunction>> mat) {
    const std::size_t m = mat.size();
    RationalFunction det(1);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && mat[piv][col].is_zero()) ++piv;
        if (piv == m) return RationalFunction(0);
        if (piv != col) {
            std::swap(mat[piv], mat[col]);
            det = -det;
        }
        det *= mat[col][col];
        RationalFunction inv = RationalFunction(1) / mat[col][col];
        for (std::size_t r = col + 1; r < m; ++r) {
            if (mat[r][col].is_zero()) continue;
            RationalFunction f = mat[r][col] * inv;
            for (std::size_t c = col; c < m; ++c) mat[r][c] -= f * mat[col][c];
        }
    }
    return det;
}

inline StructuralReport structural_checks(const SplitSystem& sys) {
    if (sys.mode != SystemMode::reduced)
        throw std::invalid_argument("structural_checks: reduced-mode system required");
    const std::size_t m = sys.unknowns.size();
    StructuralReport rep;
    rep.diagonal_ok = rep.off_diagonal_ok = true;
    std::vector<std::vector<RationalFunction>> mat;
    for (const auto& row : sys.rows) mat.push_back(row.coeffs);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const RationalFunction& p = mat[i][j];
            if (!p.in_K()) {
                rep.failures.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") not in K: " + p.str());
                (i == j ? rep.diagonal_ok : rep.off_diagonal_ok) = false;
                continue;
            }
            BigInt res = p.k_residue();
            if (i == j && res != 1) {
                rep.diagonal_ok = false;
                rep.failures.push_back("diagonal residue " + res.str() + " at " +
                                       sys.unknowns[i].str());
            }
            if (i != j && res != 0) {
                rep.off_diagonal_ok = false;
                rep.failures.push_back("off-diagonal residue " + res.str() + " at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    RationalFunction det = determinant(std::move(mat));
    if (det.in_K()) {
        rep.det_residue = det.k_residue();
        rep.det_ok = rep.det_residue == 1;
        if (!rep.det_ok)
            rep.failures.push_back("determinant residue " + rep.det_residue.str());
    } else {
        rep.det_ok = false;
        rep.failures.push_back("determinant not in K: " + det.str());
    }
    return rep;
}

}  // namespace brauer
