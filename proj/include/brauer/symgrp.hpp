#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/central.hpp"
#include "brauer/partitions.hpp"
#include "brauer/rational_function.hpp"
#include "brauer/solver.hpp"
#include "brauer/spore.hpp"

namespace brauer {

namespace detail {

inline IntegerPartition from_betas(std::vector<int> betas) {
    std::sort(betas.rbegin(), betas.rend());
    IntegerPartition p;
    const int m = static_cast<int>(betas.size());
    for (int i = 0; i < m; ++i) {
        int part = betas[i] - (m - 1 - i);
        if (part > 0) p.push_back(part);
    }
    return p;
}

inline BigInt character_rec(const IntegerPartition& lambda, const IntegerPartition& mu,
                            std::size_t mu_from,
                            std::map<std::pair<IntegerPartition, std::size_t>, BigInt>& memo) {
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda, mu_from);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int k = mu[mu_from];
    const int m = static_cast<int>(lambda.size());
    std::vector<int> betas(m);
    for (int i = 0; i < m; ++i) betas[i] = lambda[i] + (m - 1 - i);

    // Remove a border strip of size k: subtract k from one beta number,
    // keeping all distinct. The strip height is the number of beta numbers
    // jumped over.
    BigInt total = 0;
    for (int i = 0; i < m; ++i) {
        int target = betas[i] - k;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            if (betas[j] == target) {
                clash = true;
                break;
            }
            if (betas[j] > target && betas[j] < betas[i]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = betas;
        nb[i] = target;
        BigInt sub = character_rec(from_betas(std::move(nb)), mu, mu_from + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// Irreducible symmetric-group character chi^lambda evaluated on the class of
/// cycle type mu, by the border-strip (Murnaghan-Nakayama) recursion.
inline BigInt character(const IntegerPartition& lambda, const IntegerPartition& mu) {
    int nl = std::accumulate(lambda.begin(), lambda.end(), 0);
    int nm = std::accumulate(mu.begin(), mu.end(), 0);
    if (nl != nm) throw std::invalid_argument("character: |lambda| != |mu|");
    std::map<std::pair<IntegerPartition, std::size_t>, BigInt> memo;
    return detail::character_rec(lambda, mu, 0, memo);
}

/// Number of standard Young tableaux of shape lambda (hook length formula).
inline BigInt dimension(const IntegerPartition& lambda) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    BigInt hooks = 1;
    const int m = static_cast<int>(lambda.size());
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            for (int r = i + 1; r < m; ++r)
                if (lambda[r] > j) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return fact / hooks;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// The all-P Spore class of shape mu: the conjugacy class sum of permutations
/// of cycle type mu, viewed inside B_n.
inline SporeTableau permutation_class(const IntegerPartition& mu) {
    std::vector<std::string> rows;
    for (int part : mu) rows.emplace_back(part, 'P');
    return SporeTableau::from_rows(std::move(rows));
}

/// Young's primitive central idempotent of QS_n for the shape lambda,
/// e_lambda = (dim/n!) sum_mu chi^lambda(mu) (class sum of mu), expressed on
/// the all-P Spore classes.
inline CentralElement young_central_idempotent(const IntegerPartition& lambda) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (!is_partition_of(lambda, n) || n == 0)
        throw std::invalid_argument("young_central_idempotent: not a partition");
    BigInt dim = dimension(lambda);
    BigInt nfact = factorial(n);
    CentralElement e(n);
    for (const auto& mu : partitions(n)) {
        BigInt chi = character(lambda, mu);
        if (chi == 0) continue;
        e.set(permutation_class(mu), RationalFunction(Rational(dim * chi, nfact)));
    }
    return e;
}

/// Primitive central idempotent phi_n(lambda) = phi_n(n-2) e_lambda of the
/// generic algebra, for lambda a partition of n >= 2.
inline CentralElement primitive_central_idempotent(int n, const IntegerPartition& lambda,
                                                   unsigned jobs = 1) {
    if (n < 2) throw std::invalid_argument("primitive_central_idempotent: need n >= 2");
    if (!is_partition_of(lambda, n))
        throw std::invalid_argument("primitive_central_idempotent: lambda must be a partition of n");
    return mul(splitting_idempotent(n, n - 2), young_central_idempotent(lambda), jobs);
}

}  // namespace brauer
