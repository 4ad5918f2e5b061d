#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Largest n for which exhaustive diagram enumeration is supported
/// ((2n-1)!! = 2027025 at n = 8).
inline constexpr int kMaxEnumerateN = 8;

/// A Brauer diagram on 2n nodes: a perfect matching (pair partition) of the
/// node set {1..n, 1'..n'}. Node i (1-based) is stored at index i-1 and node
/// i' at index n+i-1; match_[v] is the partner of v. The partner array is the
/// canonical form, so equality is componentwise.
class Diagram {
public:
    Diagram() : n_(0) {}
    Diagram(int n, std::vector<int> match) : n_(n), match_(std::move(match)) {
        check();
    }

    int n() const { return n_; }
    int partner(int v) const { return match_[v]; }
    const std::vector<int>& match() const { return match_; }

    bool is_top(int v) const { return v < n_; }

    static Diagram identity(int n) {
        std::vector<int> m(2 * n);
        for (int i = 0; i < n; ++i) {
            m[i] = n + i;
            m[n + i] = i;
        }
        return Diagram(n, std::move(m));
    }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.n_ == b.n_ && a.match_ == b.match_;
    }
    friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
    friend bool operator<(const Diagram& a, const Diagram& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.match_ < b.match_;
    }

    /// Number of pairs with one node in each row. Same parity as n.
    int propagating_number() const {
        int p = 0;
        for (int i = 0; i < n_; ++i)
            if (match_[i] >= n_) ++p;
        return p;
    }

    /// Exponent (n - p)/2 of the basis normalization: the normalized element
    /// is d^-exp * diagram, matching u-bar = u/d on the generators.
    int normalization_exponent() const { return (n_ - propagating_number()) / 2; }

    /// Pair list sorted by smallest member, e.g. "{1,4}{2,4'}{1',2'}".
    std::string str() const {
        auto name = [this](int v) {
            return v < n_ ? std::to_string(v + 1) : std::to_string(v - n_ + 1) + "'";
        };
        std::string out;
        for (int v = 0; v < 2 * n_; ++v) {
            if (match_[v] > v) out += "{" + name(v) + "," + name(match_[v]) + "}";
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Diagram& d) {
        return os << d.str();
    }

private:
    void check() const {
        if (n_ <= 0 || match_.size() != static_cast<std::size_t>(2 * n_))
            throw std::invalid_argument("Diagram: bad size");
        for (int v = 0; v < 2 * n_; ++v) {
            int p = match_[v];
            if (p < 0 || p >= 2 * n_ || p == v || match_[p] != v)
                throw std::invalid_argument("Diagram: not a fixed-point-free involution");
        }
    }

    int n_;
    std::vector<int> match_;
};

enum class EdgeType { N, S, P };

inline EdgeType edge_type(const Diagram& d, int v) {
    bool t1 = d.is_top(v), t2 = d.is_top(d.partner(v));
    if (t1 && t2) return EdgeType::N;
    if (!t1 && !t2) return EdgeType::S;
    return EdgeType::P;
}

/// Generators u_i (horizontal arcs at i, i+1) and sigma_i (crossing), 1-based.
inline Diagram generator_u(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator_u: index out of range");
    Diagram d = Diagram::identity(n);
    std::vector<int> m = d.match();
    m[i - 1] = i;
    m[i] = i - 1;
    m[n + i - 1] = n + i;
    m[n + i] = n + i - 1;
    return Diagram(n, std::move(m));
}

inline Diagram generator_sigma(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator_sigma: index out of range");
    Diagram d = Diagram::identity(n);
    std::vector<int> m = d.match();
    m[i - 1] = n + i;
    m[n + i] = i - 1;
    m[i] = n + i - 1;
    m[n + i - 1] = i;
    return Diagram(n, std::move(m));
}

/// Diagram of a permutation, pairs {x, (sigma x)'}. Permutations compose
/// left-to-right: compose(of(sigma), of(tau)) == of(x -> tau(sigma(x))).
/// perm is 0-based (perm[x] = image of x).
inline Diagram from_permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<int> m(2 * n, -1);
    for (int x = 0; x < n; ++x) {
        m[x] = n + perm[x];
        m[n + perm[x]] = x;
    }
    return Diagram(n, std::move(m));
}

/// Stacks a above b, traces components through the identified middle row.
/// Returns the resulting diagram and the number of closed middle loops.
inline std::pair<Diagram, int> compose(const Diagram& a, const Diagram& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    const int n = a.n();
    // Virtual nodes: 0..n-1 top of a, n..2n-1 bottom of a, 2n..3n-1 top of b,
    // 3n..4n-1 bottom of b. Bottom of a is glued to top of b.
    auto matched = [&](int v) {
        return v < 2 * n ? a.partner(v) : 2 * n + b.partner(v - 2 * n);
    };
    auto glued = [&](int v) -> int {
        if (v >= n && v < 2 * n) return v + n;
        if (v >= 2 * n && v < 3 * n) return v - n;
        return -1;  // outer node
    };
    std::vector<char> seen(4 * n, 0);
    std::vector<int> result(2 * n, -1);
    auto outer_index = [&](int v) { return v < n ? v : v - 2 * n; };

    // Trace from each outer node to its opposite end.
    for (int start = 0; start < 4 * n; ++start) {
        bool outer = start < n || start >= 3 * n;
        if (!outer || seen[start]) continue;
        seen[start] = 1;
        int v = matched(start);
        while (true) {
            seen[v] = 1;
            int g = glued(v);
            if (g < 0) break;  // landed on an outer node
            seen[g] = 1;
            v = matched(g);
        }
        result[outer_index(start)] = outer_index(v);
        result[outer_index(v)] = outer_index(start);
    }
    // Remaining unvisited nodes form closed middle loops.
    int loops = 0;
    for (int start = n; start < 3 * n; ++start) {
        if (seen[start]) continue;
        ++loops;
        int v = start;
        while (!seen[v]) {
            seen[v] = 1;
            int m = matched(v);
            seen[m] = 1;
            v = glued(m);
        }
    }
    return {Diagram(n, std::move(result)), loops};
}

/// Relabels nodes x -> sigma(x), x' -> sigma(x)'. sigma is 0-based.
inline Diagram conjugate(const Diagram& a, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != a.n())
        throw std::invalid_argument("conjugate: size mismatch");
    const int n = a.n();
    auto relabel = [&](int v) { return v < n ? sigma[v] : n + sigma[v - n]; };
    std::vector<int> m(2 * n, -1);
    for (int v = 0; v < 2 * n; ++v) m[relabel(v)] = relabel(a.partner(v));
    return Diagram(n, std::move(m));
}

/// Every perfect matching on 2n nodes, in the deterministic order produced by
/// matching the lowest unmatched node with each larger node in turn.
/// Optionally filtered to propagating number <= max_prop.
inline void enumerate_diagrams(int n, const std::function<void(const Diagram&)>& emit,
                               int max_prop = -1) {
    if (n < 1 || n > kMaxEnumerateN)
        throw std::invalid_argument("enumerate_diagrams: n out of supported range");
    std::vector<int> m(2 * n, -1);
    auto rec = [&](auto&& self, int prop) -> void {
        int v = 0;
        while (v < 2 * n && m[v] >= 0) ++v;
        if (v == 2 * n) {
            emit(Diagram(n, m));
            return;
        }
        for (int w = v + 1; w < 2 * n; ++w) {
            if (m[w] >= 0) continue;
            bool prop_edge = (v < n) != (w < n);
            if (max_prop >= 0 && prop_edge && prop + 1 > max_prop) continue;
            m[v] = w;
            m[w] = v;
            self(self, prop + (prop_edge ? 1 : 0));
            m[v] = -1;
            m[w] = -1;
        }
    };
    rec(rec, 0);
}

inline std::vector<Diagram> all_diagrams(int n, int max_prop = -1) {
    std::vector<Diagram> out;
    enumerate_diagrams(n, [&](const Diagram& d) { out.push_back(d); }, max_prop);
    return out;
}

}  // namespace brauer
