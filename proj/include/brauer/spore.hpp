#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/partitions.hpp"

namespace brauer {

/// Lexicographically least word over all rotations of w and of its reversal
/// (plain character order, so N < P < S).
inline std::string bracelet_canonical(const std::string& w) {
    std::string best = w;
    std::string cur = w;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

/// A {N,S,P}-filled Young tableau up to row permutation and per-row
/// cycling/reversal; the label of an S_n-conjugacy class of diagrams.
/// Canonical form: each row is its bracelet representative, rows sorted by
/// length descending then by string.
class SporeTableau {
public:
    SporeTableau() = default;

    static SporeTableau from_rows(std::vector<std::string> rows) {
        SporeTableau t;
        for (auto& r : rows) {
            if (r.empty()) throw std::invalid_argument("SporeTableau: empty row");
            for (char c : r)
                if (c != 'N' && c != 'S' && c != 'P')
                    throw std::invalid_argument("SporeTableau: bad symbol");
            t.rows_.push_back(bracelet_canonical(r));
        }
        std::sort(t.rows_.begin(), t.rows_.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        return t;
    }

    /// The class of the identity diagram: n rows of "P".
    static SporeTableau identity(int n) {
        SporeTableau t;
        t.rows_.assign(n, "P");
        return t;
    }

    const std::vector<std::string>& rows() const { return rows_; }

    int n() const {
        int s = 0;
        for (const auto& r : rows_) s += static_cast<int>(r.size());
        return s;
    }

    IntegerPartition shape() const {
        IntegerPartition p;
        for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        std::sort(p.rbegin(), p.rend());
        return p;
    }

    int prop_count() const {
        int c = 0;
        for (const auto& r : rows_) c += static_cast<int>(std::count(r.begin(), r.end(), 'P'));
        return c;
    }

    friend bool operator==(const SporeTableau& a, const SporeTableau& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const SporeTableau& a, const SporeTableau& b) { return !(a == b); }
    friend bool operator<(const SporeTableau& a, const SporeTableau& b) {
        return a.rows_ < b.rows_;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += rows_[i];
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const SporeTableau& t) {
        return os << t.str();
    }

private:
    std::vector<std::string> rows_;
};

/// The Spore of a diagram: identify each node pair {i, i'}, walk every
/// closed cycle of the resulting 2-regular labelled multigraph, and record
/// the edge types seen. Constant exactly on S_n-conjugation orbits.
inline SporeTableau spore(const Diagram& d) {
    const int n = d.n();
    std::vector<std::string> rows;
    std::vector<char> visited(n, 0);
    auto type_char = [&](int v) {
        switch (edge_type(d, v)) {
            case EdgeType::N: return 'N';
            case EdgeType::S: return 'S';
            default: return 'P';
        }
    };
    for (int b0 = 0; b0 < n; ++b0) {
        if (visited[b0]) continue;
        std::string word;
        int base = b0;
        bool exit_top = true;
        do {
            visited[base] = 1;
            int v = exit_top ? base : n + base;
            int w = d.partner(v);
            word += type_char(v);
            bool arrive_top = w < n;
            base = arrive_top ? w : w - n;
            exit_top = !arrive_top;
        } while (!(base == b0 && exit_top));
        rows.push_back(word);
    }
    return SporeTableau::from_rows(std::move(rows));
}

/// A row is realizable iff it has equally many N and S which, ignoring the
/// P entries, alternate cyclically.
inline bool is_realizable_row(const std::string& w) {
    std::string ns;
    for (char c : w)
        if (c != 'P') ns += c;
    if (std::count(ns.begin(), ns.end(), 'N') * 2 != static_cast<long>(ns.size())) return false;
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (ns[i] == ns[(i + 1) % ns.size()]) return false;
    return true;
}

inline bool is_realizable(const SporeTableau& t) {
    for (const auto& r : t.rows())
        if (!is_realizable_row(r)) return false;
    return true;
}

namespace detail {

/// Canonical realizable bracelet words of a given length, sorted.
inline const std::vector<std::string>& realizable_rows(int len) {
    static std::mutex mu;
    static std::map<int, std::vector<std::string>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(len);
    if (it != cache.end()) return it->second;
    std::vector<std::string> words;
    std::string w(len, 'N');
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            if (is_realizable_row(w) && bracelet_canonical(w) == w) words.push_back(w);
            return;
        }
        for (char c : {'N', 'P', 'S'}) {
            w[pos] = c;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    std::sort(words.begin(), words.end());
    return cache.emplace(len, std::move(words)).first->second;
}

}  // namespace detail

/// All classes in the image of the Spore function with at most max_prop
/// P-entries, generated directly from the image characterization. Returned
/// sorted by (P-count, row list).
inline std::vector<SporeTableau> enumerate_spores(int n, int max_prop) {
    if (max_prop < 0 || max_prop > n) throw std::invalid_argument("enumerate_spores: bad max_prop");
    std::vector<SporeTableau> out;
    for (const auto& lambda : partitions(n)) {
        // Rows of equal length are a multiset: enforce ascending choices.
        std::vector<std::string> rows;
        auto rec = [&](auto&& self, std::size_t i, int pcount) -> void {
            if (pcount > max_prop) return;
            if (i == lambda.size()) {
                SporeTableau t = SporeTableau::from_rows(rows);
                out.push_back(std::move(t));
                return;
            }
            const auto& candidates = detail::realizable_rows(lambda[i]);
            for (const auto& word : candidates) {
                if (i > 0 && lambda[i] == lambda[i - 1] && word < rows.back()) continue;
                rows.push_back(word);
                self(self, i + 1,
                     pcount + static_cast<int>(std::count(word.begin(), word.end(), 'P')));
                rows.pop_back();
            }
        };
        rec(rec, 0, 0);
    }
    // Tabulation order: by propagating count, then shape (largest parts
    // first), then row content.
    std::sort(out.begin(), out.end(), [](const SporeTableau& a, const SporeTableau& b) {
        if (a.prop_count() != b.prop_count()) return a.prop_count() < b.prop_count();
        IntegerPartition sa = a.shape(), sb = b.shape();
        if (sa != sb) return std::lexicographical_compare(sb.begin(), sb.end(), sa.begin(), sa.end());
        return a < b;
    });
    return out;
}

/// A diagram whose Spore is t. With arc_anchor = ell, the result additionally
/// has northern arcs at positions {1,2},{3,4},...,{n-ell-1,n-ell}, so that
/// left multiplication by u_1 u_3 ... u_(n-ell-1) fixes it.
inline Diagram representative(const SporeTableau& t, int n, int arc_anchor = -1) {
    if (t.n() != n) throw std::invalid_argument("representative: tableau size mismatch");
    if (!is_realizable(t)) throw std::invalid_argument("representative: class not realizable");
    std::vector<int> match(2 * n, -1);
    std::vector<std::pair<int, int>> northern;  // in construction order
    int next_base = 0;
    auto node = [&](int base, bool top) { return top ? base : n + base; };
    for (const auto& word : t.rows()) {
        const int r = static_cast<int>(word.size());
        const int first = next_base;
        next_base += r;
        bool exit_top = true;
        for (int j = 0; j < r; ++j) {
            int from = first + j;
            int to = first + (j + 1) % r;
            bool arrive_top;
            switch (word[j]) {
                case 'N':
                    if (!exit_top) throw std::logic_error("representative: row violates alternation");
                    arrive_top = true;
                    break;
                case 'S':
                    if (exit_top) throw std::logic_error("representative: row violates alternation");
                    arrive_top = false;
                    break;
                default:
                    arrive_top = !exit_top;
                    break;
            }
            int a = node(from, exit_top), b = node(to, arrive_top);
            match[a] = b;
            match[b] = a;
            if (word[j] == 'N') northern.emplace_back(from, to);
            exit_top = !arrive_top;
        }
        if (!exit_top) throw std::logic_error("representative: row does not close");
    }
    Diagram d(n, std::move(match));
    if (arc_anchor < 0) return d;

    const int ell = arc_anchor;
    if (ell > n || (n - ell) % 2 != 0)
        throw std::invalid_argument("representative: bad arc anchor");
    if (t.prop_count() > ell)
        throw std::invalid_argument("representative: class has too many propagating entries");
    const int k = (n - ell) / 2;
    // Relabel so the first k northern arcs land on {1,2},{3,4},...
    std::vector<int> sigma(n, -1);
    for (int j = 0; j < k; ++j) {
        sigma[northern[j].first] = 2 * j;
        sigma[northern[j].second] = 2 * j + 1;
    }
    int pos = 2 * k;
    for (int b = 0; b < n; ++b)
        if (sigma[b] < 0) sigma[b] = pos++;
    return conjugate(d, sigma);
}

/// Per-n table of all conjugation orbits, keyed by Spore class. Built once by
/// bucketing the full diagram enumeration; shared and immutable afterwards.
class SporeIndex {
public:
    static const SporeIndex& get(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<SporeIndex>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end()) {
            auto idx = std::unique_ptr<SporeIndex>(new SporeIndex(n));
            it = cache.emplace(n, std::move(idx)).first;
        }
        return *it->second;
    }

    int n() const { return n_; }
    const std::map<SporeTableau, std::vector<Diagram>>& orbits() const { return orbits_; }

    const std::vector<Diagram>& orbit(const SporeTableau& t) const {
        auto it = orbits_.find(t);
        if (it == orbits_.end())
            throw std::invalid_argument("SporeIndex: class not realizable for n = " +
                                        std::to_string(n_));
        return it->second;
    }

    bool contains(const SporeTableau& t) const { return orbits_.count(t) > 0; }

private:
    explicit SporeIndex(int n) : n_(n) {
        enumerate_diagrams(n, [&](const Diagram& d) { orbits_[spore(d)].push_back(d); });
    }

    int n_;
    std::map<SporeTableau, std::vector<Diagram>> orbits_;
};

/// All diagrams with Spore equal to t (the conjugation orbit).
inline const std::vector<Diagram>& orbit_support(const SporeTableau& t, int n) {
    return SporeIndex::get(n).orbit(t);
}

struct SporeClassInfo {
    SporeTableau tableau;
    int prop_count = 0;
    long orbit_size = 0;
};

/// Class listing with orbit sizes, in enumerate_spores order.
inline std::vector<SporeClassInfo> spore_classes(int n, int max_prop) {
    std::vector<SporeClassInfo> out;
    for (const auto& t : enumerate_spores(n, max_prop)) {
        SporeClassInfo info;
        info.tableau = t;
        info.prop_count = t.prop_count();
        info.orbit_size = static_cast<long>(orbit_support(t, n).size());
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace brauer
