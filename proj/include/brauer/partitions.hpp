#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

/// Integer partition: weakly decreasing positive parts.
using IntegerPartition = std::vector<int>;

inline bool is_partition_of(const IntegerPartition& p, int n) {
    int sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
        sum += p[i];
    }
    return sum == n;
}

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
inline std::vector<IntegerPartition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: negative n");
    std::vector<IntegerPartition> out;
    IntegerPartition cur;
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxPart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::string partition_str(const IntegerPartition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace brauer
