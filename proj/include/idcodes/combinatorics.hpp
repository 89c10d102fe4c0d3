#pragma once

#include <functional>
#include <vector>

namespace idcodes {

// Size-k subsets of {0..n-1} in lexicographic order.
inline void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        fn(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

// All subsets of size <= max_size in (size, lexicographic) order, starting
// with the empty set.
inline void for_each_small_subset(int n, int max_size,
                                  const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> empty;
    fn(empty);
    for (int size = 1; size <= max_size && size <= n; ++size) for_each_combination(n, size, fn);
}

// Integer partitions of total into parts >= 1, parts non-increasing,
// lexicographically by first-part descending.
inline std::vector<std::vector<int>> integer_partitions(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

}  // namespace idcodes
