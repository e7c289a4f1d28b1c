#include "skewchar/enumerate.hpp"

#include <functional>

namespace skewchar {

std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(left, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k)
        for (auto& p : partitions_of(k)) out.push_back(std::move(p));
    return out;
}

std::vector<SkewDiagram> normalized_skew_shapes(int max_boxes) {
    std::vector<SkewDiagram> out;
    std::vector<int> lam, mu;
    auto covered = [&] {
        // Columns 1..lambda_1 must all meet some row interval.
        int reach = 0;  // every column <= reach is covered
        for (size_t i = lam.size(); i-- > 0;) {
            if (mu[i] > reach) return false;
            reach = std::max(reach, lam[i]);
        }
        return reach == lam[0];
    };
    std::function<void(int)> rec = [&](int used) {
        if (!lam.empty() && mu.back() == 0 && covered())
            out.emplace_back(Partition(lam), Partition(mu), Rat(0));
        int lcap = lam.empty() ? max_boxes : lam.back();
        for (int l = 1; l <= lcap; ++l) {
            int mcap = mu.empty() ? l - 1 : std::min(mu.back(), l - 1);
            for (int m = 0; m <= mcap; ++m) {
                if (used + l - m > max_boxes) continue;
                lam.push_back(l);
                mu.push_back(m);
                rec(used + l - m);
                lam.pop_back();
                mu.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

}  // namespace skewchar
