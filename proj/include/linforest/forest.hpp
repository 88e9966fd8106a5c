#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace linf {

// A linear forest: a multiset of path orders, stored descending. Path orders
// of 3 and single-path forests are representable but flagged, so theorem
// evaluators can refuse inputs outside their hypotheses with a clear message.
class LinearForest {
public:
    explicit LinearForest(std::vector<int> orders) : orders_(std::move(orders)) {
        if (orders_.empty()) throw std::invalid_argument("linear forest needs at least one path");
        for (int l : orders_)
            if (l < 2) throw std::invalid_argument("path order must be at least 2");
        std::sort(orders_.begin(), orders_.end(), std::greater<int>());
    }

    static LinearForest parse(const std::string& text) {
        std::vector<int> orders;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t sep = text.find('+', pos);
            if (sep == std::string::npos) sep = text.size();
            std::string tok = text.substr(pos, sep - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed forest text: \"" + text + "\"");
            long v = std::stol(tok);
            if (v < 2) throw std::invalid_argument("path order must be at least 2 in \"" + text + "\"");
            if (v > 64) throw std::invalid_argument("path order exceeds 64 in \"" + text + "\"");
            orders.push_back(static_cast<int>(v));
            pos = sep + 1;
            if (sep == text.size()) break;
        }
        return LinearForest(std::move(orders));
    }

    std::string format() const {
        std::string out;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) out += '+';
            out += std::to_string(orders_[i]);
        }
        return out;
    }

    const std::vector<int>& orders() const { return orders_; }
    int path_count() const { return static_cast<int>(orders_.size()); }

    int total_order() const { return std::accumulate(orders_.begin(), orders_.end(), 0); }

    int delta_f() const {
        int sum = 0;
        for (int l : orders_) sum += l / 2;
        return sum - 1;
    }

    bool has_even_component() const {
        return std::any_of(orders_.begin(), orders_.end(), [](int l) { return l % 2 == 0; });
    }

    bool all_odd() const { return !has_even_component(); }

    // Whether the main theorems' hypotheses hold: at least two paths and no
    // path of order 3.
    bool theorem_valid() const {
        if (orders_.size() < 2) return false;
        return std::none_of(orders_.begin(), orders_.end(), [](int l) { return l == 3; });
    }

    void require_theorem_valid() const {
        if (orders_.size() < 2)
            throw std::invalid_argument("forest " + format() + " has a single path; theorem requires k >= 2");
        for (int l : orders_)
            if (l == 3)
                throw std::invalid_argument("forest " + format() + " has a P_3 component; theorem requires all l_i != 3");
    }

    bool operator==(const LinearForest& o) const { return orders_ == o.orders_; }

private:
    std::vector<int> orders_;
};

// All forests with the stated total order cap, sorted-descending parts >= 2.
// With `theorem_only`, restricts to k >= 2 and parts != 3.
inline std::vector<LinearForest> enumerate_forests(int max_total, bool theorem_only) {
    std::vector<LinearForest> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (!parts.empty()) {
            if (!theorem_only || parts.size() >= 2) out.push_back(LinearForest(parts));
        }
        for (int p = std::min(remaining, max_part); p >= 2; --p) {
            if (theorem_only && p == 3) continue;
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, max_total, max_total);
    std::sort(out.begin(), out.end(), [](const LinearForest& a, const LinearForest& b) {
        if (a.total_order() != b.total_order()) return a.total_order() < b.total_order();
        return a.orders() < b.orders();
    });
    return out;
}

}  // namespace linf
