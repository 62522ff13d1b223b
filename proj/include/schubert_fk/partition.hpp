#pragma once

#include "schubert_fk/permutation.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert_fk {

/// Weakly decreasing sequence of positive parts. The empty partition is valid.
class Partition {
  public:
    Partition() = default;

    /// Trailing zeros are dropped; anything else non-positive or increasing throws.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
        }
    }

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 1-based; zero beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

    bool fits_in(int rows, int cols) const { return length() <= rows && (empty() || parts_[0] <= cols); }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= (*this)[1]; ++j) {
            int h = 0;
            while ((*this)[h + 1] >= j) ++h;
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

/// Hook (s, 1^{t-1}): arm s boxes in the first row, t rows in total.
struct HookShape {
    int s = 1;
    int t = 1;

    Partition partition() const {
        std::vector<int> p(static_cast<std::size_t>(t), 1);
        p[0] = s;
        return Partition(std::move(p));
    }
    int size() const { return s + t - 1; }
    bool fits_in(int rows, int cols) const { return t <= rows && s <= cols; }

    friend bool operator==(const HookShape&, const HookShape&) = default;
};

/// Comma-separated parts, e.g. "2,1"; the empty partition prints as "".
inline std::string to_string(const Partition& p) {
    std::string s;
    for (int v : p.parts()) {
        if (!s.empty()) s += ',';
        s += std::to_string(v);
    }
    return s;
}

inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(cur, &used));
            if (used != cur.size()) throw ParseError("bad partition part '" + cur + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad partition part '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else cur += c;
    }
    flush();
    return Partition(std::move(parts));
}

/// The Grassmannian permutation w(lambda, k) in S_n.
inline Permutation grassmannian_perm(const Partition& lambda, int k, int n) {
    if (k < 0 || k > n || !lambda.fits_in(k, n - k))
        throw DoesNotFit("partition (" + to_string(lambda) + ") does not fit in " + std::to_string(k) + "x" +
                         std::to_string(n - k));
    std::vector<int> e;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= k; ++i) {
        int v = lambda[k + 1 - i] + i;
        e.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) e.push_back(v);
    return Permutation(std::move(e));
}

/// Partition attached to a permutation whose only descent (if any) is at k.
inline Partition code_of(const Permutation& w, int k) {
    for (int d : w.descents())
        if (d != k)
            throw NotGrassmannian("permutation " + to_string(w) + " has a descent at " + std::to_string(d) +
                                  ", expected only at " + std::to_string(k));
    if (k < 0 || k > w.size()) throw NotGrassmannian("descent position out of range");
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) parts.push_back(w(k + 1 - i) - (k + 1 - i));
    return Partition(std::move(parts));
}

/// Partitions of `size` inside a rows x cols box, largest first part first.
inline std::vector<Partition> enumerate_partitions_in_box(int rows, int cols, int size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (size >= 0 && rows >= 0 && cols >= 0) rec(size, cols);
    return out;
}

/// Every partition inside the rows x cols box, by increasing size.
inline std::vector<Partition> enumerate_partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int s = 0; s <= rows * cols; ++s)
        for (auto& p : enumerate_partitions_in_box(rows, cols, s)) out.push_back(std::move(p));
    return out;
}

} // namespace schubert_fk
