#pragma once

#include "schubert_fk/fk_algebra.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>

namespace schubert_fk {

/// Set of boxes (row i, column j) in the k x (n-k) rectangle, 1 <= i <= k < j <= n.
class Diagram {
  public:
    Diagram() = default;
    Diagram(int k, int n) : k_(k), n_(n) {
        if (k < 0 || n < k || k * (n - k) > 64) throw DoesNotFit("rectangle too large for a diagram");
    }
    Diagram(int k, int n, const std::vector<FKGenerator>& boxes) : Diagram(k, n) {
        for (const auto& b : boxes) insert(b);
    }

    int k() const { return k_; }
    int n() const { return n_; }
    int width() const { return n_ - k_; }
    std::uint64_t bits() const { return bits_; }

    void insert(const FKGenerator& b) {
        if (b.i < 1 || b.i > k_ || b.j <= k_ || b.j > n_)
            throw DoesNotFit("box (" + std::to_string(b.i) + "," + std::to_string(b.j) + ") outside the rectangle");
        bits_ |= bit(b.i, b.j);
    }
    bool contains(int i, int j) const { return i >= 1 && i <= k_ && j > k_ && j <= n_ && (bits_ & bit(i, j)); }
    int size() const { return std::popcount(bits_); }

    /// Boxes in row-major order.
    std::vector<FKGenerator> boxes() const {
        std::vector<FKGenerator> out;
        for (int i = 1; i <= k_; ++i)
            for (int j = k_ + 1; j <= n_; ++j)
                if (contains(i, j)) out.push_back({i, j});
        return out;
    }

    int rows() const {
        int r = 0;
        for (int i = 1; i <= k_; ++i)
            for (int j = k_ + 1; j <= n_; ++j)
                if (contains(i, j)) {
                    ++r;
                    break;
                }
        return r;
    }
    int cols() const {
        int c = 0;
        for (int j = k_ + 1; j <= n_; ++j)
            for (int i = 1; i <= k_; ++i)
                if (contains(i, j)) {
                    ++c;
                    break;
                }
        return c;
    }

    /// Pairs of boxes in a common row or column with no box between them.
    std::vector<std::pair<FKGenerator, FKGenerator>> edges() const {
        std::vector<std::pair<FKGenerator, FKGenerator>> out;
        for (int i = 1; i <= k_; ++i) {
            int prev = 0;
            for (int j = k_ + 1; j <= n_; ++j)
                if (contains(i, j)) {
                    if (prev) out.push_back({{i, prev}, {i, j}});
                    prev = j;
                }
        }
        for (int j = k_ + 1; j <= n_; ++j) {
            int prev = 0;
            for (int i = 1; i <= k_; ++i)
                if (contains(i, j)) {
                    if (prev) out.push_back({{prev, j}, {i, j}});
                    prev = i;
                }
        }
        return out;
    }

    int components() const {
        std::vector<int> parent(static_cast<std::size_t>(k_ * width()));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        int comps = size();
        for (const auto& [a, b] : edges()) {
            int ra = find(index(a.i, a.j)), rb = find(index(b.i, b.j));
            if (ra != rb) {
                parent[static_cast<std::size_t>(ra)] = rb;
                --comps;
            }
        }
        return comps;
    }

    /// Acyclic box graph: a forest has exactly |D| - c(D) edges.
    bool is_forest() const { return static_cast<int>(edges().size()) == size() - components(); }

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

  private:
    int index(int i, int j) const { return (i - 1) * width() + (j - k_ - 1); }
    std::uint64_t bit(int i, int j) const { return std::uint64_t{1} << index(i, j); }

    int k_ = 0;
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

/// Sorted box list "[(1,3),(2,4)]".
inline std::string to_string(const Diagram& d) { return to_string(FKWord(d.boxes())); }

/// Diagram whose boxes are the letters of w, or nothing if a letter repeats.
inline std::optional<Diagram> diagram_of(const FKWord& w, int k, int n) {
    Diagram d(k, n);
    for (const auto& g : w) {
        if (g.i > k || g.j <= k) return std::nullopt;
        if (d.contains(g.i, g.j)) return std::nullopt;
        d.insert(g);
    }
    return d;
}

/// All diagrams with `size` boxes in the k x m rectangle, by increasing bit pattern.
inline std::vector<Diagram> enumerate_diagrams(int k, int m, int size) {
    std::vector<Diagram> out;
    int cells = k * m;
    if (size < 0 || size > cells) return out;
    if (size == 0) {
        out.emplace_back(k, k + m);
        return out;
    }
    // Gosper's hack over all cells-bit words with `size` bits set.
    std::uint64_t v = (std::uint64_t{1} << size) - 1;
    std::uint64_t limit = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells);
    while (v < limit) {
        Diagram d(k, k + m);
        for (int p = 0; p < cells; ++p)
            if (v & (std::uint64_t{1} << p)) d.insert({p / m + 1, k + p % m + 1});
        out.push_back(d);
        std::uint64_t c = v & -v, r = v + c;
        if (r == 0) break;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

inline std::vector<Diagram> enumerate_forests(int k, int m, int size) {
    std::vector<Diagram> out;
    for (auto& d : enumerate_diagrams(k, m, size))
        if (d.is_forest()) out.push_back(d);
    return out;
}

} // namespace schubert_fk
