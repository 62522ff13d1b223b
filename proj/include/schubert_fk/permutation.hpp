#pragma once

#include "schubert_fk/integer.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace schubert_fk {

/// Element of S_n in one-line notation with values 1..n.
///
/// Products follow (u*v)(i) = u(v(i)); right multiplication by a
/// transposition s_ij therefore swaps the entries in positions i and j.
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
        std::vector<bool> seen(entries_.size() + 1, false);
        for (int v : entries_) {
            if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
                throw ParseError("not a permutation of 1.." + std::to_string(size()));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        std::iota(e.begin(), e.end(), 1);
        return Permutation(std::move(e), Unchecked{});
    }

    static Permutation longest(int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
        return Permutation(std::move(e), Unchecked{});
    }

    /// Permutation of S_m whose Lehmer code is `code` (code_i <= m - i).
    static Permutation from_code(std::span<const int> code, int m) {
        std::vector<int> avail(static_cast<std::size_t>(m));
        std::iota(avail.begin(), avail.end(), 1);
        std::vector<int> e;
        e.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
            if (c < 0 || c >= static_cast<int>(avail.size()))
                throw NotInSpan("exponent vector is not a permutation code in S_" + std::to_string(m));
            e.push_back(avail[static_cast<std::size_t>(c)]);
            avail.erase(avail.begin() + c);
        }
        return Permutation(std::move(e), Unchecked{});
    }

    int size() const { return static_cast<int>(entries_.size()); }

    /// Value at 1-based position i; positions beyond n are fixed points.
    int operator()(int i) const {
        return i <= size() ? entries_[static_cast<std::size_t>(i - 1)] : i;
    }

    std::span<const int> one_line() const { return entries_; }

    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            for (std::size_t j = i + 1; j < entries_.size(); ++j)
                if (entries_[i] > entries_[j]) ++inv;
        return inv;
    }

    /// Lehmer code: c_i = #{j > i : w_j < w_i}.
    std::vector<int> code() const {
        std::vector<int> c(entries_.size(), 0);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            for (std::size_t j = i + 1; j < entries_.size(); ++j)
                if (entries_[j] < entries_[i]) ++c[i];
        return c;
    }

    /// Positions i (1-based) with w_i > w_{i+1}.
    std::vector<int> descents() const {
        std::vector<int> d;
        for (int i = 1; i < size(); ++i)
            if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
        return d;
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> e(entries_.size());
        for (int i = 1; i <= size(); ++i) e[static_cast<std::size_t>((*this)(i) - 1)] = i;
        return Permutation(std::move(e), Unchecked{});
    }

    /// w * s_ij: swaps the entries in positions i and j.
    Permutation swap_positions(int i, int j) const {
        Permutation r = embed(std::max({size(), i, j}));
        std::swap(r.entries_[static_cast<std::size_t>(i - 1)], r.entries_[static_cast<std::size_t>(j - 1)]);
        return r;
    }

    /// Same permutation viewed in S_m (m >= size, trailing fixed points appended).
    Permutation embed(int m) const {
        std::vector<int> e = entries_;
        for (int i = size() + 1; i <= m; ++i) e.push_back(i);
        return Permutation(std::move(e), Unchecked{});
    }

    /// Drops trailing fixed points; the identity becomes the element of S_1.
    Permutation trimmed() const {
        int m = size();
        while (m > 1 && (*this)(m) == m) --m;
        std::vector<int> e(entries_.begin(), entries_.begin() + m);
        if (e.empty()) e.push_back(1);
        return Permutation(std::move(e), Unchecked{});
    }

    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        int m = std::max(u.size(), v.size());
        std::vector<int> e(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) e[static_cast<std::size_t>(i - 1)] = u(v(i));
        return Permutation(std::move(e), Unchecked{});
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    struct Unchecked {};
    Permutation(std::vector<int> e, Unchecked) : entries_(std::move(e)) {}

    std::vector<int> entries_;
};

inline int length(const Permutation& w) { return w.length(); }

/// Space-separated one-line notation, e.g. "2 4 1 3".
inline std::string to_string(const Permutation& w) {
    std::string s;
    for (int v : w.one_line()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> e;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw ParseError("bad permutation entry '" + tok + "'");
            e.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad permutation entry '" + tok + "'");
        }
    }
    if (e.empty()) throw ParseError("empty permutation");
    return Permutation(std::move(e));
}

/// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> enumerate_sn(int n) {
    std::vector<Permutation> out;
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do {
        out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Position of w in enumerate_sn(w.size()).
inline std::uint32_t lex_rank(const Permutation& w) {
    auto c = w.code();
    std::uint64_t r = 0;
    int n = w.size();
    for (int i = 0; i < n; ++i) r += static_cast<std::uint64_t>(c[static_cast<std::size_t>(i)]) * factorial(n - 1 - i);
    return static_cast<std::uint32_t>(r);
}

} // namespace schubert_fk
