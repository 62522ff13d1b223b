#pragma once

#include "schubert_fk/fk_algebra.hpp"

#include <algorithm>
#include <functional>
#include <span>

namespace schubert_fk {

enum class SymmetricKind { e, h };

/// Complement of I inside {1..n}.
inline std::vector<int> complement(std::span<const int> I, int n) {
    std::vector<int> J;
    for (int v = 1; v <= n; ++v)
        if (std::find(I.begin(), I.end(), v) == I.end()) J.push_back(v);
    return J;
}

namespace detail {

/// Letter x_ab with a possibly larger than b, folded to +-x_{min,max}.
inline void push_letter(SignedWord& w, int a, int b) {
    if (a < b) {
        w.word.push_back({a, b});
    } else {
        w.word.push_back({b, a});
        w.sign = -w.sign;
    }
}

/// Words x_{a_1 b_1} ... x_{a_l b_l}: `distinct` side holds distinct values from
/// its set in any order, the other side a weakly increasing sequence.
inline std::vector<SignedWord> pieri_words(std::span<const int> I, std::span<const int> J, int l, bool a_distinct) {
    std::vector<SignedWord> out;
    if (l < 0) return out;
    std::span<const int> D = a_distinct ? I : J;
    std::span<const int> W = a_distinct ? J : I;
    std::vector<int> ws(W.begin(), W.end());
    std::sort(ws.begin(), ws.end());
    if (l > static_cast<int>(D.size())) return out;
    if (l > 0 && ws.empty()) return out;

    std::vector<std::vector<int>> weak;
    std::vector<int> cur;
    std::function<void(std::size_t)> rec_weak = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == l) {
            weak.push_back(cur);
            return;
        }
        for (std::size_t p = from; p < ws.size(); ++p) {
            cur.push_back(ws[p]);
            rec_weak(p);
            cur.pop_back();
        }
    };
    rec_weak(0);

    std::vector<int> ds(D.begin(), D.end());
    std::vector<bool> used(ds.size(), false);
    std::vector<int> seq;
    std::function<void()> rec_distinct = [&] {
        if (static_cast<int>(seq.size()) == l) {
            for (const auto& wk : weak) {
                SignedWord sw;
                for (int p = 0; p < l; ++p) {
                    auto pi = static_cast<std::size_t>(p);
                    if (a_distinct) push_letter(sw, seq[pi], wk[pi]);
                    else push_letter(sw, wk[pi], seq[pi]);
                }
                out.push_back(std::move(sw));
            }
            return;
        }
        for (std::size_t p = 0; p < ds.size(); ++p) {
            if (used[p]) continue;
            used[p] = true;
            seq.push_back(ds[p]);
            rec_distinct();
            seq.pop_back();
            used[p] = false;
        }
    };
    rec_distinct();
    return out;
}

} // namespace detail

/// Quantum Pieri words for e_l: a's distinct in I, b's weakly increasing in J.
inline std::vector<SignedWord> pieri_e_words(std::span<const int> I, std::span<const int> J, int l) {
    return detail::pieri_words(I, J, l, true);
}
inline std::vector<SignedWord> pieri_e_words(std::span<const int> I, int n, int l) {
    auto J = complement(I, n);
    return pieri_e_words(I, J, l);
}

/// Words for h_k: b's distinct in J, a's weakly increasing in I.
inline std::vector<SignedWord> pieri_h_words(std::span<const int> I, std::span<const int> J, int k) {
    return detail::pieri_words(I, J, k, false);
}
inline std::vector<SignedWord> pieri_h_words(std::span<const int> I, int n, int k) {
    auto J = complement(I, n);
    return pieri_h_words(I, J, k);
}

inline FKElement sum_of(const std::vector<SignedWord>& words) {
    FKElement e;
    for (const auto& w : words) e.add(w.word, w.sign);
    return e;
}

/// e_degree or h_degree evaluated at the Dunkl elements theta_i, i in I, for S_n.
inline FKElement dunkl_symmetric_operator(SymmetricKind kind, int degree, std::span<const int> I, int n) {
    return sum_of(kind == SymmetricKind::e ? pieri_e_words(I, n, degree) : pieri_h_words(I, n, degree));
}

/// Same, with the second index restricted to an explicit set J (induced version).
inline FKElement dunkl_symmetric_operator(SymmetricKind kind, int degree, std::span<const int> I, std::span<const int> J) {
    return sum_of(kind == SymmetricKind::e ? pieri_e_words(I, J, degree) : pieri_h_words(I, J, degree));
}

/// theta_i = -sum_{j<i} x_ji + sum_{k>i} x_ik.
inline FKElement dunkl_theta(int i, int n) {
    FKElement e;
    for (int j = 1; j < i; ++j) e.add({{j, i}}, -1);
    for (int k = i + 1; k <= n; ++k) e.add({{i, k}}, 1);
    return e;
}

} // namespace schubert_fk
