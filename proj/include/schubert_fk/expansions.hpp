#pragma once

#include "schubert_fk/diagram.hpp"
#include "schubert_fk/partition.hpp"
#include "schubert_fk/pieri.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace schubert_fk {

/// Letters before `split` have distinct rows and weakly increasing columns;
/// letters from `split` on have distinct columns and weakly increasing rows.
inline bool split_labeling(const FKWord& w, int split) {
    auto s = static_cast<std::size_t>(std::clamp(split, 0, static_cast<int>(w.size())));
    for (std::size_t p = 0; p < s; ++p) {
        if (p > 0 && w[p].j < w[p - 1].j) return false;
        for (std::size_t q = 0; q < p; ++q)
            if (w[q].i == w[p].i) return false;
    }
    for (std::size_t p = s; p < w.size(); ++p) {
        if (p > s && w[p].i < w[p - 1].i) return false;
        for (std::size_t q = s; q < p; ++q)
            if (w[q].j == w[p].j) return false;
    }
    return true;
}

/// Canonical classes of labelings of D containing a labeling of the given split type.
inline std::set<FKWord> labeling_classes(const Diagram& d, int split) {
    std::set<FKWord> out;
    FKWord w = d.boxes();
    std::sort(w.begin(), w.end());
    do {
        if (split_labeling(w, split)) out.insert(canonicalize(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Classes of labelings of D with respect to the hook (s, 1^{t-1}).
///
/// condition 1 splits after t letters, condition 2 after t - 1.
inline std::set<FKWord> hook_label_classes(const Diagram& d, const HookShape& hook, int condition = 1) {
    if (d.size() != hook.size())
        throw SizeMismatch("diagram has " + std::to_string(d.size()) + " boxes, hook has " + std::to_string(hook.size()));
    if (d.rows() < hook.t || d.cols() < hook.s) return {};
    return labeling_classes(d, condition == 1 ? hook.t : hook.t - 1);
}

/// c_D^lambda = binom(row - t + col - s, col - s) for forests with enough rows and columns.
inline Integer hook_coefficient(const Diagram& d, const HookShape& hook) {
    if (!d.is_forest() || d.rows() < hook.t || d.cols() < hook.s) return 0;
    return binomial(d.rows() - hook.t + d.cols() - hook.s, d.cols() - hook.s);
}

namespace detail {

/// Forest sum for a hook; empty when the hook does not fit.
inline FKElement forest_hook_sum(const HookShape& hook, int k, int n) {
    FKElement out;
    for (const auto& d : enumerate_forests(k, n - k, hook.size())) {
        Integer c = hook_coefficient(d, hook);
        if (c.is_zero()) continue;
        for (const auto& w : hook_label_classes(d, hook)) out.add_canonical(w, c);
    }
    return out;
}

inline std::vector<int> rows_of(int k) {
    std::vector<int> v;
    for (int i = 1; i <= k; ++i) v.push_back(i);
    return v;
}

inline std::vector<int> cols_of(int k, int n) {
    std::vector<int> v;
    for (int j = k + 1; j <= n; ++j) v.push_back(j);
    return v;
}

} // namespace detail

/// s_(s,1^{t-1})(theta_1..theta_k) as a nonnegative sum over forest labelings.
inline FKElement hook_expansion(const HookShape& hook, int k, int n) {
    if (hook.s < 1 || hook.t < 1 || !hook.fits_in(k, n - k))
        throw DoesNotFit("hook (" + to_string(hook.partition()) + ") does not fit in " + std::to_string(k) + "x" +
                         std::to_string(n - k));
    return detail::forest_hook_sum(hook, k, n);
}

/// e_l(theta_1..theta_k) or h_l(theta_1..theta_k), first indices <= k < second indices.
inline FKElement pieri_sum(SymmetricKind kind, int degree, int k, int n) {
    auto I = detail::rows_of(k);
    auto J = detail::cols_of(k, n);
    return dunkl_symmetric_operator(kind, degree, I, J);
}

enum class RectangleKind { rows, columns };

/// The rectangle partition (n-k)^r or t^k.
inline Partition rectangle_partition(RectangleKind kind, int r, int k, int n) {
    return kind == RectangleKind::rows ? Partition(std::vector<int>(static_cast<std::size_t>(r), n - k))
                                       : Partition(std::vector<int>(static_cast<std::size_t>(k), r));
}

/// (h_{n-k} sum)^r for (n-k)^r, or (e_k sum)^t for t^k, expanded and canonicalized.
inline FKElement rectangle_power(RectangleKind kind, int r, int k, int n) {
    int bound = kind == RectangleKind::rows ? k : n - k;
    if (r < 0 || r > bound || k < 1 || n - k < 1)
        throw DoesNotFit("rectangle with " + std::to_string(r) + (kind == RectangleKind::rows ? " rows" : " columns") +
                         " does not fit in " + std::to_string(k) + "x" + std::to_string(n - k));
    FKElement factor = kind == RectangleKind::rows ? pieri_sum(SymmetricKind::h, n - k, k, n) : pieri_sum(SymmetricKind::e, k, k, n);
    FKElement out = FKElement::one();
    for (int p = 0; p < r; ++p) out = out * factor;
    return out;
}

inline bool has_repeated_letter(const FKWord& w) {
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = p + 1; q < w.size(); ++q)
            if (w[p] == w[q]) return true;
    return false;
}

/// The power above without its classes that repeat a letter. Those classes sum to
/// zero classically and must be dropped for the expansion to hold with quantum Bruhat operators.
inline FKElement rectangle_expansion(RectangleKind kind, int r, int k, int n) {
    FKElement out;
    for (const auto& [w, c] : rectangle_power(kind, r, k, n))
        if (!has_repeated_letter(w)) out.add_canonical(w, c);
    return out;
}

/// All words of the commutation class of w (w itself included).
inline std::vector<FKWord> class_members(const FKWord& w) {
    std::set<FKWord> seen{w};
    std::deque<FKWord> queue{w};
    while (!queue.empty()) {
        FKWord cur = queue.front();
        queue.pop_front();
        for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
            if (!commute(cur[p], cur[p + 1])) continue;
            FKWord next = cur;
            std::swap(next[p], next[p + 1]);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Coefficient of a 4-letter class in the s_(2,2) expansion.
///
/// Classes that vanish classically (a repeated letter) get 0, which keeps the
/// expansion valid in the quantum representation too.
inline Integer two_by_two_coefficient(const FKWord& w) {
    std::map<int, int> rows, cols;
    for (const auto& g : w) {
        ++rows[g.i];
        ++cols[g.j];
    }
    if (rows.size() == 4 && cols.size() == 4) return 2;
    for (const auto& [v, m] : rows)
        if (m >= 3) return 0;
    for (const auto& [v, m] : cols)
        if (m >= 3) return 0;
    if (has_repeated_letter(w)) return 0;
    bool three_by_three = rows.size() == 3 && cols.size() == 3;
    if (three_by_three) {
        // x_ia x_ib x_cj x_dj with x_ij absent.
        int ri = 0, cj = 0;
        for (const auto& [v, m] : rows)
            if (m == 2) ri = v;
        for (const auto& [v, m] : cols)
            if (m == 2) cj = v;
        if (std::none_of(w.begin(), w.end(), [&](const FKGenerator& g) { return g.i == ri && g.j == cj; })) return 0;
    }
    for (const auto& u : class_members(w)) {
        // x_{a j1} x_{b j1} x_{b j2} x_{c j2}
        if (u[0].j == u[1].j && u[1].i == u[2].i && u[2].j == u[3].j) return 0;
        // x_{i1 a} x_{i1 b} x_{i2 b} x_{i3 c}, with i3 = i2 or three distinct rows and columns
        if (u[0].i == u[1].i && u[1].j == u[2].j && (u[2].i == u[3].i || three_by_three)) return 0;
    }
    return 1;
}

/// s_(2,2)(theta_1..theta_k) summed over all classes of 4-letter words in the rectangle.
inline FKElement two_by_two_expansion(int k, int n) {
    if (k < 2 || n - k < 2) throw DoesNotFit("(2,2) does not fit in " + std::to_string(k) + "x" + std::to_string(n - k));
    std::vector<FKGenerator> letters;
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) letters.push_back({i, j});
    std::set<FKWord> classes;
    for (const auto& a : letters)
        for (const auto& b : letters)
            for (const auto& c : letters)
                for (const auto& d : letters) classes.insert(canonicalize({a, b, c, d}));
    FKElement out;
    for (const auto& w : classes) out.add_canonical(w, two_by_two_coefficient(w));
    return out;
}

/// The partition (b, 2, 1^{a-1}).
inline Partition hook_plus_box_partition(int a, int b) {
    std::vector<int> p{b, 2};
    for (int r = 1; r < a; ++r) p.push_back(1);
    return Partition(std::move(p));
}

struct LedgerRow {
    FKWord word;
    Integer net;
    bool forest_class = false;
};

/// Class-by-class bookkeeping of s_(b,1^a) h_1 - s_(b,1^{a+1}) - s_(b+1,1^a).
struct HookPlusBoxLedger {
    int a = 0, b = 0, k = 0, n = 0;
    Partition lambda;
    FKElement product;     ///< hook expansion of (b,1^a) times the h_1 sum
    FKElement subtracted;  ///< the two hook expansions of size a+b+1
    FKElement net;
    std::vector<LedgerRow> rows;

    bool nonnegative_on_forest_classes() const {
        for (const auto& r : rows)
            if (r.forest_class && r.net < 0) return false;
        return true;
    }
};

/// True when the letters of w are distinct boxes forming a forest.
inline bool is_forest_class(const FKWord& w, int k, int n) {
    auto d = diagram_of(w, k, n);
    return d && d->is_forest();
}

inline HookPlusBoxLedger hook_plus_box_ledger(int a, int b, int k, int n) {
    if (a < 1 || b < 2) throw DoesNotFit("hook plus box needs a >= 1 and b >= 2");
    HookPlusBoxLedger L;
    L.a = a;
    L.b = b;
    L.k = k;
    L.n = n;
    L.lambda = hook_plus_box_partition(a, b);
    if (!L.lambda.fits_in(k, n - k))
        throw DoesNotFit("(" + to_string(L.lambda) + ") does not fit in " + std::to_string(k) + "x" + std::to_string(n - k));
    L.product = detail::forest_hook_sum({b, a + 1}, k, n) * pieri_sum(SymmetricKind::h, 1, k, n);
    L.subtracted = detail::forest_hook_sum({b, a + 2}, k, n) + detail::forest_hook_sum({b + 1, a + 1}, k, n);
    L.net = L.product - L.subtracted;
    std::set<FKWord> all;
    for (const auto& [w, c] : L.product) all.insert(w);
    for (const auto& [w, c] : L.subtracted) all.insert(w);
    for (const auto& w : all) {
        L.rows.push_back({w, L.net.coefficient(w), is_forest_class(w, k, n)});
    }
    return L;
}

} // namespace schubert_fk
