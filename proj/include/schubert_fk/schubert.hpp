#pragma once

#include "schubert_fk/symmetric.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace schubert_fk {

/// Which ascent to climb when building S_w from the staircase.
enum class AscentChoice { last, first };

namespace detail {

inline Polynomial staircase(int n) {
    Monomial m;
    for (int i = 1; i < n; ++i) m.set(i, n - i);
    return Polynomial::term(m, 1);
}

inline int pick_ascent(const Permutation& w, AscentChoice choice) {
    int found = 0;
    for (int i = 1; i < w.size(); ++i) {
        if (w(i) < w(i + 1)) {
            found = i;
            if (choice == AscentChoice::first) break;
        }
    }
    return found;
}

/// S_w = d_i S_{w s_i} for an ascent i of w, bottoming out at the longest element.
inline Polynomial build_schubert(const Permutation& w, AscentChoice choice,
                                 const std::function<Polynomial(const Permutation&)>& recurse) {
    int i = pick_ascent(w, choice);
    if (i == 0) return staircase(w.size());
    return divided_difference(i, recurse(w.swap_positions(i, i + 1)));
}

} // namespace detail

/// Schubert polynomial of w; stable under embedding S_n into S_m.
inline Polynomial schubert_poly(const Permutation& w) {
    static std::mutex mu;
    static std::map<Permutation, Polynomial> cache;
    Permutation key = w.trimmed();
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Polynomial p = detail::build_schubert(key, AscentChoice::last, [](const Permutation& u) { return schubert_poly(u); });
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(p)).first->second;
}

/// Uncached construction along an explicit ascent rule; used to check word independence.
inline Polynomial schubert_poly_via(const Permutation& w, AscentChoice choice) {
    std::function<Polynomial(const Permutation&)> rec = [&](const Permutation& u) {
        return detail::build_schubert(u, choice, rec);
    };
    return rec(w.trimmed());
}

using SchubertExpansion = std::map<Permutation, Integer>;

/// Writes f as an integer combination of S_w, w in S_n.
///
/// The lex-smallest monomial of S_w (x_1 > x_2 > ...) is x^{code(w)}, so
/// peeling off the lex-smallest monomial of the remainder identifies one
/// Schubert term at a time.
inline SchubertExpansion expand_in_schubert_basis(Polynomial f, int n) {
    SchubertExpansion out;
    while (!f.empty()) {
        const auto& [mono, c] = *f.begin();
        for (int i = n + 1; i <= kMaxVariables; ++i)
            if (mono[i] != 0) throw NotInSpan("monomial uses x_" + std::to_string(i) + " outside S_" + std::to_string(n));
        std::vector<int> code;
        for (int i = 1; i <= n; ++i) code.push_back(mono[i]);
        Permutation w = Permutation::from_code(code, n);
        Integer coeff = c;
        out[w] += coeff;
        f -= schubert_poly(w) * coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

/// c_{uv}^w for w in S_m, via leading-term expansion of S_u S_v in ambient S_m.
inline SchubertExpansion lr_coefficients(const Permutation& u, const Permutation& v, int m) {
    auto out = expand_in_schubert_basis(schubert_poly(u) * schubert_poly(v), m);
    for (const auto& [w, c] : out)
        if (c < 0) throw Error("negative structure constant at " + to_string(w));
    return out;
}

/// Coefficients of S_w, w in S_n, in an arbitrary polynomial f.
///
/// Uses d_{a_1} ... d_{a_l} S_x = [x = w] at degree zero for a reduced word
/// w = s_{a_1} ... s_{a_l}: the constant term of that iterated divided
/// difference of f is the coefficient of S_w. Terms S_x with x outside S_n
/// are ignored, so no larger ambient group is needed.
inline SchubertExpansion schubert_coefficients_in_flag(const Polynomial& f, int n) {
    SchubertExpansion out;
    if (f.empty()) return out;
    std::set<Permutation> seen;
    std::deque<std::pair<Permutation, Polynomial>> queue;
    queue.emplace_back(Permutation::identity(n), f);
    seen.insert(Permutation::identity(n));
    while (!queue.empty()) {
        auto [w, g] = std::move(queue.front());
        queue.pop_front();
        Integer c0 = g.coefficient(Monomial{});
        if (!c0.is_zero()) out.emplace(w, c0);
        auto pos = w.inverse();
        for (int b = 1; b < n; ++b) {
            if (pos(b) > pos(b + 1)) continue;
            // s_b w exchanges the values b and b+1.
            std::vector<int> e(w.one_line().begin(), w.one_line().end());
            std::swap(e[static_cast<std::size_t>(pos(b) - 1)], e[static_cast<std::size_t>(pos(b + 1) - 1)]);
            Permutation x(std::move(e));
            if (seen.count(x)) continue;
            Polynomial h = divided_difference(b, g);
            if (h.empty()) continue;
            seen.insert(x);
            queue.emplace_back(std::move(x), std::move(h));
        }
    }
    return out;
}

/// Structure constants of H*(Fl_n): S_u S_v = sum c_{uv}^w S_w + (terms outside S_n).
inline SchubertExpansion flag_structure_constants(const Permutation& u, const Permutation& v, int n) {
    auto out = schubert_coefficients_in_flag(schubert_poly(u) * schubert_poly(v), n);
    for (const auto& [w, c] : out)
        if (c < 0) throw Error("negative structure constant at " + to_string(w));
    return out;
}

/// Exponent tuple (i_1, ..., i_{n-1}) with 0 <= i_j <= j.
using EBasisKey = std::vector<int>;

/// e_{i_1}(x_1) e_{i_2}(x_1, x_2) ... e_{i_{n-1}}(x_1..x_{n-1}).
inline Polynomial e_product(const EBasisKey& key) {
    Polynomial r = constant(1);
    for (std::size_t j = 0; j < key.size(); ++j) r = r * elementary(key[j], static_cast<int>(j) + 1);
    return r;
}

/// All keys for S_n with entries summing to d.
inline std::vector<EBasisKey> e_basis_keys(int n, int d) {
    std::vector<EBasisKey> out;
    EBasisKey cur;
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int i = 0; i <= std::min(j, left); ++i) {
            cur.push_back(i);
            rec(j + 1, left - i);
            cur.pop_back();
        }
    };
    rec(1, d);
    return out;
}

/// Unique expansion of f in the e-products for S_n, solved exactly over Q.
inline std::map<EBasisKey, Integer> expand_in_e_basis(const Polynomial& f, int n) {
    std::map<EBasisKey, Integer> out;
    std::set<int> degrees;
    for (const auto& [m, c] : f) degrees.insert(m.degree());
    for (int d : degrees) {
        Polynomial part = homogeneous_part(f, d);
        auto keys = e_basis_keys(n, d);
        std::vector<Polynomial> cols;
        std::map<Monomial, std::size_t> row_of;
        auto row = [&](const Monomial& m) { return row_of.try_emplace(m, row_of.size()).first->second; };
        for (const auto& k : keys) {
            cols.push_back(e_product(k));
            for (const auto& [m, c] : cols.back()) row(m);
        }
        for (const auto& [m, c] : part) row(m);
        std::size_t nr = row_of.size(), nc = keys.size();
        // Augmented matrix [A | b].
        std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc + 1));
        for (std::size_t j = 0; j < nc; ++j)
            for (const auto& [m, c] : cols[j]) a[row_of[m]][j] = Rational(c);
        for (const auto& [m, c] : part) a[row_of[m]][nc] = Rational(c);

        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t j = 0; j < nc && r < nr; ++j) {
            std::size_t p = r;
            while (p < nr && a[p][j] == 0) ++p;
            if (p == nr) continue;
            std::swap(a[p], a[r]);
            Rational inv = 1 / a[r][j];
            for (auto& x : a[r]) x *= inv;
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == r || a[i][j] == 0) continue;
                Rational factor = a[i][j];
                for (std::size_t c = j; c <= nc; ++c) a[i][c] -= factor * a[r][c];
            }
            pivot_col.push_back(j);
            ++r;
        }
        for (std::size_t i = r; i < nr; ++i)
            if (a[i][nc] != 0) throw NotInSpan("polynomial is not in the span of the e-products for S_" + std::to_string(n));
        if (pivot_col.size() != nc) throw Error("e-products are linearly dependent in degree " + std::to_string(d));
        for (std::size_t i = 0; i < r; ++i) {
            const Rational& x = a[i][nc];
            if (x == 0) continue;
            if (denominator(x) != 1) throw NotInSpan("non-integral e-basis coefficient");
            out[keys[pivot_col[i]]] = numerator(x);
        }
    }
    return out;
}

/// Key text "(1,2)".
inline std::string to_string(const EBasisKey& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(key[i]);
    }
    return s + ")";
}

} // namespace schubert_fk
