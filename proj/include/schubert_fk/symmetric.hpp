#pragma once

#include "schubert_fk/partition.hpp"
#include "schubert_fk/polynomial.hpp"

#include <functional>
#include <vector>

namespace schubert_fk {

/// e_k in the variables x_v, v in vars.
inline Polynomial elementary(int k, std::span<const int> vars) {
    if (k < 0) return {};
    Polynomial r;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == k) {
            Monomial m;
            for (int v : pick) m.set(v, m[v] + 1);
            r.add(m, 1);
            return;
        }
        for (std::size_t i = from; i < vars.size(); ++i) {
            pick.push_back(vars[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return r;
}

/// h_k in the variables x_v, v in vars.
inline Polynomial homogeneous(int k, std::span<const int> vars) {
    if (k < 0) return {};
    Polynomial r;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == k) {
            Monomial m;
            for (int v : pick) m.set(v, m[v] + 1);
            r.add(m, 1);
            return;
        }
        for (std::size_t i = from; i < vars.size(); ++i) {
            pick.push_back(vars[i]);
            rec(i);
            pick.pop_back();
        }
    };
    rec(0);
    return r;
}

/// {1, ..., k}.
inline std::vector<int> first_variables(int k) {
    std::vector<int> v;
    for (int i = 1; i <= k; ++i) v.push_back(i);
    return v;
}

inline Polynomial elementary(int k, int nvars) { return elementary(k, first_variables(nvars)); }
inline Polynomial homogeneous(int k, int nvars) { return homogeneous(k, first_variables(nvars)); }

/// Determinant of a square matrix over a commutative ring, by permutation expansion.
template <class T, class Mul>
T determinant(const std::vector<std::vector<T>>& a, Mul mul, const T& one) {
    int n = static_cast<int>(a.size());
    if (n == 0) return one;
    T det{};
    for (const auto& p : enumerate_sn(n)) {
        T term = one;
        bool zero = false;
        for (int i = 1; i <= n && !zero; ++i) {
            const T& e = a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p(i) - 1)];
            if (is_zero(e)) zero = true;
            else term = mul(term, e);
        }
        if (zero) continue;
        if (p.length() % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

/// s_lambda(x_1..x_k) = det[h_{lambda_i - i + j}].
inline Polynomial schur_jacobi_trudi(const Partition& lambda, int k) {
    if (lambda.length() > k) return {};
    int l = lambda.length();
    std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(l), std::vector<Polynomial>(static_cast<std::size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = homogeneous(lambda[i] - i + j, k);
    return determinant(m, [](const Polynomial& a, const Polynomial& b) { return a * b; }, constant(1));
}

/// s_lambda(x_1..x_k) = det[e_{lambda'_i - i + j}].
inline Polynomial schur_dual_jacobi_trudi(const Partition& lambda, int k) {
    Partition c = lambda.conjugate();
    int l = c.length();
    std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(l), std::vector<Polynomial>(static_cast<std::size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = elementary(c[i] - i + j, k);
    return determinant(m, [](const Polynomial& a, const Polynomial& b) { return a * b; }, constant(1));
}

} // namespace schubert_fk
