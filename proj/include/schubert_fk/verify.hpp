#pragma once

#include "schubert_fk/expansions.hpp"
#include "schubert_fk/parallel.hpp"
#include "schubert_fk/quantum.hpp"
#include "schubert_fk/symmetric.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>

namespace schubert_fk {

using json = nlohmann::ordered_json;

struct CheckReport {
    std::string claim;
    json params = json::object();
    bool pass = true;
    json counterexample;  ///< null when the check passes
    json notes;           ///< extra findings that do not affect pass
    double seconds = 0;

    json to_json(bool timing) const {
        json j;
        j["claim"] = claim;
        j["params"] = params;
        j["pass"] = pass;
        j["counterexample"] = counterexample;
        if (!notes.is_null()) j["notes"] = notes;
        if (timing) j["seconds"] = seconds;
        return j;
    }
};

inline json difference_json(const OperatorDifference& d) {
    return {{"source", to_string(d.source)},
            {"target", to_string(d.target)},
            {"q", q_monomial_key(d.q)},
            {"expected", to_string(d.expected)},
            {"actual", to_string(d.actual)}};
}

namespace detail {

template <class Fn>
CheckReport timed(std::string claim, json params, Fn body) {
    CheckReport r;
    r.claim = std::move(claim);
    r.params = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Records the first failure only.
inline void fail(CheckReport& r, json counterexample) {
    if (!r.pass) return;
    r.pass = false;
    r.counterexample = std::move(counterexample);
}

inline void compare(CheckReport& r, const char* side, const OperatorMatrix& expected, const OperatorMatrix& actual) {
    if (auto d = first_difference(expected, actual)) {
        json c = difference_json(*d);
        c["side"] = side;
        fail(r, std::move(c));
    }
}

inline void require_nonnegative(CheckReport& r, const FKElement& el) {
    for (const auto& [w, c] : el)
        if (c < 0) {
            fail(r, {{"side", "positivity"}, {"word", to_string(w)}, {"coeff", to_string(c)}});
            return;
        }
}

/// Classical and quantum operator equality of `el` with multiplication by sigma_w.
inline void compare_both(CheckReport& r, const FKElement& el, const Permutation& w, int n) {
    require_nonnegative(r, el);
    compare(r, "classical", classical_schubert_operator(w, n), OperatorMatrix::of(el, n, false));
    compare(r, "quantum", quantum_schubert_operator(w, n, true), OperatorMatrix::of(el, n, true));
}

inline json hook_json(const HookShape& h) { return {{"s", h.s}, {"t", h.t}}; }

} // namespace detail

/// Hook expansion (or an explicit replacement element) against both oracles.
inline CheckReport check_hook_theorem(int n, int k, const HookShape& hook, const std::optional<FKElement>& element = std::nullopt) {
    json params = {{"n", n}, {"k", k}, {"hook", detail::hook_json(hook)}};
    if (element) params["element"] = "explicit";
    return detail::timed("hook-theorem", std::move(params), [&](CheckReport& r) {
        FKElement el = element ? *element : hook_expansion(hook, k, n);
        detail::compare_both(r, el, grassmannian_perm(hook.partition(), k, n), n);
    });
}

inline CheckReport check_two_by_two(int n, int k) {
    return detail::timed("two-by-two", {{"n", n}, {"k", k}}, [&](CheckReport& r) {
        detail::compare_both(r, two_by_two_expansion(k, n), grassmannian_perm(Partition({2, 2}), k, n), n);
    });
}

inline CheckReport check_rectangles(int n, int k, RectangleKind kind, int r_or_t) {
    json params = {{"n", n}, {"k", k}, {"kind", kind == RectangleKind::rows ? "rows" : "columns"}, {"count", r_or_t}};
    return detail::timed("rectangles", std::move(params), [&](CheckReport& r) {
        auto lambda = rectangle_partition(kind, r_or_t, k, n);
        detail::compare_both(r, rectangle_expansion(kind, r_or_t, k, n), grassmannian_perm(lambda, k, n), n);
    });
}

/// Classical operator equality of the Pieri identity plus ledger nonnegativity on
/// forest-labeling classes. The quantum comparison is reported under "notes".
inline CheckReport check_hook_plus_box(int n, int k, int a, int b) {
    return detail::timed("hook-plus-box", {{"n", n}, {"k", k}, {"a", a}, {"b", b}}, [&](CheckReport& r) {
        auto L = hook_plus_box_ledger(a, b, k, n);
        auto w = grassmannian_perm(L.lambda, k, n);
        detail::compare(r, "classical", classical_schubert_operator(w, n), OperatorMatrix::of(L.net, n, false));
        int negative = 0, forest = 0;
        for (const auto& row : L.rows) {
            if (!row.forest_class) continue;
            ++forest;
            if (row.net < 0) {
                ++negative;
                detail::fail(r, {{"side", "ledger"}, {"word", to_string(row.word)}, {"net", to_string(row.net)}});
            }
        }
        json q;
        if (auto d = first_difference(quantum_schubert_operator(w, n, true), OperatorMatrix::of(L.net, n, true)))
            q = difference_json(*d);
        r.notes = {{"classes", L.rows.size()},
                   {"forest_classes", forest},
                   {"negative_forest_classes", negative},
                   {"quantum_equal", q.is_null()},
                   {"quantum_difference", q}};
    });
}

namespace detail {

inline OperatorMatrix generator_matrix(int i, int j, int n, bool quantum) {
    return OperatorMatrix::of(FKElement::word({{i, j}}), n, quantum);
}

} // namespace detail

/// Defining relations of the (quantum) Fomin-Kirillov algebra on the Bruhat representation.
inline CheckReport check_relation_suite(int n) {
    return detail::timed("relations", {{"n", n}}, [&](CheckReport& r) {
        for (bool quantum : {false, true}) {
            const char* side = quantum ? "quantum" : "classical";
            auto id = OperatorMatrix::identity(n, quantum);
            std::map<std::pair<int, int>, OperatorMatrix> t;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) t.emplace(std::pair{i, j}, detail::generator_matrix(i, j, n, quantum));
            auto T = [&](int i, int j) -> const OperatorMatrix& { return t.at({i, j}); };
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    std::string rel = "x" + std::to_string(i) + std::to_string(j) + "^2";
                    auto sq = then(T(i, j), T(i, j));
                    bool ok = quantum && j == i + 1 ? sq == id.scaled(QMonomial::interval(i, j)) : sq.is_zero();
                    if (!ok) detail::fail(r, {{"side", side}, {"relation", rel}});
                    for (int k = j + 1; k <= n; ++k) {
                        if (then(T(i, j), T(j, k)) != then(T(i, k), T(i, j)) + then(T(j, k), T(i, k)))
                            detail::fail(r, {{"side", side}, {"relation", "three-term"}, {"i", i}, {"j", j}, {"k", k}});
                        if (then(T(j, k), T(i, j)) != then(T(i, j), T(i, k)) + then(T(i, k), T(j, k)))
                            detail::fail(r, {{"side", side}, {"relation", "three-term-reversed"}, {"i", i}, {"j", j}, {"k", k}});
                    }
                    for (int k = i + 1; k <= n; ++k)
                        for (int l = k + 1; l <= n; ++l) {
                            if (k == j || l == i || l == j) continue;
                            if (then(T(i, j), T(k, l)) != then(T(k, l), T(i, j)))
                                detail::fail(r, {{"side", side}, {"relation", "commute"}, {"i", i}, {"j", j}, {"k", k}, {"l", l}});
                        }
                }
        }
    });
}

inline CheckReport check_dunkl_commutativity(int n) {
    return detail::timed("dunkl-commute", {{"n", n}}, [&](CheckReport& r) {
        for (bool quantum : {false, true}) {
            std::vector<OperatorMatrix> th;
            for (int i = 1; i <= n; ++i) th.push_back(OperatorMatrix::of(dunkl_theta(i, n), n, quantum));
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (then(th[static_cast<std::size_t>(a)], th[static_cast<std::size_t>(b)]) !=
                        then(th[static_cast<std::size_t>(b)], th[static_cast<std::size_t>(a)]))
                        detail::fail(r, {{"side", quantum ? "quantum" : "classical"}, {"i", a + 1}, {"j", b + 1}});
        }
    });
}

namespace detail {

/// det[entry(lambda_i - i + j)] composed as commuting operators.
inline OperatorMatrix operator_jacobi_trudi(std::span<const int> parts, const std::function<OperatorMatrix(int)>& entry, int n,
                                            bool quantum) {
    int l = static_cast<int>(parts.size());
    std::vector<std::vector<std::optional<OperatorMatrix>>> m(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int d = parts[static_cast<std::size_t>(i)] - i + j;
            m[static_cast<std::size_t>(i)].push_back(d < 0 ? std::nullopt : std::optional(entry(d)));
        }
    OperatorMatrix det(n, quantum);
    for (const auto& p : enumerate_sn(l)) {
        OperatorMatrix term = OperatorMatrix::identity(n, quantum);
        bool zero = false;
        for (int i = 1; i <= l && !zero; ++i) {
            const auto& e = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p(i) - 1)];
            if (!e || e->is_zero()) zero = true;
            else term = then(term, *e);
        }
        if (zero) continue;
        if (p.length() % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

} // namespace detail

/// s_lambda(theta_1..theta_a) vanishes on S_{a+b} for every lambda outside the a x b
/// rectangle with |lambda| <= a + b, by both Jacobi-Trudi determinants.
inline CheckReport check_vanishing(int a, int b) {
    return detail::timed("vanishing", {{"a", a}, {"b", b}}, [&](CheckReport& r) {
        int n = a + b;
        std::map<std::pair<SymmetricKind, int>, OperatorMatrix> cache;
        auto entry = [&](SymmetricKind kind) {
            return [&, kind](int d) {
                auto key = std::pair{kind, d};
                if (auto it = cache.find(key); it != cache.end()) return it->second;
                auto m = d == 0 ? OperatorMatrix::identity(n, false) : OperatorMatrix::of(pieri_sum(kind, d, a, n), n, false);
                return cache.emplace(key, m).first->second;
            };
        };
        json checked = json::array();
        for (int size = 1; size <= n; ++size)
            for (const auto& lambda : enumerate_partitions_in_box(n, n, size)) {
                if (lambda.fits_in(a, b)) continue;
                checked.push_back(to_string(lambda));
                auto h = detail::operator_jacobi_trudi(lambda.parts(), entry(SymmetricKind::h), n, false);
                if (!h.is_zero()) detail::fail(r, {{"lambda", to_string(lambda)}, {"determinant", "h"}});
                auto e = detail::operator_jacobi_trudi(lambda.conjugate().parts(), entry(SymmetricKind::e), n, false);
                if (!e.is_zero()) detail::fail(r, {{"lambda", to_string(lambda)}, {"determinant", "e"}});
            }
        r.notes = {{"partitions", checked}};
    });
}

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& from, int size) {
    std::vector<std::vector<int>> out;
    int m = static_cast<int>(from.size());
    if (size < 0 || size > m) return out;
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
        std::vector<int> s;
        for (int p = 0; p < m; ++p)
            if (pick[static_cast<std::size_t>(p)]) s.push_back(from[static_cast<std::size_t>(p)]);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

} // namespace detail

/// e_a(I,J) h_b(I,J) = 0 on S_n for every disjoint I, J with |I| = a, |J| = b, a + b <= n.
inline CheckReport check_kill_induced(int n) {
    return detail::timed("kill-induced", {{"n", n}}, [&](CheckReport& r) {
        std::vector<int> all;
        for (int v = 1; v <= n; ++v) all.push_back(v);
        int checked = 0;
        for (int a = 1; a < n; ++a)
            for (int b = 1; a + b <= n; ++b)
                for (const auto& I : detail::subsets_of_size(all, a))
                    for (const auto& J : detail::subsets_of_size(complement(I, n), b)) {
                        auto e = OperatorMatrix::of(dunkl_symmetric_operator(SymmetricKind::e, a, I, J), n, false);
                        auto h = OperatorMatrix::of(dunkl_symmetric_operator(SymmetricKind::h, b, I, J), n, false);
                        ++checked;
                        if (!then(e, h).is_zero())
                            detail::fail(r, {{"a", a}, {"b", b}, {"I", I}, {"J", J}});
                    }
        r.notes = {{"pairs", checked}};
    });
}

inline CheckReport check_grassmannian_schur(int n) {
    return detail::timed("grassmannian-schur", {{"n", n}}, [&](CheckReport& r) {
        for (int k = 1; k < n; ++k)
            for (const auto& lambda : enumerate_partitions_in_box(k, n - k))
                if (schubert_poly(grassmannian_perm(lambda, k, n)) != schur_jacobi_trudi(lambda, k))
                    detail::fail(r, {{"k", k}, {"lambda", to_string(lambda)}});
    });
}

/// Condition-1 and condition-2 class sets agree on every forest of the k x m rectangle.
inline CheckReport check_label_classes(int k, int m, int max_size) {
    return detail::timed("label-classes", {{"k", k}, {"m", m}, {"max_size", max_size}}, [&](CheckReport& r) {
        int checked = 0;
        for (int size = 1; size <= std::min(max_size, k * m); ++size)
            for (const auto& d : enumerate_forests(k, m, size))
                for (int l = 1; l <= size; ++l) {
                    int v = size - l;
                    if (d.rows() < l || d.cols() < v + 1) continue;
                    ++checked;
                    if (labeling_classes(d, l) != labeling_classes(d, l - 1))
                        detail::fail(r, {{"diagram", to_string(d)}, {"l", l}, {"v", v}});
                }
        r.notes = {{"cases", checked}};
    });
}

/// Row and column hooks agree with the Pieri sums.
inline CheckReport check_degenerate_hooks(int n) {
    return detail::timed("degenerate-hooks", {{"n", n}}, [&](CheckReport& r) {
        for (int k = 1; k < n; ++k) {
            for (int s = 1; s <= n - k; ++s)
                if (hook_expansion({s, 1}, k, n) != pieri_sum(SymmetricKind::h, s, k, n))
                    detail::fail(r, {{"k", k}, {"hook", detail::hook_json({s, 1})}});
            for (int t = 1; t <= k; ++t)
                if (hook_expansion({1, t}, k, n) != pieri_sum(SymmetricKind::e, t, k, n))
                    detail::fail(r, {{"k", k}, {"hook", detail::hook_json({1, t})}});
        }
    });
}

/// Nonnegativity of structure constants and Gromov-Witten invariants over S_n x S_n.
inline CheckReport check_positivity(int n) {
    return detail::timed("positivity", {{"n", n}}, [&](CheckReport& r) {
        auto perms = enumerate_sn(n);
        for (const auto& u : perms) {
            auto Q = quantum_schubert_operator(u, n, true);
            for (const auto& v : perms) {
                for (const auto& [w, c] : flag_structure_constants(u, v, n))
                    if (c < 0) detail::fail(r, {{"side", "classical"}, {"u", to_string(u)}, {"v", to_string(v)}, {"w", to_string(w)}});
                for (const auto& [w, c] : Q.apply(v))
                    for (const auto& [q, x] : c)
                        if (x < 0)
                            detail::fail(r, {{"side", "quantum"},
                                             {"u", to_string(u)},
                                             {"v", to_string(v)},
                                             {"w", to_string(w)},
                                             {"q", q_monomial_key(q)}});
            }
        }
    });
}

/// Every +1 perturbation of one coefficient of the hook expansion must fail the hook check.
inline CheckReport check_mutation_guard(int n, int k, const HookShape& hook) {
    return detail::timed("mutation-guard", {{"n", n}, {"k", k}, {"hook", detail::hook_json(hook)}}, [&](CheckReport& r) {
        auto base = hook_expansion(hook, k, n);
        if (!check_hook_theorem(n, k, hook).pass) detail::fail(r, {{"mutation", "none"}});
        int mutants = 0;
        for (const auto& [w, c] : base) {
            FKElement mutated = base;
            mutated.add_canonical(w, 1);
            ++mutants;
            if (check_hook_theorem(n, k, hook, mutated).pass) detail::fail(r, {{"mutation", to_string(w)}});
        }
        r.notes = {{"mutants", mutants}};
    });
}

using CheckTask = std::function<CheckReport()>;

/// Parameter sweeps; sizes capped by max_n (and by the suite's own range).
inline std::vector<CheckTask> suite_tasks(const std::string& suite, int max_n) {
    std::vector<CheckTask> tasks;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("hook"))
        for (int n = 2; n <= max_n; ++n)
            for (int k = 1; k < n; ++k)
                for (int t = 1; t <= k; ++t)
                    for (int s = 1; s <= n - k; ++s) tasks.push_back([=] { return check_hook_theorem(n, k, {s, t}); });
    if (want("twobytwo"))
        for (int n = 4; n <= max_n; ++n)
            for (int k = 2; k <= n - 2; ++k) tasks.push_back([=] { return check_two_by_two(n, k); });
    if (want("rectangles"))
        for (int n = 2; n <= max_n; ++n)
            for (int k = 1; k < n; ++k) {
                for (int r = 1; r <= k; ++r) tasks.push_back([=] { return check_rectangles(n, k, RectangleKind::rows, r); });
                for (int t = 1; t <= n - k; ++t) tasks.push_back([=] { return check_rectangles(n, k, RectangleKind::columns, t); });
            }
    if (want("hookplusbox"))
        for (int a = 1; a <= 3; ++a)
            for (int b = 2; a + b + 1 <= 5; ++b)
                for (int k = 1; k <= 3; ++k)
                    for (int m = 1; m <= 3 && k + m <= max_n; ++m)
                        if (hook_plus_box_partition(a, b).fits_in(k, m))
                            tasks.push_back([=] { return check_hook_plus_box(k + m, k, a, b); });
    if (want("relations")) {
        for (int n = 2; n <= std::min(max_n, 4); ++n) tasks.push_back([=] { return check_relation_suite(n); });
        for (int n = 2; n <= max_n; ++n) tasks.push_back([=] { return check_dunkl_commutativity(n); });
    }
    if (want("vanishing"))
        for (int a = 1; a < max_n; ++a)
            for (int b = 1; a + b <= max_n; ++b) tasks.push_back([=] { return check_vanishing(a, b); });
    if (want("kill"))
        for (int n = 2; n <= max_n; ++n) tasks.push_back([=] { return check_kill_induced(n); });
    if (want("schur"))
        for (int n = 2; n <= max_n; ++n) tasks.push_back([=] { return check_grassmannian_schur(n); });
    if (want("classes"))
        for (int k = 1; k <= 3; ++k)
            for (int m = 1; m <= 3; ++m) tasks.push_back([=] { return check_label_classes(k, m, 5); });
    if (want("degenerate"))
        for (int n = 2; n <= max_n; ++n) tasks.push_back([=] { return check_degenerate_hooks(n); });
    if (want("positivity"))
        for (int n = 2; n <= std::min(max_n, 4); ++n) tasks.push_back([=] { return check_positivity(n); });
    if (want("mutation") && max_n >= 4) tasks.push_back([] { return check_mutation_guard(4, 2, {2, 2}); });
    return tasks;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",       "hook", "twobytwo", "rectangles", "hookplusbox", "relations", "vanishing",
                                                "kill",      "schur", "classes", "degenerate", "positivity", "mutation"};
    return names;
}

/// Runs tasks on the worker pool; reports come back in task order.
inline std::vector<CheckReport> run_tasks(const std::vector<CheckTask>& tasks) {
    return parallel_map<CheckReport>(tasks.size(), [&](std::size_t i) { return tasks[i](); });
}

} // namespace schubert_fk
