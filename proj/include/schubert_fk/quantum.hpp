#pragma once

#include "schubert_fk/bruhat.hpp"
#include "schubert_fk/pieri.hpp"
#include "schubert_fk/schubert.hpp"
#include "schubert_fk/symmetric.hpp"

namespace schubert_fk {

/// Matrix of e_i(theta_1, ..., theta_j) on the Schubert basis of S_n.
inline const OperatorMatrix& e_factor_matrix(int i, int j, int n, bool quantum) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, bool>, OperatorMatrix> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(i, j, n, quantum);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto I = first_variables(j);
    auto m = OperatorMatrix::of(dunkl_symmetric_operator(SymmetricKind::e, i, I, n), n, quantum);
    return cache.emplace(key, std::move(m)).first->second;
}

/// Operator of (quantum) multiplication by sigma_w on H*(Fl_n) or QH*(Fl_n).
///
/// S_w is written in the e-products; each e_{i_j}(x_1..x_j) is replaced by
/// its Dunkl evaluation, given by the quantum Pieri words.
inline OperatorMatrix quantum_schubert_operator(const Permutation& w, int n, bool quantum = true) {
    OperatorMatrix total(n, quantum);
    for (const auto& [key, alpha] : expand_in_e_basis(schubert_poly(w), n)) {
        OperatorMatrix prod = OperatorMatrix::identity(n, quantum);
        for (std::size_t j = 0; j < key.size(); ++j)
            if (key[j] > 0) prod = then(prod, e_factor_matrix(key[j], static_cast<int>(j) + 1, n, quantum));
        total += prod * alpha;
    }
    return total;
}

/// Classical multiplication by S_u, from commutative structure constants only.
inline OperatorMatrix classical_schubert_operator(const Permutation& u, int n) {
    const auto& rep = BruhatRepresentation::get(n, false);
    OperatorMatrix m(n, false);
    for (std::size_t r = 0; r < rep.dimension(); ++r)
        for (const auto& [w, c] : flag_structure_constants(u, rep.basis(r), n))
            m.add(r, rep.index(w), q_constant(c));
    return m;
}

using GWTable = std::map<std::pair<Permutation, QMonomial>, Integer>;

/// 3-point Gromov-Witten invariants: sigma_u * sigma_v = sum <u,v,w>_d q^d sigma_w.
inline GWTable gw_invariants(const Permutation& u, const Permutation& v, int n) {
    GWTable out;
    SchubertVector r = quantum_schubert_operator(u, n, true).apply(v);
    for (const auto& [w, c] : r)
        for (const auto& [q, k] : c) {
            if (k < 0) throw Error("negative Gromov-Witten invariant at " + to_string(w));
            out[{w, q}] = k;
        }
    return out;
}

} // namespace schubert_fk
