#pragma once

#include "schubert_fk/fk_algebra.hpp"
#include "schubert_fk/permutation.hpp"
#include "schubert_fk/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace schubert_fk {

/// Class in (quantum) cohomology of Fl_n, in the Schubert basis.
using SchubertVector = SparseSum<Permutation, QCoefficient>;

inline SchubertVector basis_vector(const Permutation& w) { return SchubertVector::term(w, q_constant(1)); }

/// Image of sigma_w under a single generator: at most one basis element.
struct BruhatStep {
    std::int32_t target = -1;
    QMonomial q;
};

/// Action of the generators x_ij on the Schubert basis of S_n.
///
/// Classical: sigma_w -> sigma_{w s_ij} when the length goes up by one.
/// Quantum additionally: sigma_w -> q_ij sigma_{w s_ij} when the length
/// drops by 2(j - i) - 1.
class BruhatRepresentation {
  public:
    BruhatRepresentation(int n, bool quantum) : n_(n), quantum_(quantum), basis_(enumerate_sn(n)) {
        if (n < 1 || n > kMaxQVariables + 1) throw Error("n out of range for the Bruhat representation");
        gens_ = (n * (n - 1)) / 2;
        table_.resize(basis_.size() * static_cast<std::size_t>(gens_));
        std::vector<int> len;
        for (const auto& w : basis_) len.push_back(w.length());
        for (std::size_t r = 0; r < basis_.size(); ++r)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Permutation t = basis_[r].swap_positions(i, j);
                    auto tr = lex_rank(t);
                    BruhatStep s;
                    if (len[tr] == len[r] + 1) {
                        s.target = static_cast<std::int32_t>(tr);
                    } else if (quantum && len[tr] == len[r] - 2 * (j - i) + 1) {
                        s.target = static_cast<std::int32_t>(tr);
                        s.q = QMonomial::interval(i, j);
                    }
                    table_[r * static_cast<std::size_t>(gens_) + static_cast<std::size_t>(gen_index(i, j))] = s;
                }
    }

    /// Shared instance per (n, quantum).
    static const BruhatRepresentation& get(int n, bool quantum) {
        static std::mutex mu;
        static std::map<std::pair<int, bool>, std::unique_ptr<BruhatRepresentation>> cache;
        std::lock_guard lock(mu);
        auto& slot = cache[{n, quantum}];
        if (!slot) slot = std::make_unique<BruhatRepresentation>(n, quantum);
        return *slot;
    }

    int n() const { return n_; }
    bool quantum() const { return quantum_; }
    std::size_t dimension() const { return basis_.size(); }
    const Permutation& basis(std::size_t r) const { return basis_[r]; }
    std::uint32_t index(const Permutation& w) const {
        Permutation t = w.size() > n_ ? w.trimmed() : w;
        if (t.size() > n_) throw SizeMismatch("permutation " + to_string(w) + " outside S_" + std::to_string(n_));
        return lex_rank(t.embed(n_));
    }

    int gen_index(int i, int j) const { return (i - 1) * n_ - (i * (i - 1)) / 2 + (j - i - 1); }

    BruhatStep step(std::size_t r, const FKGenerator& g) const {
        if (g.i < 1 || g.j > n_ || g.i >= g.j) throw SizeMismatch("generator outside S_" + std::to_string(n_));
        return table_[r * static_cast<std::size_t>(gens_) + static_cast<std::size_t>(gen_index(g.i, g.j))];
    }

    /// Letters act left to right: the first letter is applied first.
    std::optional<BruhatStep> apply(std::size_t r, const FKWord& w) const {
        BruhatStep acc{static_cast<std::int32_t>(r), QMonomial::one()};
        for (const auto& g : w) {
            BruhatStep s = step(static_cast<std::size_t>(acc.target), g);
            if (s.target < 0) return std::nullopt;
            acc.target = s.target;
            acc.q = acc.q * s.q;
        }
        return acc;
    }

  private:
    int n_;
    bool quantum_;
    int gens_ = 0;
    std::vector<Permutation> basis_;
    std::vector<BruhatStep> table_;
};

/// x_g applied to v.
inline SchubertVector bruhat_apply(const FKGenerator& g, const SchubertVector& v, int n, bool quantum) {
    const auto& rep = BruhatRepresentation::get(n, quantum);
    SchubertVector out;
    for (const auto& [w, c] : v) {
        BruhatStep s = rep.step(rep.index(w), g);
        if (s.target >= 0) out.add(rep.basis(static_cast<std::size_t>(s.target)), c * s.q);
    }
    return out;
}

inline SchubertVector apply_element(const FKElement& el, const SchubertVector& v, int n, bool quantum) {
    const auto& rep = BruhatRepresentation::get(n, quantum);
    SchubertVector out;
    for (const auto& [w, c] : v) {
        auto r = rep.index(w);
        for (const auto& [word, k] : el) {
            auto s = rep.apply(r, word);
            if (s) out.add(rep.basis(static_cast<std::size_t>(s->target)), (c * s->q) * k);
        }
    }
    return out;
}

/// Linear operator on the Schubert basis of S_n, stored by columns.
class OperatorMatrix {
  public:
    using Column = std::map<std::uint32_t, QCoefficient>;

    OperatorMatrix() = default;
    OperatorMatrix(int n, bool quantum) : n_(n), quantum_(quantum), cols_(factorial(n)) {}

    static OperatorMatrix identity(int n, bool quantum) {
        OperatorMatrix m(n, quantum);
        for (std::uint32_t r = 0; r < m.cols_.size(); ++r) m.cols_[r][r] = q_constant(1);
        return m;
    }

    /// Matrix of an FK element acting by Bruhat operators.
    static OperatorMatrix of(const FKElement& el, int n, bool quantum) {
        const auto& rep = BruhatRepresentation::get(n, quantum);
        OperatorMatrix m(n, quantum);
        for (std::size_t r = 0; r < rep.dimension(); ++r)
            for (const auto& [word, k] : el)
                if (auto s = rep.apply(r, word)) m.add(r, static_cast<std::uint32_t>(s->target), QCoefficient::term(s->q, k));
        return m;
    }

    int n() const { return n_; }
    bool quantum() const { return quantum_; }
    std::size_t dimension() const { return cols_.size(); }
    const Column& column(std::size_t r) const { return cols_[r]; }

    void add(std::size_t source, std::uint32_t target, const QCoefficient& c) {
        if (c.empty()) return;
        auto& col = cols_[source];
        auto [it, inserted] = col.try_emplace(target, c);
        if (!inserted) {
            it->second += c;
            if (it->second.empty()) col.erase(it);
        }
    }

    bool is_zero() const {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }

    /// Apply `first`, then `second`.
    friend OperatorMatrix then(const OperatorMatrix& first, const OperatorMatrix& second) {
        OperatorMatrix m(first.n_, first.quantum_);
        for (std::size_t s = 0; s < first.cols_.size(); ++s)
            for (const auto& [t, c] : first.cols_[s])
                for (const auto& [u, d] : second.cols_[t]) m.add(s, u, c * d);
        return m;
    }

    OperatorMatrix& operator+=(const OperatorMatrix& o) {
        for (std::size_t s = 0; s < o.cols_.size(); ++s)
            for (const auto& [t, c] : o.cols_[s]) add(s, t, c);
        return *this;
    }
    OperatorMatrix& operator-=(const OperatorMatrix& o) {
        for (std::size_t s = 0; s < o.cols_.size(); ++s)
            for (const auto& [t, c] : o.cols_[s]) add(s, t, -c);
        return *this;
    }
    OperatorMatrix& operator*=(const Integer& k) {
        for (auto& col : cols_) {
            if (k.is_zero()) col.clear();
            for (auto& [t, c] : col) c *= k;
        }
        return *this;
    }
    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend OperatorMatrix operator*(OperatorMatrix a, const Integer& k) { return a *= k; }

    /// Multiply every entry by a q-monomial.
    OperatorMatrix scaled(QMonomial q) const {
        OperatorMatrix m = *this;
        for (auto& col : m.cols_)
            for (auto& [t, c] : col) c = c * q;
        return m;
    }

    /// Image of sigma_w.
    SchubertVector apply(const Permutation& w) const {
        const auto& rep = BruhatRepresentation::get(n_, quantum_);
        SchubertVector v;
        for (const auto& [t, c] : cols_[rep.index(w)]) v.add(rep.basis(t), c);
        return v;
    }

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

  private:
    int n_ = 0;
    bool quantum_ = false;
    std::vector<Column> cols_;
};

/// First column where two operators differ: (source, target, q-monomial), or nothing.
struct OperatorDifference {
    Permutation source;
    Permutation target;
    QMonomial q;
    Integer expected;
    Integer actual;
};

inline std::optional<OperatorDifference> first_difference(const OperatorMatrix& expected, const OperatorMatrix& actual) {
    const auto& rep = BruhatRepresentation::get(expected.n(), expected.quantum());
    for (std::size_t s = 0; s < expected.dimension(); ++s) {
        if (expected.column(s) == actual.column(s)) continue;
        std::map<std::pair<std::uint32_t, QMonomial>, std::pair<Integer, Integer>> cells;
        for (const auto& [t, c] : expected.column(s))
            for (const auto& [q, v] : c) cells[{t, q}].first = v;
        for (const auto& [t, c] : actual.column(s))
            for (const auto& [q, v] : c) cells[{t, q}].second = v;
        for (const auto& [key, vals] : cells)
            if (vals.first != vals.second)
                return OperatorDifference{rep.basis(s), rep.basis(key.first), key.second, vals.first, vals.second};
    }
    return std::nullopt;
}

} // namespace schubert_fk
