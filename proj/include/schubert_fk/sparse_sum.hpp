#pragma once

#include "schubert_fk/integer.hpp"

#include <map>
#include <utility>

namespace schubert_fk {

/// Finitely supported map Key -> Coeff with no zero entries stored.
///
/// Coeff needs +=, -=, unary minus, *= by Integer and a free is_zero().
template <class Key, class Coeff>
class SparseSum {
  public:
    using key_type = Key;
    using coeff_type = Coeff;
    using container = std::map<Key, Coeff>;
    using const_iterator = typename container::const_iterator;

    SparseSum() = default;

    static SparseSum term(Key k, Coeff c) {
        SparseSum s;
        s.add(std::move(k), std::move(c));
        return s;
    }

    void add(const Key& k, const Coeff& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    void subtract(const Key& k, const Coeff& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Coefficient of k; a zero coefficient when absent.
    Coeff coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    bool contains(const Key& k) const { return terms_.count(k) != 0; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const container& terms() const { return terms_; }

    SparseSum& operator+=(const SparseSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SparseSum& operator-=(const SparseSum& o) {
        for (const auto& [k, c] : o.terms_) subtract(k, c);
        return *this;
    }
    SparseSum& operator*=(const Integer& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend SparseSum operator+(SparseSum a, const SparseSum& b) { return a += b; }
    friend SparseSum operator-(SparseSum a, const SparseSum& b) { return a -= b; }
    friend SparseSum operator-(SparseSum a) {
        for (auto& [k, c] : a.terms_) c = -c;
        return a;
    }
    friend SparseSum operator*(SparseSum a, const Integer& s) { return a *= s; }
    friend SparseSum operator*(const Integer& s, SparseSum a) { return a *= s; }

    friend bool operator==(const SparseSum&, const SparseSum&) = default;
    friend auto operator<=>(const SparseSum& a, const SparseSum& b) { return a.terms_ <=> b.terms_; }
    friend bool is_zero(const SparseSum& s) { return s.empty(); }

  private:
    container terms_;
};

} // namespace schubert_fk
