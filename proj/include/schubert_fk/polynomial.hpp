#pragma once

#include "schubert_fk/sparse_sum.hpp"

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace schubert_fk {

inline constexpr int kMaxVariables = 16;
inline constexpr int kMaxQVariables = 8;

/// Exponent vector x_1^{a_1} ... x_16^{a_16}.
struct Monomial {
    std::array<std::uint8_t, kMaxVariables> exp{};

    static Monomial from(std::span<const int> exponents) {
        Monomial m;
        if (exponents.size() > kMaxVariables) throw Error("too many variables");
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0 || exponents[i] > 255) throw Error("exponent out of range");
            m.exp[i] = static_cast<std::uint8_t>(exponents[i]);
        }
        return m;
    }
    static Monomial variable(int i) {
        Monomial m;
        m.exp[static_cast<std::size_t>(i - 1)] = 1;
        return m;
    }

    /// Exponent of x_i, 1-based.
    int operator[](int i) const { return exp[static_cast<std::size_t>(i - 1)]; }
    void set(int i, int e) { exp[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(e); }

    int degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    /// Largest index carrying a nonzero exponent (0 for the constant monomial).
    int last_variable() const {
        for (int i = kMaxVariables; i >= 1; --i)
            if ((*this)[i] != 0) return i;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            int e = a.exp[i] + b.exp[i];
            assert(e <= 255);
            m.exp[i] = static_cast<std::uint8_t>(e);
        }
        return m;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Monomial in q_1..q_8, packed one byte per exponent.
struct QMonomial {
    std::uint64_t packed = 0;

    static QMonomial one() { return {}; }
    static QMonomial from(std::span<const int> exponents) {
        QMonomial q;
        if (exponents.size() > kMaxQVariables) throw Error("too many q variables");
        for (std::size_t i = 0; i < exponents.size(); ++i) q.set(static_cast<int>(i) + 1, exponents[i]);
        return q;
    }
    /// q_i q_{i+1} ... q_{j-1}.
    static QMonomial interval(int i, int j) {
        QMonomial q;
        for (int a = i; a < j; ++a) q.set(a, 1);
        return q;
    }

    int operator[](int i) const { return static_cast<int>((packed >> (8 * (i - 1))) & 0xffu); }
    void set(int i, int e) {
        if (i < 1 || i > kMaxQVariables || e < 0 || e > 255) throw Error("q exponent out of range");
        packed &= ~(std::uint64_t{0xff} << (8 * (i - 1)));
        packed |= static_cast<std::uint64_t>(e) << (8 * (i - 1));
    }
    bool is_one() const { return packed == 0; }
    int degree() const {
        int d = 0;
        for (int i = 1; i <= kMaxQVariables; ++i) d += (*this)[i];
        return d;
    }
    std::vector<int> exponents(int count) const {
        std::vector<int> e;
        for (int i = 1; i <= count; ++i) e.push_back((*this)[i]);
        return e;
    }

    friend QMonomial operator*(QMonomial a, QMonomial b) {
        for (int i = 1; i <= kMaxQVariables; ++i) assert(a[i] + b[i] <= 255);
        return QMonomial{a.packed + b.packed};
    }
    friend bool operator==(QMonomial, QMonomial) = default;
    /// Ordered by exponent of q_1 first, then q_2, ...
    friend std::strong_ordering operator<=>(QMonomial a, QMonomial b) {
        for (int i = 1; i <= kMaxQVariables; ++i)
            if (auto c = a[i] <=> b[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

/// Element of Z[q_1, ..., q_{n-1}].
using QCoefficient = SparseSum<QMonomial, Integer>;

/// Integer polynomial in x_1..x_n.
using Polynomial = SparseSum<Monomial, Integer>;

/// Polynomial in x with coefficients in Z[q].
using QPolynomial = SparseSum<Monomial, QCoefficient>;

inline QCoefficient q_constant(const Integer& c) { return QCoefficient::term(QMonomial::one(), c); }

inline QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
    QCoefficient r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) r.add(ma * mb, ca * cb);
    return r;
}

/// Shift every term by a q-monomial.
inline QCoefficient operator*(const QCoefficient& a, QMonomial m) {
    QCoefficient r;
    for (const auto& [ma, ca] : a) r.add(ma * m, ca);
    return r;
}

inline Polynomial constant(const Integer& c) { return Polynomial::term(Monomial{}, c); }
inline Polynomial variable(int i) { return Polynomial::term(Monomial::variable(i), 1); }

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) r.add(ma * mb, ca * cb);
    return r;
}

inline Polynomial pow(const Polynomial& f, int e) {
    Polynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

inline int degree(const Polynomial& f) {
    int d = -1;
    for (const auto& [m, c] : f) d = std::max(d, m.degree());
    return d;
}

/// Homogeneous component of degree d.
inline Polynomial homogeneous_part(const Polynomial& f, int d) {
    Polynomial r;
    for (const auto& [m, c] : f)
        if (m.degree() == d) r.add(m, c);
    return r;
}

/// Exchange x_i and x_{i+1}.
inline Polynomial swap_variables(const Polynomial& f, int i) {
    Polynomial r;
    for (const auto& [m, c] : f) {
        Monomial s = m;
        s.set(i, m[i + 1]);
        s.set(i + 1, m[i]);
        r.add(s, c);
    }
    return r;
}

/// Divided difference (f - s_i f) / (x_i - x_{i+1}).
///
/// Each monomial x_i^a x_{i+1}^b contributes the telescoping quotient
/// sum_{t} x_i^{a-1-t} x_{i+1}^{b+t} (t < a-b), negated when a < b.
inline Polynomial divided_difference(int i, const Polynomial& f) {
    Polynomial r;
    for (const auto& [m, c] : f) {
        int a = m[i], b = m[i + 1];
        if (a == b) continue;
        Monomial base = m;
        if (a > b) {
            for (int t = 0; t < a - b; ++t) {
                base.set(i, a - 1 - t);
                base.set(i + 1, b + t);
                r.add(base, c);
            }
        } else {
            for (int t = 0; t < b - a; ++t) {
                base.set(i, b - 1 - t);
                base.set(i + 1, a + t);
                r.subtract(base, c);
            }
        }
    }
    return r;
}

/// q = 0 specialization.
inline Polynomial specialize_q_zero(const QPolynomial& f) {
    Polynomial r;
    for (const auto& [m, c] : f) r.add(m, c.coefficient(QMonomial::one()));
    return r;
}

inline QPolynomial to_q_polynomial(const Polynomial& f) {
    QPolynomial r;
    for (const auto& [m, c] : f) r.add(m, q_constant(c));
    return r;
}

namespace detail {

inline std::string monomial_text(const char* var, std::span<const int> exps) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += var + std::to_string(i + 1);
        if (exps[i] > 1) s += '^' + std::to_string(exps[i]);
    }
    return s;
}

inline std::string monomial_text(const Monomial& m) {
    std::vector<int> e(m.exp.begin(), m.exp.end());
    return monomial_text("x", e);
}

inline std::string monomial_text(QMonomial q) { return monomial_text("q", q.exponents(kMaxQVariables)); }

/// "c*m" with the usual elisions for c = +-1 and m = 1.
inline std::string scaled(const Integer& c, const std::string& mono, bool leading) {
    std::string s;
    Integer a = abs(c);
    if (c < 0) s += leading ? "-" : " - ";
    else if (!leading) s += " + ";
    if (mono.empty()) s += a.str();
    else if (a == 1) s += mono;
    else s += a.str() + "*" + mono;
    return s;
}

} // namespace detail

/// Canonical text form: terms by decreasing lex order, "x1^2*x2 - 3*x3".
inline std::string to_string(const Polynomial& f) {
    if (f.empty()) return "0";
    std::string s;
    bool leading = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        s += detail::scaled(it->second, detail::monomial_text(it->first), leading);
        leading = false;
    }
    return s;
}

/// "q1^2*q2 + 3"; the unit monomial prints as "1" on its own.
inline std::string to_string(const QCoefficient& c) {
    if (c.empty()) return "0";
    std::string s;
    bool leading = true;
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        s += detail::scaled(it->second, detail::monomial_text(it->first), leading);
        leading = false;
    }
    return s;
}

/// "x1^2*x2 + q1*x3"; multi-term q coefficients are parenthesised.
inline std::string to_string(const QPolynomial& f) {
    if (f.empty()) return "0";
    std::string s;
    bool leading = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        std::string mono = detail::monomial_text(it->first);
        const QCoefficient& c = it->second;
        if (c.size() == 1) {
            const auto& [q, v] = *c.begin();
            std::string qm = detail::monomial_text(q);
            std::string joined = qm.empty() ? mono : (mono.empty() ? qm : qm + "*" + mono);
            s += detail::scaled(v, joined, leading);
        } else {
            if (!leading) s += " + ";
            s += "(" + to_string(c) + ")";
            if (!mono.empty()) s += "*" + mono;
        }
        leading = false;
    }
    return s;
}

/// Text form of a bare q-monomial as used in JSON keys: "q1^2*q3", or "1".
inline std::string q_monomial_key(QMonomial q) {
    std::string s = detail::monomial_text(q);
    return s.empty() ? "1" : s;
}

} // namespace schubert_fk
