#pragma once

#include "schubert_fk/sparse_sum.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schubert_fk {

/// Generator x_ij of the Fomin-Kirillov algebra, i < j.
struct FKGenerator {
    int i = 1;
    int j = 2;

    friend bool operator==(const FKGenerator&, const FKGenerator&) = default;
    friend auto operator<=>(const FKGenerator&, const FKGenerator&) = default;
};

/// x_ab and x_cd commute exactly when {a,b,c,d} are four distinct indices.
inline bool commute(const FKGenerator& a, const FKGenerator& b) {
    return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

using FKWord = std::vector<FKGenerator>;

/// Lexicographically smallest word in the commutation class of w.
///
/// Greedy: the next output letter is the smallest remaining letter that
/// commutes with every remaining letter to its left.
inline FKWord canonicalize(const FKWord& w) {
    FKWord rest = w, out;
    out.reserve(w.size());
    while (!rest.empty()) {
        std::size_t best = 0;
        for (std::size_t c = 1; c < rest.size(); ++c) {
            if (!(rest[c] < rest[best])) continue;
            bool free = true;
            for (std::size_t p = 0; p < c && free; ++p) free = commute(rest[p], rest[c]);
            if (free) best = c;
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

inline bool commutation_equivalent(const FKWord& a, const FKWord& b) { return canonicalize(a) == canonicalize(b); }

/// "[(1,3),(2,4)]".
inline std::string to_string(const FKWord& w) {
    std::string s = "[";
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p) s += ',';
        s += "(" + std::to_string(w[p].i) + "," + std::to_string(w[p].j) + ")";
    }
    return s + "]";
}

inline FKWord parse_word(std::string_view text) {
    FKWord w;
    std::vector<int> nums;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            nums.push_back(std::stoi(cur));
        } catch (const std::logic_error&) {
            throw ParseError("bad word entry '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') cur += c;
        else if (c == '(' || c == ')' || c == ',' || c == '[' || c == ']' || c == ' ') flush();
        else throw ParseError(std::string("unexpected character '") + c + "' in word");
    }
    flush();
    if (nums.size() % 2) throw ParseError("word needs index pairs");
    for (std::size_t p = 0; p < nums.size(); p += 2) {
        if (nums[p] < 1 || nums[p] >= nums[p + 1]) throw ParseError("generator indices must satisfy 1 <= i < j");
        w.push_back({nums[p], nums[p + 1]});
    }
    return w;
}

/// Integer combination of commutation classes, keyed by canonical words.
class FKElement {
  public:
    FKElement() = default;

    static FKElement word(const FKWord& w, const Integer& c = 1) {
        FKElement e;
        e.add(w, c);
        return e;
    }
    static FKElement one() { return word({}); }

    void add(const FKWord& w, const Integer& c) { sum_.add(canonicalize(w), c); }
    /// Caller guarantees w is already canonical.
    void add_canonical(const FKWord& w, const Integer& c) { sum_.add(w, c); }

    Integer coefficient(const FKWord& w) const { return sum_.coefficient(canonicalize(w)); }
    bool empty() const { return sum_.empty(); }
    std::size_t size() const { return sum_.size(); }
    auto begin() const { return sum_.begin(); }
    auto end() const { return sum_.end(); }

    bool nonnegative() const {
        for (const auto& [w, c] : sum_)
            if (c < 0) return false;
        return true;
    }

    FKElement& operator+=(const FKElement& o) {
        sum_ += o.sum_;
        return *this;
    }
    FKElement& operator-=(const FKElement& o) {
        sum_ -= o.sum_;
        return *this;
    }
    FKElement& operator*=(const Integer& s) {
        sum_ *= s;
        return *this;
    }
    friend FKElement operator+(FKElement a, const FKElement& b) { return a += b; }
    friend FKElement operator-(FKElement a, const FKElement& b) { return a -= b; }
    friend FKElement operator*(FKElement a, const Integer& s) { return a *= s; }

    /// Concatenation product.
    friend FKElement operator*(const FKElement& a, const FKElement& b) {
        FKElement r;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                FKWord w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        return r;
    }

    friend bool operator==(const FKElement&, const FKElement&) = default;

  private:
    SparseSum<FKWord, Integer> sum_;
};

/// A word together with a sign; x_ab for a > b is read as -x_ba.
struct SignedWord {
    FKWord word;
    int sign = 1;
};

/// JSON-ish text "2*[(1,2)] + [(1,3)]", classes in canonical order.
inline std::string to_string(const FKElement& e) {
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : e) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        Integer a = abs(c);
        if (a != 1) s += a.str() + "*";
        s += to_string(w);
    }
    return s;
}

} // namespace schubert_fk
