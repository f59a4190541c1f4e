#ifndef MODULI_CHOW_RING_HPP
#define MODULI_CHOW_RING_HPP

#include <moduli/bigint.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moduli {

/*
 * Exact sparse polynomial arithmetic in
 *
 *     Z[v_1,...,v_m] / (v_1^{c_1+1}, ..., v_m^{c_m+1}),
 *
 * the intersection ring of a product of projective spaces P^{c_1} x ... x P^{c_m}.
 * Monomials exceeding any cap are identically zero and are discarded eagerly
 * during multiplication, which keeps intermediate products small.
 */

/// Variable names and per-variable exponent caps of a truncated ring.
/// Immutable after construction; polynomials share it by shared_ptr.
class RingSpec {
public:
    RingSpec(std::vector<std::string> variables, std::vector<int> caps)
        : variables_(std::move(variables)), caps_(std::move(caps)) {
        if (variables_.empty())
            throw std::invalid_argument("RingSpec: variable list is empty");
        if (variables_.size() != caps_.size())
            throw std::invalid_argument("RingSpec: variable/cap length mismatch");
        for (int c : caps_)
            if (c < 0) throw std::invalid_argument("RingSpec: negative cap");
        auto sorted = variables_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("RingSpec: duplicate variable identifier");
    }

    [[nodiscard]] std::size_t variable_count() const { return variables_.size(); }
    [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
    [[nodiscard]] const std::vector<int>& caps() const { return caps_; }
    [[nodiscard]] int cap(std::size_t i) const { return caps_.at(i); }
    [[nodiscard]] const std::string& variable(std::size_t i) const { return variables_.at(i); }

    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < variables_.size(); ++i)
            if (variables_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const RingSpec& o) const {
        return variables_ == o.variables_ && caps_ == o.caps_;
    }

private:
    std::vector<std::string> variables_;
    std::vector<int> caps_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(std::vector<std::string> variables, std::vector<int> caps) {
    return std::make_shared<const RingSpec>(std::move(variables), std::move(caps));
}

/// Exponent vector, one entry per ring variable. Kept within caps.
using Monomial = std::vector<int>;

/// Sparse polynomial with big-integer coefficients in a truncated ring.
/// Terms are keyed lexicographically on exponent vectors, which fixes the
/// serialization order. Zero coefficients are never stored.
class TruncatedPolynomial {
public:
    using TermMap = std::map<Monomial, BigInt>;

    explicit TruncatedPolynomial(RingPtr ring) : ring_(require_ring(std::move(ring))) {}

    static TruncatedPolynomial zero(RingPtr ring) { return TruncatedPolynomial(std::move(ring)); }

    static TruncatedPolynomial constant(RingPtr ring, BigInt c) {
        TruncatedPolynomial p(std::move(ring));
        if (c != 0) p.terms_[Monomial(p.ring_->variable_count(), 0)] = std::move(c);
        return p;
    }

    static TruncatedPolynomial one(RingPtr ring) { return constant(std::move(ring), 1); }

    /// The variable with the given index, as a polynomial. A cap-0 variable
    /// is identically zero in positive degree, so the result is 0.
    static TruncatedPolynomial variable(RingPtr ring, std::size_t index) {
        TruncatedPolynomial p(std::move(ring));
        if (index >= p.ring_->variable_count())
            throw std::invalid_argument("variable: index out of range");
        if (p.ring_->cap(index) >= 1) {
            Monomial m(p.ring_->variable_count(), 0);
            m[index] = 1;
            p.terms_[std::move(m)] = 1;
        }
        return p;
    }

    /// Single term c * m. Rejects monomials outside the caps.
    static TruncatedPolynomial term(RingPtr ring, Monomial m, BigInt c) {
        TruncatedPolynomial p(std::move(ring));
        p.check_monomial(m);
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    /// Sum of the variables with the given indices (a "point lies on one of
    /// these hyperplanes" condition class).
    static TruncatedPolynomial variable_sum(RingPtr ring, const std::vector<std::size_t>& indices) {
        TruncatedPolynomial p = zero(ring);
        for (std::size_t i : indices) p += variable(ring, i);
        return p;
    }

    [[nodiscard]] const RingPtr& ring() const { return ring_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    /// Stored coefficient of m, or 0. Rejects monomials of the wrong length
    /// or outside the caps.
    [[nodiscard]] BigInt coefficient(const Monomial& m) const {
        check_monomial(m);
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& o) {
        check_same_ring(o);
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        a += b;
        return a;
    }

    [[nodiscard]] TruncatedPolynomial operator-() const {
        TruncatedPolynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        return a + (-b);
    }

    /// Distributive product; every product monomial exceeding a cap vanishes.
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
        a.check_same_ring(b);
        const auto& caps = a.ring_->caps();
        const std::size_t nv = caps.size();
        TruncatedPolynomial r(a.ring_);
        Monomial m(nv);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                bool within = true;
                for (std::size_t i = 0; i < nv; ++i) {
                    m[i] = ma[i] + mb[i];
                    if (m[i] > caps[i]) {
                        within = false;
                        break;
                    }
                }
                if (!within) continue;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(m, ca * cb);
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    TruncatedPolynomial& operator*=(const TruncatedPolynomial& o) { return *this = *this * o; }

    bool operator==(const TruncatedPolynomial& o) const {
        return *ring_ == *o.ring_ && terms_ == o.terms_;
    }

    /// Text form `coeff*v1^e1*...` with terms joined by `+`, sorted in the
    /// canonical (lexicographic) monomial order; coefficients are exact
    /// decimal strings. The zero polynomial prints as "0".
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += '+';
            out += c.str();
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                out += '*';
                out += ring_->variable(i);
                out += '^';
                out += std::to_string(m[i]);
            }
        }
        return out;
    }

private:
    static RingPtr require_ring(RingPtr r) {
        if (!r) throw std::invalid_argument("TruncatedPolynomial: null ring");
        return r;
    }

    void check_same_ring(const TruncatedPolynomial& o) const {
        if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
            throw std::invalid_argument("polynomial operands belong to different rings");
    }

    void check_monomial(const Monomial& m) const {
        if (m.size() != ring_->variable_count())
            throw std::invalid_argument("monomial length does not match ring");
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < 0) throw std::invalid_argument("monomial has negative exponent");
            if (m[i] > ring_->cap(i))
                throw std::invalid_argument("monomial exceeds cap of variable " + ring_->variable(i));
        }
    }

    RingPtr ring_;
    TermMap terms_;
};

/// a^e by binary exponentiation; e = 0 gives the multiplicative identity.
inline TruncatedPolynomial pow(const TruncatedPolynomial& a, long long e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    TruncatedPolynomial r = TruncatedPolynomial::one(a.ring());
    TruncatedPolynomial base = a;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

/// Coefficient of the unique top monomial (every exponent at its cap).
/// This is the degree of a zero-dimensional intersection class.
inline BigInt chow_degree(const TruncatedPolynomial& a) {
    Monomial top(a.ring()->caps().begin(), a.ring()->caps().end());
    return a.coefficient(top);
}

} // namespace moduli

#endif // MODULI_CHOW_RING_HPP
