#ifndef MODULI_SCHUBERT_HPP
#define MODULI_SCHUBERT_HPP

#include <moduli/bigint.hpp>

#include <map>
#include <string>
#include <vector>

namespace moduli {

/*
 * Schubert classes sigma_alpha on the Grassmannian G(d,n) of d-dimensional
 * linear subspaces of P^n, indexed by partitions in a (d+1) x (n-d) box.
 * Only products with the special classes sigma_{1^m} are needed here; these
 * are governed by the dual Pieri rule (vertical strips), and iterating it
 * computes degrees of products of special classes.
 */

struct GrassmannianSpec {
    int d = 0; ///< dimension of the parameterized linear subspaces
    int n = 1; ///< ambient projective dimension

    GrassmannianSpec(int d_, int n_) : d(d_), n(n_) {
        if (d < 0 || n <= d)
            throw std::invalid_argument("GrassmannianSpec: need 0 <= d < n");
    }

    [[nodiscard]] int rows() const { return d + 1; }
    [[nodiscard]] int cols() const { return n - d; }
    [[nodiscard]] int dimension() const { return rows() * cols(); }

    bool operator==(const GrassmannianSpec& o) const { return d == o.d && n == o.n; }
};

/// Nonincreasing tuple of fixed length with explicit trailing zeros.
/// For G(d,n) the length is d+1 and the first part is at most n-d.
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("Partition: empty part list");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be nonincreasing");
        }
    }

    /// Zero partition (the identity class) of the given length.
    static Partition zero(int length) { return Partition(std::vector<int>(length, 0)); }

    /// Column (1,...,1,0,...,0) with m ones, padded to `length`.
    static Partition column(int m, int length) {
        std::vector<int> p(length, 0);
        if (m < 0 || m > length) throw std::invalid_argument("Partition::column: bad height");
        for (int i = 0; i < m; ++i) p[i] = 1;
        return Partition(std::move(p));
    }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    [[nodiscard]] bool fits(const GrassmannianSpec& g) const {
        return length() == g.rows() && parts_.front() <= g.cols();
    }

    /// Serialized as comma-separated parts, e.g. "2,1,0".
    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// Nonnegative integer combination of Schubert classes of one common weight.
struct SchubertExpansion {
    GrassmannianSpec grassmannian;
    std::map<Partition, BigInt> terms;

    /// `coeff*sigma(a0,...,ad)` terms joined by `+`; "0" when empty.
    [[nodiscard]] std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : terms) {
            if (!s.empty()) s += '+';
            s += c.str();
            s += "*sigma(";
            s += p.to_string();
            s += ')';
        }
        return s;
    }
};

namespace detail {

/// All partitions mu in the box obtained from lambda by adding a vertical
/// strip of exactly m boxes (at most one box per row).
inline void vertical_strip_additions(const GrassmannianSpec& g, const Partition& lambda, int m,
                                     std::vector<Partition>& out) {
    const auto& lp = lambda.parts();
    const int rows = g.rows();
    std::vector<int> cur(rows, 0);
    auto rec = [&](auto&& self, int row, int added) -> void {
        if (row == rows) {
            if (added == m) out.emplace_back(cur);
            return;
        }
        for (int add = 0; add <= 1; ++add) {
            if (added + add > m) break;
            int v = lp[row] + add;
            if (v > g.cols()) continue;
            if (row > 0 && v > cur[row - 1]) continue;
            cur[row] = v;
            self(self, row + 1, added + add);
        }
    };
    rec(rec, 0, 0);
}

} // namespace detail

/// sigma_lambda * sigma_{1^m} on G(d,n): sum of sigma_mu over all mu in the
/// box with mu/lambda a vertical strip of size m. All coefficients are 1;
/// the expansion is empty when no mu fits.
inline SchubertExpansion pieri_vertical(const GrassmannianSpec& g, const Partition& lambda, int m) {
    if (m < 0 || m > g.rows())
        throw std::invalid_argument("pieri_vertical: strip size out of range");
    if (!lambda.fits(g))
        throw std::invalid_argument("pieri_vertical: partition does not fit the box");
    SchubertExpansion e{g, {}};
    std::vector<Partition> mus;
    detail::vertical_strip_additions(g, lambda, m, mus);
    for (auto& mu : mus) e.terms.emplace(std::move(mu), 1);
    return e;
}

/// Degree of sigma^s = (sigma_0)^{s_0} (sigma_1)^{s_1} ... (sigma_{1^{d+1}})^{s_{d+1}}:
/// the coefficient of the point class sigma_{(n-d)^{d+1}} in the iterated
/// Pieri product. Requires sum_i i*s_i = dim G(d,n); sigma_0 factors are no-ops.
inline BigInt schubert_degree(const GrassmannianSpec& g, const std::vector<long long>& s) {
    if (static_cast<int>(s.size()) != g.rows() + 1)
        throw std::invalid_argument("schubert_degree: tuple length must be d+2");
    long long total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw std::invalid_argument("schubert_degree: negative multiplicity");
        total += static_cast<long long>(i) * s[i];
    }
    if (total != g.dimension())
        throw std::invalid_argument("schubert_degree: product is not top-dimensional");

    std::map<Partition, BigInt> expansion;
    expansion.emplace(Partition::zero(g.rows()), 1);
    std::vector<Partition> mus;
    for (int i = 1; i <= g.rows(); ++i) {
        for (long long rep = 0; rep < s[i]; ++rep) {
            std::map<Partition, BigInt> next;
            for (const auto& [lambda, c] : expansion) {
                mus.clear();
                detail::vertical_strip_additions(g, lambda, i, mus);
                for (auto& mu : mus) next[mu] += c;
            }
            expansion = std::move(next);
        }
    }
    Partition point(std::vector<int>(g.rows(), g.cols()));
    auto it = expansion.find(point);
    return it == expansion.end() ? BigInt(0) : it->second;
}

/// Shifted Catalan number C_N = (1/N) * binom(2N-2, N-1), so C_1 = C_2 = 1,
/// C_3 = 2, C_4 = 5, C_5 = 14.
inline BigInt catalan(long long N) {
    if (N < 1) throw std::invalid_argument("catalan: N must be >= 1");
    return exact_div(binomial(2 * N - 2, N - 1), BigInt(N));
}

/// The unique partition pairing with alpha to the point class:
/// reverse((n-d)^{d+1} - alpha).
inline Partition duality_partner(const GrassmannianSpec& g, const Partition& alpha) {
    if (!alpha.fits(g))
        throw std::invalid_argument("duality_partner: partition does not fit the box");
    std::vector<int> p(g.rows());
    for (int i = 0; i < g.rows(); ++i)
        p[i] = g.cols() - alpha.parts()[g.rows() - 1 - i];
    return Partition(std::move(p));
}

} // namespace moduli

#endif // MODULI_SCHUBERT_HPP
