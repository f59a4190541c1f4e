#ifndef MODULI_ARRANGEMENT_HPP
#define MODULI_ARRANGEMENT_HPP

#include <moduli/rational_linalg.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace moduli {

/*
 * Hyperplane arrangements in P^n over the rationals, their intersection
 * lattices, and multivariate Tutte polynomial evaluation. The lattice is
 * built by an exhaustive subset scan with exact ranks, so the hyperplane
 * count is capped at 12.
 */

inline constexpr int kMaxLatticeHyperplanes = 12;

/// Projective hyperplanes given by nonzero rational covectors of length n+1.
/// Duplicates are allowed so degenerate arrangements stay representable.
struct HyperplaneArrangement {
    int n = 2;
    std::vector<std::vector<Rational>> hyperplanes;

    HyperplaneArrangement(int ambient_dim, std::vector<std::vector<Rational>> hp)
        : n(ambient_dim), hyperplanes(std::move(hp)) {
        if (n < 1) throw std::invalid_argument("HyperplaneArrangement: ambient dimension < 1");
        if (hyperplanes.empty())
            throw std::invalid_argument("HyperplaneArrangement: no hyperplanes");
        for (const auto& h : hyperplanes) {
            if (static_cast<int>(h.size()) != n + 1)
                throw std::invalid_argument("HyperplaneArrangement: covector length must be n+1");
            if (std::all_of(h.begin(), h.end(), [](const Rational& x) { return x == 0; }))
                throw std::invalid_argument("HyperplaneArrangement: zero covector");
        }
    }

    [[nodiscard]] int size() const { return static_cast<int>(hyperplanes.size()); }
};

/// One lattice element: the maximal index set cutting out an intersection,
/// with its rank (= codimension of the intersection).
struct Flat {
    std::vector<int> hyperplanes; ///< maximal subset label, sorted
    int rank = 0;

    bool operator==(const Flat& o) const { return hyperplanes == o.hyperplanes && rank == o.rank; }
};

/// Poset of nonempty intersections, stored as flats ordered by rank then
/// label. Subsets with identical intersections collapse to one flat.
struct IntersectionLattice {
    int ambient_dim = 2;
    int hyperplane_count = 0;
    std::vector<Flat> flats;

    /// Matroid rank of an arbitrary index subset: rank of the smallest flat
    /// containing it, or n+1 when no flat does (empty intersection).
    [[nodiscard]] int subset_rank(const std::vector<int>& subset) const {
        int best = ambient_dim + 1;
        for (const auto& f : flats) {
            if (f.rank >= best) continue;
            if (std::includes(f.hyperplanes.begin(), f.hyperplanes.end(), subset.begin(),
                              subset.end()))
                best = f.rank;
        }
        return best;
    }
};

/// Full intersection lattice by exact-rank subset scan (k <= 12). Every
/// central subset contributes its closure; closures are deduplicated.
inline IntersectionLattice lattice_from_arrangement(const HyperplaneArrangement& a) {
    const int k = a.size();
    if (k > kMaxLatticeHyperplanes)
        throw std::invalid_argument("lattice_from_arrangement: more than 12 hyperplanes");

    auto subset_rank = [&](unsigned mask) {
        RationalMatrix rows;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) rows.push_back(a.hyperplanes[i]);
        return rows.empty() ? 0 : rational_rank(rows);
    };

    std::vector<int> rank_of(1u << k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) rank_of[mask] = subset_rank(mask);

    std::map<std::vector<int>, int> closures;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        const int r = rank_of[mask];
        if (r > a.n) continue; // empty projective intersection
        unsigned closure = mask;
        for (int j = 0; j < k; ++j)
            if (!(mask & (1u << j)) && rank_of[mask | (1u << j)] == r) closure |= 1u << j;
        std::vector<int> label;
        for (int j = 0; j < k; ++j)
            if (closure & (1u << j)) label.push_back(j);
        closures.emplace(std::move(label), r);
    }

    IntersectionLattice lattice{a.n, k, {}};
    for (auto& [label, r] : closures) lattice.flats.push_back(Flat{label, r});
    std::sort(lattice.flats.begin(), lattice.flats.end(), [](const Flat& x, const Flat& y) {
        return std::tie(x.rank, x.hyperplanes) < std::tie(y.rank, y.hyperplanes);
    });
    return lattice;
}

/// k > n and every (n+1)-subset of covectors has full rank n+1.
inline bool is_generic(const HyperplaneArrangement& a) {
    const int k = a.size();
    if (k <= a.n) return false;
    std::vector<int> idx(a.n + 1);
    auto rec = [&](auto&& self, int pos, int from) -> bool {
        if (pos == a.n + 1) {
            RationalMatrix rows;
            for (int i : idx) rows.push_back(a.hyperplanes[i]);
            return rational_rank(rows) == a.n + 1;
        }
        for (int i = from; i < k; ++i) {
            idx[pos] = i;
            if (!self(self, pos + 1, i + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

/// Multivariate Tutte polynomial value
///
///     Z(q, x) = sum over subsets B of q^{-rank(B)} * prod_{j in B} x_j,
///
/// with rank(B) read off the lattice (n+1 for subsets with empty
/// intersection). At q = 1 this factors as prod_i (1 + x_i).
inline Rational tutte_eval(const IntersectionLattice& lattice, const Rational& q,
                           const std::vector<Rational>& xs) {
    const int k = lattice.hyperplane_count;
    if (static_cast<int>(xs.size()) != k)
        throw std::invalid_argument("tutte_eval: need one x per hyperplane");
    if (q == 0 && k > 0)
        throw std::invalid_argument("tutte_eval: q = 0 is a pole (positive-rank subsets)");
    if (k > kMaxLatticeHyperplanes)
        throw std::invalid_argument("tutte_eval: more than 12 hyperplanes");

    Rational total = 0;
    std::vector<int> subset;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Rational prod = 1;
        subset.clear();
        for (int j = 0; j < k; ++j) {
            if (mask & (1u << j)) {
                subset.push_back(j);
                prod *= xs[j];
            }
        }
        if (prod == 0 && mask != 0) continue;
        const int r = lattice.subset_rank(subset);
        Rational qpow = 1;
        for (int i = 0; i < r; ++i) qpow *= q;
        total += prod / qpow;
    }
    return total;
}

/// Parses "p/q" or a plain integer.
inline Rational parse_rational(const std::string& token) {
    auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(token));
        BigInt num(token.substr(0, slash));
        BigInt den(token.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + token + "'");
    }
}

inline std::string rational_to_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Arrangement file: ambient dimension on the first data line, then one line
/// per hyperplane with n+1 rationals written `p/q`. Blank lines and lines
/// starting with '#' are skipped.
inline HyperplaneArrangement parse_arrangement(std::istream& in) {
    std::vector<std::string> data_lines;
    std::string line;
    int lineno = 0;
    std::vector<int> linenos;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        data_lines.push_back(line);
        linenos.push_back(lineno);
    }
    if (data_lines.empty())
        throw std::invalid_argument("arrangement file: empty");

    auto fail = [&](std::size_t i, const std::string& what) {
        throw std::invalid_argument("arrangement file line " + std::to_string(linenos[i]) + ": " +
                                    what);
    };

    int n = 0;
    {
        std::istringstream ss(data_lines[0]);
        if (!(ss >> n) || n < 1) fail(0, "expected ambient dimension");
        std::string extra;
        if (ss >> extra) fail(0, "unexpected token '" + extra + "'");
    }
    std::vector<std::vector<Rational>> hyperplanes;
    for (std::size_t i = 1; i < data_lines.size(); ++i) {
        std::istringstream ss(data_lines[i]);
        std::vector<Rational> row;
        std::string tok;
        while (ss >> tok) {
            try {
                row.push_back(parse_rational(tok));
            } catch (const std::exception& e) {
                fail(i, std::string(e.what()) + " (column " + std::to_string(row.size() + 1) + ")");
            }
        }
        if (static_cast<int>(row.size()) != n + 1)
            fail(i, "expected " + std::to_string(n + 1) + " coordinates, got " +
                        std::to_string(row.size()));
        hyperplanes.push_back(std::move(row));
    }
    return HyperplaneArrangement(n, std::move(hyperplanes));
}

} // namespace moduli

#endif // MODULI_ARRANGEMENT_HPP
