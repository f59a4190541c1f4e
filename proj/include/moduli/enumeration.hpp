#ifndef MODULI_ENUMERATION_HPP
#define MODULI_ENUMERATION_HPP

#include <moduli/chow_ring.hpp>
#include <moduli/schubert.hpp>

#include <string>
#include <utility>
#include <vector>

namespace moduli {

/*
 * Counting formulas for moduli of hyperplane arrangements: generic
 * arrangements, pencils, and d-coned generic arrangements, plus the
 * characteristic numbers of generic arrangements of 3 and 4 lines and the
 * transfer from tangent lines to tangent curves of arbitrary degree/class.
 * Every answer is an exact big integer; internal divisions are asserted
 * exact so a failed counting identity aborts instead of rounding.
 */

/// Multinomial in the multiset convention: d! / prod (value!)^multiplicity.
/// Counts ordered groups; it does not divide by permutations of equal-size
/// groups. parts = list of (group size, number of such groups).
inline BigInt multinomial(long long d, const std::vector<std::pair<long long, long long>>& parts) {
    long long total = 0;
    for (auto [value, mult] : parts) {
        if (value < 0 || mult < 0) throw std::invalid_argument("multinomial: negative part");
        total += value * mult;
    }
    if (total != d)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(d));
    BigInt r = factorial(d);
    for (auto [value, mult] : parts) {
        BigInt f = factorial(value);
        for (long long i = 0; i < mult; ++i) r = exact_div(r, f);
    }
    return r;
}

/// Moduli dimension of a generic arrangement of k hyperplanes in P^n: kn.
inline int dim_generic(int k, int n) {
    if (n < 1 || k <= n) throw std::invalid_argument("dim_generic: need k > n >= 1");
    return k * n;
}

/// Number of generic arrangements of k hyperplanes in P^n through kn general
/// points: (kn)! / (k! (n!)^k). Distribute the points n per hyperplane,
/// then forget the labeling.
inline BigInt count_generic(int k, int n) {
    if (n < 1 || k <= n) throw std::invalid_argument("count_generic: need k > n >= 1");
    BigInt labeled = multinomial(static_cast<long long>(k) * n, {{n, k}});
    return exact_div(labeled, factorial(k));
}

/// (sum of the named variables)^D: the class of D transverse point
/// conditions on an arrangement whose hyperplane classes are the given
/// variables.
inline TruncatedPolynomial point_condition_class(const RingPtr& ring,
                                                 const std::vector<std::string>& hyperplane_vars,
                                                 long long D) {
    if (D < 0) throw std::invalid_argument("point_condition_class: negative power");
    std::vector<std::size_t> idx;
    for (const auto& name : hyperplane_vars) {
        auto i = ring->index_of(name);
        if (!i) throw std::invalid_argument("point_condition_class: unknown variable '" + name + "'");
        idx.push_back(*i);
    }
    return pow(TruncatedPolynomial::variable_sum(ring, idx), D);
}

/// Ring and class of the marked-arrangement variety for k lines in P^2:
/// variables x1..xk (line classes) and yij (marked intersection points),
/// all caps 2, with class prod_{i<j} (x_i + y_ij)(x_j + y_ij).
/// Supported for k in {3,4}; the product form is not established beyond 4
/// (quintuple lines contribute excess intersection).
inline std::pair<RingPtr, TruncatedPolynomial> incidence_class(int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("incidence_class: k must be 3 or 4");
    std::vector<std::string> vars;
    for (int i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            vars.push_back("y" + std::to_string(i) + std::to_string(j));
            pairs.emplace_back(i, j);
        }
    RingPtr ring = make_ring(vars, std::vector<int>(vars.size(), 2));

    TruncatedPolynomial cls = TruncatedPolynomial::one(ring);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        auto [i, j] = pairs[pi];
        auto x_i = TruncatedPolynomial::variable(ring, static_cast<std::size_t>(i - 1));
        auto x_j = TruncatedPolynomial::variable(ring, static_cast<std::size_t>(j - 1));
        auto y = TruncatedPolynomial::variable(ring, static_cast<std::size_t>(k) + pi);
        cls *= (x_i + y) * (x_j + y);
    }
    return {ring, std::move(cls)};
}

namespace detail {

/// Degree of the marked-class times p point and 2k-p tangency conditions,
/// before removing multi-line degenerations or the labeling factor.
inline BigInt labeled_tangency_degree(int k, int p) {
    auto [ring, cls] = incidence_class(k);
    std::vector<std::string> xs, ys;
    for (const auto& v : ring->variables())
        (v[0] == 'x' ? xs : ys).push_back(v);
    auto with_conditions = cls * point_condition_class(ring, xs, p) *
                           point_condition_class(ring, ys, 2LL * k - p);
    return chow_degree(with_conditions);
}

/// Number of point-on-common-line degenerations counted by the k = 4 degree
/// computation: configurations where all four lines coincide and the six
/// marked points absorb the tangency conditions. The common line must pass
/// through the p fixed points and through enough pairwise intersections of
/// the 8-p tangency lines to meet all of them in at most 6 points.
inline BigInt quadruple_line_correction(int p) {
    const BigInt relabelings = factorial(6); // assign the six marked points
    switch (p) {
        case 0:
            // line through two pairwise intersections of the 8 tangency lines
            return exact_div(multinomial(8, {{2, 2}, {4, 1}}), BigInt(2)) * relabelings;
        case 1:
            // line joining the fixed point to one pairwise intersection of
            // the 7 tangency lines
            return multinomial(7, {{2, 1}, {5, 1}}) * relabelings;
        case 2:
            // line through the two fixed points
            return relabelings;
        default:
            return 0;
    }
}

} // namespace detail

/// Characteristic number N_k(p, 2k-p): generic arrangements of k lines in
/// P^2 through p general points and tangent to 2k-p general lines. A
/// generic line arrangement is tangent to L exactly when some pairwise
/// intersection point lies on L, so tangency conditions are y-conditions.
inline BigInt char_number_generic_lines(int k, int p) {
    if (k != 3 && k != 4) throw std::invalid_argument("char_number_generic_lines: k must be 3 or 4");
    if (p < 0 || p > 2 * k)
        throw std::invalid_argument("char_number_generic_lines: p out of range");
    BigInt degree = detail::labeled_tangency_degree(k, p);
    if (k == 4) degree -= detail::quadruple_line_correction(p);
    return exact_div(degree, factorial(k));
}

/// Characteristic numbers of the braid arrangement of 6 lines (4 triple
/// points, 3 double points): dual to the generic 4-line table, N_4(8-p, p).
inline BigInt braid_char_number(int p) {
    if (p < 0 || p > 8) throw std::invalid_argument("braid_char_number: p out of range");
    return char_number_generic_lines(4, 8 - p);
}

/// Characteristic numbers N(p, D-p) of one arrangement family, indexed by
/// the number of point conditions p = 0..D.
struct CharNumberTable {
    std::string family;
    int dimension = 0;
    std::vector<BigInt> entries; ///< entries[p] = N(p, dimension - p)

    [[nodiscard]] const BigInt& at(int p) const {
        if (p < 0 || p > dimension)
            throw std::invalid_argument("CharNumberTable: p out of range");
        return entries.at(static_cast<std::size_t>(p));
    }
};

inline CharNumberTable generic_lines_table(int k) {
    CharNumberTable t;
    t.family = "generic-" + std::to_string(k) + "-lines";
    t.dimension = 2 * k;
    for (int p = 0; p <= 2 * k; ++p) t.entries.push_back(char_number_generic_lines(k, p));
    return t;
}

inline CharNumberTable braid_table() {
    CharNumberTable t;
    t.family = "braid";
    t.dimension = 8;
    for (int p = 0; p <= 8; ++p) t.entries.push_back(braid_char_number(p));
    return t;
}

/// Characteristic numbers of a pencil of k lines in P^2 (all lines through
/// one node): dimension k+2, with N(k+2,0) = 3*C(k+2,4), N(k+1,1) =
/// C(k+1,2), N(k,2) = 1, and all other entries 0.
inline CharNumberTable pencil_char_numbers(int k) {
    if (k < 3) throw std::invalid_argument("pencil_char_numbers: need k >= 3");
    CharNumberTable t;
    t.family = "pencil-" + std::to_string(k);
    t.dimension = k + 2;
    t.entries.assign(static_cast<std::size_t>(k + 3), BigInt(0));
    t.entries[static_cast<std::size_t>(k + 2)] = 3 * binomial(k + 2, 4);
    t.entries[static_cast<std::size_t>(k + 1)] = binomial(k + 1, 2);
    t.entries[static_cast<std::size_t>(k)] = 1;
    return t;
}

/// Degree n and class m of a tangency curve; the class is the number of its
/// tangent lines through a general point. A point counts as degree 0 class
/// 1, a line as degree 1 class 0, a smooth conic as degree 2 class 2.
struct CurveSpec {
    long long degree = 0;
    long long curve_class = 0;

    CurveSpec(long long deg, long long cls) : degree(deg), curve_class(cls) {
        if (deg < 0 || cls < 0) throw std::invalid_argument("CurveSpec: negative entry");
        if (deg == 0 && cls == 0) throw std::invalid_argument("CurveSpec: degree and class both zero");
    }
};

/// Arrangements through p points and tangent to the given curves: expand
/// mu^p * prod_i (m_i mu + n_i nu) and replace mu^a nu^(D-a) by the table
/// entry N(a, D-a).
inline BigInt zeuthen_transfer(const CharNumberTable& table, int p,
                               const std::vector<CurveSpec>& curves) {
    if (p < 0 || p + static_cast<int>(curves.size()) != table.dimension)
        throw std::invalid_argument(
            "zeuthen_transfer: point count plus curve count must equal the table dimension");
    // coeff[j] = coefficient of mu^(p+j) nu^(curves.size()-j)
    std::vector<BigInt> coeff{1};
    for (const auto& c : curves) {
        std::vector<BigInt> next(coeff.size() + 1, BigInt(0));
        for (std::size_t j = 0; j < coeff.size(); ++j) {
            next[j] += coeff[j] * c.degree;          // nu factor
            next[j + 1] += coeff[j] * c.curve_class; // mu factor
        }
        coeff = std::move(next);
    }
    BigInt total = 0;
    for (std::size_t j = 0; j < coeff.size(); ++j)
        total += coeff[j] * table.at(p + static_cast<int>(j));
    return total;
}

/// Moduli dimension of a d-coned generic arrangement of k hyperplanes in
/// P^n: dim G(d,n) + k * dim P^(n-d-1) = (d+1)(n-d) + k(n-d-1).
inline int dconed_dim(int d, int k, int n) {
    if (d < 0 || d > n - 2) throw std::invalid_argument("dconed_dim: need 0 <= d <= n-2");
    if (k <= n) throw std::invalid_argument("dconed_dim: need k > n");
    return (d + 1) * (n - d) + k * (n - d - 1);
}

/// 0-coned generic arrangements of k >= n hyperplanes in P^n through
/// kn+n-k general points: (kn+n-k)! / ((n!)^(n+1) (k-n)! ((n-1)!)^(k-n)).
inline BigInt count_0coned(int k, int n) {
    if (n < 2 || k < n) throw std::invalid_argument("count_0coned: need k >= n >= 2");
    const long long D = static_cast<long long>(k) * n + n - k;
    std::vector<std::pair<long long, long long>> parts{{n, n}};
    if (k > n) parts.push_back({n - 1, k - n});
    BigInt labeled = binomial(k, n) * multinomial(D, parts);
    return exact_div(labeled, factorial(k));
}

/// All (s_0,...,s_{d+1}) with sum_i i*s_i = (d+1)(n-d) and sum_i s_i = k, in
/// descending lexicographic order.
inline std::vector<std::vector<long long>> gamma_tuples(int d, long long k, int n) {
    if (d < 0 || d > n - 2) throw std::invalid_argument("gamma_tuples: need 0 <= d <= n-2");
    if (k < 0) throw std::invalid_argument("gamma_tuples: need k >= 0");
    const long long weight = static_cast<long long>(d + 1) * (n - d);
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(static_cast<std::size_t>(d) + 2, 0);
    auto rec = [&](auto&& self, int i, long long rem_count, long long rem_weight) -> void {
        if (i == d + 2) {
            if (rem_count == 0 && rem_weight == 0) out.push_back(cur);
            return;
        }
        long long max_si = rem_count;
        if (i >= 1) max_si = std::min(max_si, rem_weight / i);
        for (long long si = max_si; si >= 0; --si) {
            cur[static_cast<std::size_t>(i)] = si;
            self(self, i + 1, rem_count - si, rem_weight - static_cast<long long>(i) * si);
        }
    };
    rec(rec, 0, k, weight);
    return out;
}

/// d-coned generic arrangements of k hyperplanes in P^n through D general
/// points, by summing over the distributions s of hyperplanes by point
/// load: each hyperplane takes between n-d-1 and n points, the Schubert
/// degree sigma^s counts the compatible apex spaces, and the multinomials
/// distribute hyperplanes and points.
inline BigInt count_dconed(int d, int k, int n) {
    const long long D = dconed_dim(d, k, n);
    const GrassmannianSpec g(d, n);
    BigInt labeled = 0;
    for (const auto& s : gamma_tuples(d, k, n)) {
        BigInt degree = schubert_degree(g, s);
        if (degree == 0) continue;
        BigInt hyperplane_split = factorial(k);
        for (long long si : s) hyperplane_split = exact_div(hyperplane_split, factorial(si));
        std::vector<std::pair<long long, long long>> parts;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] > 0) parts.push_back({n - (d + 1) + static_cast<long long>(i), s[i]});
        labeled += degree * hyperplane_split * multinomial(D, parts);
    }
    return exact_div(labeled, factorial(k));
}

/// The single-distribution count that ignores every other point load:
/// pick n-d hyperplanes through n points each (their intersection is the
/// apex) and put the remaining k-n+d through n-d-1 points each. Correct at
/// d = 0; grossly undercounts for d >= 1.
inline BigInt naive_dconed_count(int d, int k, int n) {
    const long long D = dconed_dim(d, k, n);
    std::vector<std::pair<long long, long long>> parts{{n, n - d}};
    if (k - n + d > 0) parts.push_back({n - d - 1, k - n + d});
    BigInt labeled = binomial(k, n - d) * multinomial(D, parts);
    return exact_div(labeled, factorial(k));
}

} // namespace moduli

#endif // MODULI_ENUMERATION_HPP
