#ifndef MODULI_RATIONAL_LINALG_HPP
#define MODULI_RATIONAL_LINALG_HPP

#include <moduli/bigint.hpp>

#include <vector>

namespace moduli {

/*
 * Exact rank of rational matrices via fraction-free (Bareiss) elimination.
 * Rank decisions drive everything downstream (lattice flats, genericity,
 * incidence-correspondence codimension), so no floating point appears here.
 */

using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

/// Clear denominators row by row; row scaling does not change the rank.
inline std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        BigInt scale = 1;
        for (const auto& x : row)
            scale = lcm(scale, denominator(x));
        std::vector<BigInt> r;
        r.reserve(row.size());
        for (const auto& x : row)
            r.push_back(numerator(x) * (scale / denominator(x)));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

/// Exact rank by Bareiss elimination. Intermediate entries are minors of the
/// input, so every division below is exact.
inline int rational_rank(const RationalMatrix& matrix) {
    if (matrix.empty()) return 0;
    auto m = detail::integer_rows(matrix);
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("rational_rank: ragged matrix");

    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace moduli

#endif // MODULI_RATIONAL_LINALG_HPP
