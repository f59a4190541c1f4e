#ifndef MODULI_INCIDENCE_HPP
#define MODULI_INCIDENCE_HPP

#include <moduli/arrangement.hpp>
#include <moduli/rational_linalg.hpp>

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace moduli {

/*
 * Dimension of the incidence correspondence
 *
 *   P = { (H_1..H_l, P_1..P_k) : P_i in H_j for each required incidence }
 *
 * inside (P^{n*})^l x (P^n)^k, measured two ways: the virtual dimension
 * n(k+l) - #incidences (valid when the bilinear conditions are independent)
 * and the actual local dimension n(k+l) - rank(Jacobian) at an exact
 * rational realization. The two differ exactly when the incidences carry a
 * syzygy, as they do for the Pappus configuration.
 */

/// Combinatorial point-hyperplane incidence data.
struct IncidenceSpec {
    int n = 2;                             ///< ambient projective dimension
    int line_count = 0;                    ///< number of hyperplanes
    int point_count = 0;                   ///< number of marked points
    std::set<std::pair<int, int>> incidences; ///< (point index, hyperplane index)

    IncidenceSpec(int ambient_dim, int lines, int points,
                  std::set<std::pair<int, int>> inc)
        : n(ambient_dim), line_count(lines), point_count(points), incidences(std::move(inc)) {
        if (n < 1) throw std::invalid_argument("IncidenceSpec: ambient dimension < 1");
        if (line_count < 0 || point_count < 0)
            throw std::invalid_argument("IncidenceSpec: negative count");
        for (auto [p, l] : incidences)
            if (p < 0 || p >= point_count || l < 0 || l >= line_count)
                throw std::invalid_argument("IncidenceSpec: incidence index out of range");
    }

    bool operator==(const IncidenceSpec& o) const {
        return n == o.n && line_count == o.line_count && point_count == o.point_count &&
               incidences == o.incidences;
    }
};

/// Exact rational coordinatization: one covector per hyperplane, one vector
/// per point, each of length n+1 and nonzero.
struct Realization {
    std::vector<std::vector<Rational>> lines;
    std::vector<std::vector<Rational>> points;
};

/// n(k+l) - #incidences: the dimension the correspondence would have if all
/// incidence conditions were independent.
inline int virtual_dimension(const IncidenceSpec& spec) {
    return spec.n * (spec.point_count + spec.line_count) -
           static_cast<int>(spec.incidences.size());
}

namespace detail {

/// Chart index: position of the largest-magnitude nonzero coordinate
/// (first such position on ties). Dehomogenizing there is scale-invariant.
inline std::size_t chart_index(const std::vector<Rational>& v) {
    std::size_t best = v.size();
    Rational best_abs = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational a = v[i] < 0 ? Rational(-v[i]) : v[i];
        if (best == v.size() || a > best_abs) {
            best = i;
            best_abs = a;
        }
    }
    if (best == v.size() || best_abs == 0)
        throw std::invalid_argument("realization contains a zero vector");
    return best;
}

inline std::vector<Rational> dehomogenize(const std::vector<Rational>& v, std::size_t chart) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / v[chart];
    return out;
}

inline void validate_realization(const IncidenceSpec& spec, const Realization& r) {
    if (static_cast<int>(r.lines.size()) != spec.line_count ||
        static_cast<int>(r.points.size()) != spec.point_count)
        throw std::invalid_argument("realization does not match spec counts");
    auto check_vec = [&](const std::vector<Rational>& v) {
        if (static_cast<int>(v.size()) != spec.n + 1)
            throw std::invalid_argument("realization vector has wrong length");
        chart_index(v); // rejects zero vectors
    };
    for (const auto& v : r.lines) check_vec(v);
    for (const auto& v : r.points) check_vec(v);
    for (auto [p, l] : spec.incidences) {
        Rational dot = 0;
        for (int s = 0; s <= spec.n; ++s) dot += r.points[p][s] * r.lines[l][s];
        if (dot != 0)
            throw std::invalid_argument("realization violates incidence (" + std::to_string(p) +
                                        "," + std::to_string(l) + ")");
    }
}

} // namespace detail

/// Exact rank of the Jacobian of the bilinear incidence conditions with
/// respect to affine-chart coordinates (one chart per projective factor).
/// The realization must satisfy every incidence exactly.
inline int jacobian_rank(const IncidenceSpec& spec, const Realization& r) {
    detail::validate_realization(spec, r);
    const int n = spec.n;
    const std::size_t line_cols = static_cast<std::size_t>(n) * spec.line_count;
    const std::size_t total_cols = line_cols + static_cast<std::size_t>(n) * spec.point_count;

    std::vector<std::vector<Rational>> line_reps, point_reps;
    std::vector<std::size_t> line_chart, point_chart;
    for (const auto& v : r.lines) {
        std::size_t c = detail::chart_index(v);
        line_chart.push_back(c);
        line_reps.push_back(detail::dehomogenize(v, c));
    }
    for (const auto& v : r.points) {
        std::size_t c = detail::chart_index(v);
        point_chart.push_back(c);
        point_reps.push_back(detail::dehomogenize(v, c));
    }

    RationalMatrix jac;
    for (auto [p, l] : spec.incidences) {
        std::vector<Rational> row(total_cols, Rational(0));
        std::size_t col = static_cast<std::size_t>(n) * l;
        for (int s = 0; s <= n; ++s) {
            if (static_cast<std::size_t>(s) == line_chart[l]) continue;
            row[col++] = point_reps[p][s]; // d<P,H>/dH_s
        }
        col = line_cols + static_cast<std::size_t>(n) * p;
        for (int s = 0; s <= n; ++s) {
            if (static_cast<std::size_t>(s) == point_chart[p]) continue;
            row[col++] = line_reps[l][s]; // d<P,H>/dP_s
        }
        jac.push_back(std::move(row));
    }
    return jac.empty() ? 0 : rational_rank(jac);
}

/// n(k+l) - jacobian_rank: the local dimension of the incidence
/// correspondence at the given realization. Equals the moduli dimension at
/// smooth points; at singular points it is only an upper bound.
inline int moduli_dimension_estimate(const IncidenceSpec& spec, const Realization& r) {
    return spec.n * (spec.point_count + spec.line_count) - jacobian_rank(spec, r);
}

/// Fixed exact-rational Pappus configuration: points A1,A2,A3 on y=0 and
/// B1,B2,B3 on y=z, the six cross lines AiBj, their meets C12,C13,C23, and
/// the line through the C's (collinear by Pappus' theorem). Nine lines,
/// nine points, 27 exact incidences; one incidence is dependent on the rest.
inline std::pair<IncidenceSpec, Realization> pappus_realization() {
    auto cross = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        return std::vector<Rational>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                     a[0] * b[1] - a[1] * b[0]};
    };
    auto vec = [](long long x, long long y, long long z) {
        return std::vector<Rational>{Rational(x), Rational(y), Rational(z)};
    };

    const auto a1 = vec(0, 0, 1), a2 = vec(1, 0, 1), a3 = vec(3, 0, 1);
    const auto b1 = vec(0, 1, 1), b2 = vec(1, 1, 1), b3 = vec(2, 1, 1);
    const auto line_a = vec(0, 1, 0);  // y = 0
    const auto line_b = vec(0, 1, -1); // y = z
    const auto l12 = cross(a1, b2), l21 = cross(a2, b1);
    const auto l13 = cross(a1, b3), l31 = cross(a3, b1);
    const auto l23 = cross(a2, b3), l32 = cross(a3, b2);
    const auto c12 = cross(l12, l21), c13 = cross(l13, l31), c23 = cross(l23, l32);
    const auto pappus_line = cross(c12, c13);

    Realization r;
    r.lines = {line_a, line_b, l12, l21, l13, l31, l23, l32, pappus_line};
    r.points = {a1, a2, a3, b1, b2, b3, c12, c13, c23};

    std::set<std::pair<int, int>> inc;
    for (int p = 0; p < 9; ++p)
        for (int l = 0; l < 9; ++l) {
            Rational dot = 0;
            for (int s = 0; s < 3; ++s) dot += r.points[p][s] * r.lines[l][s];
            if (dot == 0) inc.emplace(p, l);
        }
    IncidenceSpec spec(2, 9, 9, std::move(inc));
    return {std::move(spec), std::move(r)};
}

// --- file formats ---------------------------------------------------------

namespace detail {

inline std::vector<std::string> data_lines(std::istream& in, std::vector<int>* linenos) {
    std::vector<std::string> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line);
        if (linenos) linenos->push_back(no);
    }
    return out;
}

} // namespace detail

/// Spec file: ambient dimension, `lines L`, `points K`, then one incidence
/// per line as `point_index line_index` (0-based).
inline IncidenceSpec parse_incidence_spec(std::istream& in) {
    std::vector<int> linenos;
    auto lines = detail::data_lines(in, &linenos);
    auto fail = [&](std::size_t i, const std::string& what) {
        throw std::invalid_argument("spec file line " + std::to_string(linenos.at(i)) + ": " + what);
    };
    if (lines.size() < 3) throw std::invalid_argument("spec file: expected at least 3 data lines");

    int n = 0;
    {
        std::istringstream ss(lines[0]);
        if (!(ss >> n) || n < 1) fail(0, "expected ambient dimension");
    }
    auto keyword_count = [&](std::size_t i, const std::string& kw) {
        std::istringstream ss(lines[i]);
        std::string word;
        int count = -1;
        if (!(ss >> word >> count) || word != kw || count < 0)
            fail(i, "expected '" + kw + " <count>'");
        return count;
    };
    const int line_count = keyword_count(1, "lines");
    const int point_count = keyword_count(2, "points");

    std::set<std::pair<int, int>> inc;
    for (std::size_t i = 3; i < lines.size(); ++i) {
        std::istringstream ss(lines[i]);
        int p = -1, l = -1;
        if (!(ss >> p >> l)) fail(i, "expected 'point_index line_index'");
        if (p < 0 || p >= point_count || l < 0 || l >= line_count) fail(i, "index out of range");
        inc.emplace(p, l);
    }
    return IncidenceSpec(n, line_count, point_count, std::move(inc));
}

inline void write_incidence_spec(const IncidenceSpec& spec, std::ostream& out) {
    out << spec.n << "\n";
    out << "lines " << spec.line_count << "\n";
    out << "points " << spec.point_count << "\n";
    for (auto [p, l] : spec.incidences) out << p << " " << l << "\n";
}

/// Realization file: one vector per line, n+1 rationals `p/q` each; all
/// hyperplane covectors first, then all points, in spec order.
inline Realization parse_realization(std::istream& in, const IncidenceSpec& spec) {
    auto lines = detail::data_lines(in, nullptr);
    const std::size_t expected = static_cast<std::size_t>(spec.line_count) + spec.point_count;
    if (lines.size() != expected)
        throw std::invalid_argument("realization file: expected " + std::to_string(expected) +
                                    " vectors, got " + std::to_string(lines.size()));
    Realization r;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::istringstream ss(lines[i]);
        std::vector<Rational> v;
        std::string tok;
        while (ss >> tok) v.push_back(parse_rational(tok));
        if (static_cast<int>(v.size()) != spec.n + 1)
            throw std::invalid_argument("realization file row " + std::to_string(i + 1) +
                                        ": expected " + std::to_string(spec.n + 1) + " coordinates");
        if (i < static_cast<std::size_t>(spec.line_count))
            r.lines.push_back(std::move(v));
        else
            r.points.push_back(std::move(v));
    }
    return r;
}

inline void write_realization(const Realization& r, std::ostream& out) {
    auto write_vec = [&](const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << rational_to_string(v[i]);
        out << "\n";
    };
    out << "# hyperplane covectors\n";
    for (const auto& v : r.lines) write_vec(v);
    out << "# points\n";
    for (const auto& v : r.points) write_vec(v);
}

} // namespace moduli

#endif // MODULI_INCIDENCE_HPP
