#ifndef MODULI_CLI_HPP
#define MODULI_CLI_HPP

#include <moduli/arrangement.hpp>
#include <moduli/enumeration.hpp>
#include <moduli/incidence.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace moduli::cli {

/*
 * Command-line front end. Every numeric result is printed as an exact
 * decimal string produced by the library itself; nothing is ever rounded.
 * Default output is `key: value` text; --json switches to a machine format.
 */

/// One command's output: the echoed invocation, named fields, the result
/// string (byte-identical to the library serialization), and a one-line
/// description of the formula or method applied.
struct CommandResult {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;
    std::string result;
    std::string provenance;
};

inline void print_result(const CommandResult& r, bool as_json, std::ostream& out) {
    if (as_json) {
        nlohmann::ordered_json j;
        j["command"] = r.command;
        nlohmann::ordered_json f = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.fields) f[k] = v;
        j["fields"] = std::move(f);
        j["result"] = r.result;
        j["provenance"] = r.provenance;
        out << j.dump() << "\n";
    } else {
        out << "command: " << r.command << "\n";
        for (const auto& [k, v] : r.fields) out << k << ": " << v << "\n";
        out << "result: " << r.result << "\n";
        out << "provenance: " << r.provenance << "\n";
    }
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    return out;
}

inline CharNumberTable table_for_family(const std::string& family, int k) {
    if (family == "generic3") return generic_lines_table(3);
    if (family == "generic4") return generic_lines_table(4);
    if (family == "braid") return braid_table();
    if (family == "pencil") {
        if (k < 3) throw std::invalid_argument("family 'pencil' requires --k >= 3");
        return pencil_char_numbers(k);
    }
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected generic3|generic4|braid|pencil)");
}

inline std::vector<CurveSpec> parse_curves(const std::string& s) {
    std::vector<CurveSpec> out;
    if (s.empty()) return out;
    for (const auto& item : split(s, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("curve '" + item + "' must be degree:class");
        try {
            out.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("curve '" + item + "' must be degree:class");
        }
    }
    return out;
}

inline std::string curves_to_string(const std::vector<CurveSpec>& curves) {
    std::string s;
    for (const auto& c : curves) {
        if (!s.empty()) s += ',';
        s += std::to_string(c.degree) + ":" + std::to_string(c.curve_class);
    }
    return s;
}

/// Parses `x1^2*y12` style monomials against a ring.
inline Monomial parse_monomial(const RingPtr& ring, const std::string& s) {
    Monomial m(ring->variable_count(), 0);
    for (const auto& factor : split(s, '*')) {
        if (factor.empty()) throw std::invalid_argument("empty factor in monomial");
        auto caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoi(factor.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in '" + factor + "'");
            }
        }
        auto idx = ring->index_of(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
        if (e < 0) throw std::invalid_argument("negative exponent in '" + factor + "'");
        m[*idx] += e;
    }
    return m;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    return in;
}

} // namespace detail

/// Runs one command. Returns 0 on success, nonzero with a diagnostic on err
/// for any parse or precondition failure.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counts and characteristic numbers for moduli of hyperplane arrangements"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of key: value text");

    std::string command;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) command += ' ';
        command += argv[i];
    }

    CommandResult result;
    result.command = command;

    // count generic | zero-coned | d-coned
    auto* count = app.add_subcommand("count", "count arrangements through general points");
    count->require_subcommand(1);

    int cg_k = 0, cg_n = 0;
    auto* count_gen = count->add_subcommand("generic", "generic arrangements of k hyperplanes in P^n");
    count_gen->add_option("--k", cg_k, "number of hyperplanes")->required();
    count_gen->add_option("--n", cg_n, "ambient projective dimension")->required();
    count_gen->callback([&] {
        result.fields = {{"k", std::to_string(cg_k)},
                         {"n", std::to_string(cg_n)},
                         {"dimension", std::to_string(dim_generic(cg_k, cg_n))}};
        result.result = count_generic(cg_k, cg_n).str();
        result.provenance = "point-distribution count (kn)!/(k!*(n!)^k)";
    });

    int c0_k = 0, c0_n = 0;
    auto* count_zero = count->add_subcommand("zero-coned", "cones over generic arrangements in P^(n-1)");
    count_zero->add_option("--k", c0_k, "number of hyperplanes")->required();
    count_zero->add_option("--n", c0_n, "ambient projective dimension")->required();
    count_zero->callback([&] {
        result.fields = {{"k", std::to_string(c0_k)},
                         {"n", std::to_string(c0_n)},
                         {"dimension", std::to_string(c0_k * c0_n + c0_n - c0_k)}};
        result.result = count_0coned(c0_k, c0_n).str();
        result.provenance = "apex-and-distribution count (kn+n-k)!/((n!)^(n+1)*(k-n)!*((n-1)!)^(k-n))";
    });

    int cd_d = 0, cd_k = 0, cd_n = 0;
    bool cd_naive = false;
    auto* count_dc = count->add_subcommand("d-coned", "cones over generic arrangements with a d-dimensional apex");
    count_dc->add_option("--d", cd_d, "apex dimension")->required();
    count_dc->add_option("--k", cd_k, "number of hyperplanes")->required();
    count_dc->add_option("--n", cd_n, "ambient projective dimension")->required();
    count_dc->add_flag("--naive", cd_naive, "evaluate the single-distribution undercount instead");
    count_dc->callback([&] {
        result.fields = {{"d", std::to_string(cd_d)},
                         {"k", std::to_string(cd_k)},
                         {"n", std::to_string(cd_n)},
                         {"dimension", std::to_string(dconed_dim(cd_d, cd_k, cd_n))}};
        if (cd_naive) {
            result.result = naive_dconed_count(cd_d, cd_k, cd_n).str();
            result.provenance = "single-distribution undercount for comparison";
        } else {
            result.result = count_dconed(cd_d, cd_k, cd_n).str();
            result.provenance = "Schubert-degree weighted sum over point-load distributions";
        }
    });

    // charnum
    std::string cn_family;
    int cn_p = 0, cn_k = 0;
    auto* charnum = app.add_subcommand("charnum", "characteristic number N(p, D-p) of a family");
    charnum->add_option("--family", cn_family, "generic3|generic4|braid|pencil")->required();
    charnum->add_option("--p", cn_p, "number of point conditions")->required();
    charnum->add_option("--k", cn_k, "pencil size (pencil family only)");
    charnum->callback([&] {
        auto table = detail::table_for_family(cn_family, cn_k);
        result.fields = {{"family", table.family},
                         {"dimension", std::to_string(table.dimension)},
                         {"p", std::to_string(cn_p)},
                         {"tangency_conditions", std::to_string(table.dimension - cn_p)}};
        result.result = table.at(cn_p).str();
        result.provenance = cn_family == "pencil"
                                ? "pencil closed forms 3*C(k+2,4), C(k+1,2), 1"
                                : "chow degree of the marked-arrangement class with point and "
                                  "tangency conditions";
    });

    // zeuthen
    std::string z_family, z_curves;
    int z_p = 0, z_k = 0;
    auto* zeuthen = app.add_subcommand("zeuthen", "count arrangements tangent to curves of given degree:class");
    zeuthen->add_option("--family", z_family, "generic3|generic4|braid|pencil")->required();
    zeuthen->add_option("--points", z_p, "number of point conditions")->required();
    zeuthen->add_option("--curves", z_curves, "comma list of degree:class pairs")->required();
    zeuthen->add_option("--k", z_k, "pencil size (pencil family only)");
    zeuthen->callback([&] {
        auto table = detail::table_for_family(z_family, z_k);
        auto curves = detail::parse_curves(z_curves);
        result.fields = {{"family", table.family},
                         {"points", std::to_string(z_p)},
                         {"curves", detail::curves_to_string(curves)}};
        result.result = zeuthen_transfer(table, z_p, curves).str();
        result.provenance = "characteristic-number substitution in mu^p * prod(m*mu + n*nu)";
    });

    // schubert degree
    auto* schubert = app.add_subcommand("schubert", "Schubert calculus on G(d,n)");
    schubert->require_subcommand(1);
    int sd_d = 0, sd_n = 0;
    std::string sd_s;
    auto* sdeg = schubert->add_subcommand("degree", "degree of a product of special classes sigma_{1^i}");
    sdeg->add_option("--d", sd_d, "subspace dimension")->required();
    sdeg->add_option("--n", sd_n, "ambient projective dimension")->required();
    sdeg->add_option("--s", sd_s, "comma list s0,s1,...,s(d+1) of factor multiplicities")->required();
    sdeg->callback([&] {
        std::vector<long long> s;
        for (const auto& tok : detail::split(sd_s, ',')) {
            try {
                s.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad multiplicity '" + tok + "' in --s");
            }
        }
        GrassmannianSpec g(sd_d, sd_n);
        result.fields = {{"d", std::to_string(sd_d)},
                         {"n", std::to_string(sd_n)},
                         {"s", sd_s},
                         {"grassmannian_dimension", std::to_string(g.dimension())}};
        result.result = schubert_degree(g, s).str();
        result.provenance = "iterated vertical-strip (dual Pieri) expansion";
    });

    // tutte
    std::string t_file, t_q, t_xs;
    auto* tutte = app.add_subcommand("tutte", "multivariate Tutte polynomial of an arrangement's lattice");
    tutte->add_option("--arrangement", t_file, "arrangement file")->required();
    tutte->add_option("--q", t_q, "rational q")->required();
    tutte->add_option("--xs", t_xs, "comma list of rationals, one per hyperplane")->required();
    tutte->callback([&] {
        auto in = detail::open_input(t_file);
        auto arrangement = parse_arrangement(in);
        auto lattice = lattice_from_arrangement(arrangement);
        std::vector<Rational> xs;
        for (const auto& tok : detail::split(t_xs, ',')) xs.push_back(parse_rational(tok));
        Rational value = tutte_eval(lattice, parse_rational(t_q), xs);
        result.fields = {{"arrangement", t_file},
                         {"hyperplanes", std::to_string(arrangement.size())},
                         {"flats", std::to_string(lattice.flats.size())},
                         {"q", t_q},
                         {"xs", t_xs}};
        result.result = rational_to_string(value);
        result.provenance = "subset rank generating sum Z(q,x) = sum_B q^(-rank B) prod x_j";
    });

    // dim
    std::string d_spec, d_real;
    auto* dim = app.add_subcommand("dim", "virtual and actual dimension of an incidence correspondence");
    dim->add_option("--spec", d_spec, "incidence spec file")->required();
    dim->add_option("--realization", d_real, "exact rational realization file");
    dim->callback([&] {
        auto in = detail::open_input(d_spec);
        auto spec = parse_incidence_spec(in);
        const int vdim = virtual_dimension(spec);
        result.fields = {{"spec", d_spec},
                         {"n", std::to_string(spec.n)},
                         {"lines", std::to_string(spec.line_count)},
                         {"points", std::to_string(spec.point_count)},
                         {"incidences", std::to_string(spec.incidences.size())},
                         {"virtual_dimension", std::to_string(vdim)}};
        if (d_real.empty()) {
            result.result = std::to_string(vdim);
            result.provenance = "virtual dimension n(k+l) - #incidences";
        } else {
            auto rin = detail::open_input(d_real);
            auto realization = parse_realization(rin, spec);
            const int rank = jacobian_rank(spec, realization);
            const int actual = moduli_dimension_estimate(spec, realization);
            result.fields.emplace_back("jacobian_rank", std::to_string(rank));
            result.fields.emplace_back("actual_dimension", std::to_string(actual));
            result.result = std::to_string(actual);
            result.provenance =
                "local dimension n(k+l) - rank(Jacobian) at the given realization (exact rank)";
        }
    });

    // class incidence
    auto* cls = app.add_subcommand("class", "intersection classes");
    cls->require_subcommand(1);
    int ci_k = 0;
    std::string ci_monomial;
    auto* cls_inc = cls->add_subcommand("incidence", "class of the marked k-line incidence variety");
    cls_inc->add_option("--k", ci_k, "number of lines (3 or 4)")->required();
    cls_inc->add_option("--coefficient", ci_monomial, "report only this monomial's coefficient, e.g. x1^2*x2^2*x3^2");
    cls_inc->callback([&] {
        auto [ring, m_class] = incidence_class(ci_k);
        std::string vars;
        for (const auto& v : ring->variables()) {
            if (!vars.empty()) vars += ',';
            vars += v;
        }
        result.fields = {{"k", std::to_string(ci_k)}, {"variables", vars}};
        if (ci_monomial.empty()) {
            result.fields.emplace_back("terms", std::to_string(m_class.term_count()));
            result.result = m_class.to_string();
        } else {
            result.fields.emplace_back("monomial", ci_monomial);
            result.result = m_class.coefficient(detail::parse_monomial(ring, ci_monomial)).str();
        }
        result.provenance = "product of pairwise incidence hypersurface classes (x_i+y_ij)(x_j+y_ij)";
    });

    // pappus
    std::string p_spec = "pappus.spec", p_real = "pappus.real";
    auto* pappus = app.add_subcommand("pappus", "write the built-in Pappus spec and realization files");
    pappus->add_option("--spec", p_spec, "output spec file (default pappus.spec)");
    pappus->add_option("--realization", p_real, "output realization file (default pappus.real)");
    pappus->callback([&] {
        auto [spec, realization] = pappus_realization();
        std::ofstream sout(p_spec);
        if (!sout) throw std::invalid_argument("cannot write file '" + p_spec + "'");
        write_incidence_spec(spec, sout);
        std::ofstream rout(p_real);
        if (!rout) throw std::invalid_argument("cannot write file '" + p_real + "'");
        write_realization(realization, rout);
        result.fields = {{"spec", p_spec},
                         {"realization", p_real},
                         {"lines", std::to_string(spec.line_count)},
                         {"points", std::to_string(spec.point_count)},
                         {"incidences", std::to_string(spec.incidences.size())}};
        result.result = "written";
        result.provenance = "two-transversal construction with exact rational coordinates";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    print_result(result, as_json, out);
    return 0;
}

} // namespace moduli::cli

#endif // MODULI_CLI_HPP
