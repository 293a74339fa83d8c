#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <istream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "algcheck/boolalg.hpp"
#include "algcheck/braid.hpp"
#include "algcheck/bring_euler.hpp"
#include "algcheck/incidence.hpp"
#include "algcheck/jordan.hpp"
#include "algcheck/matrix_series.hpp"
#include "algcheck/report.hpp"
#include "algcheck/triple_trig.hpp"
#include "algcheck/weak_bring.hpp"

namespace algcheck {

// ---------------------------------------------------------------------------
// Boolean calculi: triple trigonometry, weak B-ring axioms, pair exponential.

struct BooleanOptions {
    std::vector<unsigned> atoms{1, 2, 3};
    /// Restrict the exponential base to this mask instead of every nonzero element.
    std::optional<std::uint32_t> base_e;
};

inline constexpr unsigned boolean_atom_cap = 4;

namespace detail {

inline std::string tag(unsigned n, const std::string& name) { return "n=" + std::to_string(n) + "/" + name; }

inline CheckReport check_pair_ring_structure(const BoolAlgebra& alg) {
    CheckReport rep{"pair_ring_structure"};
    const auto one = pair::one(alg);
    const auto zero_elem = alg.bottom();
    const auto all = pair::enumerate(alg);
    for (const auto& p : all) {
        ++rep.cases;
        if (!(twisted_meet(p, one) == p) || !(twisted_meet(one, p) == p)) rep.fail("unit fails at " + p.to_string());
        const auto decomposed = pair_join(PairElement{p.a, zero_elem}, twisted_meet(pair::h(alg), PairElement{p.b, zero_elem}));
        if (!(decomposed == p)) rep.fail("a v hb decomposition fails at " + p.to_string());
        if (!(pair_hat(pair_hat(p)) == p)) rep.fail("hat not an involution at " + p.to_string());
        for (const auto& q : all) {
            if (!(twisted_meet(p, q) == twisted_meet(q, p))) {
                rep.fail("twisted product not commutative at " + p.to_string() + "," + q.to_string());
            }
        }
    }
    return rep;
}

} // namespace detail

[[nodiscard]] inline SuiteReport run_boolean_suite(const BooleanOptions& opt) {
    SuiteReport s{"boolean"};
    for (unsigned n : opt.atoms) {
        if (n < 1 || n > boolean_atom_cap) throw PreconditionError("boolean suite supports 1..4 atoms");
        const BoolAlgebra alg{n};
        using detail::tag;
        {
            Stopwatch w;
            auto r = check_exp_addition(alg);
            s.add(tag(n, "triple/exp_addition"), "e^(X v Y) = e^X ^ e^Y ; cos(X v Y) = cos X ^ cos Y", r, w.ms());
        }
        {
            Stopwatch w;
            auto r = check_sin_addition(alg);
            s.add(tag(n, "triple/sin_addition"),
                  "sin(X v Y) = [sin X ^ cos Y] v [cos X ^ sin Y] v [sin X ^ sin Y]", r, w.ms());
        }
        {
            Stopwatch w;
            auto r = check_fundamental(alg);
            s.add(tag(n, "triple/fundamental"),
                  "sin^2(X) v cos^2(X) v cos(sin X) = 1 ; sin X v cos(sin X) = 1", r, w.ms());
        }
        {
            Stopwatch w;
            auto r = check_euler_formula(alg);
            s.add(tag(n, "triple/euler_formula"), "e^(J ^ X) = cos X v [J ^ sin X], J = (0,1,1)", r, w.ms());
        }
        {
            Stopwatch w;
            auto r = check_euler_identity(alg);
            s.add(tag(n, "triple/euler_identity"), "e^(J ^ Pi) = 1, cos(Pi) = 1, sin(Pi) = 0, Pi = (1,0,0)", r,
                  w.ms());
        }
        {
            Stopwatch w;
            auto r = check_product_formula(alg);
            s.add(tag(n, "triple/product_formula"),
                  "cos(X v Y) v [J ^ sin(X v Y)] = [cos X v (J ^ sin X)] ^ [cos Y v (J ^ sin Y)]", r, w.ms());
        }

        if (n <= 3) {
            Stopwatch w;
            const auto report = check_axioms(build_pair_ring(alg));
            const double ms = w.ms();
            for (const auto& ax : report.axioms) {
                std::optional<std::string> witness;
                if (ax.witness) {
                    std::string txt;
                    for (auto idx : *ax.witness) {
                        txt += (txt.empty() ? "" : " ") + PairElement::from_index(alg, idx).to_string();
                    }
                    witness = txt;
                }
                auto& e = s.add(tag(n, "weak_bring/axiom_" + std::string(ax.number < 10 ? "0" : "") +
                                           std::to_string(ax.number)),
                                ax.law, ax.passed, witness, ms / 11);
                if (ax.as_printed) e.details["note"] = "checked as stated";
            }
            Stopwatch w2;
            s.add(tag(n, "weak_bring/structure"), "(a,b)(1,0) = (a,b) ; (a,b) = (a,0) v h(b,0) ; uv = vu",
                  detail::check_pair_ring_structure(alg), w2.ms());
        }

        std::vector<Element> bases;
        if (opt.base_e) {
            bases.push_back(alg.element(*opt.base_e));
            if (bases.back().is_bottom()) throw PreconditionError("--base-e must be nonzero");
        } else {
            for (const auto& e : alg.enumerate())
                if (!e.is_bottom()) bases.push_back(e);
        }

        // Each identity is aggregated over all bases; witnesses carry the base.
        std::vector<CheckReport> scalar(5);
        CheckReport euler_pair{"pair_euler_formula"};
        CheckReport as_printed{"pair_exp_as_printed"};
        CheckReport homomorphism{"pair_exp_homomorphism"};
        CheckReport independence{"pair_euler_base_independence"};
        const auto merge = [](CheckReport& into, const CheckReport& from, const std::string& prefix) {
            into.cases += from.cases;
            if (!from.passed) into.fail(prefix + *from.counterexample);
        };
        Stopwatch w;
        for (const auto& e : bases) {
            const ExpBase base{e};
            const std::string prefix = "e=" + e.to_string() + " ";
            const auto reps = check_scalar_identities(alg, base);
            for (std::size_t i = 0; i < reps.size(); ++i) {
                scalar[i].name = reps[i].name;
                merge(scalar[i], reps[i], prefix);
            }
            merge(euler_pair, check_euler_pair(alg, base), prefix);
            if (n <= 3) {
                const auto dual = check_pair_exp_addition(alg, base);
                merge(as_printed, dual.as_printed, "");
                merge(homomorphism, dual.homomorphism, "");
            }
            const ExpBase reference{alg.top()};
            for (const auto& y : alg.enumerate()) {
                ++independence.cases;
                const PairElement hy{alg.bottom(), y};
                if (!(big_e(base, hy) == big_e(reference, hy))) {
                    independence.fail(prefix + "y=" + y.to_string() + " E(hy) depends on e");
                }
            }
        }
        const double ms = w.ms();
        const char* scalar_formulas[5] = {"e^(x v y) = e^x ^ e^y, e^x = ^x v e",
                                          "C(x v y) = C(x) ^ C(y), C(x) = ^x",
                                          "S(x v y) = [S(x) ^ C(y)] v [C(x) ^ S(y)] v [S(x) ^ S(y)], S(x) = x",
                                          "S^2(x) v C^2(x) = 1", "S(x) v C(x) = 1"};
        for (std::size_t i = 0; i < scalar.size(); ++i) {
            s.add(tag(n, "bring_euler/" + scalar[i].name), scalar_formulas[i], scalar[i], ms / 10);
        }
        s.add(tag(n, "bring_euler/pair_euler_formula"), "E(hy) = C(y) v h S(y) ; E(h) = h", euler_pair, ms / 10);
        s.add(tag(n, "bring_euler/pair_euler_base_independence"), "E(hy) does not depend on e", independence, ms / 10);
        if (n <= 3) {
            s.add_as_printed(tag(n, "bring_euler/pair_exp_as_printed"), "E(u v v) = E(u ^ v)", as_printed, ms / 10);
            s.add(tag(n, "bring_euler/pair_exp_homomorphism"), "E(u v v) = E(u) ^ E(v) (twisted product)",
                  homomorphism, ms / 10);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Braid suite.

struct BraidOptions {
    std::vector<unsigned> atoms{1, 2, 3};
    bool enumerate = true;
};

inline constexpr unsigned braid_atom_cap = 3;
/// Number of braid solutions among the 256 maps on {0,1}^2 (exhaustive count).
inline constexpr std::size_t braid_solutions_m2 = 43;

[[nodiscard]] inline std::string compact(const SquareMapTable& phi) {
    std::string s;
    for (std::uint32_t i = 0; i < phi.m; ++i)
        for (std::uint32_t j = 0; j < phi.m; ++j) {
            const auto [p, q] = phi(i, j);
            s += (s.empty() ? "" : " ") + std::to_string(i) + std::to_string(j) + "->" + std::to_string(p) +
                 std::to_string(q);
        }
    return s;
}

[[nodiscard]] inline SuiteReport run_braid_suite(const BraidOptions& opt) {
    SuiteReport s{"braid"};
    using detail::tag;
    for (unsigned n : opt.atoms) {
        if (n < 1 || n > braid_atom_cap) throw PreconditionError("braid suite supports 1..3 atoms");
        const BoolAlgebra alg{n};
        {
            Stopwatch w;
            const auto v = braid_check(phi_complement(alg));
            s.add(tag(n, "complement_braid"), "phi(x,y) = (^y, y) satisfies phi12 phi23 phi12 = phi23 phi12 phi23",
                  v.holds, v.witness ? std::optional{v.witness->to_string()} : std::nullopt, w.ms());
        }
        {
            Stopwatch w;
            const auto phi = phi_complement(alg);
            CheckReport r{"complement_closed_form"};
            for (const auto& x : alg.enumerate())
                for (const auto& y : alg.enumerate())
                    for (const auto& z : alg.enumerate()) {
                        ++r.cases;
                        const Triple3 t{x.mask(), y.mask(), z.mask()};
                        const Triple3 expect{z.mask(), (~z).mask(), z.mask()};
                        const auto l = braid_lhs(phi, t);
                        const auto rr = braid_rhs(phi, t);
                        if (l != expect || rr != expect) r.fail(BraidWitness{t, l, rr}.to_string());
                    }
            s.add(tag(n, "complement_closed_form"), "both composites send (x,y,z) to (z, ^z, z)", r, w.ms());
        }
        {
            Stopwatch w;
            s.add(tag(n, "param_braid_family"),
                  "phi_x(a,b) = (a v xb, (^x v xa)b) is a braid solution for every x; composites = closed forms",
                  check_param_braid_family(alg), w.ms());
        }
        {
            Stopwatch w;
            CheckReport r{"blend_matches_param"};
            for (const auto& x : alg.enumerate()) {
                ++r.cases;
                if (!(blend(alg, x) == phi_param(alg, x))) r.fail("x=" + x.to_string());
            }
            s.add(tag(n, "blend_matches_param"), "C(x) Id v P S(x) = phi_x", r, w.ms());
        }
        {
            Stopwatch w;
            CheckReport r{"param_endpoints"};
            r.cases = 2;
            if (!(phi_param(alg, alg.bottom()) == identity_map(alg))) r.fail("phi_0 != Id");
            if (!(phi_param(alg, alg.top()) == join_meet_map(alg))) r.fail("phi_1 != P");
            s.add(tag(n, "param_endpoints"), "phi_0 = Id ; phi_1 = P(a,b) = (a v b, ab)", r, w.ms());
        }
    }
    if (opt.enumerate) {
        Stopwatch w;
        const auto sol = enumerate_solutions(2);
        SquareMapTable id{2}, swap{2};
        for (std::uint32_t i = 0; i < 2; ++i)
            for (std::uint32_t j = 0; j < 2; ++j) {
                id.set(i, j, i, j);
                swap.set(i, j, j, i);
            }
        const auto has = [&](const SquareMapTable& t) {
            return std::find(sol.solutions.begin(), sol.solutions.end(), t) != sol.solutions.end();
        };
        std::optional<std::string> why;
        if (!has(id)) why = "identity missing";
        else if (!has(swap)) why = "swap missing";
        else if (sol.count != braid_solutions_m2) {
            why = "solution count " + std::to_string(sol.count) + " != " + std::to_string(braid_solutions_m2);
        }
        auto& e = s.add("m=2/enumerate_solutions", "all braid solutions on a 2-element carrier", !why, why, w.ms());
        e.details["count"] = sol.count;
        e.details["solutions"] = nlohmann::ordered_json::array();
        for (const auto& t : sol.solutions) e.details["solutions"].push_back(compact(t));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Matrix power-sum suite.

struct MatrixInput {
    Mat2<double> value;
    std::optional<Mat2<Rational>> exact;
    int line = 0;
};

struct MatrixOptions {
    bool examples = true;
    std::size_t random_count = 1000;
    std::uint64_t seed = 42;
    std::vector<MatrixInput> inputs;
    /// Attach one report per matrix to the suite details.
    bool per_matrix = false;
};

inline constexpr double matrix_random_tolerance = 1e-6;
inline constexpr double matrix_example_tolerance = 1e-12;

namespace detail {

/// Exact value of an integer, fraction "p/q" or plain decimal token.
inline std::optional<Rational> parse_exact(const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    try {
        if (auto slash = tok.find('/'); slash != std::string::npos) {
            const BigInt p{tok.substr(0, slash)};
            const BigInt q{tok.substr(slash + 1)};
            if (q == 0) return std::nullopt;
            return Rational{p, q};
        }
        std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        std::string digits;
        int scale = 0;
        bool dot = false;
        for (std::size_t i = start; i < tok.size(); ++i) {
            if (tok[i] == '.' && !dot) {
                dot = true;
            } else if (std::isdigit(static_cast<unsigned char>(tok[i]))) {
                digits += tok[i];
                if (dot) ++scale;
            } else {
                return std::nullopt;
            }
        }
        if (digits.empty()) return std::nullopt;
        BigInt den{1};
        for (int i = 0; i < scale; ++i) den *= 10;
        Rational r{BigInt{digits}, den};
        return tok[0] == '-' ? Rational{-r} : r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline nlohmann::ordered_json to_json(const Mat2<double>& m) { return {{m.a11, m.a12}, {m.a21, m.a22}}; }
inline nlohmann::ordered_json to_json(const Mat2<Rational>& m) {
    return {{to_fraction_string(m.a11), to_fraction_string(m.a12)},
            {to_fraction_string(m.a21), to_fraction_string(m.a22)}};
}

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
    return {{"lhs", to_json(r.lhs)},
            {"rhs", to_json(r.rhs)},
            {"max_abs_error", r.max_abs_error},
            {"max_rel_error", r.max_rel_error},
            {"det_input", r.det_input},
            {"passed", r.passed}};
}

} // namespace detail

/// One matrix per line, four entries row-major. Entries may be integers,
/// decimals, fractions p/q or floating-point literals; when all four are
/// exact, the rational path is checked too.
[[nodiscard]] inline std::vector<MatrixInput> read_matrix_file(std::istream& in) {
    std::vector<MatrixInput> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls{line};
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() != 4) throw ValidationError("matrix line " + std::to_string(lineno) + ": expected 4 entries");
        MatrixInput mi;
        mi.line = lineno;
        double v[4];
        std::optional<Rational> q[4];
        bool all_exact = true;
        for (int i = 0; i < 4; ++i) {
            q[i] = detail::parse_exact(toks[i]);
            if (q[i]) {
                v[i] = q[i]->convert_to<double>();
            } else {
                all_exact = false;
                try {
                    std::size_t used = 0;
                    v[i] = std::stod(toks[i], &used);
                    if (used != toks[i].size()) throw std::invalid_argument("junk");
                } catch (const std::exception&) {
                    throw ValidationError("matrix line " + std::to_string(lineno) + ": bad number '" + toks[i] + "'");
                }
            }
        }
        mi.value = {v[0], v[1], v[2], v[3]};
        if (all_exact) mi.exact = Mat2<Rational>{*q[0], *q[1], *q[2], *q[3]};
        out.push_back(std::move(mi));
    }
    return out;
}

[[nodiscard]] inline SuiteReport run_matrix_suite(const MatrixOptions& opt) {
    SuiteReport s{"matrix"};
    const std::string identity = "A + A^2 + ... + A^9 = (tr A + 1)(tr A^3 + 1) A^5 for det A = 1";
    if (opt.examples) {
        {
            Stopwatch w;
            const auto r = verify_identity_exact(unipotent_example());
            const Mat2<Rational> expect{Rational{9}, Rational{45}, Rational{0}, Rational{9}};
            const bool ok = r.equal && r.lhs == expect;
            auto& e = s.add("exact/unipotent_example", identity + " ; A = [[1,1],[0,1]] gives [[9,45],[0,9]]", ok,
                            ok ? std::nullopt : std::optional<std::string>{"lhs or rhs differs from [[9,45],[0,9]]"},
                            w.ms());
            e.details = {{"lhs", detail::to_json(r.lhs)}, {"rhs", detail::to_json(r.rhs)}};
        }
        {
            Stopwatch w;
            const auto r = verify_identity_exact(diagonal_example());
            const Mat2<Rational> expect{Rational{1022}, Rational{0}, Rational{0}, Rational{511, 512}};
            const bool ok = r.equal && r.lhs == expect;
            auto& e = s.add("exact/diagonal_example", identity + " ; A = diag(2, 1/2) gives diag(1022, 511/512)", ok,
                            ok ? std::nullopt : std::optional<std::string>{"lhs or rhs differs from diag(1022, 511/512)"},
                            w.ms());
            e.details = {{"lhs", detail::to_json(r.lhs)}, {"rhs", detail::to_json(r.rhs)}};
        }
        for (const auto& [name, m] : {std::pair{"float/unipotent_example", unipotent_example()},
                                      std::pair{"float/diagonal_example", diagonal_example()}}) {
            Stopwatch w;
            const auto r = verify_identity(to_double(m), matrix_example_tolerance);
            auto& e = s.add(name, identity + " (double precision, rel tol 1e-12)", r.passed,
                            r.passed ? std::nullopt
                                     : std::optional<std::string>{"max_rel_error=" + std::to_string(r.max_rel_error)},
                            w.ms());
            e.details = detail::to_json(r);
        }
    }
    if (opt.random_count > 0) {
        Stopwatch w;
        const auto mats = random_sl2(opt.seed, opt.random_count);
        CheckReport ident{"random_identity"};
        CheckReport cube{"random_trace_cube"};
        double worst = 0;
        nlohmann::ordered_json per = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < mats.size(); ++i) {
            const auto& m = mats[i];
            ++ident.cases;
            ++cube.cases;
            const auto r = verify_identity(m, matrix_random_tolerance);
            worst = std::max(worst, r.max_rel_error);
            if (!r.passed) ident.fail("sample " + std::to_string(i) + " max_rel_error=" + std::to_string(r.max_rel_error));
            const double t = trace(m);
            const double t3 = trace(mat_pow(m, 3));
            const double cayley = t * t * t - 3 * t;
            if (std::abs(t3 - cayley) > 1e-9 * std::max(1.0, std::abs(t3))) {
                cube.fail("sample " + std::to_string(i) + " tr(A^3)=" + std::to_string(t3) +
                          " tr^3-3tr=" + std::to_string(cayley));
            }
            if (opt.per_matrix) {
                auto j = detail::to_json(r);
                j["input"] = detail::to_json(m);
                per.push_back(std::move(j));
            }
        }
        const double ms = w.ms();
        auto& e = s.add("random/identity", identity + " (seeded det-1 samples, rel tol 1e-6)", ident, ms / 2);
        e.details["max_rel_error"] = worst;
        if (opt.per_matrix) e.details["reports"] = std::move(per);
        s.add("random/trace_cube", "tr(A^3) = tr(A)^3 - 3 tr(A) when det A = 1", cube, ms / 2);
        s.seeds.push_back(opt.seed);
    }
    for (const auto& in : opt.inputs) {
        Stopwatch w;
        const std::string name = "input/line_" + std::to_string(in.line);
        try {
            const auto r = verify_identity(in.value, matrix_random_tolerance);
            std::optional<std::string> why;
            if (!r.passed) why = "max_rel_error=" + std::to_string(r.max_rel_error);
            nlohmann::ordered_json details = detail::to_json(r);
            if (in.exact) {
                const auto x = verify_identity_exact(*in.exact);
                details["exact_equal"] = x.equal;
                if (!x.equal && !why) why = "exact rational sides differ";
            }
            s.add(name, identity, !why, why, w.ms()).details = std::move(details);
        } catch (const PreconditionError& err) {
            s.add(name, identity, false, std::string(err.what()), w.ms());
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Jordan curve suite.

struct CurveJob {
    std::string label;
    jordan::CurveSpec spec;
    /// Built-in default shapes carry extra fixed numeric targets.
    bool builtin_default = false;
    /// Inequalities are asserted (fail the suite) rather than only reported.
    bool assert_inequalities = true;
};

struct CurveOptions {
    std::vector<CurveJob> jobs;
    std::optional<std::string> plot_prefix;
};

/// Axis-aligned square of side `side` centred at the origin, counter-clockwise.
[[nodiscard]] inline jordan::Polyline square_polyline(double side) {
    const double h = side / 2;
    return {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
}

[[nodiscard]] inline std::vector<CurveJob> default_curve_jobs() {
    using namespace jordan;
    return {
        {"circle", CurveSpec{Circle{1}, 4096}, true, true},
        {"ellipse", CurveSpec{Ellipse{2, 1}, 8192}, true, true},
        {"reuleaux", CurveSpec{Reuleaux{1}, 4096}, true, true},
        {"square", CurveSpec{PolylineShape{square_polyline(2)}, 4}, true, true},
    };
}

namespace detail {

inline nlohmann::ordered_json to_json(const jordan::Analysis& a) {
    const auto& m = a.metrics;
    const auto& r = a.report;
    nlohmann::ordered_json j;
    j["length"] = m.length;
    j["max_diameter"] = m.max_diameter;
    j["min_central_chord"] = m.min_central_chord;
    j["area"] = m.area;
    j["centroid"] = {m.centroid.x, m.centroid.y};
    j["center_of_mass"] = r.center_of_mass;
    j["ratio_LD"] = r.ratio_LD;
    j["ratio_Ld"] = r.ratio_Ld;
    j["margin_i_left"] = r.margin_i_left;
    j["margin_i_right"] = r.margin_i_right;
    j["margin_iii"] = r.margin_iii;
    j["ineq_i_left"] = r.ineq_i_left;
    j["ineq_i_right"] = r.ineq_i_right;
    j["ineq_iii"] = r.ineq_iii;
    j["quadratic_discriminant"] = r.quadratic_discriminant;
    j["quadratic_roots"] = r.quadratic_roots;
    j["equality_probe_finding"] = r.equality_probe_finding ? nlohmann::ordered_json(*r.equality_probe_finding) : nullptr;
    return j;
}

inline std::string num(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

inline void write_plot_data(const std::string& prefix, const jordan::Analysis& a) {
    std::ofstream chords{prefix + ".chords.csv"};
    std::ofstream points{prefix + ".points.csv"};
    if (!chords || !points) throw ValidationError("cannot write plot data with prefix '" + prefix + "'");
    chords.precision(17);
    points.precision(17);
    chords << "theta,chord_length\n";
    for (const auto& [th, len] : jordan::chord_profile(a.samples, a.metrics.centroid, jordan::chord_sweep_directions)) {
        chords << th << ',' << len << '\n';
    }
    points << "t,x,y\n";
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        points << static_cast<double>(k) / static_cast<double>(a.samples.size()) << ',' << a.samples[k].x << ','
               << a.samples[k].y << '\n';
    }
}

} // namespace detail

[[nodiscard]] inline SuiteReport run_curve_suite(const CurveOptions& opt) {
    using namespace jordan;
    constexpr double pi = std::numbers::pi;
    SuiteReport s{"curve"};
    for (const auto& job : opt.jobs) {
        Stopwatch w;
        const auto a = analyze(job.spec);
        const double ms = w.ms();
        const auto& m = a.metrics;
        const auto& r = a.report;
        const std::string& L = job.label;

        {
            std::optional<std::string> why;
            if (!(m.length > 0 && m.max_diameter > 0 && m.min_central_chord > 0 && m.area > 0)) why = "nonpositive metric";
            else if (m.min_central_chord > m.max_diameter * (1 + 1e-12)) why = "d > D";
            s.add(L + "/metrics", "L, D, d, area > 0 and d <= D", !why, why, ms).details = algcheck::detail::to_json(a);
        }
        {
            const bool ok = r.ineq_i_left && r.ineq_i_right;
            auto& e = s.add(L + "/inequality_i", "L/D <= pi <= L/d", ok || !job.assert_inequalities,
                            ok ? std::nullopt
                               : std::optional<std::string>{"L/D=" + algcheck::detail::num(r.ratio_LD) + " L/d=" + algcheck::detail::num(r.ratio_Ld)});
            e.details = {{"asserted", job.assert_inequalities}, {"holds", ok}};
        }
        {
            auto& e = s.add(L + "/inequality_iii", "dD > area", r.ineq_iii || !job.assert_inequalities,
                            r.ineq_iii ? std::nullopt
                                       : std::optional<std::string>{"dD - area = " + algcheck::detail::num(r.margin_iii)});
            e.details = {{"asserted", job.assert_inequalities}, {"holds", r.ineq_iii}};
        }
        if (!r.quadratic_roots.empty()) {
            const double r1 = r.quadratic_roots[0], r2 = r.quadratic_roots[1];
            const bool ok = std::abs(r1 + r2 - m.length / 2) <= 1e-8 * (m.length / 2) &&
                            std::abs(r1 * r2 - m.area) <= 1e-8 * m.area;
            s.add(L + "/quadratic_vieta", "roots of x^2 - (L/2)x + area: r1 + r2 = L/2, r1 r2 = area", ok,
                  ok ? std::nullopt : std::optional<std::string>{"Vieta mismatch"});
        }
        {
            CheckReport probe{"equality_probe"};
            probe.cases = 1;
            if (r.equality_probe_finding) probe.fail(*r.equality_probe_finding);
            s.add_as_printed(L + "/equality_probe", "L/D = pi or L/d = pi only for circles", probe);
        }
        if (!std::holds_alternative<PolylineShape>(job.spec.kind)) {
            CurveSpec doubled = job.spec;
            doubled.sample_count *= 2;
            const auto fine = sample(doubled);
            const double l2 = arc_length(fine);
            const double a2 = region_centroid_area(fine).area;
            const double dl = std::abs(l2 - m.length) / l2;
            const double da = std::abs(a2 - m.area) / a2;
            const bool ok = dl < 1e-3 && da < 1e-3;
            s.add(L + "/convergence", "doubling N changes L and area by < 1e-3 relative", ok,
                  ok ? std::nullopt
                     : std::optional<std::string>{"dL=" + algcheck::detail::num(dl) + " dA=" + algcheck::detail::num(da)});
        }

        if (job.builtin_default) {
            if (job.label == "circle") {
                const double r0 = std::get<Circle>(job.spec.kind).r;
                std::optional<std::string> why;
                if (std::abs(r.ratio_LD - pi) > 1e-5) why = "L/D=" + algcheck::detail::num(r.ratio_LD);
                else if (std::abs(r.ratio_Ld - pi) > 1e-5) why = "L/d=" + algcheck::detail::num(r.ratio_Ld);
                else if (std::abs(r.margin_iii - (4 - pi) * r0 * r0) > 1e-4) why = "dD-area=" + algcheck::detail::num(r.margin_iii);
                else if (!(r.quadratic_discriminant < 0)) why = "discriminant=" + algcheck::detail::num(r.quadratic_discriminant);
                else if (std::abs(m.max_diameter - m.min_central_chord) > 1e-6) why = "|d - D| > 1e-6";
                s.add("circle/equality_case", "circle: L/D = pi = L/d (1e-5), dD - area = 4 - pi, no real roots", !why, why);
            } else if (job.label == "ellipse") {
                const auto& el = std::get<Ellipse>(job.spec.kind);
                const double oracle = ellipse_perimeter_agm(el.a, el.b);
                std::optional<std::string> why;
                if (std::abs(m.length - oracle) > 1e-4) why = "L=" + algcheck::detail::num(m.length) + " oracle=" + algcheck::detail::num(oracle);
                else if (!(r.margin_i_left > 0.5 && r.margin_i_right > 0.5)) why = "margins below 0.5";
                else if (std::abs(m.min_central_chord * m.max_diameter - 8) > 1e-4) why = "dD=" + algcheck::detail::num(m.min_central_chord * m.max_diameter);
                else if (!(m.min_central_chord * m.max_diameter > 2 * pi)) why = "dD <= 2 pi";
                auto& e = s.add("ellipse/perimeter_and_margins",
                                "ellipse(2,1): L = AGM perimeter (1e-4), L/D < pi < L/d with margins > 0.5, dD = 8 > 2 pi",
                                !why, why);
                e.details["agm_perimeter"] = oracle;
            } else if (job.label == "reuleaux") {
                const bool ok = std::abs(r.ratio_LD - pi) <= 1e-4;
                s.add("reuleaux/constant_width", "reuleaux(1): |L/D - pi| <= 1e-4", ok,
                      ok ? std::nullopt : std::optional<std::string>{"L/D=" + algcheck::detail::num(r.ratio_LD)});
            } else if (job.label == "square") {
                std::optional<std::string> why;
                if (std::abs(m.area - 4) > 1e-12) why = "area=" + algcheck::detail::num(m.area);
                else if (std::abs(m.centroid.x) > 1e-12 || std::abs(m.centroid.y) > 1e-12) why = "centroid off centre";
                else if (std::abs(m.min_central_chord - 2) > 1e-5) why = "d=" + algcheck::detail::num(m.min_central_chord);
                s.add("square/metrics_exact", "square side 2: area 4, centroid (0,0), d = 2", !why, why);
            }
        }

        if (opt.plot_prefix) {
            algcheck::detail::write_plot_data(opt.jobs.size() == 1 ? *opt.plot_prefix : *opt.plot_prefix + "-" + L, a);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Incidence closure suite.

struct IncidenceOptions {
    int trials = 100;
    std::uint64_t seed = 1;
    /// Directory for counterexample certificates; none are written when empty.
    std::string certificate_dir;
};

namespace detail {

inline nlohmann::ordered_json point_json(const incidence::HPoint& p) {
    if (p.at_infinity()) return p.to_string();
    const auto [x, y] = p.affine_strings();
    return nlohmann::ordered_json::array({x, y});
}

} // namespace detail

/// Full coordinates of a configuration: finite points as exact [x, y]
/// fraction strings, points at infinity as "x:y:0".
[[nodiscard]] inline nlohmann::ordered_json config_to_json(const incidence::Config& cfg) {
    nlohmann::ordered_json j;
    j["seed"] = cfg.seed;
    j["retries"] = cfg.retries;
    nlohmann::ordered_json tri;
    for (std::size_t i = 0; i < cfg.triangles.size(); ++i) {
        const auto& t = cfg.triangles[i];
        tri[incidence::triangle_names[i]] = nlohmann::ordered_json::array(
            {detail::point_json(t.v1()), detail::point_json(t.v2()), detail::point_json(t.v3())});
    }
    j["triangles"] = std::move(tri);
    return j;
}

/// Exact coordinates plus the failed parts of the conclusion.
[[nodiscard]] inline nlohmann::ordered_json conclusion_certificate(const incidence::Config& cfg,
                                                                  const incidence::ConclusionResult& c) {
    auto cert = config_to_json(cfg);
    cert["collinear"] = c.collinear_ok;
    cert["concurrent"] = c.concurrent_ok;
    cert["witness"] = c.witness_verified;
    if (c.note) cert["note"] = *c.note;
    return cert;
}

/// Writes <dir>/incidence_counterexample_seed<N>.json and returns the path.
inline std::string write_certificate(const std::string& dir, const nlohmann::ordered_json& cert) {
    const std::string path = dir + "/incidence_counterexample_seed" + cert["seed"].dump() + ".json";
    std::ofstream f{path};
    if (!f) throw ValidationError("cannot write certificate '" + path + "'");
    f << cert.dump(2) << '\n';
    return path;
}

[[nodiscard]] inline SuiteReport run_incidence_suite(const IncidenceOptions& opt) {
    using namespace incidence;
    if (opt.trials < 1) throw PreconditionError("incidence suite needs at least one trial");
    SuiteReport s{"incidence"};
    s.seeds.push_back(opt.seed);
    CheckReport hyp{"hypotheses"}, concl{"conclusion"}, neg{"negative_control"}, dual_probe{"dual_probe"};
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    Stopwatch w;
    for (int i = 0; i < opt.trials; ++i) {
        const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
        const std::string who = "seed=" + std::to_string(seed) + " ";
        nlohmann::ordered_json row{{"seed", seed}};
        try {
            const auto cfg = build_config(seed);
            row["retries"] = cfg.retries;

            ++hyp.cases;
            for (const auto& h : check_hypotheses(cfg)) {
                if (!h.holds) hyp.fail(who + h.relation + " fails " + config_to_json(cfg).dump());
            }

            ++concl.cases;
            const auto c = verify_conclusion(cfg);
            row["collinear"] = c.collinear_ok;
            row["concurrent"] = c.concurrent_ok;
            row["witness"] = c.witness_verified;
            if (!c.holds()) {
                const auto cert = conclusion_certificate(cfg, c);
                concl.fail(who + cert.dump());
                if (!opt.certificate_dir.empty()) write_certificate(opt.certificate_dir, cert);
            }

            ++neg.cases;
            const auto bad = perturbed(cfg, seed);
            const auto nc = verify_conclusion(bad);
            row["negative_control_rejected"] = !nc.collinear_ok;
            if (nc.collinear_ok) neg.fail(who + "perturbed configuration still collinear");

            ++dual_probe.cases;
            const auto dcfg = dual(cfg);
            const auto dres = verify_conclusion(dcfg);
            const bool dual_ok = all_hypotheses_hold(dcfg) && dres.holds();
            const bool dual_neg_rejected = !verify_conclusion(dual(bad)).holds();
            bool involution = true;
            const auto back = dual(dcfg);
            for (std::size_t k = 0; k < cfg.triangles.size(); ++k) involution = involution && back.triangles[k] == cfg.triangles[k];
            row["dual_passes"] = dual_ok;
            if (!dual_ok) dual_probe.fail(who + "dual configuration fails the closure check");
            else if (!dual_neg_rejected) dual_probe.fail(who + "dual of the perturbed configuration passes");
            else if (!involution) dual_probe.fail(who + "dualizing twice does not restore the configuration");
        } catch (const ConstructionError& e) {
            ++hyp.cases;
            hyp.fail(who + e.what());
            row["error"] = e.what();
        }
        per.push_back(std::move(row));
    }
    const double ms = w.ms() / 4;
    s.add("hypotheses", "all 27 hypothesis pairs T ni U hold exactly", hyp, ms).details["trials"] = per;
    s.add("conclusion", "P1 Q1 R1 collinear and P2P3, Q2Q3, R2R3 concurrent; witness O' with P, Q, R ni O'", concl, ms);
    s.add("negative_control", "moving P1 off line Q1R1 breaks the conclusion", neg, ms);
    s.add("dual_probe", "the point/line dual configuration satisfies the same closure", dual_probe, ms);
    return s;
}

// ---------------------------------------------------------------------------

/// Every suite at its default scale, each on its own thread. The report
/// order is fixed by sorting at serialization time.
[[nodiscard]] inline std::vector<SuiteReport> run_all() {
    CurveOptions curves;
    curves.jobs = default_curve_jobs();
    std::vector<std::future<SuiteReport>> jobs;
    jobs.push_back(std::async(std::launch::async, [] { return run_boolean_suite({}); }));
    jobs.push_back(std::async(std::launch::async, [] { return run_braid_suite({}); }));
    jobs.push_back(std::async(std::launch::async, [] { return run_matrix_suite({}); }));
    jobs.push_back(std::async(std::launch::async, [curves] { return run_curve_suite(curves); }));
    jobs.push_back(std::async(std::launch::async, [] { return run_incidence_suite({}); }));
    std::vector<SuiteReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

} // namespace algcheck
