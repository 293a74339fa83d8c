#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algcheck/common.hpp"
#include "algcheck/rational.hpp"

namespace algcheck::incidence {

/// Homogeneous triple over the rationals, kept as a primitive integer vector
/// (gcd 1, first nonzero entry positive). Projectively equal triples are
/// therefore equal component-wise.
class HVec {
  public:
    HVec() = default;
    HVec(BigInt x, BigInt y, BigInt w) : c_{std::move(x), std::move(y), std::move(w)} { normalize(); }
    HVec(const Rational& x, const Rational& y, const Rational& w) {
        using boost::multiprecision::denominator;
        using boost::multiprecision::lcm;
        using boost::multiprecision::numerator;
        const BigInt l = lcm(lcm(denominator(x), denominator(y)), denominator(w));
        const Rational s{l};
        c_ = {numerator(x * s), numerator(y * s), numerator(w * s)};
        normalize();
    }

    [[nodiscard]] const BigInt& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

    friend bool operator==(const HVec&, const HVec&) = default;

  protected:
    void normalize() {
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(c_[0], c_[1]), c_[2]);
        if (g == 0) return;
        for (const auto& v : c_) {
            if (v != 0) {
                if (v < 0) g = -g;
                break;
            }
        }
        for (auto& v : c_) v /= g;
    }

    std::array<BigInt, 3> c_;
};

[[nodiscard]] inline std::array<BigInt, 3> cross3(const HVec& u, const HVec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
[[nodiscard]] inline BigInt dot3(const HVec& u, const HVec& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }
[[nodiscard]] inline BigInt det3(const HVec& u, const HVec& v, const HVec& w) {
    const auto c = cross3(v, w);
    return u[0] * c[0] + u[1] * c[1] + u[2] * c[2];
}

/// Point (x : y : w) of the projective plane.
class HPoint : public HVec {
  public:
    HPoint() = default;
    HPoint(BigInt x, BigInt y, BigInt w) : HVec(std::move(x), std::move(y), std::move(w)) {
        if (is_zero()) throw ValidationError("homogeneous point cannot be (0:0:0)");
    }
    /// Affine point (x, y) = (x : y : 1).
    static HPoint affine(const Rational& x, const Rational& y) { return HPoint{HVec{x, y, Rational{1}}}; }

    [[nodiscard]] bool at_infinity() const { return (*this)[2] == 0; }

    /// "x:y:w" with integer coordinates.
    [[nodiscard]] std::string to_string() const {
        return (*this)[0].str() + ":" + (*this)[1].str() + ":" + (*this)[2].str();
    }
    /// Affine coordinates as exact fraction strings; requires a finite point.
    [[nodiscard]] std::pair<std::string, std::string> affine_strings() const {
        return {to_fraction_string(Rational{(*this)[0], (*this)[2]}), to_fraction_string(Rational{(*this)[1], (*this)[2]})};
    }

    explicit HPoint(const HVec& v) : HVec(v) {
        if (is_zero()) throw ValidationError("homogeneous point cannot be (0:0:0)");
    }
};

/// Line l1 x + l2 y + l3 w = 0.
class HLine : public HVec {
  public:
    HLine() = default;
    HLine(BigInt l1, BigInt l2, BigInt l3) : HVec(std::move(l1), std::move(l2), std::move(l3)) {
        if (is_zero()) throw ValidationError("line coefficients cannot all be zero");
    }
    explicit HLine(const HVec& v) : HVec(v) {
        if (is_zero()) throw ValidationError("line coefficients cannot all be zero");
    }
    [[nodiscard]] std::string to_string() const {
        return "[" + (*this)[0].str() + "," + (*this)[1].str() + "," + (*this)[2].str() + "]";
    }
};

[[nodiscard]] inline bool incident(const HPoint& p, const HLine& l) { return dot3(p, l) == 0; }

/// Exact join of two distinct points.
[[nodiscard]] inline HLine line_through(const HPoint& p, const HPoint& q) {
    auto c = cross3(p, q);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw DomainError("line_through: coincident points " + p.to_string());
    return HLine{std::move(c[0]), std::move(c[1]), std::move(c[2])};
}

/// Exact intersection of two distinct lines.
[[nodiscard]] inline HPoint meet(const HLine& l, const HLine& m) {
    auto c = cross3(l, m);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw DomainError("meet: coincident lines " + l.to_string());
    return HPoint{std::move(c[0]), std::move(c[1]), std::move(c[2])};
}

[[nodiscard]] inline bool collinear(const HPoint& p, const HPoint& q, const HPoint& r) { return det3(p, q, r) == 0; }
[[nodiscard]] inline bool concurrent(const HLine& l, const HLine& m, const HLine& n) { return det3(l, m, n) == 0; }

/// Nondegenerate triangle: three non-collinear vertices.
class Triangle {
  public:
    Triangle(HPoint a, HPoint b, HPoint c) : v_{std::move(a), std::move(b), std::move(c)} {
        if (collinear(v_[0], v_[1], v_[2])) throw DomainError("degenerate triangle (collinear vertices)");
    }

    [[nodiscard]] const HPoint& v1() const { return v_[0]; }
    [[nodiscard]] const HPoint& v2() const { return v_[1]; }
    [[nodiscard]] const HPoint& v3() const { return v_[2]; }
    [[nodiscard]] const HPoint& operator[](std::size_t i) const { return v_[i]; }
    /// Side opposite the first vertex.
    [[nodiscard]] HLine side23() const { return line_through(v_[1], v_[2]); }

    friend bool operator==(const Triangle&, const Triangle&) = default;

  private:
    std::array<HPoint, 3> v_;
};

/// A "ni" B: A's first vertex lies on B's side v2v3 and B's first vertex lies on A's side v2v3.
[[nodiscard]] inline bool ni(const Triangle& a, const Triangle& b) {
    return incident(a.v1(), b.side23()) && incident(b.v1(), a.side23());
}

/// Dual triangle: vertex k becomes the coefficient vector of the side opposite
/// vertex k. The relation ni is preserved, and applying this twice returns the
/// original triangle projectively.
[[nodiscard]] inline Triangle dual(const Triangle& t) {
    const auto as_point = [](const HLine& l) { return HPoint{HVec(l)}; };
    return {as_point(line_through(t.v2(), t.v3())), as_point(line_through(t.v3(), t.v1())),
            as_point(line_through(t.v1(), t.v2()))};
}

/// Names of the triangles in the closure configuration, in storage order.
enum class Tri : std::uint8_t { O, X, Y, Z, A, Ap, B, Bp, C, Cp, M, Mp, N, Np, S, Sp, P, Q, R };
inline constexpr std::size_t triangle_count = 19;
inline constexpr std::array<const char*, triangle_count> triangle_names = {
    "O", "X", "Y", "Z", "A", "A'", "B", "B'", "C", "C'", "M", "M'", "N", "N'", "S", "S'", "P", "Q", "R"};

/// Every hypothesis pair (first ni second) of the closure theorem.
inline constexpr std::array<std::pair<Tri, Tri>, 27> hypotheses = {{
    {Tri::O, Tri::X},  {Tri::O, Tri::Y},  {Tri::O, Tri::Z},
    {Tri::X, Tri::A},  {Tri::X, Tri::Ap}, {Tri::Y, Tri::B},  {Tri::Y, Tri::Bp}, {Tri::Z, Tri::C},  {Tri::Z, Tri::Cp},
    {Tri::A, Tri::M},  {Tri::B, Tri::M},  {Tri::Ap, Tri::Mp}, {Tri::Bp, Tri::Mp},
    {Tri::A, Tri::N},  {Tri::C, Tri::N},  {Tri::Ap, Tri::Np}, {Tri::Cp, Tri::Np},
    {Tri::B, Tri::S},  {Tri::C, Tri::S},  {Tri::Bp, Tri::Sp}, {Tri::Cp, Tri::Sp},
    {Tri::M, Tri::P},  {Tri::Mp, Tri::P}, {Tri::N, Tri::Q},  {Tri::Np, Tri::Q}, {Tri::S, Tri::R},  {Tri::Sp, Tri::R},
}};

struct Config {
    std::vector<Triangle> triangles;  // indexed by Tri
    std::uint64_t seed = 0;
    int retries = 0;

    [[nodiscard]] const Triangle& operator[](Tri t) const { return triangles[static_cast<std::size_t>(t)]; }
    [[nodiscard]] Triangle& operator[](Tri t) { return triangles[static_cast<std::size_t>(t)]; }
};

struct HypothesisCheck {
    std::string relation;  // e.g. "X ni A"
    bool holds = false;
};

[[nodiscard]] inline std::vector<HypothesisCheck> check_hypotheses(const Config& cfg) {
    std::vector<HypothesisCheck> out;
    out.reserve(hypotheses.size());
    for (const auto& [a, b] : hypotheses) {
        out.push_back({std::string(triangle_names[static_cast<std::size_t>(a)]) + " ni " +
                           triangle_names[static_cast<std::size_t>(b)],
                       ni(cfg[a], cfg[b])});
    }
    return out;
}

[[nodiscard]] inline bool all_hypotheses_hold(const Config& cfg) {
    for (const auto& h : check_hypotheses(cfg))
        if (!h.holds) return false;
    return true;
}

/// Raised when the seeded construction cannot produce a nondegenerate configuration.
class ConstructionError : public std::runtime_error {
  public:
    ConstructionError(const std::string& step, int attempts)
        : std::runtime_error("configuration construction failed at step '" + step + "' after " +
                             std::to_string(attempts) + " attempts"),
          step_{step} {}
    [[nodiscard]] const std::string& step() const { return step_; }

  private:
    std::string step_;
};

inline constexpr int free_coordinate_bound = 997;
inline constexpr int construction_retry_cap = 1000;

namespace detail {

struct Degenerate {
    std::string step;
};

class Drawer {
  public:
    explicit Drawer(std::uint64_t seed) : rng_{seed} {}

    /// p/q with |p| <= 997 and 1 <= q <= 997.
    Rational small_rational(bool nonzero = false) {
        for (;;) {
            const auto num = static_cast<long>(rng_() % (2 * free_coordinate_bound + 1)) - free_coordinate_bound;
            const auto den = static_cast<long>(rng_() % free_coordinate_bound) + 1;
            if (!nonzero || num != 0) return Rational{num, den};
        }
    }

    HPoint free_point() { return HPoint::affine(small_rational(), small_rational()); }

    /// Random finite point on `l`: a rational combination of two points spanning it.
    HPoint point_on(const HLine& l) {
        std::vector<HPoint> span;
        const HLine axes[3] = {HLine{1, 0, 0}, HLine{0, 1, 0}, HLine{0, 0, 1}};
        for (const auto& ax : axes) {
            auto c = cross3(l, ax);
            if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
            HPoint p{c[0], c[1], c[2]};
            if (span.empty() || !(span.front() == p)) span.push_back(std::move(p));
            if (span.size() == 2) break;
        }
        const Rational s = small_rational(true);
        const Rational t = small_rational(true);
        const auto& u = span[0];
        const auto& v = span[1];
        HVec mix{s * Rational{u[0]} + t * Rational{v[0]}, s * Rational{u[1]} + t * Rational{v[1]},
                 s * Rational{u[2]} + t * Rational{v[2]}};
        if (mix.is_zero()) throw Degenerate{"point on line"};
        HPoint p{mix};
        if (p.at_infinity()) throw Degenerate{"point on line at infinity"};
        return p;
    }

  private:
    std::mt19937_64 rng_;
};

template <typename F>
auto guarded(const std::string& step, F&& f) {
    try {
        return f();
    } catch (const DomainError&) {
        throw Degenerate{step};
    } catch (const ValidationError&) {
        throw Degenerate{step};
    }
}

inline HPoint finite(HPoint p, const std::string& step) {
    if (p.at_infinity()) throw Degenerate{step};
    return p;
}

/// T with parent "ni" T: T1 on the parent's side v2v3, T2 free, T3 on line(T2, parent v1).
inline Triangle attach(Drawer& d, const Triangle& parent, const std::string& step) {
    return guarded(step, [&] {
        HPoint t1 = d.point_on(parent.side23());
        HPoint t2 = d.free_point();
        HPoint t3 = d.point_on(line_through(t2, parent.v1()));
        return Triangle{std::move(t1), std::move(t2), std::move(t3)};
    });
}

/// T with L "ni" T and R "ni" T: T1 = meet of both sides v2v3, side T2T3 = line(L1, R1).
inline Triangle bridge(Drawer& d, const Triangle& l, const Triangle& r, const std::string& step) {
    return guarded(step, [&] {
        HPoint t1 = finite(meet(l.side23(), r.side23()), step);
        const HLine side = line_through(l.v1(), r.v1());
        HPoint t2 = d.point_on(side);
        HPoint t3 = d.point_on(side);
        if (t2 == t3) throw Degenerate{step};
        return Triangle{std::move(t1), std::move(t2), std::move(t3)};
    });
}

} // namespace detail

/// Seeded random configuration satisfying every hypothesis pair exactly.
///
/// Free coordinates are small rationals; any degenerate draw (coincident
/// points, parallel sides, collinear vertices, points at infinity) restarts
/// the whole chain. Throws ConstructionError after the retry cap.
[[nodiscard]] inline Config build_config(std::uint64_t seed) {
    detail::Drawer d{seed};
    std::string last_step = "start";
    for (int attempt = 0; attempt < construction_retry_cap; ++attempt) {
        try {
            std::vector<std::optional<Triangle>> t(triangle_count);
            const auto at = [&](Tri k) -> const Triangle& { return *t[static_cast<std::size_t>(k)]; };
            const auto put = [&](Tri k, Triangle v) { t[static_cast<std::size_t>(k)] = std::move(v); };

            put(Tri::O, detail::guarded("O", [&] { return Triangle{d.free_point(), d.free_point(), d.free_point()}; }));
            for (Tri k : {Tri::X, Tri::Y, Tri::Z}) {
                put(k, detail::attach(d, at(Tri::O), triangle_names[static_cast<std::size_t>(k)]));
            }
            const std::array<std::array<Tri, 3>, 3> children{{{Tri::X, Tri::A, Tri::Ap},
                                                              {Tri::Y, Tri::B, Tri::Bp},
                                                              {Tri::Z, Tri::C, Tri::Cp}}};
            for (const auto& [parent, c1, c2] : children) {
                put(c1, detail::attach(d, at(parent), triangle_names[static_cast<std::size_t>(c1)]));
                put(c2, detail::attach(d, at(parent), triangle_names[static_cast<std::size_t>(c2)]));
            }
            const std::array<std::array<Tri, 3>, 6> second{{{Tri::A, Tri::B, Tri::M},
                                                            {Tri::Ap, Tri::Bp, Tri::Mp},
                                                            {Tri::A, Tri::C, Tri::N},
                                                            {Tri::Ap, Tri::Cp, Tri::Np},
                                                            {Tri::B, Tri::C, Tri::S},
                                                            {Tri::Bp, Tri::Cp, Tri::Sp}}};
            for (const auto& [l, r, out] : second) {
                put(out, detail::bridge(d, at(l), at(r), triangle_names[static_cast<std::size_t>(out)]));
            }
            const std::array<std::array<Tri, 3>, 3> third{
                {{Tri::M, Tri::Mp, Tri::P}, {Tri::N, Tri::Np, Tri::Q}, {Tri::S, Tri::Sp, Tri::R}}};
            for (const auto& [l, r, out] : third) {
                put(out, detail::bridge(d, at(l), at(r), triangle_names[static_cast<std::size_t>(out)]));
            }

            Config cfg;
            cfg.seed = seed;
            cfg.retries = attempt;
            for (auto& tri : t) cfg.triangles.push_back(std::move(*tri));
            if (!all_hypotheses_hold(cfg)) throw detail::Degenerate{"hypothesis re-check"};
            return cfg;
        } catch (const detail::Degenerate& e) {
            last_step = e.step;
        }
    }
    throw ConstructionError(last_step, construction_retry_cap);
}

struct ConclusionResult {
    /// P1, Q1, R1 collinear.
    bool collinear_ok = false;
    /// Sides P2P3, Q2Q3, R2R3 concurrent.
    bool concurrent_ok = false;
    /// Nondegenerate O' with P, Q, R all "ni" O', when one exists.
    std::optional<Triangle> o_prime;
    bool witness_verified = false;
    std::optional<std::string> note;

    [[nodiscard]] bool holds() const { return collinear_ok && concurrent_ok && o_prime && witness_verified; }
};

namespace detail {

/// Two distinct points spanning `l`.
inline std::pair<HPoint, HPoint> span_of(const HLine& l) {
    std::vector<HPoint> pts;
    const HLine axes[3] = {HLine{1, 0, 0}, HLine{0, 1, 0}, HLine{0, 0, 1}};
    for (const auto& ax : axes) {
        auto c = cross3(l, ax);
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        HPoint p{c[0], c[1], c[2]};
        if (pts.empty() || !(pts.front() == p)) pts.push_back(std::move(p));
        if (pts.size() == 2) return {pts[0], pts[1]};
    }
    throw DomainError("line has no two distinct axis intersections");
}

/// A line through every point in `pts`, which are known to be collinear.
inline HLine common_line(const std::vector<HPoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!(pts[i] == pts[j])) return line_through(pts[i], pts[j]);
    // All coincide: any line through the point.
    const HPoint other = pts[0] == HPoint{0, 0, 1} ? HPoint{1, 0, 1} : HPoint{0, 0, 1};
    return line_through(pts[0], other);
}

/// A point on every line in `ls`, which are known to be concurrent.
inline HPoint common_point(const std::vector<HLine>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (!(ls[i] == ls[j])) return meet(ls[i], ls[j]);
    return span_of(ls[0]).first;
}

} // namespace detail

/// Existence of O' with P, Q, R "ni" O' is equivalent to (P1, Q1, R1 collinear)
/// and (P2P3, Q2Q3, R2R3 concurrent). When both hold, a witness is built with
/// O'1 at the common point and O'2, O'3 spanning the common line, then re-checked.
[[nodiscard]] inline ConclusionResult verify_conclusion(const Config& cfg) {
    ConclusionResult out;
    const auto& p = cfg[Tri::P];
    const auto& q = cfg[Tri::Q];
    const auto& r = cfg[Tri::R];
    out.collinear_ok = collinear(p.v1(), q.v1(), r.v1());
    out.concurrent_ok = concurrent(p.side23(), q.side23(), r.side23());
    if (!out.collinear_ok || !out.concurrent_ok) return out;

    const HLine line = detail::common_line({p.v1(), q.v1(), r.v1()});
    const HPoint apex = detail::common_point({p.side23(), q.side23(), r.side23()});
    if (incident(apex, line)) {
        out.note = "common point lies on the common line; no nondegenerate O' exists";
        return out;
    }
    auto [u, v] = detail::span_of(line);
    out.o_prime = Triangle{apex, std::move(u), std::move(v)};
    out.witness_verified = ni(p, *out.o_prime) && ni(q, *out.o_prime) && ni(r, *out.o_prime);
    return out;
}

/// Copy of `cfg` with P's first vertex moved to a random point off the line
/// Q1R1 (P stays nondegenerate). The collinearity conclusion must then fail.
[[nodiscard]] inline Config perturbed(const Config& cfg, std::uint64_t seed) {
    detail::Drawer d{seed ^ 0x9E3779B97F4A7C15ULL};
    const auto& q1 = cfg[Tri::Q].v1();
    const auto& r1 = cfg[Tri::R].v1();
    for (int attempt = 0; attempt < construction_retry_cap; ++attempt) {
        HPoint moved = d.free_point();
        if (collinear(moved, q1, r1)) continue;
        const auto& p = cfg[Tri::P];
        if (collinear(moved, p.v2(), p.v3())) continue;
        Config out = cfg;
        out[Tri::P] = Triangle{std::move(moved), p.v2(), p.v3()};
        return out;
    }
    throw ConstructionError("perturbation", construction_retry_cap);
}

/// Point/line dual of every triangle in the configuration.
[[nodiscard]] inline Config dual(const Config& cfg) {
    Config out;
    out.seed = cfg.seed;
    out.retries = cfg.retries;
    for (const auto& t : cfg.triangles) out.triangles.push_back(dual(t));
    return out;
}

} // namespace algcheck::incidence
