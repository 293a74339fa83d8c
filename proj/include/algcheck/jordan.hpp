#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algcheck/common.hpp"

namespace algcheck::jordan {

struct Point {
    double x = 0;
    double y = 0;

    friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
    friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
[[nodiscard]] inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
[[nodiscard]] inline double dist2(Point p, Point q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

using Polyline = std::vector<Point>;  // closed: the last point connects back to the first

struct Circle {
    double r = 1;
};
struct Ellipse {
    double a = 2;
    double b = 1;
};
/// Constant-width curve: three arcs of radius `width` centred on the vertices
/// of an equilateral triangle of side `width`.
struct Reuleaux {
    double width = 1;
};
struct PolylineShape {
    Polyline points;
};

struct CurveSpec {
    std::variant<Circle, Ellipse, Reuleaux, PolylineShape> kind;
    int sample_count = 4096;

    [[nodiscard]] bool is_circle() const { return std::holds_alternative<Circle>(kind); }
    [[nodiscard]] std::string name() const {
        switch (kind.index()) {
        case 0: return "circle";
        case 1: return "ellipse";
        case 2: return "reuleaux";
        default: return "polyline";
        }
    }
};

namespace detail {

inline bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
    const auto orient = [](Point a, Point b, Point c) {
        const double v = cross(b - a, c - a);
        return (v > 0) - (v < 0);
    };
    const auto on_segment = [](Point a, Point b, Point c) {
        return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
               c.y <= std::max(a.y, b.y);
    };
    const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

} // namespace detail

/// Pairwise test over non-adjacent edges; O(N^2).
[[nodiscard]] inline bool is_simple(const Polyline& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i], b = poly[(i + 1) % n];
        if (a == b) return false;
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (detail::segments_intersect(a, b, poly[j], poly[(j + 1) % n])) return false;
        }
    }
    return true;
}

inline void validate(const CurveSpec& spec) {
    const auto positive = [](double v, const char* what) {
        if (!(v > 0) || !std::isfinite(v)) throw ValidationError(std::string(what) + " must be positive and finite");
    };
    if (const auto* c = std::get_if<Circle>(&spec.kind)) positive(c->r, "circle radius");
    if (const auto* e = std::get_if<Ellipse>(&spec.kind)) {
        positive(e->a, "ellipse semi-axis a");
        positive(e->b, "ellipse semi-axis b");
    }
    if (const auto* r = std::get_if<Reuleaux>(&spec.kind)) positive(r->width, "reuleaux width");
    if (const auto* p = std::get_if<PolylineShape>(&spec.kind)) {
        if (p->points.size() < 3) throw ValidationError("polyline needs at least 3 points");
        for (const auto& q : p->points) {
            if (!std::isfinite(q.x) || !std::isfinite(q.y)) throw ValidationError("polyline point not finite");
        }
        if (!is_simple(p->points)) throw ValidationError("polyline is not a simple closed curve");
    } else if (spec.sample_count < 64) {
        throw ValidationError("sample_count must be >= 64");
    }
}

/// Points in counter-clockwise traversal order, uniform in the curve parameter.
[[nodiscard]] inline Polyline sample(const CurveSpec& spec) {
    validate(spec);
    constexpr double two_pi = 2 * std::numbers::pi;
    const int n = spec.sample_count;
    Polyline out;
    if (const auto* p = std::get_if<PolylineShape>(&spec.kind)) return p->points;
    out.reserve(n);
    if (const auto* c = std::get_if<Circle>(&spec.kind)) {
        for (int k = 0; k < n; ++k) {
            const double t = two_pi * k / n;
            out.push_back({c->r * std::cos(t), c->r * std::sin(t)});
        }
    } else if (const auto* e = std::get_if<Ellipse>(&spec.kind)) {
        for (int k = 0; k < n; ++k) {
            const double t = two_pi * k / n;
            out.push_back({e->a * std::cos(t), e->b * std::sin(t)});
        }
    } else if (const auto* r = std::get_if<Reuleaux>(&spec.kind)) {
        const double w = r->width;
        const double circum = w / std::sqrt(3.0);
        Point v[3];
        for (int k = 0; k < 3; ++k) {
            const double ang = std::numbers::pi / 2 + k * two_pi / 3;
            v[k] = {circum * std::cos(ang), circum * std::sin(ang)};
        }
        // Arc j runs from v[j] to v[j+1] around the opposite vertex v[j+2].
        // Each arc starts on its vertex so no corner is cut.
        for (int j = 0; j < 3; ++j) {
            const int count = n / 3 + (j < n % 3 ? 1 : 0);
            const Point centre = v[(j + 2) % 3];
            const Point start = v[j] - centre;
            const double base = std::atan2(start.y, start.x);
            out.push_back(v[j]);
            for (int k = 1; k < count; ++k) {
                const double ang = base + (std::numbers::pi / 3) * k / count;
                out.push_back(centre + Point{w * std::cos(ang), w * std::sin(ang)});
            }
        }
    }
    return out;
}

[[nodiscard]] inline double arc_length(const Polyline& poly) {
    double l = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) l += std::sqrt(dist2(poly[i], poly[(i + 1) % poly.size()]));
    return l;
}

/// Andrew's monotone chain; returns the strict hull counter-clockwise.
[[nodiscard]] inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Largest pairwise distance via convex hull and rotating calipers.
[[nodiscard]] inline double max_diameter(const Polyline& poly) {
    if (poly.size() < 3) throw ValidationError("diameter needs at least 3 points");
    const auto hull = convex_hull(poly);
    if (hull.size() < 3) throw ValidationError("degenerate (collinear) point set");
    const std::size_t h = hull.size();
    double best = 0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const Point a = hull[i], b = hull[(i + 1) % h];
        while (std::abs(cross(b - a, hull[(j + 1) % h] - a)) > std::abs(cross(b - a, hull[j] - a))) j = (j + 1) % h;
        best = std::max({best, dist2(a, hull[j]), dist2(b, hull[j])});
        // Ties between parallel edges: the next vertex can be equally far.
        best = std::max({best, dist2(a, hull[(j + 1) % h]), dist2(b, hull[(j + 1) % h])});
    }
    return std::sqrt(best);
}

struct CentroidArea {
    Point centroid;
    double area = 0;  // absolute value of the shoelace area
};

/// Centroid of the enclosed region (uniform lamina), by the shoelace formulas.
[[nodiscard]] inline CentroidArea region_centroid_area(const Polyline& poly) {
    double a2 = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point p = poly[i], q = poly[(i + 1) % poly.size()];
        const double w = cross(p, q);
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (a2 == 0) throw ValidationError("polyline encloses zero area");
    return {{cx / (3 * a2), cy / (3 * a2)}, std::abs(a2) / 2};
}

/// Distance from an interior centre to the boundary along each direction.
///
/// Requires the polyline to be star-shaped about the centre: every ray meets
/// the boundary exactly once, which holds iff every edge subtends a positive
/// angle of one orientation and the angles sum to one full turn.
class RadialProfile {
  public:
    RadialProfile(const Polyline& poly, Point centre) : c_{centre} {
        const std::size_t n = poly.size();
        double turn = 0;
        int sign = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Point p = poly[i] - c_, q = poly[(i + 1) % n] - c_;
            const double cr = cross(p, q);
            const int s = (cr > 0) - (cr < 0);
            if (s == 0 || (sign != 0 && s != sign)) {
                throw ValidationError("curve is not star-shaped about its centroid; central chord undefined");
            }
            sign = s;
            turn += std::atan2(cr, dot(p, q));
        }
        if (std::abs(std::abs(turn) - 2 * std::numbers::pi) > 1e-6) {
            throw ValidationError("curve winds around its centroid more than once");
        }
        pts_.assign(poly.begin(), poly.end());
        if (sign < 0) std::reverse(pts_.begin(), pts_.end());
        angles_.reserve(n + 1);
        const double base = angle_of(pts_[0]);
        for (const auto& p : pts_) angles_.push_back(base + wrap(angle_of(p) - base));
        angles_.push_back(base + 2 * std::numbers::pi);
        // Monotone by the orientation check; guard against atan2 rounding at the seam.
        for (std::size_t i = 1; i < angles_.size(); ++i) angles_[i] = std::max(angles_[i], angles_[i - 1]);
    }

    [[nodiscard]] double radius(double theta) const {
        const double t = angles_.front() + wrap(theta - angles_.front());
        auto it = std::upper_bound(angles_.begin(), angles_.end(), t);
        std::size_t i = it == angles_.begin() ? 0 : static_cast<std::size_t>(it - angles_.begin()) - 1;
        if (i >= pts_.size()) i = pts_.size() - 1;
        const Point p = pts_[i] - c_, q = pts_[(i + 1) % pts_.size()] - c_;
        const Point u{std::cos(theta), std::sin(theta)};
        const Point e = q - p;
        return cross(p, e) / cross(u, e);
    }

    [[nodiscard]] double chord(double theta) const { return radius(theta) + radius(theta + std::numbers::pi); }

  private:
    double angle_of(Point p) const { return std::atan2(p.y - c_.y, p.x - c_.x); }
    static double wrap(double a) {
        constexpr double two_pi = 2 * std::numbers::pi;
        a = std::fmod(a, two_pi);
        return a < 0 ? a + two_pi : a;
    }

    Point c_;
    Polyline pts_;
    std::vector<double> angles_;
};

inline constexpr int chord_sweep_directions = 1024;
inline constexpr double chord_theta_tolerance = 1e-8;

/// Shortest chord through `centre`: a 1024-direction sweep over [0, pi),
/// then golden-section refinement around the best local minima.
[[nodiscard]] inline double min_central_chord(const Polyline& poly, Point centre) {
    const RadialProfile prof{poly, centre};
    constexpr int n = chord_sweep_directions;
    constexpr double step = std::numbers::pi / n;
    std::vector<double> vals(n);
    for (int k = 0; k < n; ++k) vals[k] = prof.chord(k * step);

    std::vector<int> minima;
    for (int k = 0; k < n; ++k) {
        if (vals[k] <= vals[(k + n - 1) % n] && vals[k] <= vals[(k + 1) % n]) minima.push_back(k);
    }
    std::sort(minima.begin(), minima.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    if (minima.size() > 8) minima.resize(8);

    double best = *std::min_element(vals.begin(), vals.end());
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    for (int k : minima) {
        double lo = (k - 1) * step, hi = (k + 1) * step;
        double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
        double f1 = prof.chord(x1), f2 = prof.chord(x2);
        while (hi - lo > chord_theta_tolerance) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = prof.chord(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = prof.chord(x2);
            }
        }
        best = std::min({best, f1, f2});
    }
    return best;
}

/// Ellipse perimeter from the arithmetic-geometric mean:
///   L = 2 pi / AGM(a, b) * (a^2 - sum_{n>=0} 2^(n-1) c_n^2),  c_0^2 = a^2 - b^2.
[[nodiscard]] inline double ellipse_perimeter_agm(double a, double b) {
    double an = std::max(a, b), bn = std::min(a, b);
    double sum = 0.5 * (an * an - bn * bn);
    double pow2 = 0.5;
    for (int i = 0; i < 64 && an - bn > 1e-16 * an; ++i) {
        const double cn = (an - bn) / 2;
        const double next_a = (an + bn) / 2;
        bn = std::sqrt(an * bn);
        an = next_a;
        pow2 *= 2;
        sum += pow2 * cn * cn;
    }
    const double major = std::max(a, b);
    return 4 * std::numbers::pi / (an + bn) * (major * major - sum);
}

struct CurveMetrics {
    double length = 0;
    double max_diameter = 0;
    double min_central_chord = 0;
    double area = 0;
    Point centroid;
};

struct ConjectureReport {
    double ratio_LD = 0;
    double ratio_Ld = 0;
    /// pi - L/D; the left inequality holds when this is >= -margin_tolerance.
    double margin_i_left = 0;
    /// L/d - pi.
    double margin_i_right = 0;
    /// dD - area.
    double margin_iii = 0;
    bool ineq_i_left = false;
    bool ineq_i_right = false;
    bool ineq_iii = false;
    /// Discriminant (L/2)^2 - 4 area of x^2 - (L/2) x + area = 0.
    double quadratic_discriminant = 0;
    std::vector<double> quadratic_roots;
    /// L/D or L/d equals pi within equality_tolerance.
    bool left_equality = false;
    bool right_equality = false;
    /// Set when an equality case occurs on a curve that is not a circle.
    std::optional<std::string> equality_probe_finding;
    std::string center_of_mass = "region centroid (uniform lamina)";
};

inline constexpr double margin_tolerance = 1e-6;
inline constexpr double equality_tolerance = 1e-4;

struct Analysis {
    CurveMetrics metrics;
    ConjectureReport report;
    Polyline samples;
};

[[nodiscard]] inline Analysis analyze(const CurveSpec& spec) {
    Analysis out;
    out.samples = sample(spec);
    auto& m = out.metrics;
    const auto ca = region_centroid_area(out.samples);
    m.length = arc_length(out.samples);
    m.max_diameter = max_diameter(out.samples);
    m.area = ca.area;
    m.centroid = ca.centroid;
    m.min_central_chord = min_central_chord(out.samples, ca.centroid);

    constexpr double pi = std::numbers::pi;
    auto& r = out.report;
    r.ratio_LD = m.length / m.max_diameter;
    r.ratio_Ld = m.length / m.min_central_chord;
    r.margin_i_left = pi - r.ratio_LD;
    r.margin_i_right = r.ratio_Ld - pi;
    r.margin_iii = m.min_central_chord * m.max_diameter - m.area;
    r.ineq_i_left = r.margin_i_left >= -margin_tolerance;
    r.ineq_i_right = r.margin_i_right >= -margin_tolerance;
    r.ineq_iii = r.margin_iii > 0;

    const double half = m.length / 2;
    r.quadratic_discriminant = half * half - 4 * m.area;
    if (r.quadratic_discriminant >= 0) {
        // Stable form: the larger-magnitude root first, the other from Vieta.
        const double q = (half + std::sqrt(r.quadratic_discriminant)) / 2;
        r.quadratic_roots = {m.area / q, q};
    }

    r.left_equality = std::abs(r.ratio_LD - pi) <= equality_tolerance;
    r.right_equality = std::abs(r.ratio_Ld - pi) <= equality_tolerance;
    if (!spec.is_circle() && (r.left_equality || r.right_equality)) {
        std::ostringstream s;
        s.precision(10);
        s << spec.name() << ": " << (r.left_equality ? "L/D" : "L/d") << " = "
          << (r.left_equality ? r.ratio_LD : r.ratio_Ld) << " equals pi within " << equality_tolerance
          << " although the curve is not a circle";
        r.equality_probe_finding = s.str();
    }
    return out;
}

/// Chord length through the centroid at `count` evenly spaced directions in [0, pi).
[[nodiscard]] inline std::vector<std::pair<double, double>> chord_profile(const Polyline& poly, Point centre,
                                                                         int count) {
    const RadialProfile prof{poly, centre};
    std::vector<std::pair<double, double>> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double th = std::numbers::pi * k / count;
        out.emplace_back(th, prof.chord(th));
    }
    return out;
}

/// One point per line, "x y"; blank lines and '#' comments are skipped.
/// A repeated closing point equal to the first is dropped.
[[nodiscard]] inline Polyline read_polyline(std::istream& in) {
    Polyline pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls{line};
        double x = 0, y = 0;
        if (!(ls >> x)) continue;
        std::string extra;
        if (!(ls >> y) || (ls >> extra)) throw ValidationError("polyline line " + std::to_string(lineno) + ": expected 'x y'");
        pts.push_back({x, y});
    }
    if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
    return pts;
}

} // namespace algcheck::jordan

