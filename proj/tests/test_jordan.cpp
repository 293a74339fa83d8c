#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "algcheck/jordan.hpp"

using namespace algcheck::jordan;
using algcheck::ValidationError;

namespace {

constexpr double pi = std::numbers::pi;

double brute_diameter(const Polyline& p) {
    double best = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) best = std::max(best, dist2(p[i], p[j]));
    return std::sqrt(best);
}

// Oracle: Gauss-Kummer series pi (a + b) sum binom(1/2, n)^2 h^n.
double ellipse_perimeter_series(double a, double b) {
    const double h = (a - b) * (a - b) / ((a + b) * (a + b));
    double coeff = 1, sum = 1, hn = 1;
    for (int n = 1; n < 200; ++n) {
        coeff *= (0.5 - (n - 1)) / n;
        hn *= h;
        sum += coeff * coeff * hn;
    }
    return pi * (a + b) * sum;
}

Polyline notch_polygon() {
    // A 3x3 square with a 2x1 notch cut from the left; its centroid lies in the notch.
    return {{0, 0}, {3, 0}, {3, 3}, {0, 3}, {0, 2}, {2, 2}, {2, 1}, {0, 1}};
}

} // namespace

TEST(Jordan, AgmPerimeterMatchesSeries) {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {5.0, 0.5}, {1.0, 3.0}}) {
        EXPECT_NEAR(ellipse_perimeter_agm(a, b), ellipse_perimeter_series(a, b), 1e-9 * a);
    }
    EXPECT_NEAR(ellipse_perimeter_agm(2, 1), 9.688448220547675, 1e-10);
    EXPECT_NEAR(ellipse_perimeter_agm(1, 1), 2 * pi, 1e-12);
}

TEST(Jordan, CircleMetrics) {
    const auto a = analyze({Circle{1}, 4096});
    EXPECT_NEAR(a.metrics.length, 2 * pi, 1e-5);
    EXPECT_NEAR(a.metrics.max_diameter, 2, 1e-12);
    EXPECT_NEAR(a.metrics.min_central_chord, 2, 1e-5);
    EXPECT_NEAR(a.metrics.area, pi, 1e-5);
    EXPECT_NEAR(a.report.ratio_LD, pi, 1e-5);
    EXPECT_NEAR(a.report.ratio_Ld, pi, 1e-5);
    EXPECT_NEAR(a.report.margin_iii, 4 - pi, 1e-4);
    EXPECT_LT(a.report.quadratic_discriminant, 0);
    EXPECT_TRUE(a.report.quadratic_roots.empty());
    EXPECT_FALSE(a.report.equality_probe_finding);
}

TEST(Jordan, EllipseMetrics) {
    const auto a = analyze({Ellipse{2, 1}, 8192});
    EXPECT_NEAR(a.metrics.length, ellipse_perimeter_series(2, 1), 1e-4);
    EXPECT_NEAR(a.metrics.max_diameter, 4, 1e-9);
    EXPECT_NEAR(a.metrics.min_central_chord, 2, 1e-6);
    EXPECT_GT(a.report.margin_i_left, 0.5);
    EXPECT_GT(a.report.margin_i_right, 0.5);
    // (L/2)^2 < 4 area here: 4.844^2 < 8 pi.
    EXPECT_LT(a.report.quadratic_discriminant, 0);
}

TEST(Jordan, QuadraticRootsSatisfyVieta) {
    // A thin rectangle has (L/2)^2 > 4 area.
    const auto a = analyze({PolylineShape{{{0, 0}, {10, 0}, {10, 1}, {0, 1}}}, 0});
    EXPECT_NEAR(a.report.quadratic_discriminant, 121 - 40, 1e-12);
    ASSERT_EQ(a.report.quadratic_roots.size(), 2U);
    const double r1 = a.report.quadratic_roots[0], r2 = a.report.quadratic_roots[1];
    EXPECT_NEAR(r1 + r2, 11, 1e-12);
    EXPECT_NEAR(r1 * r2, 10, 1e-12);
}

TEST(Jordan, ReuleauxIsAnEqualityCase) {
    const auto a = analyze({Reuleaux{1}, 4096});
    EXPECT_NEAR(a.metrics.length, pi, 1e-6);
    EXPECT_NEAR(a.metrics.max_diameter, 1, 1e-12);
    EXPECT_NEAR(a.metrics.area, (pi - std::sqrt(3.0)) / 2, 1e-6);
    EXPECT_NEAR(a.report.ratio_LD, pi, 1e-4);
    EXPECT_TRUE(a.report.left_equality);
    ASSERT_TRUE(a.report.equality_probe_finding);
    EXPECT_NE(a.report.equality_probe_finding->find("reuleaux"), std::string::npos);
}

TEST(Jordan, SquareExactValues) {
    const Polyline sq{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    const auto a = analyze({PolylineShape{sq}, 0});
    EXPECT_DOUBLE_EQ(a.metrics.length, 8);
    EXPECT_DOUBLE_EQ(a.metrics.area, 4);
    EXPECT_NEAR(a.metrics.max_diameter, 2 * std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(a.metrics.min_central_chord, 2, 1e-9);
    EXPECT_NEAR(a.metrics.centroid.x, 0, 1e-15);
}

TEST(Jordan, CalipersMatchBruteForce) {
    std::mt19937_64 rng{5};
    std::uniform_real_distribution<double> u{-10, 10};
    for (int trial = 0; trial < 50; ++trial) {
        Polyline pts(60);
        for (auto& p : pts) p = {u(rng), u(rng)};
        EXPECT_NEAR(max_diameter(pts), brute_diameter(pts), 1e-12);
    }
    const auto ellipse = sample({Ellipse{3, 1}, 512});
    EXPECT_NEAR(max_diameter(ellipse), brute_diameter(ellipse), 1e-12);
}

TEST(Jordan, OrientationDoesNotChangeMetrics) {
    Polyline cw{{0, 0}, {0, 2}, {3, 2}, {3, 0}};
    const auto a = analyze({PolylineShape{cw}, 0});
    EXPECT_DOUBLE_EQ(a.metrics.area, 6);
    EXPECT_NEAR(a.metrics.centroid.x, 1.5, 1e-15);
    EXPECT_NEAR(a.metrics.centroid.y, 1, 1e-15);
    EXPECT_NEAR(a.metrics.min_central_chord, 2, 1e-9);
}

TEST(Jordan, ConvergesWithSampleCount) {
    const double coarse = arc_length(sample({Ellipse{2, 1}, 1024}));
    const double fine = arc_length(sample({Ellipse{2, 1}, 2048}));
    const double exact = ellipse_perimeter_agm(2, 1);
    EXPECT_LT(std::abs(fine - exact), std::abs(coarse - exact));
    EXPECT_LT(std::abs(fine - coarse) / fine, 1e-3);
}

TEST(Jordan, ChordProfileIsSymmetricForCircle) {
    const auto s = sample({Circle{2}, 2048});
    for (const auto& [theta, len] : chord_profile(s, {0, 0}, 64)) EXPECT_NEAR(len, 4, 1e-5) << theta;
}

TEST(Jordan, RejectsNonSimplePolyline) {
    const Polyline bowtie{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
    EXPECT_FALSE(is_simple(bowtie));
    EXPECT_THROW((void)analyze({PolylineShape{bowtie}, 0}), ValidationError);
}

TEST(Jordan, RejectsCurveNotStarShapedAboutCentroid) {
    const auto p = notch_polygon();
    EXPECT_TRUE(is_simple(p));
    EXPECT_THROW((void)analyze({PolylineShape{p}, 0}), ValidationError);
}

TEST(Jordan, RejectsBadParameters) {
    EXPECT_THROW((void)sample({Circle{-1}, 4096}), ValidationError);
    EXPECT_THROW((void)sample({Ellipse{1, 0}, 4096}), ValidationError);
    EXPECT_THROW((void)sample({Circle{1}, 10}), ValidationError);
    EXPECT_THROW((void)sample({PolylineShape{{{0, 0}, {1, 0}}}, 0}), ValidationError);
    EXPECT_THROW((void)sample({Reuleaux{std::nan("")}, 4096}), ValidationError);
}

TEST(Jordan, ReadPolyline) {
    std::istringstream in{"# square\n0 0\n1 0\n\n1 1\n0 1\n0 0\n"};
    const auto p = read_polyline(in);
    ASSERT_EQ(p.size(), 4U);
    EXPECT_EQ(p[2], (Point{1, 1}));
    std::istringstream bad{"0 0\n1\n"};
    EXPECT_THROW((void)read_polyline(bad), ValidationError);
    std::istringstream extra{"0 0 0\n"};
    EXPECT_THROW((void)read_polyline(extra), ValidationError);
}
