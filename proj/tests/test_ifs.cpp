#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ifs.hpp"
#include "measure.hpp"
#include "model.hpp"

using namespace spingibbs;

namespace {

const double kPi = 3.14159265358979323846;

// reference point theta = pi/6, beta = 1
const double kAlpha = 0.119202922022117556;
const double kGamma = 0.0475996347472353055;
const double kSmallR = 0.285769471352680843;
const double kBigR = 0.822957342830074482;
const double kRTilde = 0.0578397351478079617;
const double kGap = 0.223874766650065723;
const double kBetaC = 1.35402510055110503;  // log(15)/2

double random_theta(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(0.02, kPi / 2 - 0.02);
    double theta = dist(rng);
    while (std::abs(theta - kPi / 4) < 0.02) theta = dist(rng);
    return theta;
}

}  // namespace

TEST_CASE("ifs parameters and ordering chain") {
    const ModelParams p = make_params(kPi / 6, 1.0);
    const IFSParams f = ifs_params(p);
    CHECK(f.alpha == doctest::Approx(kAlpha).epsilon(1e-14));
    CHECK(f.gamma == doctest::Approx(kGamma).epsilon(1e-14));
    CHECK(f.r == doctest::Approx(kSmallR).epsilon(1e-13));
    CHECK(f.R == doctest::Approx(kBigR).epsilon(1e-13));
    CHECK(f.R_tilde == doctest::Approx(kRTilde).epsilon(1e-12));

    CHECK(0.0 < f.R_tilde);
    CHECK(f.R_tilde < f.interval_lo);
    CHECK(f.interval_lo < f.r);
    CHECK(f.r < 0.5);
    CHECK(0.5 < f.R);
    CHECK(f.R < 1.0 - f.alpha);

    CHECK(std::abs(f.f0(f.r) - f.r) <= 1e-12);
    CHECK(std::abs(f.f1(f.R) - f.R) <= 1e-12);
    CHECK(std::abs(f.f1(f.R_tilde) - f.R_tilde) <= 1e-12);

    CHECK(f.alpha > 0.0);
    CHECK(f.alpha < 0.5);
    CHECK(f.gamma > 0.0);
    CHECK(f.gamma < 0.25);
    CHECK(4.0 * f.gamma + 2.0 * f.alpha < 1.0);
}

TEST_CASE("ifs invariants hold at random parameters") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> bdist(0.05, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = make_params(random_theta(rng), bdist(rng));
        const IFSParams f = ifs_params(p);
        CHECK(0.0 < f.R_tilde);
        CHECK(f.R_tilde < 1.0 - f.R);
        CHECK(1.0 - f.R < f.r);
        CHECK(f.r < 0.5);
        CHECK(0.5 < f.R);
        CHECK(f.R < 1.0 - f.alpha);
        CHECK(std::abs(f.f0(f.r) - f.r) <= 1e-12);
        CHECK(std::abs(f.f1(f.R) - f.R) <= 1e-12);
    }
}

TEST_CASE("jacobian truncation values") {
    const ModelParams p = make_params(kPi / 6, 1.0);
    CHECK(jacobian_n(p, Word({1, 1})) == doctest::Approx(0.214402191516588167).epsilon(1e-13));
    CHECK(jacobian_n(p, Word({1, 1, 1})) == doctest::Approx(0.3412138744780422).epsilon(1e-13));
    CHECK_THROWS_AS(jacobian_n(p, Word({1})), WordTooShortError);
}

TEST_CASE("jacobian truncation equals the measure ratio") {
    const ModelParams p = make_params(kPi / 6, 1.0);
    const ModelParams q = make_params(0.3, 2.5);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> sym(1, 2);
    std::uniform_int_distribution<int> len(2, 16);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> syms(static_cast<std::size_t>(len(rng)));
        for (int& v : syms) v = sym(rng);
        const Word w{syms};
        for (const ModelParams* mp : {&p, &q}) {
            const double j = jacobian_n(*mp, w);
            const double ratio = mu_cylinder(*mp, w) / mu_cylinder(*mp, w.suffix(1));
            CHECK(std::abs(j - ratio) / ratio <= 1e-12);
        }
    }
}

TEST_CASE("preimage normalization J(1x) + J(2x) = 1") {
    const ModelParams p = make_params(1.1, 0.7);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> sym(1, 2);
    std::uniform_int_distribution<int> len(1, 20);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> syms(static_cast<std::size_t>(len(rng)));
        for (int& v : syms) v = sym(rng);
        const Word x{syms};
        const double j1 = jacobian_n(p, Word({1}).concat(x));
        const double j2 = jacobian_n(p, Word({2}).concat(x));
        CHECK(std::abs(j1 + j2 - 1.0) <= 1e-14);
    }
}

TEST_CASE("jacobian bounds from the coefficient estimate") {
    // b(x0,x0) <= J^n(x) <= 1 - b(x0,x0)
    const ModelParams p = make_params(0.4, 1.3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> sym(1, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> syms(12);
        for (int& v : syms) v = sym(rng);
        const Word w{syms};
        const double j = jacobian_n(p, w);
        CHECK(j >= p.b(1, 1) - 1e-15);
        CHECK(j <= 1.0 - p.b(1, 1) + 1e-15);
    }
}

TEST_CASE("limit jacobian of eventually periodic points") {
    const ModelParams p = make_params(kPi / 6, 1.0);

    const JacobianResult r1 = jacobian(p, EventualSeq{Word(), Word({1})}, 1e-12);
    CHECK(std::abs(r1.value - kSmallR) <= 1e-10);

    const JacobianResult r2 = jacobian(p, EventualSeq{Word(), Word({1, 2})}, 1e-12);
    CHECK(std::abs(r2.value - kBigR) <= 1e-10);

    // preperiod (2), period (1): J = f1(r)
    const JacobianResult r3 = jacobian(p, EventualSeq{Word({2}), Word({1})}, 1e-12);
    CHECK(std::abs(r3.value - 0.714230528647319157) <= 1e-10);

    // long-truncation cross-check and the reported bound
    const Word longw = Word({2}).concat(Word({1}).repeated(4000));
    const double truth = jacobian_n(p, longw);
    CHECK(std::abs(r3.value - truth) <= r3.error_bound);
    CHECK(r3.error_bound < 1e-6);

    CHECK_THROWS_AS(jacobian(p, EventualSeq{Word(), Word()}, 1e-12), std::invalid_argument);
}

TEST_CASE("jacobian grid layout and pairing") {
    const ModelParams p = make_params(kPi / 6, 1.0);
    const std::vector<double> grid = jacobian_grid(p, 2);
    REQUIRE(grid.size() == 4);
    // rows (1,t) and (2,t) with the same tail sum to 1
    CHECK(std::abs(grid[0] + grid[2] - 1.0) <= 1e-14);
    CHECK(std::abs(grid[1] + grid[3] - 1.0) <= 1e-14);
    CHECK(grid[0] == doctest::Approx(jacobian_n(p, Word({1, 1}))));
    CHECK(grid[3] == doctest::Approx(jacobian_n(p, Word({2, 2}))));

    const std::vector<double> g12 = jacobian_grid(p, 12);
    const IFSParams f = ifs_params(p);
    for (double v : g12) {
        CHECK(v >= f.interval_lo - 1e-12);
        CHECK(v <= f.interval_hi + 1e-12);
    }
}

TEST_CASE("figure-parameter grids: Cantor gap vs interval filling") {
    const double theta = std::acos(0.12) / 2.0;

    auto largest_gap = [](std::vector<double> vals) {
        std::sort(vals.begin(), vals.end());
        double g = 0.0;
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
            g = std::max(g, vals[i + 1] - vals[i]);
        }
        return g;
    };

    // beta = 0.8 is deep in the Cantor regime: the largest hole equals the
    // middle gap [f0(1-R), f1(1-R)] of the first-generation images.
    const ModelParams pc = make_params(theta, 0.8);
    const IFSParams fc = ifs_params(pc);
    const double gap_c = largest_gap(jacobian_grid(pc, 12));
    CHECK(gap_c == doctest::Approx(fc.f1(fc.interval_lo) - fc.f0(fc.interval_lo)).epsilon(1e-6));

    // beta = 5.6 is in the interval regime; holes only reflect the finite
    // truncation depth and are much smaller than the Cantor gap.
    const ModelParams pi_ = make_params(theta, 5.6);
    const double gap_i = largest_gap(jacobian_grid(pi_, 12));
    CHECK(gap_i < 0.5 * gap_c);
    // measured depth-12 ratio is about 3.7; it grows with depth but stays
    // below 10 through depth 20
    CHECK(gap_c / gap_i > 3.0);
}

TEST_CASE("attractor classification at the reference points") {
    const AttractorClass c1 = classify_attractor(make_params(kPi / 6, 1.0));
    CHECK(c1.kind == AttractorKind::Cantor);
    CHECK(c1.gap == doctest::Approx(kGap).epsilon(1e-12));
    CHECK(c1.beta_critical == doctest::Approx(kBetaC).epsilon(1e-14));
    CHECK(c1.discriminant == doctest::Approx(kGamma - 0.0907842487848954788).epsilon(1e-9));

    const AttractorClass c2 = classify_attractor(make_params(kPi / 6, 2.0));
    CHECK(c2.kind == AttractorKind::Interval);

    const AttractorClass c3 = classify_attractor(make_params(kPi / 6, kBetaC));
    CHECK(c3.kind == AttractorKind::Boundary);
}

TEST_CASE("beta_critical closed form") {
    CHECK(beta_critical(kPi / 6) == doctest::Approx(0.5 * std::log(15.0)).epsilon(1e-15));
    CHECK(beta_critical(std::acos(0.12) / 2) ==
          doctest::Approx(0.5 * std::log(4.0 / 0.0144 - 1.0)).epsilon(1e-14));
    CHECK(beta_critical(std::acos(0.12) / 2) == doctest::Approx(2.81170662595).epsilon(1e-9));
    CHECK_THROWS_AS(beta_critical(kPi / 4), DegenerateAngleError);
}

TEST_CASE("classification flips across beta_critical") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const double theta = random_theta(rng);
        const double bc = beta_critical(theta);
        CHECK(classify_attractor(make_params(theta, std::max(bc - 0.01, 1e-6))).kind ==
              AttractorKind::Cantor);
        CHECK(classify_attractor(make_params(theta, bc + 0.01)).kind == AttractorKind::Interval);
    }
}

TEST_CASE("algebraic and geometric classification agree at random points") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> bdist(0.05, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = make_params(random_theta(rng), bdist(rng));
        // classify_attractor throws if the two tests disagree
        const AttractorClass c = classify_attractor(p);
        if (c.kind == AttractorKind::Cantor) {
            CHECK(c.discriminant < 0.0);
            CHECK(c.gap > 0.0);
        } else if (c.kind == AttractorKind::Interval) {
            CHECK(c.discriminant > 0.0);
            CHECK(c.gap < 0.0);
        }
    }
}

TEST_CASE("poincare ratio is 1 for the disk isometries") {
    // M_a(x) = (x-a)/(1-ax)
    const Mobius identity{1.0, 0.0, 0.0, 1.0};
    CHECK(poincare_ratio(identity, 0.4) == 1.0);
    for (double a : {0.3, -0.7, 0.95}) {
        const Mobius m{1.0, -a, -a, 1.0};
        for (double x : {-0.9, -0.2, 0.0, 0.5, 0.99}) {
            CHECK(poincare_ratio(m, x) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("contraction factor is below one in both regimes") {
    const ContractionInfo c1 = contraction_info(make_params(kPi / 6, 1.0));
    CHECK(c1.lambda > 0.0);
    CHECK(c1.lambda < 1.0);
    // regression constant for the dense-sampling diagnostic
    CHECK(c1.lambda == doctest::Approx(0.608).epsilon(0.02));

    const ContractionInfo c2 = contraction_info(make_params(kPi / 6, 2.0));
    CHECK(c2.lambda > 0.0);
    CHECK(c2.lambda < 1.0);
}

TEST_CASE("Hoelder decay of truncations with the diagnostic constants") {
    const ModelParams p = make_params(kPi / 6, 1.0);
    const ContractionInfo ci = contraction_info(p);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> sym(1, 2);

    // single fitted K over a calibration sample, then asserted with margin
    double k_fit = 0.0;
    for (int t = 4; t <= 14; ++t) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> common(static_cast<std::size_t>(t));
            for (int& v : common) v = sym(rng);
            std::vector<int> w1(common), w2(common);
            for (int i = 0; i < 25; ++i) {
                w1.push_back(sym(rng));
                w2.push_back(sym(rng));
            }
            const double dj = std::abs(jacobian_n(p, Word{w1}) - jacobian_n(p, Word{w2}));
            k_fit = std::max(k_fit, dj / std::pow(ci.lambda, t));
        }
    }
    CHECK(k_fit <= ci.K);  // the reported conversion constant dominates the fit

    for (int t = 4; t <= 14; ++t) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> common(static_cast<std::size_t>(t));
            for (int& v : common) v = sym(rng);
            std::vector<int> w1(common), w2(common);
            for (int i = 0; i < 25; ++i) {
                w1.push_back(sym(rng));
                w2.push_back(sym(rng));
            }
            const double dj = std::abs(jacobian_n(p, Word{w1}) - jacobian_n(p, Word{w2}));
            CHECK(dj <= 1.5 * k_fit * std::pow(ci.lambda, t));
        }
    }
}

TEST_CASE("ruelle residual magnitudes and refinement") {
    const ModelParams p = make_params(kPi / 6, 1.0);
    CHECK(ruelle_residual(p, Word({1, 1}), 10) <= 1e-6);
    const double r4 = ruelle_residual(p, Word({1, 2}), 4);
    const double r12 = ruelle_residual(p, Word({1, 2}), 12);
    CHECK(r12 < r4);
    CHECK_THROWS_AS(ruelle_residual(p, Word({1}), 4), WordTooShortError);
    CHECK_THROWS_AS(ruelle_residual(p, Word({1, 1}), 21), DepthTooLargeError);
}
