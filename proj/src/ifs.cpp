#include "ifs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "measure.hpp"
#include "numeric.hpp"

namespace spingibbs {

IFSParams ifs_params(const ModelParams& p) {
    IFSParams f;
    f.alpha = 0.5 * p.phi;
    const double c2 = std::cos(2.0 * p.theta);
    f.gamma = 0.25 * (1.0 - p.phi) * c2 * c2;
    f.r = 0.5 * (f.alpha + std::sqrt(f.alpha * f.alpha + 4.0 * f.gamma));
    const double disc = (1.0 - f.alpha) * (1.0 - f.alpha) - 4.0 * f.gamma;
    f.R = 0.5 * (1.0 - f.alpha + std::sqrt(disc));
    f.R_tilde = 0.5 * (1.0 - f.alpha - std::sqrt(disc));
    f.interval_lo = 1.0 - f.R;
    f.interval_hi = f.R;
    return f;
}

double jacobian_n(const ModelParams& p, const Word& w) {
    const int n = w.size();
    if (n < 2) throw WordTooShortError("jacobian truncation needs |w| >= 2");
    double x = 0.5;
    for (int i = n - 2; i >= 0; --i) {
        x = p.a(w[i], w[i + 1]) + p.b(w[i], w[i + 1]) / x;
    }
    return x;
}

namespace {

// Truncation loop shared by jacobian() and ruelle_residual(); the error
// bound is attached separately because the contraction diagnostic is costly.
double jacobian_limit_value(const ModelParams& p, const EventualSeq& s, double tol,
                            int* symbols_out) {
    if (s.period.empty()) throw std::invalid_argument("period must be nonempty");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    constexpr int kMaxSymbols = 10000;
    const int step = s.period.size();

    Word w = s.preperiod.concat(s.period);
    while (w.size() < 2) w = w.concat(s.period);

    double prev_val = jacobian_n(p, w);
    int stable = 0;
    while (w.size() + step <= kMaxSymbols) {
        w = w.concat(s.period);
        const double val = jacobian_n(p, w);
        if (std::abs(val - prev_val) < tol) {
            ++stable;
            if (stable >= 2) {
                *symbols_out = w.size();
                return val;
            }
        } else {
            stable = 0;
        }
        prev_val = val;
    }
    throw NoConvergenceError("jacobian truncations did not stabilize within 10^4 symbols");
}

}  // namespace

JacobianResult jacobian(const ModelParams& p, const EventualSeq& s, double tol) {
    JacobianResult res;
    res.value = jacobian_limit_value(p, s, tol, &res.symbols_used);
    const ContractionInfo ci = contraction_info(p);
    res.error_bound = ci.K * std::pow(ci.lambda, res.symbols_used - 1);
    return res;
}

std::vector<double> jacobian_grid(const ModelParams& p, int n) {
    if (n < 2 || n > 20) throw DepthTooLargeError("jacobian grid supports 2 <= n <= 20");

    // level DP on the truncation: prepending symbol t to a word with first
    // symbol `top` applies one continued-fraction step.
    std::vector<double> cur = {0.5, 0.5};  // length-1 seed values
    for (int len = 2; len <= n; ++len) {
        const std::uint32_t sub = 1u << (len - 1);
        std::vector<double> next(static_cast<std::size_t>(1) << len);
        for (std::uint32_t c = 0; c < sub; ++c) {
            const int top = 1 + static_cast<int>(c >> (len - 2));
            next[c] = p.a(1, top) + p.b(1, top) / cur[c];
            next[c | sub] = p.a(2, top) + p.b(2, top) / cur[c];
        }
        cur = std::move(next);
    }
    return cur;
}

double beta_critical(double theta) {
    validate_theta(theta);
    const double c2 = std::cos(2.0 * theta);
    return 0.5 * std::log(4.0 / (c2 * c2) - 1.0);
}

AttractorClass classify_attractor(const ModelParams& p) {
    const IFSParams f = ifs_params(p);
    AttractorClass out;
    out.beta_critical = beta_critical(p.theta);
    out.discriminant = f.gamma - f.alpha * (1.0 - 2.0 * f.alpha);
    out.gap = f.f1(f.interval_lo) - f.f0(f.interval_lo);

    const double tol_alg =
        1e-12 * std::max(f.gamma, f.alpha * (1.0 - 2.0 * f.alpha));
    const double tol_geo = 1e-12 * (f.interval_hi - f.interval_lo);

    const int alg = (out.discriminant < -tol_alg) ? -1
                    : (out.discriminant > tol_alg) ? 1
                                                   : 0;
    const int geo = (out.gap > tol_geo) ? -1 : (out.gap < -tol_geo) ? 1 : 0;

    // -1 = Cantor, +1 = Interval.  Both tests decisive but opposed would be
    // an internal inconsistency; either undecided resolves to Boundary.
    if (alg != 0 && geo != 0 && alg != geo) {
        throw std::logic_error("attractor classification tests disagree");
    }
    const int kind = (alg != 0) ? alg : geo;
    out.kind = (kind < 0)   ? AttractorKind::Cantor
               : (kind > 0) ? AttractorKind::Interval
                            : AttractorKind::Boundary;
    return out;
}

double poincare_ratio(const Mobius& m, double x) {
    const double y = m(x);
    const double rho_x = 1.0 / (1.0 - x * x);
    const double rho_y = 1.0 / (1.0 - y * y);
    return std::abs(m.deriv(x)) * rho_y / rho_x;
}

namespace {

struct EnlargedMetric {
    double lo = 0, hi = 0;  // enlarged interval endpoints
    double c_scale = 0, c_shift = 0;

    double c(double x) const { return c_scale * x + c_shift; }
    double rho(double x) const {
        const double y = c(x);
        return 1.0 / (1.0 - y * y);
    }
};

EnlargedMetric make_metric(const IFSParams& f, double eps) {
    EnlargedMetric m;
    m.lo = f.interval_lo - eps;
    m.hi = f.interval_hi + eps;
    m.c_scale = 2.0 / (m.hi - m.lo);
    m.c_shift = -(m.hi + m.lo) / (m.hi - m.lo);
    return m;
}

double lambda_for_eps(const IFSParams& f, double eps, int npts) {
    const EnlargedMetric m = make_metric(f, eps);
    double lam = 0.0;
    for (int j = 0; j < npts; ++j) {
        const double x = f.interval_lo +
                         (f.interval_hi - f.interval_lo) * j / (npts - 1);
        const double d0 = f.gamma / (x * x);  // |f0'| = |f1'|
        const double r0 = d0 * m.rho(f.f0(x)) / m.rho(x);
        const double r1 = d0 * m.rho(f.f1(x)) / m.rho(x);
        lam = std::max(lam, std::max(r0, r1));
    }
    return lam;
}

}  // namespace

ContractionInfo contraction_info(const ModelParams& p) {
    const IFSParams f = ifs_params(p);

    // The largest f-invariant enlargement of I = [1-R, R] is (R_tilde,
    // 1-R_tilde): f0(1-R-eps) <= R+eps exactly until 1-R-eps reaches the
    // repelling fixed point R_tilde.
    const double eps_max = f.interval_lo - f.R_tilde;

    ContractionInfo best;
    best.lambda = 2.0;
    constexpr int kGrid = 4001;
    for (int k = 1; k <= 7; ++k) {
        const double eps = eps_max * k / 8.0;
        const double lam = lambda_for_eps(f, eps, kGrid);
        if (lam < best.lambda) {
            best.lambda = lam;
            best.eps = eps;
        }
    }

    // Euclidean conversion: |a-b| <= d~(a,b)/rho_min <= lambda^t rho_max |I| / rho_min.
    const EnlargedMetric m = make_metric(f, best.eps);
    const double rho_max = std::max(m.rho(f.interval_lo), m.rho(f.interval_hi));
    const double rho_min = 1.0;  // rho >= 1 on (-1,1), attained at the center
    best.K = (f.interval_hi - f.interval_lo) * rho_max / rho_min;
    return best;
}

double contraction_factor(const ModelParams& p) { return contraction_info(p).lambda; }

double ruelle_residual(const ModelParams& p, const Word& w, int m) {
    if (w.size() < 2) throw WordTooShortError("ruelle residual needs |w| >= 2");
    if (m < 1) throw std::invalid_argument("refinement depth m must be >= 1");
    if (w.size() + m > 22) throw DepthTooLargeError("ruelle residual needs |w| + m <= 22");

    const Word tail = w.suffix(1);
    KahanSum acc;
    for (std::uint32_t c = 0; c < (1u << m); ++c) {
        const Word v = Word::from_code(c, m);
        const Word tv = tail.concat(v);
        Word u = Word({w[0]}).concat(tv);
        const EventualSeq point{u, Word({u[u.size() - 1]})};
        int used = 0;
        const double japprox = jacobian_limit_value(p, point, 1e-13, &used);
        acc.add(japprox * mu_cylinder(p, tv));
    }
    return std::abs(acc.value() - mu_cylinder(p, w));
}

}  // namespace spingibbs
