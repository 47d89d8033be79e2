#ifndef SPINGIBBS_IFS_HPP
#define SPINGIBBS_IFS_HPP

#include <vector>

#include "model.hpp"

namespace spingibbs {

// Two-map Moebius system governing the Jacobian continued fraction:
//   f0(x) = alpha + gamma/x        (repeated symbol)
//   f1(x) = 1 - alpha - gamma/x    (changed symbol)
// with alpha = phi/2 and gamma = (1-phi) cos^2(2 theta) / 4.
struct IFSParams {
    double alpha = 0;
    double gamma = 0;
    double r = 0;        // attracting fixed point of f0
    double R = 0;        // attracting fixed point of f1
    double R_tilde = 0;  // repelling fixed point of f1
    double interval_lo = 0;  // 1 - R
    double interval_hi = 0;  // R

    double f0(double x) const { return alpha + gamma / x; }
    double f1(double x) const { return 1.0 - alpha - gamma / x; }
};

IFSParams ifs_params(const ModelParams& p);

// Finite continued-fraction truncation of the Jacobian over the |w|-1
// transitions of w, seeded at 1/2.  Identical (in exact arithmetic) to
// mu(w)/mu(sigma w).  Requires |w| >= 2.
double jacobian_n(const ModelParams& p, const Word& w);

struct JacobianResult {
    double value = 0;
    double error_bound = 0;  // K * lambda^t from the contraction diagnostic
    int symbols_used = 0;
};

// Limit Jacobian of an eventually periodic point, by truncating at
// lengthening prefixes until two successive values differ by less than tol.
// Iteration cap: 10^4 symbols.
JacobianResult jacobian(const ModelParams& p, const EventualSeq& s, double tol);

// Truncated Jacobian over all 2^n words of length n, indexed by dyadic code.
std::vector<double> jacobian_grid(const ModelParams& p, int n);

enum class AttractorKind { Cantor, Interval, Boundary };

struct AttractorClass {
    AttractorKind kind = AttractorKind::Boundary;
    double gap = 0;            // f1(1-R) - f0(1-R); positive iff disjoint images
    double beta_critical = 0;
    double discriminant = 0;   // gamma - alpha(1-2 alpha); negative iff Cantor
};

// Classifies the image of J as Cantor set vs interval.  The algebraic sign
// test and the geometric gap test are evaluated independently and must agree.
AttractorClass classify_attractor(const ModelParams& p);

// Transition parameter: beta_c = (1/2) log(4 / cos^2(2 theta) - 1).
double beta_critical(double theta);

// Moebius map x -> (a x + b)/(c x + d) on the line.
struct Mobius {
    double a = 1, b = 0, c = 0, d = 1;
    double operator()(double x) const { return (a * x + b) / (c * x + d); }
    double deriv(double x) const {
        const double den = c * x + d;
        return (a * d - b * c) / (den * den);
    }
};

// Local contraction ratio of m at x for the density rho(x) = 1/(1-x^2)
// on (-1,1):  |m'(x)| rho(m(x)) / rho(x).  Equals 1 identically for the
// isometries M_a(x) = (x-a)/(1-ax).
double poincare_ratio(const Mobius& m, double x);

struct ContractionInfo {
    double lambda = 0;   // sup over I of the metric ratio, both maps
    double K = 0;        // euclidean conversion constant for K * lambda^t bounds
    double eps = 0;      // enlargement used by the conjugation
};

// Numeric contraction diagnostic: conjugates the eps-enlarged invariant
// interval onto (-1,1) and takes the sup of the pointwise hyperbolic ratio
// over a dense grid of I, minimized over a small set of admissible
// enlargements.  Not a verified bound.
ContractionInfo contraction_info(const ModelParams& p);
double contraction_factor(const ModelParams& p);

// Quadrature residual of the Ruelle fixed-point identity
//   mu(w) = int_{[tail w]} J(w0 . y) dmu(y)
// with J point-evaluated on depth-m refining cylinders:
//   | sum_{|v|=m} J(w0.tail(w).v.(last)^inf) mu(tail(w).v) - mu(w) |.
// Requires |w| >= 2, m >= 1, |w| + m <= 22.
double ruelle_residual(const ModelParams& p, const Word& w, int m);

}  // namespace spingibbs

#endif
