#ifndef SPINGIBBS_LDP_HPP
#define SPINGIBBS_LDP_HPP

#include "model.hpp"

namespace spingibbs {

// Potential depending on the first coordinate only: A(1) = a1, A(2) = a2.
struct Observable {
    double a1 = 0;
    double a2 = 0;
    double value(int k) const { return k == 1 ? a1 : a2; }
};

// delta(t) = sum_j e^{t A(j)},  alpha(t) = sum_j beta_j e^{t A(j)}.
struct MomentPair {
    double delta = 0;
    double alpha = 0;
};

MomentPair moments(const ModelParams& p, const Observable& obs, double t);

// Q_n(t) = sum over cylinders of length n+1 of e^{t sum A} mu; the index
// convention follows the explicit (n+1)-symbol sum.  n <= 20.
double q_n_direct(const ModelParams& p, const Observable& obs, double t, int n);

// Full expansion of Q_n in delta, alpha and (phi-1) powers, seeded by the
// direct Q_1, Q_2.  The closing term carries delta^{n-1} (the worked n=3
// case fixes the exponent).  n >= 3.
double q_n_expansion(const ModelParams& p, const Observable& obs, double t, int n);

// Second-order recurrence
//   Q_{n+2} = (phi-1)(alpha^2-delta^2)/4 Q_n + (phi/2) delta Q_{n+1},
// rescaled each step; exact seeds Q_1, Q_2 from the direct sum.
double q_n_recurrence(const ModelParams& p, const Observable& obs, double t, int n);

// log Q_n by the rescaled recurrence; usable to n = 10^4.
double log_q_n_recurrence(const ModelParams& p, const Observable& obs, double t, int n);

// Closed-form free energy
//   c(t) = log[ (phi delta + sqrt(phi^2 delta^2 + 4(phi-1)(alpha^2-delta^2)) ) / 4 ].
double free_energy(const ModelParams& p, const Observable& obs, double t);

// c'(t) by central differences, h = 1e-6.
double free_energy_derivative(const ModelParams& p, const Observable& obs, double t);

// Legendre transform I(s) = sup_t (t s - c(t)), solved via c'(t) = s.
// Returns +infinity for s outside the closed interval [min A, max A]; the
// endpoints take the finite limit -log r (r the f0 fixed point).
double rate_function(const ModelParams& p, const Observable& obs, double s);

// Empirical tail rate -(1/n) log mu{ S_n / n >= s } over length-n cylinders
// (S_n has n terms).  n <= 20.
double tail_rate(const ModelParams& p, const Observable& obs, double s, int n);

}  // namespace spingibbs

#endif
