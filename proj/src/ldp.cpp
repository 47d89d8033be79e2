#include "ldp.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "ifs.hpp"
#include "measure.hpp"
#include "numeric.hpp"

namespace spingibbs {

MomentPair moments(const ModelParams& p, const Observable& obs, double t) {
    MomentPair m;
    const double e1 = std::exp(t * obs.a1);
    const double e2 = std::exp(t * obs.a2);
    m.delta = e1 + e2;
    m.alpha = p.beta1 * (e1 - e2);
    return m;
}

double q_n_direct(const ModelParams& p, const Observable& obs, double t, int n) {
    if (n < 1 || n > 20) throw DepthTooLargeError("direct Q_n supports 1 <= n <= 20");

    const int len = n + 1;
    const std::vector<double> level = mu_level(p, len);

    // S(w) depends only on the number of 2-symbols; accumulate in log space
    // against the largest exponent to avoid overflow.
    const double mx = std::max(t * obs.a1, t * obs.a2) * len;
    std::vector<double> weight(static_cast<std::size_t>(len + 1));
    for (int k2 = 0; k2 <= len; ++k2) {
        const double s = t * (obs.a1 * (len - k2) + obs.a2 * k2);
        weight[static_cast<std::size_t>(k2)] = std::exp(s - mx);
    }

    KahanSum acc;
    for (std::uint32_t c = 0; c < (1u << len); ++c) {
        acc.add(weight[static_cast<std::size_t>(popcount32(c))] * level[c]);
    }
    return std::exp(mx) * acc.value();
}

double q_n_expansion(const ModelParams& p, const Observable& obs, double t, int n) {
    if (n < 3) throw WordTooShortError("expansion route needs n >= 3");
    if (n > 20) throw DepthTooLargeError("expansion route supports n <= 20");

    const MomentPair m = moments(p, obs, t);
    const double a2 = m.alpha * m.alpha;

    std::vector<double> q(static_cast<std::size_t>(n + 1));
    q[1] = q_n_direct(p, obs, t, 1);
    q[2] = q_n_direct(p, obs, t, 2);
    for (int k = 3; k <= n; ++k) {
        double s = 0.5 * m.delta * q[static_cast<std::size_t>(k - 1)];
        double tpow = 1.0;    // (phi-1)^i
        double half = 0.5;    // 2^{-(i+1)}
        double dpow = 1.0;    // delta^{i-1}
        for (int i = 1; i <= k - 2; ++i) {
            tpow *= p.tanh_term;
            half *= 0.5;
            if (i > 1) dpow *= m.delta;
            s += tpow * half * dpow * a2 * q[static_cast<std::size_t>(k - 1 - i)];
        }
        // closing term: phi (phi-1)^{k-1} / 2^{k+1} alpha^2 delta^{k-1}
        s += p.phi * std::pow(p.tanh_term, k - 1) * std::ldexp(1.0, -(k + 1)) * a2 *
             std::pow(m.delta, k - 1);
        q[static_cast<std::size_t>(k)] = s;
    }
    return q[static_cast<std::size_t>(n)];
}

namespace {

// Rescaled recurrence run; returns log Q_n.
double log_q_recur(const ModelParams& p, const Observable& obs, double t, int n) {
    const MomentPair m = moments(p, obs, t);
    const double c1 = 0.5 * p.phi * m.delta;
    const double c2 = p.tanh_term * (m.alpha * m.alpha - m.delta * m.delta) / 4.0;

    double qa = q_n_direct(p, obs, t, 1);
    double qb = q_n_direct(p, obs, t, 2);
    if (n == 1) return std::log(qa);
    if (n == 2) return std::log(qb);

    double logscale = 0.0;
    for (int k = 3; k <= n; ++k) {
        const double next = c1 * qb + c2 * qa;
        qa = qb;
        qb = next;
        const double s = std::abs(qb);
        if (s > 0.0) {
            qa /= s;
            qb /= s;
            logscale += std::log(s);
        }
    }
    return logscale + std::log(qb);
}

}  // namespace

double q_n_recurrence(const ModelParams& p, const Observable& obs, double t, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return std::exp(log_q_recur(p, obs, t, n));
}

double log_q_n_recurrence(const ModelParams& p, const Observable& obs, double t, int n) {
    if (n < 1 || n > 10000) throw DepthTooLargeError("log Q_n supports 1 <= n <= 10^4");
    return log_q_recur(p, obs, t, n);
}

double free_energy(const ModelParams& p, const Observable& obs, double t) {
    const MomentPair m = moments(p, obs, t);
    const double pd = p.phi * m.delta;
    const double disc =
        pd * pd + 4.0 * p.tanh_term * (m.alpha * m.alpha - m.delta * m.delta);
    return std::log(0.25 * (pd + std::sqrt(disc)));
}

double free_energy_derivative(const ModelParams& p, const Observable& obs, double t) {
    const double h = 1e-6;
    return (free_energy(p, obs, t + h) - free_energy(p, obs, t - h)) / (2.0 * h);
}

double rate_function(const ModelParams& p, const Observable& obs, double s) {
    const double lo_a = std::min(obs.a1, obs.a2);
    const double hi_a = std::max(obs.a1, obs.a2);
    const double inf = std::numeric_limits<double>::infinity();

    if (s < lo_a || s > hi_a) return inf;

    if (hi_a - lo_a < 1e-14) {
        // constant observable: c(t) = a t, so I(a) = 0
        return 0.0;
    }

    // At the endpoints S_n/n can only reach s on the constant-symbol
    // cylinder, whose exponential rate is -log r (f0 fixed point).
    const IFSParams f = ifs_params(p);
    const double edge_rate = -std::log(f.r);
    if (s <= lo_a || s >= hi_a) return edge_rate;

    // c' is strictly increasing; expand a bracket then bisect.
    const double t_cap = 600.0 / (hi_a - lo_a);
    double lo = -1.0, hi = 1.0;
    while (free_energy_derivative(p, obs, lo) > s) {
        lo *= 2.0;
        if (lo < -t_cap) return edge_rate;
    }
    while (free_energy_derivative(p, obs, hi) < s) {
        hi *= 2.0;
        if (hi > t_cap) return edge_rate;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (free_energy_derivative(p, obs, mid) < s) lo = mid;
        else hi = mid;
    }
    const double tstar = 0.5 * (lo + hi);
    return tstar * s - free_energy(p, obs, tstar);
}

double tail_rate(const ModelParams& p, const Observable& obs, double s, int n) {
    if (n < 1 || n > 20) throw DepthTooLargeError("tail rate supports 1 <= n <= 20");

    const std::vector<double> level = mu_level(p, n);
    const double threshold = s * n - 1e-9;
    KahanSum acc;
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
        const int k2 = popcount32(c);
        const double birkhoff = obs.a1 * (n - k2) + obs.a2 * k2;
        if (birkhoff >= threshold) acc.add(level[c]);
    }
    const double mass = acc.value();
    if (mass <= 0.0) return std::numeric_limits<double>::infinity();
    return -std::log(mass) / n;
}

}  // namespace spingibbs
