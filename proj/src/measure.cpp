#include "measure.hpp"

#include <cmath>
#include <cstdint>

#include "numeric.hpp"

namespace spingibbs {

double mu_length2(const ModelParams& p, int k0, int k1) {
    const double prod = p.beta_sym(k0) * p.beta_sym(k1);
    return 0.25 * (1.0 - prod) + 0.25 * p.phi * prod;
}

double mu_cylinder(const ModelParams& p, const Word& w) {
    const int n = w.size();
    if (n == 0) throw EmptyWordError();
    if (n == 1) return 0.5;

    double prev = 0.5;                            // mu of the last symbol
    double cur = mu_length2(p, w[n - 2], w[n - 1]);
    for (int i = n - 3; i >= 0; --i) {
        const double next = p.a(w[i], w[i + 1]) * cur + p.b(w[i], w[i + 1]) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double mu_cylinder_expansion(const ModelParams& p, const Word& w) {
    const int n = w.size();
    if (n < 3) throw WordTooShortError("prefix expansion needs |w| >= 3");

    const int m = n - 1;  // w = (k, j_1..j_m)
    const int k = w[0];

    // suffix measures mu(j_i .. j_m), stored at index i-1
    std::vector<double> suf(static_cast<std::size_t>(m));
    suf[static_cast<std::size_t>(m - 1)] = 0.5;
    suf[static_cast<std::size_t>(m - 2)] = mu_length2(p, w[m - 1], w[m]);
    for (int i = m - 3; i >= 0; --i) {
        suf[static_cast<std::size_t>(i)] =
            p.a(w[i + 1], w[i + 2]) * suf[static_cast<std::size_t>(i + 1)] +
            p.b(w[i + 1], w[i + 2]) * suf[static_cast<std::size_t>(i + 2)];
    }

    const double bk = p.beta_sym(k);
    double total = 0.5 * suf[0];
    double tpow = 1.0;            // (phi-1)^i
    double half = 0.5;            // 2^{-(i+1)}
    for (int i = 1; i <= m - 2; ++i) {
        tpow *= p.tanh_term;
        half *= 0.5;
        total += tpow * bk * p.beta_sym(w[i]) * half * suf[static_cast<std::size_t>(i)];
    }
    // closing terms, both weighted 2^{-(m+1)}
    const double tail_pow = std::pow(p.tanh_term, m - 1);
    const double tail_half = std::ldexp(1.0, -(m + 1));
    total += tail_pow * bk * p.beta_sym(w[m - 1]) * tail_half;
    total += tail_pow * p.tanh_term * bk * p.beta_sym(w[m]) * tail_half;
    return total;
}

namespace {

// Builds level len (>= 3) from level len-1 (cur) and level len-2 (prev).
std::vector<double> next_mu_level(const ModelParams& p, const std::vector<double>& cur,
                                  const std::vector<double>& prev, int len) {
    const std::uint32_t sub = 1u << (len - 1);
    std::vector<double> next(static_cast<std::size_t>(1) << len);
    for (std::uint32_t c = 0; c < sub; ++c) {
        const int top = 1 + static_cast<int>(c >> (len - 2));
        const double tail2 = prev[c & (sub / 2 - 1)];
        next[c] = p.a(1, top) * cur[c] + p.b(1, top) * tail2;
        next[c | sub] = p.a(2, top) * cur[c] + p.b(2, top) * tail2;
    }
    return next;
}

std::vector<double> mu_level2(const ModelParams& p) {
    std::vector<double> two(4);
    for (std::uint32_t c = 0; c < 4; ++c) {
        two[c] = mu_length2(p, 1 + static_cast<int>(c >> 1), 1 + static_cast<int>(c & 1));
    }
    return two;
}

}  // namespace

std::vector<double> mu_level(const ModelParams& p, int n) {
    if (n < 1 || n > 24) throw DepthTooLargeError("mu_level supports 1 <= n <= 24");
    if (n == 1) return {0.5, 0.5};

    std::vector<double> prev = {0.5, 0.5};
    std::vector<double> cur = mu_level2(p);
    for (int len = 3; len <= n; ++len) {
        std::vector<double> next = next_mu_level(p, cur, prev, len);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ConsistencyReport consistency_report(const ModelParams& p, int depth) {
    if (depth < 1 || depth > 22) {
        throw DepthTooLargeError("consistency depth must lie in [1, 22]");
    }

    ConsistencyReport rep;
    rep.depth = depth;

    std::vector<double> prev;
    std::vector<double> cur;
    for (int n = 1; n <= depth; ++n) {
        std::vector<double> level;
        if (n == 1) level = {0.5, 0.5};
        else if (n == 2) level = mu_level2(p);
        else level = next_mu_level(p, cur, prev, n);

        const std::uint32_t size = 1u << n;
        KahanSum mass;
        for (std::uint32_t c = 0; c < size; ++c) {
            mass.add(level[c]);
            const double fr = std::abs(level[c] - level[~c & (size - 1)]);
            if (fr > rep.max_flip_residual) rep.max_flip_residual = fr;
            const double rr = std::abs(level[c] - level[reverse_bits(c, n)]);
            if (rr > rep.max_reversal_residual) rep.max_reversal_residual = rr;
        }
        const double merr = std::abs(mass.value() - 1.0);
        if (merr > rep.max_total_mass_error) rep.max_total_mass_error = merr;

        if (n >= 2) {
            const std::uint32_t psize = 1u << (n - 1);
            for (std::uint32_t c = 0; c < psize; ++c) {
                const double parent = cur[c];
                const double kr = std::abs(level[2 * c] + level[2 * c + 1] - parent);
                if (kr > rep.max_kolmogorov_residual) rep.max_kolmogorov_residual = kr;
                const double sr = std::abs(level[c] + level[c | psize] - parent);
                if (sr > rep.max_shift_residual) rep.max_shift_residual = sr;
            }
        }

        prev = std::move(cur);
        cur = std::move(level);
    }
    return rep;
}

double mixing_sum(const ModelParams& p, const Word& a, const Word& b, int n_mid) {
    if (a.empty() || b.empty()) throw EmptyWordError();
    if (n_mid < 1) throw std::invalid_argument("middle block length must be >= 1");

    // V_m[g] = sum over middle words j of length m starting with g of mu(j.b).
    // Prepending a summed symbol kills the b-coefficient terms (they are odd
    // under 1<->2), so V_m[g] = sum_h a(g,h) V_{m-1}[h].
    double v[2];
    for (int g = 1; g <= 2; ++g) {
        v[g - 1] = mu_cylinder(p, Word({g}).concat(b));
    }
    for (int m = 2; m <= n_mid; ++m) {
        const double nv0 = p.a(1, 1) * v[0] + p.a(1, 2) * v[1];
        const double nv1 = p.a(2, 1) * v[0] + p.a(2, 2) * v[1];
        v[0] = nv0;
        v[1] = nv1;
    }

    // Append a's symbols right to left.  The symbol adjacent to the summed
    // block again loses its b-term; deeper symbols follow the plain
    // recurrence on the pair (current, one-dropped).
    const int k = a.size();
    double pair_hi = p.a(a[k - 1], 1) * v[0] + p.a(a[k - 1], 2) * v[1];
    double pair_lo = v[0] + v[1];  // sum_{|j|=n_mid} mu(j.b)
    for (int i = k - 2; i >= 0; --i) {
        const double np = p.a(a[i], a[i + 1]) * pair_hi + p.b(a[i], a[i + 1]) * pair_lo;
        pair_lo = pair_hi;
        pair_hi = np;
    }
    return pair_hi;
}

double mixing_residual(const ModelParams& p, const Word& a, const Word& b, int n_mid) {
    const double s = mixing_sum(p, a, b, n_mid);
    return std::abs(s - mu_cylinder(p, a) * mu_cylinder(p, b));
}

}  // namespace spingibbs
