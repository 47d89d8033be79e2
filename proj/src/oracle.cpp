#include "oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "measure.hpp"
#include "numeric.hpp"

namespace spingibbs {

double mu_oracle_subset(const ModelParams& p, const Word& w) {
    const int n = w.size();
    if (n == 0) throw EmptyWordError();
    if (n > 24) throw WordTooLongError("subset oracle supports |w| <= 24");
    if (n == 1) return 0.5;  // no bonds: Tr(P_j)/2

    // site i lives at bit i (LSB first) in the parity pattern
    std::uint32_t wbits = 0;
    for (int i = 0; i < n; ++i) {
        if (w[i] == 2) wbits |= 1u << i;
    }

    double tpow[25];
    double bpow[25];
    tpow[0] = bpow[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        tpow[i] = tpow[i - 1] * p.tanh_term;
        bpow[i] = bpow[i - 1] * p.beta1;
    }

    const std::uint32_t site_mask = (n == 32) ? ~0u : ((1u << n) - 1);
    const std::uint32_t nmasks = 1u << (n - 1);
    KahanSum total;
    for (std::uint32_t s = 0; s < nmasks; ++s) {
        // bond j occupies bit j and touches sites j and j+1
        const std::uint32_t parity = (s ^ (s << 1)) & site_mask;
        const int odd_sites = popcount32(parity);
        const double sign = (popcount32(parity & wbits) & 1) ? -1.0 : 1.0;
        total.add(tpow[popcount32(s)] * bpow[odd_sites] * sign);
    }
    return std::ldexp(total.value(), -n);
}

namespace {

// exp(-beta H_n) normalized by cosh^{n-1}(beta) 2^0:
// prod_l [ I + (phi-1) sx_l sx_{l+1} ].  sx_l sx_{l+1} flips the bits of
// sites l and l+1 (site 0 = most significant bit, Kronecker order).
Eigen::MatrixXd evolution_operator(const ModelParams& p, int n) {
    const int dim = 1 << n;
    Eigen::MatrixXd op = Eigen::MatrixXd::Identity(dim, dim);
    for (int l = 0; l + 1 < n; ++l) {
        Eigen::MatrixXd factor = Eigen::MatrixXd::Identity(dim, dim);
        const int flip = (1 << (n - 1 - l)) | (1 << (n - 2 - l));
        for (int c = 0; c < dim; ++c) {
            factor(c ^ flip, c) += p.tanh_term;
        }
        op = op * factor;
    }
    return op;
}

// Tr(op . (P_{j_1} x ... x P_{j_n})) / 2^n without forming the tensor
double dense_trace(const Eigen::MatrixXd& op, const ModelParams& p, const Word& w) {
    const int n = w.size();
    const int dim = 1 << n;
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);
    const double proj[2][2][2] = {
        {{ct * ct, ct * st}, {ct * st, st * st}},    // P_1
        {{st * st, -ct * st}, {-ct * st, ct * ct}},  // P_2
    };
    double tr = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            // tensor entry (c, r), so the product's diagonal (r, r) is hit
            double v = 1.0;
            for (int i = 0; i < n; ++i) {
                const int rb = (c >> (n - 1 - i)) & 1;
                const int cb = (r >> (n - 1 - i)) & 1;
                v *= proj[w[i] - 1][rb][cb];
            }
            tr += op(r, c) * v;
        }
    }
    return std::ldexp(tr, -n);
}

}  // namespace

double mu_oracle_dense(const ModelParams& p, const Word& w) {
    const int n = w.size();
    if (n == 0) throw EmptyWordError();
    if (n > 8) throw WordTooLongError("dense oracle supports |w| <= 8");
    if (n == 1) return 0.5;
    return dense_trace(evolution_operator(p, n), p, w);
}

std::vector<double> mu_oracle_dense_level(const ModelParams& p, int n) {
    if (n < 1 || n > 8) throw WordTooLongError("dense oracle supports |w| <= 8");
    if (n == 1) return {0.5, 0.5};
    const Eigen::MatrixXd op = evolution_operator(p, n);
    std::vector<double> out(static_cast<std::size_t>(1) << n);
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
        out[c] = dense_trace(op, p, Word::from_code(c, n));
    }
    return out;
}

double oracle_cross_check(const ModelParams& p, int n) {
    if (n < 1 || n > 12) throw DepthTooLargeError("oracle cross-check supports n <= 12");

    const std::vector<double> level = mu_level(p, n);
    const bool with_dense = (n <= 8);
    std::vector<double> dense;
    if (with_dense) dense = mu_oracle_dense_level(p, n);
    double worst = 0.0;
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
        const Word w = Word::from_code(c, n);
        double vals[4];
        int cnt = 0;
        vals[cnt++] = level[c];
        vals[cnt++] = mu_oracle_subset(p, w);
        if (n >= 3) vals[cnt++] = mu_cylinder_expansion(p, w);
        if (with_dense) vals[cnt++] = dense[c];
        for (int i = 0; i < cnt; ++i) {
            for (int j = i + 1; j < cnt; ++j) {
                const double denom = std::abs(vals[0]);
                const double rel = std::abs(vals[i] - vals[j]) / denom;
                if (rel > worst) worst = rel;
            }
        }
    }
    return worst;
}

}  // namespace spingibbs
