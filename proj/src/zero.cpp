#include "zero.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "measure.hpp"
#include "numeric.hpp"

namespace spingibbs {

ZeroParams make_zero_params(double theta) {
    validate_theta(theta);
    ZeroParams z;
    z.theta = theta;
    z.beta1 = std::sin(2.0 * theta);
    z.gamma0 = 0.25 * (1.0 - z.beta1 * z.beta1);
    z.p = 0.5 * (1.0 + z.beta1);
    return z;
}

namespace {

inline double a0_coef(int k0, int k1) { return k0 == k1 ? 0.0 : 1.0; }
inline double b0_coef(const ZeroParams& z, int k0, int k1) {
    return k0 == k1 ? z.gamma0 : -z.gamma0;
}

}  // namespace

double mu0_cylinder(const ZeroParams& z, const Word& w) {
    const int n = w.size();
    if (n == 0) throw EmptyWordError();
    if (n == 1) return 0.5;

    double prev = 1.0;
    double cur = 0.5;
    for (int i = n - 2; i >= 0; --i) {
        const double next = a0_coef(w[i], w[i + 1]) * cur + b0_coef(z, w[i], w[i + 1]) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> mu0_level(const ZeroParams& z, int n) {
    if (n < 1 || n > 24) throw DepthTooLargeError("mu0_level supports 1 <= n <= 24");
    if (n == 1) return {0.5, 0.5};

    std::vector<double> prev = {1.0, 1.0};  // mu0(empty) seen from either branch
    std::vector<double> cur = {0.5, 0.5};
    for (int len = 2; len <= n; ++len) {
        const std::uint32_t sub = 1u << (len - 1);
        std::vector<double> next(static_cast<std::size_t>(1) << len);
        for (std::uint32_t c = 0; c < sub; ++c) {
            const int top = 1 + static_cast<int>(c >> (len - 2));
            const double tail2 = (len == 2) ? 1.0 : prev[c & (sub / 2 - 1)];
            next[c] = a0_coef(1, top) * cur[c] + b0_coef(z, 1, top) * tail2;
            next[c | sub] = a0_coef(2, top) * cur[c] + b0_coef(z, 2, top) * tail2;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double zero_entropy(const ZeroParams& z) {
    return -z.p * std::log(z.p) - (1.0 - z.p) * std::log(1.0 - z.p);
}

double jacobian0_n(const ZeroParams& z, const Word& w) {
    const int n = w.size();
    if (n < 2) throw WordTooShortError("jacobian truncation needs |w| >= 2");
    double x = 0.5;
    for (int i = n - 2; i >= 0; --i) {
        x = (w[i] == w[i + 1]) ? z.gamma0 / x : 1.0 - z.gamma0 / x;
    }
    return x;
}

std::vector<AB> recode_ab(const Word& w) {
    if (w.size() < 2) throw WordTooShortError("recode_ab needs |w| >= 2");
    std::vector<AB> m;
    m.reserve(static_cast<std::size_t>(w.size() - 1));
    for (int i = 0; i + 1 < w.size(); ++i) {
        m.push_back(w[i] == w[i + 1] ? AB::a : AB::b);
    }
    return m;
}

BlockNormalForm recode_blocks(const std::vector<AB>& m) {
    BlockNormalForm out;
    std::size_t len = m.size();
    if (len % 2 == 1) {
        out.truncated_odd = true;
        --len;
    }

    // token stream with cancellation of adjacent equal blocks (each block is
    // an involution, so the reduced word is alternating or empty)
    auto push = [&out](Block blk) {
        if (!out.word.empty() && out.word.back() == blk) out.word.pop_back();
        else out.word.push_back(blk);
    };
    for (std::size_t i = 0; i + 1 < len; i += 2) {
        const AB x = m[i];
        const AB y = m[i + 1];
        if (x == AB::a && y == AB::a) continue;             // [a,a] deleted
        if (x == AB::a && y == AB::b) push(Block::alpha);   // [a,b]
        else if (x == AB::b && y == AB::a) push(Block::beta);  // [b,a]
        else {                                              // [b,b] -> [b,a],[a,b]
            push(Block::beta);
            push(Block::alpha);
        }
    }
    return out;
}

std::vector<int> h_map(int c0, const Word& w) {
    if (w.empty()) throw EmptyWordError();
    if (c0 != 0 && c0 != 1) throw std::invalid_argument("c0 must be 0 or 1");
    std::vector<int> out(static_cast<std::size_t>(w.size()));
    out[0] = c0;
    for (int j = 1; j < w.size(); ++j) {
        out[static_cast<std::size_t>(j)] = (c0 + w[0] + w[j] + (j % 2)) % 2;
    }
    return out;
}

std::vector<int> class_bits(const Word& w, int c0) {
    std::vector<int> cs(static_cast<std::size_t>(w.size()));
    cs[0] = c0;
    for (int j = 0; j + 1 < w.size(); ++j) {
        cs[static_cast<std::size_t>(j + 1)] =
            cs[static_cast<std::size_t>(j)] ^ (w[j] == w[j + 1] ? 1 : 0);
    }
    return cs;
}

double class_mass(const ZeroParams& z, const Word& w, int c0) {
    if (w.empty()) throw EmptyWordError();
    double mass = 1.0;
    int c = c0;
    for (int i = 0; i + 1 < w.size(); ++i) {
        mass *= (c == 0) ? z.p : 1.0 - z.p;
        c ^= (w[i] == w[i + 1]) ? 1 : 0;
    }
    // last symbol: mu([k] cap class) = (p or 1-p)/2 by flip symmetry
    mass *= 0.5 * ((c == 0) ? z.p : 1.0 - z.p);
    return mass;
}

double mu_h_preimage(const ZeroParams& z, const std::vector<int>& code) {
    const int L = static_cast<int>(code.size());
    if (L < 1 || L > 20) throw DepthTooLargeError("code length must lie in [1, 20]");

    KahanSum acc;
    for (std::uint32_t wc = 0; wc < (1u << L); ++wc) {
        const Word w = Word::from_code(wc, L);
        for (int c0 = 0; c0 < 2; ++c0) {
            const std::vector<int> cs = class_bits(w, c0);
            if (cs == code) acc.add(class_mass(z, w, c0));
        }
    }
    return acc.value();
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

std::vector<double> jacobian0_grid(const ZeroParams& z, int n) {
    if (n < 2 || n > 22) throw DepthTooLargeError("zero-temperature grid supports 2 <= n <= 22");

    // truncation values by level DP (prepending applies one map)
    std::vector<double> cur = {0.5, 0.5};
    for (int len = 2; len <= n; ++len) {
        const std::uint32_t sub = 1u << (len - 1);
        std::vector<double> next(static_cast<std::size_t>(1) << len);
        for (std::uint32_t c = 0; c < sub; ++c) {
            const int top = 1 + static_cast<int>(c >> (len - 2));
            const double ga = z.gamma0 / cur[c];
            next[(top == 1) ? c : (c | sub)] = ga;            // same symbol prepended
            next[(top == 1) ? (c | sub) : c] = 1.0 - ga;      // changed symbol
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::uint8_t> classify_level(const ZeroParams& z, int depth, double tol) {
    const std::vector<double> values = jacobian0_grid(z, depth);
    std::vector<std::uint8_t> cls(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::abs(values[i] - z.p) < tol) cls[i] = 0;
        else if (std::abs(values[i] - (1.0 - z.p)) < tol) cls[i] = 1;
        else cls[i] = 2;
    }
    return cls;
}

namespace {

constexpr double kClassifyTol = 1e-9;

// class of sigma^j x for every j < depth, given the word bits of x;
// cheap incremental variant used in the big sweeps below
struct CodeWalker {
    std::uint32_t code = 0;
    int depth = 0;

    int symbol(int j) const { return 1 + static_cast<int>((code >> (depth - 1 - j)) & 1u); }
};

}  // namespace

// ---------------------------------------------------------------------------
// classify_point
// ---------------------------------------------------------------------------

PointClass classify_point(const ZeroParams& z, const EventualSeq& s) {
    if (s.period.empty()) throw std::invalid_argument("period must be nonempty");

    constexpr int kMaxSymbols = 10000;
    constexpr int kStableNeeded = 3;

    PointClass out;
    out.j_value = std::numeric_limits<double>::quiet_NaN();

    // symbols of preperiod . period^inf, grown one at a time
    std::vector<int> syms;
    syms.reserve(256);
    auto symbol_at = [&s](int i) {
        if (i < s.preperiod.size()) return s.preperiod[i];
        return s.period[(i - s.preperiod.size()) % s.period.size()];
    };
    syms.push_back(symbol_at(0));

    int stable_a = 0, stable_b = 0;
    for (int n = 2; n <= kMaxSymbols; ++n) {
        syms.push_back(symbol_at(n - 1));
        double v = 0.5;
        for (int i = n - 2; i >= 0; --i) {
            v = (syms[static_cast<std::size_t>(i)] == syms[static_cast<std::size_t>(i + 1)])
                    ? z.gamma0 / v
                    : 1.0 - z.gamma0 / v;
        }
        if (std::abs(v - z.p) < kClassifyTol) {
            ++stable_a;
            stable_b = 0;
        } else if (std::abs(v - (1.0 - z.p)) < kClassifyTol) {
            ++stable_b;
            stable_a = 0;
        } else {
            stable_a = stable_b = 0;
        }
        if (stable_a >= kStableNeeded || stable_b >= kStableNeeded) {
            out.kind = stable_a >= kStableNeeded ? PointKind::A : PointKind::B;
            out.witness_n = n;
            out.j_value = v;
            return out;
        }
    }

    // Symbolic certification on the periodic tail.  The transition code of
    // the period (with wraparound) is itself periodic in m.
    const Word pp = s.period.concat(s.period);
    std::vector<AB> m_period = recode_ab(pp);
    m_period.resize(s.period.raw().size());  // one period of transitions

    bool all_a = true;
    for (AB x : m_period) {
        if (x == AB::b) all_a = false;
    }
    if (all_a) {
        out.kind = PointKind::Divergent;  // code ends in a,a,a,...
        out.witness_n = kMaxSymbols;
        return out;
    }

    auto repeated_len = [&](int copies) {
        std::vector<AB> rep;
        rep.reserve(m_period.size() * static_cast<std::size_t>(copies));
        for (int i = 0; i < copies; ++i) {
            rep.insert(rep.end(), m_period.begin(), m_period.end());
        }
        return recode_blocks(rep).word.size();
    };
    const std::size_t l2 = repeated_len(2);
    const std::size_t l4 = repeated_len(4);
    if (l4 <= l2) {
        // the block normal form keeps emptying as the period repeats
        out.kind = PointKind::Divergent;
        out.witness_n = kMaxSymbols;
        return out;
    }

    out.kind = PointKind::Undecided;
    out.witness_n = kMaxSymbols;
    return out;
}

// ---------------------------------------------------------------------------
// sampling via the inverse conjugacy
// ---------------------------------------------------------------------------

namespace {

// Reconstructs the first `len` symbols of x = H^{-1}(c0, (c1, c2, ...)) where
// the code bits are drawn i.i.d. Bernoulli(1-p on 1) and c0 uniform:
//   u(c0,(c1,...)) = (c0+c1, (c1,...)) =: (d0, (d1, d2, ...)),  a_0 = 2-d0,
//   a_j = d_{j+1} + d_1 + a_0 + (j odd)  (mod 2), symbol 1 odd / 2 even.
Word sample_point(const ZeroParams& z, int len, std::mt19937_64& rng) {
    std::bernoulli_distribution bit1(1.0 - z.p);  // code bit 1 has mass 1-p
    std::bernoulli_distribution coin(0.5);

    const int c0 = coin(rng) ? 1 : 0;
    std::vector<int> code(static_cast<std::size_t>(len + 1));
    for (int j = 0; j < len + 1; ++j) code[static_cast<std::size_t>(j)] = bit1(rng) ? 1 : 0;

    const int d0 = (c0 + code[0]) % 2;
    std::vector<int> syms(static_cast<std::size_t>(len));
    const int a0 = 2 - d0;
    syms[0] = a0;
    for (int j = 1; j < len; ++j) {
        const int residue = (code[static_cast<std::size_t>(j)] + code[0] + a0 + (j % 2)) % 2;
        syms[static_cast<std::size_t>(j)] = (residue == 1) ? 1 : 2;
    }
    return Word(syms);
}

}  // namespace

double birkhoff_entropy_estimate(const ZeroParams& z, int orbit_len, int samples,
                                 std::uint64_t seed) {
    if (orbit_len < 1 || samples < 1) throw std::invalid_argument("orbit_len and samples must be >= 1");

    constexpr int kWindow = 64;
    std::mt19937_64 rng(seed);
    KahanSum total;
    for (int s = 0; s < samples; ++s) {
        const Word x = sample_point(z, orbit_len + kWindow, rng);
        KahanSum orbit_sum;
        for (int j = 0; j < orbit_len; ++j) {
            // truncated Jacobian over the window starting at position j
            double v = 0.5;
            for (int i = j + kWindow - 2; i >= j; --i) {
                v = (x[i] == x[i + 1]) ? z.gamma0 / v : 1.0 - z.gamma0 / v;
            }
            orbit_sum.add(-std::log(v));
        }
        total.add(orbit_sum.value() / orbit_len);
    }
    return total.value() / samples;
}

// ---------------------------------------------------------------------------
// conjugacy check
// ---------------------------------------------------------------------------

namespace {

struct BitPoint {
    int c0 = 0;
    std::vector<int> tail;
};

BitPoint apply_u(const BitPoint& x) {
    BitPoint y;
    y.c0 = (x.c0 + x.tail.at(0)) % 2;
    y.tail = x.tail;
    return y;
}

BitPoint apply_T(const BitPoint& x) {
    BitPoint y;
    y.c0 = 1 - x.c0;
    y.tail.assign(x.tail.begin() + 1, x.tail.end());
    return y;
}

BitPoint apply_M(const BitPoint& x) {
    BitPoint y;
    y.c0 = (x.c0 + x.tail.at(0) + x.tail.at(1) + 1) % 2;
    y.tail.assign(x.tail.begin() + 1, x.tail.end());
    return y;
}

}  // namespace

ConjugacyReport conjugacy_check(const ZeroParams& z, int n) {
    if (n < 2 || n > 18) throw DepthTooLargeError("conjugacy check supports 2 <= n <= 18");

    ConjugacyReport rep;
    rep.depth = n;

    // (i) h o sigma = sigma o h on all length-n words, both classes
    for (std::uint32_t wc = 0; wc < (1u << n); ++wc) {
        const Word w = Word::from_code(wc, n);
        const Word sw = w.suffix(1);
        for (int c0 = 0; c0 < 2; ++c0) {
            const std::vector<int> hw = h_map(c0, w);
            const int c0_shift = c0 ^ (w[0] == w[1] ? 1 : 0);
            const std::vector<int> hsw = h_map(c0_shift, sw);
            for (int j = 0; j + 1 < n; ++j) {
                const double r = std::abs(hw[static_cast<std::size_t>(j + 1)] -
                                          hsw[static_cast<std::size_t>(j)]);
                if (r > rep.max_semiconjugacy_residual) rep.max_semiconjugacy_residual = r;
            }
        }
    }

    // (ii) mu(h^{-1}[c]) vs mu_p[c], exact class masses
    const int code_len = std::min(n, 12);
    for (int L = 1; L <= code_len; ++L) {
        std::vector<double> mass(static_cast<std::size_t>(1) << L, 0.0);
        for (std::uint32_t wc = 0; wc < (1u << L); ++wc) {
            const Word w = Word::from_code(wc, L);
            for (int c0 = 0; c0 < 2; ++c0) {
                const std::vector<int> cs = class_bits(w, c0);
                std::uint32_t idx = 0;
                for (int j = 0; j < L; ++j) idx = (idx << 1) | static_cast<std::uint32_t>(cs[static_cast<std::size_t>(j)]);
                mass[idx] += class_mass(z, w, c0);
            }
        }
        for (std::uint32_t code = 0; code < (1u << L); ++code) {
            double mp = 1.0;
            for (int j = L - 1; j >= 0; --j) {
                mp *= ((code >> j) & 1u) ? (1.0 - z.p) : z.p;
            }
            const double err = std::abs(mass[code] - mp);
            if (err > rep.max_cylinder_mass_error) rep.max_cylinder_mass_error = err;
        }
    }

    // (ii') same masses via truncation classification, with undecided mass
    // reported as the error bar
    const int cls_code_len = std::min(code_len, 8);
    const int d = std::min(cls_code_len + 12, 20);
    rep.classification_depth = d;
    {
        const std::vector<std::uint8_t> cls = classify_level(z, d, kClassifyTol);
        const std::vector<double> mu0 = mu0_level(z, d);
        std::vector<double> mass(static_cast<std::size_t>(1) << cls_code_len, 0.0);
        KahanSum undecided;
        for (std::uint32_t wc = 0; wc < (1u << d); ++wc) {
            if (cls[wc] == 2) {
                undecided.add(mu0[wc]);
                continue;
            }
            // code prefix from the classified class of the whole cylinder
            std::uint32_t idx = 0;
            int c = cls[wc];
            for (int j = 0; j < cls_code_len; ++j) {
                idx = (idx << 1) | static_cast<std::uint32_t>(c);
                const int s0 = 1 + static_cast<int>((wc >> (d - 1 - j)) & 1u);
                const int s1 = 1 + static_cast<int>((wc >> (d - 2 - j)) & 1u);
                c ^= (s0 == s1) ? 1 : 0;
            }
            mass[idx] += mu0[wc];
        }
        rep.classification_undecided_mass = undecided.value();
        for (std::uint32_t code = 0; code < (1u << cls_code_len); ++code) {
            double mp = 1.0;
            for (int j = cls_code_len - 1; j >= 0; --j) {
                mp *= ((code >> j) & 1u) ? (1.0 - z.p) : z.p;
            }
            const double err = std::abs(mass[code] - mp);
            if (err > rep.max_cylinder_mass_error_classified) {
                rep.max_cylinder_mass_error_classified = err;
            }
        }
    }

    // (iii) u o u = id and u o M o u = T on pseudorandom points
    std::mt19937_64 rng(12345);
    std::bernoulli_distribution coin(0.5);
    rep.involution_ok = true;
    rep.conjugation_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        BitPoint x;
        x.c0 = coin(rng) ? 1 : 0;
        x.tail.resize(16);
        for (int& b : x.tail) b = coin(rng) ? 1 : 0;

        const BitPoint uux = apply_u(apply_u(x));
        if (uux.c0 != x.c0 || uux.tail != x.tail) rep.involution_ok = false;

        const BitPoint lhs = apply_u(apply_M(apply_u(x)));
        const BitPoint rhs = apply_T(x);
        if (lhs.c0 != rhs.c0 || lhs.tail != rhs.tail) rep.conjugation_ok = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// weak* comparison
// ---------------------------------------------------------------------------

double weak_star_diff(const ZeroParams& z, double beta, const Word& w) {
    const ModelParams p = make_params(z.theta, beta);
    return std::abs(mu_cylinder(p, w) - mu0_cylinder(z, w));
}

double weak_star_max_diff(const ZeroParams& z, double beta, int depth) {
    if (depth < 1 || depth > 14) throw DepthTooLargeError("weak* check supports depth <= 14");
    const ModelParams p = make_params(z.theta, beta);
    double worst = 0.0;
    for (int n = 1; n <= depth; ++n) {
        const std::vector<double> lb = mu_level(p, n);
        const std::vector<double> l0 = mu0_level(z, n);
        for (std::size_t i = 0; i < lb.size(); ++i) {
            const double d = std::abs(lb[i] - l0[i]);
            if (d > worst) worst = d;
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// non-mixing diagnostic
// ---------------------------------------------------------------------------

namespace {

void even_odd_stats(const std::vector<double>& c, double* separation, double* spread) {
    double even_sum = 0, odd_sum = 0;
    int even_cnt = 0, odd_cnt = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const int n = static_cast<int>(k) + 1;
        if (n % 2 == 0) { even_sum += c[k]; ++even_cnt; }
        else { odd_sum += c[k]; ++odd_cnt; }
    }
    const double em = even_cnt ? even_sum / even_cnt : 0.0;
    const double om = odd_cnt ? odd_sum / odd_cnt : 0.0;
    double sp = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const int n = static_cast<int>(k) + 1;
        const double m = (n % 2 == 0) ? em : om;
        sp = std::max(sp, std::abs(c[k] - m));
    }
    *separation = std::abs(em - om);
    *spread = sp;
}

}  // namespace

NonmixingReport nonmixing_diagnostic(const ZeroParams& z, int n_max) {
    if (n_max < 1 || n_max > 12) throw DepthTooLargeError("nonmixing diagnostic supports n_max <= 12");

    NonmixingReport rep;
    rep.c_A_exact.assign(static_cast<std::size_t>(n_max), 0.0);
    rep.c_A_classified.assign(static_cast<std::size_t>(n_max), 0.0);
    rep.c_E_exact.assign(static_cast<std::size_t>(n_max), 0.0);
    rep.c_E_classified.assign(static_cast<std::size_t>(n_max), 0.0);

    // exact masses at depth n_max + 1
    {
        const int L = n_max + 1;
        std::vector<KahanSum> cA(static_cast<std::size_t>(n_max));
        std::vector<KahanSum> cE(static_cast<std::size_t>(n_max));
        KahanSum muA;
        for (std::uint32_t wc = 0; wc < (1u << L); ++wc) {
            const Word w = Word::from_code(wc, L);
            for (int c0 = 0; c0 < 2; ++c0) {
                const double mass = class_mass(z, w, c0);
                const std::vector<int> cs = class_bits(w, c0);
                if (c0 == 0) muA.add(mass);
                const int e0 = ((w[0] % 2) + cs[0]) % 2;
                for (int n = 1; n <= n_max; ++n) {
                    if (cs[0] == 0 && cs[static_cast<std::size_t>(n)] == 0) {
                        cA[static_cast<std::size_t>(n - 1)].add(mass);
                    }
                    const int en = ((w[n] % 2) + cs[static_cast<std::size_t>(n)]) % 2;
                    if (e0 == 0 && en == 0) {
                        cE[static_cast<std::size_t>(n - 1)].add(mass);
                    }
                }
            }
        }
        rep.mu_A_exact = muA.value();
        for (int n = 1; n <= n_max; ++n) {
            rep.c_A_exact[static_cast<std::size_t>(n - 1)] = cA[static_cast<std::size_t>(n - 1)].value();
            rep.c_E_exact[static_cast<std::size_t>(n - 1)] = cE[static_cast<std::size_t>(n - 1)].value();
        }
    }

    // classified masses at a fixed refinement depth
    const int d = std::min(n_max + 14, 22);
    rep.classification_depth = d;
    {
        const std::vector<std::uint8_t> cls = classify_level(z, d, kClassifyTol);
        const std::vector<double> mu0 = mu0_level(z, d);
        std::vector<KahanSum> cA(static_cast<std::size_t>(n_max));
        std::vector<KahanSum> cE(static_cast<std::size_t>(n_max));
        KahanSum muA;
        KahanSum undecided;
        for (std::uint32_t wc = 0; wc < (1u << d); ++wc) {
            if (cls[wc] == 2) {
                undecided.add(mu0[wc]);
                continue;
            }
            const double mass = mu0[wc];
            int c = cls[wc];
            const int s_first = 1 + static_cast<int>((wc >> (d - 1)) & 1u);
            const int c_first = c;
            const int e0 = ((s_first % 2) + c_first) % 2;
            if (c_first == 0) muA.add(mass);
            for (int j = 0; j < n_max; ++j) {
                const int s0 = 1 + static_cast<int>((wc >> (d - 1 - j)) & 1u);
                const int s1 = 1 + static_cast<int>((wc >> (d - 2 - j)) & 1u);
                c ^= (s0 == s1) ? 1 : 0;
                if (c_first == 0 && c == 0) cA[static_cast<std::size_t>(j)].add(mass);
                const int en = ((s1 % 2) + c) % 2;
                if (e0 == 0 && en == 0) cE[static_cast<std::size_t>(j)].add(mass);
            }
        }
        rep.mu_A_classified = muA.value();
        rep.undecided_mass = undecided.value();
        for (int n = 1; n <= n_max; ++n) {
            rep.c_A_classified[static_cast<std::size_t>(n - 1)] = cA[static_cast<std::size_t>(n - 1)].value();
            rep.c_E_classified[static_cast<std::size_t>(n - 1)] = cE[static_cast<std::size_t>(n - 1)].value();
        }
    }

    even_odd_stats(rep.c_A_classified, &rep.separation_A, &rep.spread_A);
    even_odd_stats(rep.c_E_classified, &rep.separation_E, &rep.spread_E);
    return rep;
}

}  // namespace spingibbs
