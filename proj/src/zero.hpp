#ifndef SPINGIBBS_ZERO_HPP
#define SPINGIBBS_ZERO_HPP

#include <cstdint>
#include <vector>

#include "model.hpp"

namespace spingibbs {

// beta -> infinity limit parameters.
//   gamma0 = (1 - beta1^2)/4 = mu(1,1),   p = (1 + beta1)/2,   gamma0 = p(1-p).
struct ZeroParams {
    double theta = 0;
    double beta1 = 0;
    double gamma0 = 0;
    double p = 0;
};

ZeroParams make_zero_params(double theta);

// Zero-temperature cylinder measure: the recurrence with coefficients
// a(k,k)=0, a(k0!=k1)=1, b(k,k)=gamma0, b(k0!=k1)=-gamma0.
double mu0_cylinder(const ZeroParams& z, const Word& w);

// mu0 over all 2^n words (dyadic order).
std::vector<double> mu0_level(const ZeroParams& z, int n);

// Closed-form entropy -p log p - (1-p) log(1-p).
double zero_entropy(const ZeroParams& z);

// Monte Carlo Birkhoff estimate of -int log J dmu: points sampled through
// the inverse conjugacy, J evaluated by truncation windows along the orbit.
double birkhoff_entropy_estimate(const ZeroParams& z, int orbit_len, int samples,
                                 std::uint64_t seed);

// ---------------------------------------------------------------------------
// Pointwise Jacobian classification
// ---------------------------------------------------------------------------

enum class PointKind { A, B, Divergent, Undecided };

struct PointClass {
    PointKind kind = PointKind::Undecided;
    int witness_n = 0;   // symbols consumed when the verdict was reached
    double j_value = 0;  // converged truncation value for A/B, NaN otherwise
};

// Iterates seed-1/2 truncations along lengthening prefixes (primary).  When
// the truncations do not settle, the symbolic deletion calculus on the
// period certifies Divergent: an all-a transition code, or a block normal
// form that keeps emptying as the period repeats.
PointClass classify_point(const ZeroParams& z, const EventualSeq& s);

// ---------------------------------------------------------------------------
// Symbolic recodings
// ---------------------------------------------------------------------------

enum class AB : std::uint8_t { a, b };

// m_i = a if k_i = k_{i+1}, b otherwise; output length |w| - 1.
std::vector<AB> recode_ab(const Word& w);

enum class Block : std::uint8_t { alpha, beta };  // alpha = [a,b], beta = [b,a]

struct BlockNormalForm {
    std::vector<Block> word;  // reduced: alternating or empty
    bool truncated_odd = false;
};

// Pairs m into blocks, deletes [a,a], replaces [b,b] by [b,a],[a,b], then
// cancels adjacent equal blocks (alpha^2 = beta^2 = identity).  Odd-length
// input is truncated by one symbol and flagged.
BlockNormalForm recode_blocks(const std::vector<AB>& m);

// h(c0, (a_0, a_1, ...)) = (c0, c0+a_0+a_1+1, c0+a_0+a_2, c0+a_0+a_3+1, ...)
// mod 2; output length |w|.
std::vector<int> h_map(int c0, const Word& w);

// ---------------------------------------------------------------------------
// Exact class-split masses
// ---------------------------------------------------------------------------

// mu([w] and {class bit c0}), where class bit 0 means the Jacobian limit is
// p (set A) and 1 means 1-p (set B).  Follows the prepending rule: the class
// flips exactly when the first two symbols agree, and prepending multiplies
// the mass by p (landing in A) or 1-p (landing in B).
double class_mass(const ZeroParams& z, const Word& w, int c0);

// Class bit sequence along w given the class of the point: c_{j+1} = c_j xor
// [w_j == w_{j+1}].
std::vector<int> class_bits(const Word& w, int c0);

// mu(h^{-1}[c]) computed exactly from class masses.
double mu_h_preimage(const ZeroParams& z, const std::vector<int>& code);

// ---------------------------------------------------------------------------
// Diagnostics
// ---------------------------------------------------------------------------

struct ConjugacyReport {
    double max_semiconjugacy_residual = 0;  // h o sigma vs sigma o h, exact 0
    double max_cylinder_mass_error = 0;     // exact route vs mu_p products
    double max_cylinder_mass_error_classified = 0;  // truncation-classified route
    double classification_undecided_mass = 0;       // error bar of that route
    bool involution_ok = false;   // u o u = id
    bool conjugation_ok = false;  // u o M o u = T
    int depth = 0;
    int classification_depth = 0;
};

ConjugacyReport conjugacy_check(const ZeroParams& z, int n);

// |mu_beta(C) - mu0(C)| for one cylinder, and its max over all cylinders of
// length <= depth.
double weak_star_diff(const ZeroParams& z, double beta, const Word& w);
double weak_star_max_diff(const ZeroParams& z, double beta, int depth);

struct NonmixingReport {
    // index k holds the lag n = k+1 value
    std::vector<double> c_A_exact;        // mu(A cap sigma^-n A), exact masses
    std::vector<double> c_A_classified;   // same via truncation classification
    std::vector<double> c_E_exact;        // parity set E0 = ([2] cap A) u ([1] cap B)
    std::vector<double> c_E_classified;
    double mu_A_exact = 0;
    double mu_A_classified = 0;
    double undecided_mass = 0;       // error bar for the classified columns
    int classification_depth = 0;

    // even/odd subsequence statistics (means and in-subsequence spreads)
    double separation_A = 0, spread_A = 0;
    double separation_E = 0, spread_E = 0;
};

// Correlation sequences C_n for n = 1..n_max (n_max <= 12).  The A-set
// correlation is constant mu(A)^2 (the class code is an independent
// Bernoulli process); the period-two non-mixing signature lives on the
// parity set E0, the pullback of {0} x {0,1}^N under the ergodic conjugacy.
NonmixingReport nonmixing_diagnostic(const ZeroParams& z, int n_max);

// Truncated zero-temperature Jacobian (seed 1/2) of a word, |w| >= 2.
double jacobian0_n(const ZeroParams& z, const Word& w);

// Truncated zero-temperature Jacobian over all 2^n words (dyadic order).
std::vector<double> jacobian0_grid(const ZeroParams& z, int n);

// Per-word class over all 2^depth words: 0 = A, 1 = B, 2 = undecided.
// Decided when the seed-1/2 truncation lands within tol of p or 1-p.
std::vector<std::uint8_t> classify_level(const ZeroParams& z, int depth, double tol);

}  // namespace spingibbs

#endif
