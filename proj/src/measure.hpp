#ifndef SPINGIBBS_MEASURE_HPP
#define SPINGIBBS_MEASURE_HPP

#include <vector>

#include "model.hpp"

namespace spingibbs {

// mu_beta of the cylinder [w] via the three-term recurrence
//   mu(k0 k1 rest) = a(k0,k1) mu(k1 rest) + b(k0,k1) mu(rest),
// evaluated from the word's tail.  Length-1 words are exactly 1/2 and
// length-2 words use the closed form.
double mu_cylinder(const ModelParams& p, const Word& w);

// Closed form for cylinders of length 2:
//   mu(a,b) = (1 - beta_a beta_b)/4 + phi beta_a beta_b / 4.
double mu_length2(const ModelParams& p, int k0, int k1);

// mu_beta via the prefix expansion
//   mu(k, j_1..j_m) = mu(j)/2 + sum_{i=1}^{m-2} (phi-1)^i beta_k beta_{j_i} / 2^{i+1} mu(j_{i+1}..j_m)
//                   + (phi-1)^{m-1} beta_k beta_{j_{m-1}} / 2^{m+1}
//                   + (phi-1)^m     beta_k beta_{j_m}     / 2^{m+1}.
// Requires |w| >= 3; agrees with mu_cylinder to float precision.
double mu_cylinder_expansion(const ModelParams& p, const Word& w);

// mu over all 2^n words of length n, indexed by dyadic code (MSB-first,
// symbol 1 -> 0, symbol 2 -> 1).
std::vector<double> mu_level(const ModelParams& p, int n);

struct ConsistencyReport {
    double max_kolmogorov_residual = 0;  // |mu(w1)+mu(w2)-mu(w)|
    double max_shift_residual = 0;       // |mu(1w)+mu(2w)-mu(w)|
    double max_total_mass_error = 0;     // |sum_{|w|=n} mu(w) - 1|
    double max_flip_residual = 0;        // |mu(w) - mu(w*)|, w* flips symbols
    double max_reversal_residual = 0;    // |mu(w) - mu(reverse w)|
    int depth = 0;
};

// Exhaustive residuals over all words up to the given depth (1..22).
// Kolmogorov/shift residuals cover parent words up to depth-1 so that no
// enumeration exceeds 2^depth cylinders.
ConsistencyReport consistency_report(const ModelParams& p, int depth);

// | sum_{|j|=n_mid} mu(a.j.b) - mu(a) mu(b) |, the cylinder-mixing residual.
// Evaluated exactly by a transfer recursion over the middle block (the
// summed b-coefficient terms cancel), cost O(|a| + n_mid + |b|).
double mixing_residual(const ModelParams& p, const Word& a, const Word& b, int n_mid);

// Signed middle-block sum sum_{|j|=n_mid} mu(a.j.b).
double mixing_sum(const ModelParams& p, const Word& a, const Word& b, int n_mid);

}  // namespace spingibbs

#endif
