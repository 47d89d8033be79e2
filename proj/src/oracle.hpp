#ifndef SPINGIBBS_ORACLE_HPP
#define SPINGIBBS_ORACLE_HPP

#include "model.hpp"

namespace spingibbs {

// Ground-truth evaluation of the defining trace formula
//   mu(j_1..j_n) = 2^{-n} Tr[ prod_{i=1}^{n-1} (I + (phi-1) sx_i sx_{i+1})
//                             (P_{j_1} x ... x P_{j_n}) ]
// by expanding the product over bond subsets S.  A term factorizes site-wise:
// a site touched by an odd number of bonds of S contributes Tr(sx P_j) =
// beta_j, an even one contributes Tr(P_j) = 1, so
//   mu(w) = 2^{-n} sum_S (phi-1)^{|S|} beta1^{odd(S)} (-1)^{#odd sites with w_i = 2}.
// No recurrence is used anywhere.  |w| <= 24.
double mu_oracle_subset(const ModelParams& p, const Word& w);

// Same trace evaluated densely: builds the 2^n x 2^n factors and projector
// tensor explicitly and multiplies them (all-real hyperbolic form).  |w| <= 8.
double mu_oracle_dense(const ModelParams& p, const Word& w);

// Dense-oracle values for all 2^n words (dyadic order); the evolution
// operator is built once.  n <= 8.
std::vector<double> mu_oracle_dense_level(const ModelParams& p, int n);

// Worst relative discrepancy among mu_cylinder, mu_cylinder_expansion and
// mu_oracle_subset over all 2^n words of length n; mu_oracle_dense joins
// when n <= 8.  Requires n <= 12.
double oracle_cross_check(const ModelParams& p, int n);

}  // namespace spingibbs

#endif
