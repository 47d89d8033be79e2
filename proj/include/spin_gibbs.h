/*
 * spin_gibbs — quantum spin chain Gibbs measures on {1,2}^N.
 *
 * C interface to the shared library.  Handles are opaque; every function
 * returns an sg_status and writes results through out-parameters.  Words over
 * the alphabet {1,2} are passed as int arrays with the given length.
 */

#ifndef SPIN_GIBBS_H
#define SPIN_GIBBS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERR_INVALID_ARGUMENT = 1,
    SG_ERR_DEGENERATE_ANGLE = 2,
    SG_ERR_NONPOSITIVE_BETA = 3,
    SG_ERR_EMPTY_WORD = 4,
    SG_ERR_WORD_TOO_SHORT = 5,
    SG_ERR_WORD_TOO_LONG = 6,
    SG_ERR_DEPTH_TOO_LARGE = 7,
    SG_ERR_NO_CONVERGENCE = 8,
    SG_ERR_BUFFER_TOO_SMALL = 9,
    SG_ERR_INTERNAL = 10
} sg_status;

const char* sg_status_message(sg_status status);
const char* sg_version(void);

/* ------------------------------------------------------------------ */
/* positive temperature model                                          */
/* ------------------------------------------------------------------ */

typedef struct sg_model sg_model;

sg_status sg_model_create(double theta, double beta, sg_model** out);
void sg_model_destroy(sg_model* model);

typedef struct sg_model_info {
    double theta;
    double beta;
    double beta1;      /* sin(2 theta) */
    double phi;        /* 2/(e^{2 beta}+1) */
    double tanh_term;  /* phi - 1 = -tanh(beta) */
    double a_same, a_diff;
    double b_same, b_diff;
} sg_model_info;

sg_status sg_model_get_info(const sg_model* model, sg_model_info* out);

/* cylinder measures */
sg_status sg_mu_cylinder(const sg_model* model, const int* w, size_t n, double* out);
sg_status sg_mu_cylinder_expansion(const sg_model* model, const int* w, size_t n, double* out);
sg_status sg_mu_oracle_subset(const sg_model* model, const int* w, size_t n, double* out);
sg_status sg_mu_oracle_dense(const sg_model* model, const int* w, size_t n, double* out);

/* worst relative discrepancy among the evaluation routes over all words of
 * length n (dense oracle joins for n <= 8) */
sg_status sg_oracle_cross_check(const sg_model* model, int n, double* out);

typedef struct sg_consistency_report {
    double max_kolmogorov_residual;
    double max_shift_residual;
    double max_total_mass_error;
    double max_flip_residual;
    double max_reversal_residual;
    int depth;
} sg_consistency_stats;

sg_status sg_consistency_report(const sg_model* model, int depth, sg_consistency_stats* out);

/* | sum_{|j|=n_mid} mu(a.j.b) - mu(a) mu(b) | */
sg_status sg_mixing_residual(const sg_model* model, const int* a, size_t na,
                             const int* b, size_t nb, int n_mid, double* out);

/* ------------------------------------------------------------------ */
/* Jacobian and the two-map system                                     */
/* ------------------------------------------------------------------ */

typedef struct sg_ifs_params {
    double alpha;
    double gamma;
    double r;
    double R;
    double R_tilde;
    double interval_lo;
    double interval_hi;
} sg_ifs_info;

sg_status sg_ifs_params(const sg_model* model, sg_ifs_info* out);

sg_status sg_jacobian_n(const sg_model* model, const int* w, size_t n, double* out);

/* limit Jacobian of preperiod.period^inf; error_bound is the contraction
 * diagnostic bound K lambda^t */
sg_status sg_jacobian(const sg_model* model, const int* pre, size_t npre,
                      const int* per, size_t nper, double tol,
                      double* value, double* error_bound);

/* values[i] = truncated Jacobian of the word with dyadic code i (2^depth
 * entries, caller-allocated) */
sg_status sg_jacobian_grid(const sg_model* model, int depth, double* values);

typedef enum sg_attractor_kind {
    SG_ATTRACTOR_CANTOR = 0,
    SG_ATTRACTOR_INTERVAL = 1,
    SG_ATTRACTOR_BOUNDARY = 2
} sg_attractor_kind;

typedef struct sg_attractor_class {
    sg_attractor_kind kind;
    double gap;           /* f1(1-R) - f0(1-R) */
    double beta_critical;
    double discriminant;  /* gamma - alpha(1 - 2 alpha) */
} sg_attractor_class;

sg_status sg_classify_attractor(const sg_model* model, sg_attractor_class* out);
sg_status sg_beta_critical(double theta, double* out);
sg_status sg_contraction_factor(const sg_model* model, double* out);
sg_status sg_ruelle_residual(const sg_model* model, const int* w, size_t n, int m, double* out);

/* ------------------------------------------------------------------ */
/* large deviations                                                    */
/* ------------------------------------------------------------------ */

sg_status sg_q_n_direct(const sg_model* model, double a1, double a2, double t, int n, double* out);
sg_status sg_q_n_expansion(const sg_model* model, double a1, double a2, double t, int n, double* out);
sg_status sg_q_n_recurrence(const sg_model* model, double a1, double a2, double t, int n, double* out);
sg_status sg_log_q_n(const sg_model* model, double a1, double a2, double t, int n, double* out);
sg_status sg_free_energy(const sg_model* model, double a1, double a2, double t, double* out);
/* +infinity is returned through *out for s outside [min A, max A] */
sg_status sg_rate_function(const sg_model* model, double a1, double a2, double s, double* out);
sg_status sg_tail_rate(const sg_model* model, double a1, double a2, double s, int n, double* out);

/* ------------------------------------------------------------------ */
/* zero temperature                                                    */
/* ------------------------------------------------------------------ */

typedef struct sg_zero_model sg_zero_model;

sg_status sg_zero_create(double theta, sg_zero_model** out);
void sg_zero_destroy(sg_zero_model* model);

typedef struct sg_zero_info {
    double theta;
    double beta1;
    double gamma0;  /* (1 - beta1^2)/4 = mu(1,1) */
    double p;       /* (1 + beta1)/2 */
} sg_zero_info;

sg_status sg_zero_get_info(const sg_zero_model* model, sg_zero_info* out);

sg_status sg_mu0_cylinder(const sg_zero_model* model, const int* w, size_t n, double* out);
sg_status sg_zero_entropy(const sg_zero_model* model, double* out);
sg_status sg_zero_entropy_birkhoff(const sg_zero_model* model, int orbit_len, int samples,
                                   uint64_t seed, double* out);

typedef enum sg_point_kind {
    SG_POINT_A = 0,
    SG_POINT_B = 1,
    SG_POINT_DIVERGENT = 2,
    SG_POINT_UNDECIDED = 3
} sg_point_kind;

/* j_value is NaN unless the verdict is A or B */
sg_status sg_classify_point(const sg_zero_model* model, const int* pre, size_t npre,
                            const int* per, size_t nper, sg_point_kind* kind,
                            int* witness_n, double* j_value);

/* out receives n-1 chars 'a'/'b' (no terminator) */
sg_status sg_recode_ab(const int* w, size_t n, char* out);

/* block normal form over 'A' (= [a,b]) and 'B' (= [b,a]); *out_len receives
 * the reduced length, *truncated is set when an odd input lost a symbol */
sg_status sg_recode_blocks(const char* m, size_t n, char* out, size_t cap,
                           size_t* out_len, int* truncated);

/* out receives n bits */
sg_status sg_h_map(int c0, const int* w, size_t n, int* out);

typedef struct sg_conjugacy_report {
    double max_semiconjugacy_residual;
    double max_cylinder_mass_error;
    double max_cylinder_mass_error_classified;
    double classification_undecided_mass;
    int involution_ok;
    int conjugation_ok;
    int depth;
    int classification_depth;
} sg_conjugacy_report;

sg_status sg_conjugacy_check(const sg_zero_model* model, int depth, sg_conjugacy_report* out);

sg_status sg_weak_star_diff(const sg_zero_model* model, double beta,
                            const int* w, size_t n, double* out);
sg_status sg_weak_star_max_diff(const sg_zero_model* model, double beta, int depth, double* out);

/* truncated zero-temperature Jacobian over all 2^depth words (caller
 * allocates) */
sg_status sg_zero_jacobian_grid(const sg_zero_model* model, int depth, double* values);

typedef struct sg_nonmixing_report {
    double mu_A_exact;
    double mu_A_classified;
    double undecided_mass;
    int classification_depth;
    double separation_A, spread_A;  /* even/odd stats of the A-set series */
    double separation_E, spread_E;  /* same for the parity set E0 */
} sg_nonmixing_report;

/* each array (if non-NULL) must hold n_max doubles; entry k is the lag-(k+1)
 * correlation */
sg_status sg_nonmixing(const sg_zero_model* model, int n_max,
                       double* c_A_exact, double* c_A_classified,
                       double* c_E_exact, double* c_E_classified,
                       sg_nonmixing_report* out);

#ifdef __cplusplus
}
#endif

#endif /* SPIN_GIBBS_H */
