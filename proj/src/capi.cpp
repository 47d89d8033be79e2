#include "spin_gibbs.h"

#include <cstring>
#include <exception>
#include <new>

#include "ifs.hpp"
#include "ldp.hpp"
#include "measure.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "zero.hpp"

using namespace spingibbs;

struct sg_model {
    ModelParams params;
};

struct sg_zero_model {
    ZeroParams params;
};

namespace {

template <typename Fn>
sg_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return SG_OK;
    } catch (const DegenerateAngleError&) {
        return SG_ERR_DEGENERATE_ANGLE;
    } catch (const NonPositiveBetaError&) {
        return SG_ERR_NONPOSITIVE_BETA;
    } catch (const EmptyWordError&) {
        return SG_ERR_EMPTY_WORD;
    } catch (const WordTooShortError&) {
        return SG_ERR_WORD_TOO_SHORT;
    } catch (const WordTooLongError&) {
        return SG_ERR_WORD_TOO_LONG;
    } catch (const DepthTooLargeError&) {
        return SG_ERR_DEPTH_TOO_LARGE;
    } catch (const NoConvergenceError&) {
        return SG_ERR_NO_CONVERGENCE;
    } catch (const std::invalid_argument&) {
        return SG_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        return SG_ERR_INTERNAL;
    } catch (const std::exception&) {
        return SG_ERR_INTERNAL;
    }
}

Word make_word(const int* w, size_t n) {
    if (w == nullptr && n > 0) throw std::invalid_argument("null word pointer");
    std::vector<int> syms(w, w + n);
    return Word(std::move(syms));
}

}  // namespace

extern "C" {

const char* sg_status_message(sg_status status) {
    switch (status) {
        case SG_OK: return "ok";
        case SG_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SG_ERR_DEGENERATE_ANGLE: return "degenerate angle (theta near 0, pi/4 or pi/2)";
        case SG_ERR_NONPOSITIVE_BETA: return "beta must be positive and finite";
        case SG_ERR_EMPTY_WORD: return "word must be nonempty";
        case SG_ERR_WORD_TOO_SHORT: return "word too short for this operation";
        case SG_ERR_WORD_TOO_LONG: return "word too long for this operation";
        case SG_ERR_DEPTH_TOO_LARGE: return "depth exceeds the supported range";
        case SG_ERR_NO_CONVERGENCE: return "iteration did not converge";
        case SG_ERR_BUFFER_TOO_SMALL: return "output buffer too small";
        case SG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sg_version(void) { return "0.1.0"; }

sg_status sg_model_create(double theta, double beta, sg_model** out) {
    if (out == nullptr) return SG_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return wrap([&] {
        auto* m = new sg_model{make_params(theta, beta)};
        *out = m;
    });
}

void sg_model_destroy(sg_model* model) { delete model; }

sg_status sg_model_get_info(const sg_model* model, sg_model_info* out) {
    if (model == nullptr || out == nullptr) return SG_ERR_INVALID_ARGUMENT;
    const ModelParams& p = model->params;
    out->theta = p.theta;
    out->beta = p.beta;
    out->beta1 = p.beta1;
    out->phi = p.phi;
    out->tanh_term = p.tanh_term;
    out->a_same = p.a(1, 1);
    out->a_diff = p.a(1, 2);
    out->b_same = p.b(1, 1);
    out->b_diff = p.b(1, 2);
    return SG_OK;
}

#define SG_CHECK_PTRS(...)                                    \
    do {                                                      \
        const void* ptrs[] = {__VA_ARGS__};                   \
        for (const void* q : ptrs) {                          \
            if (q == nullptr) return SG_ERR_INVALID_ARGUMENT; \
        }                                                     \
    } while (0)

sg_status sg_mu_cylinder(const sg_model* model, const int* w, size_t n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = mu_cylinder(model->params, make_word(w, n)); });
}

sg_status sg_mu_cylinder_expansion(const sg_model* model, const int* w, size_t n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = mu_cylinder_expansion(model->params, make_word(w, n)); });
}

sg_status sg_mu_oracle_subset(const sg_model* model, const int* w, size_t n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = mu_oracle_subset(model->params, make_word(w, n)); });
}

sg_status sg_mu_oracle_dense(const sg_model* model, const int* w, size_t n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = mu_oracle_dense(model->params, make_word(w, n)); });
}

sg_status sg_oracle_cross_check(const sg_model* model, int n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = oracle_cross_check(model->params, n); });
}

sg_status sg_consistency_report(const sg_model* model, int depth, sg_consistency_stats* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] {
        const ConsistencyReport r = consistency_report(model->params, depth);
        out->max_kolmogorov_residual = r.max_kolmogorov_residual;
        out->max_shift_residual = r.max_shift_residual;
        out->max_total_mass_error = r.max_total_mass_error;
        out->max_flip_residual = r.max_flip_residual;
        out->max_reversal_residual = r.max_reversal_residual;
        out->depth = r.depth;
    });
}

sg_status sg_mixing_residual(const sg_model* model, const int* a, size_t na,
                             const int* b, size_t nb, int n_mid, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] {
        *out = mixing_residual(model->params, make_word(a, na), make_word(b, nb), n_mid);
    });
}

sg_status sg_ifs_params(const sg_model* model, sg_ifs_info* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] {
        const IFSParams f = ifs_params(model->params);
        out->alpha = f.alpha;
        out->gamma = f.gamma;
        out->r = f.r;
        out->R = f.R;
        out->R_tilde = f.R_tilde;
        out->interval_lo = f.interval_lo;
        out->interval_hi = f.interval_hi;
    });
}

sg_status sg_jacobian_n(const sg_model* model, const int* w, size_t n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = jacobian_n(model->params, make_word(w, n)); });
}

sg_status sg_jacobian(const sg_model* model, const int* pre, size_t npre,
                      const int* per, size_t nper, double tol,
                      double* value, double* error_bound) {
    SG_CHECK_PTRS(model, value, error_bound);
    return wrap([&] {
        const EventualSeq s{make_word(pre, npre), make_word(per, nper)};
        const JacobianResult r = jacobian(model->params, s, tol);
        *value = r.value;
        *error_bound = r.error_bound;
    });
}

sg_status sg_jacobian_grid(const sg_model* model, int depth, double* values) {
    SG_CHECK_PTRS(model, values);
    return wrap([&] {
        const std::vector<double> grid = jacobian_grid(model->params, depth);
        std::memcpy(values, grid.data(), grid.size() * sizeof(double));
    });
}

sg_status sg_classify_attractor(const sg_model* model, sg_attractor_class* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] {
        const AttractorClass c = classify_attractor(model->params);
        out->kind = (c.kind == AttractorKind::Cantor)     ? SG_ATTRACTOR_CANTOR
                    : (c.kind == AttractorKind::Interval) ? SG_ATTRACTOR_INTERVAL
                                                          : SG_ATTRACTOR_BOUNDARY;
        out->gap = c.gap;
        out->beta_critical = c.beta_critical;
        out->discriminant = c.discriminant;
    });
}

sg_status sg_beta_critical(double theta, double* out) {
    SG_CHECK_PTRS(out);
    return wrap([&] { *out = beta_critical(theta); });
}

sg_status sg_contraction_factor(const sg_model* model, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = contraction_factor(model->params); });
}

sg_status sg_ruelle_residual(const sg_model* model, const int* w, size_t n, int m, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = ruelle_residual(model->params, make_word(w, n), m); });
}

sg_status sg_q_n_direct(const sg_model* model, double a1, double a2, double t, int n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = q_n_direct(model->params, Observable{a1, a2}, t, n); });
}

sg_status sg_q_n_expansion(const sg_model* model, double a1, double a2, double t, int n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = q_n_expansion(model->params, Observable{a1, a2}, t, n); });
}

sg_status sg_q_n_recurrence(const sg_model* model, double a1, double a2, double t, int n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = q_n_recurrence(model->params, Observable{a1, a2}, t, n); });
}

sg_status sg_log_q_n(const sg_model* model, double a1, double a2, double t, int n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = log_q_n_recurrence(model->params, Observable{a1, a2}, t, n); });
}

sg_status sg_free_energy(const sg_model* model, double a1, double a2, double t, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = free_energy(model->params, Observable{a1, a2}, t); });
}

sg_status sg_rate_function(const sg_model* model, double a1, double a2, double s, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = rate_function(model->params, Observable{a1, a2}, s); });
}

sg_status sg_tail_rate(const sg_model* model, double a1, double a2, double s, int n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = tail_rate(model->params, Observable{a1, a2}, s, n); });
}

sg_status sg_zero_create(double theta, sg_zero_model** out) {
    if (out == nullptr) return SG_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return wrap([&] {
        auto* m = new sg_zero_model{make_zero_params(theta)};
        *out = m;
    });
}

void sg_zero_destroy(sg_zero_model* model) { delete model; }

sg_status sg_zero_get_info(const sg_zero_model* model, sg_zero_info* out) {
    SG_CHECK_PTRS(model, out);
    out->theta = model->params.theta;
    out->beta1 = model->params.beta1;
    out->gamma0 = model->params.gamma0;
    out->p = model->params.p;
    return SG_OK;
}

sg_status sg_mu0_cylinder(const sg_zero_model* model, const int* w, size_t n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = mu0_cylinder(model->params, make_word(w, n)); });
}

sg_status sg_zero_entropy(const sg_zero_model* model, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = zero_entropy(model->params); });
}

sg_status sg_zero_entropy_birkhoff(const sg_zero_model* model, int orbit_len, int samples,
                                   uint64_t seed, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = birkhoff_entropy_estimate(model->params, orbit_len, samples, seed); });
}

sg_status sg_classify_point(const sg_zero_model* model, const int* pre, size_t npre,
                            const int* per, size_t nper, sg_point_kind* kind,
                            int* witness_n, double* j_value) {
    SG_CHECK_PTRS(model, kind, witness_n, j_value);
    return wrap([&] {
        const EventualSeq s{make_word(pre, npre), make_word(per, nper)};
        const PointClass c = classify_point(model->params, s);
        switch (c.kind) {
            case PointKind::A: *kind = SG_POINT_A; break;
            case PointKind::B: *kind = SG_POINT_B; break;
            case PointKind::Divergent: *kind = SG_POINT_DIVERGENT; break;
            case PointKind::Undecided: *kind = SG_POINT_UNDECIDED; break;
        }
        *witness_n = c.witness_n;
        *j_value = c.j_value;
    });
}

sg_status sg_recode_ab(const int* w, size_t n, char* out) {
    SG_CHECK_PTRS(out);
    return wrap([&] {
        const std::vector<AB> m = recode_ab(make_word(w, n));
        for (std::size_t i = 0; i < m.size(); ++i) {
            out[i] = (m[i] == AB::a) ? 'a' : 'b';
        }
    });
}

sg_status sg_recode_blocks(const char* m, size_t n, char* out, size_t cap,
                           size_t* out_len, int* truncated) {
    SG_CHECK_PTRS(m, out, out_len, truncated);
    std::vector<AB> ab;
    ab.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (m[i] == 'a') ab.push_back(AB::a);
        else if (m[i] == 'b') ab.push_back(AB::b);
        else return SG_ERR_INVALID_ARGUMENT;
    }
    const BlockNormalForm nf = recode_blocks(ab);
    if (nf.word.size() > cap) return SG_ERR_BUFFER_TOO_SMALL;
    for (std::size_t i = 0; i < nf.word.size(); ++i) {
        out[i] = (nf.word[i] == Block::alpha) ? 'A' : 'B';
    }
    *out_len = nf.word.size();
    *truncated = nf.truncated_odd ? 1 : 0;
    return SG_OK;
}

sg_status sg_h_map(int c0, const int* w, size_t n, int* out) {
    SG_CHECK_PTRS(out);
    return wrap([&] {
        const std::vector<int> code = h_map(c0, make_word(w, n));
        for (std::size_t i = 0; i < code.size(); ++i) out[i] = code[i];
    });
}

sg_status sg_conjugacy_check(const sg_zero_model* model, int depth, sg_conjugacy_report* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] {
        const ConjugacyReport r = conjugacy_check(model->params, depth);
        out->max_semiconjugacy_residual = r.max_semiconjugacy_residual;
        out->max_cylinder_mass_error = r.max_cylinder_mass_error;
        out->max_cylinder_mass_error_classified = r.max_cylinder_mass_error_classified;
        out->classification_undecided_mass = r.classification_undecided_mass;
        out->involution_ok = r.involution_ok ? 1 : 0;
        out->conjugation_ok = r.conjugation_ok ? 1 : 0;
        out->depth = r.depth;
        out->classification_depth = r.classification_depth;
    });
}

sg_status sg_weak_star_diff(const sg_zero_model* model, double beta,
                            const int* w, size_t n, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = weak_star_diff(model->params, beta, make_word(w, n)); });
}

sg_status sg_weak_star_max_diff(const sg_zero_model* model, double beta, int depth, double* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] { *out = weak_star_max_diff(model->params, beta, depth); });
}

sg_status sg_nonmixing(const sg_zero_model* model, int n_max,
                       double* c_A_exact, double* c_A_classified,
                       double* c_E_exact, double* c_E_classified,
                       sg_nonmixing_report* out) {
    SG_CHECK_PTRS(model, out);
    return wrap([&] {
        const NonmixingReport r = nonmixing_diagnostic(model->params, n_max);
        for (int k = 0; k < n_max; ++k) {
            if (c_A_exact) c_A_exact[k] = r.c_A_exact[static_cast<std::size_t>(k)];
            if (c_A_classified) c_A_classified[k] = r.c_A_classified[static_cast<std::size_t>(k)];
            if (c_E_exact) c_E_exact[k] = r.c_E_exact[static_cast<std::size_t>(k)];
            if (c_E_classified) c_E_classified[k] = r.c_E_classified[static_cast<std::size_t>(k)];
        }
        out->mu_A_exact = r.mu_A_exact;
        out->mu_A_classified = r.mu_A_classified;
        out->undecided_mass = r.undecided_mass;
        out->classification_depth = r.classification_depth;
        out->separation_A = r.separation_A;
        out->spread_A = r.spread_A;
        out->separation_E = r.separation_E;
        out->spread_E = r.spread_E;
    });
}

}  // extern "C"
