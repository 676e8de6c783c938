#pragma once
// Analytic machinery as computable predicates: the implicit growth curve
// x + b*e^x = c*t + b, the kappa smallness constants, the transfer/no-transfer
// phase thresholds, the key quantity Gamma, and the negative-transfer test.
// Everything here is a pure function of its arguments.
//
// Absolute constants (C, C1..C4, C1', C3') are never fixed by the analysis;
// they are caller-supplied and default to 1 so reports are reproducible.

#include <array>
#include <string>

namespace xferlab::theory {

// ---------------------------------------------------------------------------
// implicit growth curve

struct CurveParams {
    double b = 1; // > 0
    double c = 1; // > 0
    void validate() const;
};

// Unique root of x + b*e^x = c*t + b. Bisection on [0, log1p(ct/b)] then
// Newton polish; residual <= 1e-10 * (1 + ct).
double solve_implicit(const CurveParams& p, double t);

// The two-sided instantiation used by the dynamics bounds: upper curve
// (b = e^{-kappa/2}, c = 3*eta*sigma^2*d/(2*N*m)) and lower curve
// (b = e^{+kappa/2}, c = eta*sigma^2*d/(5*N*m)).
struct CurveBand {
    CurveParams upper, lower;
};
CurveBand curve_band(double kappa, double eta, double sigma_sq, double d, double n, double m);

// ---------------------------------------------------------------------------
// kappa smallness constants

struct KappaInputs {
    double d = 2000;
    double m = 40;
    double sigma0 = 0.01;
    double n1 = 1000, n2 = 100;
    double sigma1 = 5, sigma2 = 5;
    double norm_u_sq = 4;    // |u|^2
    double norm_uv1_sq = 9;  // |u+v1|^2
    double norm_uv2_sq = 9;  // |u+v2|^2
    double t_star = 800;     // upstream horizon T*
    double t_dstar = 1200;   // total horizon T** = T* + downstream epochs
    double delta = 0.05;
    double c1 = 1, c2 = 1;
    void validate() const;
};

struct KappaValues {
    double kappa_a = 0, kappa_d = 0;
    bool a_small = false, d_small = false; // the dynamics bounds assume kappa <= 0.1
};
KappaValues kappa(const KappaInputs& in);

// ---------------------------------------------------------------------------
// dimension-condition ratios

// Each ratio is configured-value / required-bound, so >= 1 reads "satisfied
// up to the absorbed constant" and < 1 is flagged likely violated. Items that
// depend on the task signal/noise are evaluated for both tasks.
struct ConditionItem {
    std::string name;
    double task1 = 0, task2 = 0;
    bool likely_violated = false; // min(task1, task2) < 1
};

struct ConditionInputs {
    double d = 2000, m = 40;
    double n1 = 1000, n2 = 100;
    double sigma1 = 5, sigma2 = 5;
    double norm_uv1_sq = 9, norm_uv2_sq = 9;
    double sigma0 = 0.01, eta = 0.01;
    double delta = 0.05;
    void validate() const;
};

struct ConditionReport {
    double n = 0; // max(n1, n2), the sample size the conditions quantify over
    std::array<ConditionItem, 5> items;
};
ConditionReport check_dimension_conditions(const ConditionInputs& in);

// ---------------------------------------------------------------------------
// regime classification

struct Constants {
    double c = 1;        // Gamma >= C gate
    double c1 = 1;       // near-Bayes transfer threshold multiplier
    double c2 = 1;       // error-bound exponent multiplier
    double c3 = 1;       // sub-optimal transfer threshold multiplier
    double c4 = 1;       // negative-transfer gate
    double c1_prime = 1; // no-transfer threshold multiplier
};

enum class Regime { near_bayes, sub_optimal, negative_transfer_risk, indeterminate };
std::string to_string(Regime r);

struct RegimeInputs {
    double d = 2000, m = 40;
    double n1 = 1000, n2 = 100;
    double sigma1 = 5, sigma2 = 5;
    double norm_u_sq = 4, norm_v1_sq = 5, norm_v2_sq = 5; // orthogonal components
    double alpha = 0.5;
    double sigma0 = 0.01, eta = 0.01;
    double t_star = 800, t_dstar = 1200;
    double delta = 0.05;
    double epsilon = 0.05; // target train loss, used only for the epochs hint
    Constants consts;
    void validate() const;
};

struct RegimeReport {
    double kappa_a = 0, kappa_d = 0;
    bool kappa_a_small = false, kappa_d_small = false;
    double gamma_key = 0;            // alpha^2 N1 |u|^4 / (sigma1^2 sigma2^2 d)
    double d_threshold_transfer = 0; // (a^2 N1^2|u|^4/s1^4 + N2^2|u+v2|^4/s2^4) / (a^2 s2^2 N1/s1^2 + N2)
    double d_threshold_standard = 0; // N2 |u+v2|^4 / sigma2^4
    double neg_transfer_ratio = 0;   // |u+v2|^2 / |u|^2 (+inf when |u| = 0)
    double neg_transfer_gate = 0;    // alpha N1 sigma2^2 / (N2 sigma1^2)
    bool negative_transfer = false;  // ratio >= gate and gate >= C4
    Regime predicted_regime = Regime::indeterminate;
    double error_bound = 1;          // exp(-C2 * d_threshold_transfer / d)
    double suggested_epochs = 0;     // N2 m / (eta * epsilon * sigma2^2), a hint only
    Constants constants;
    ConditionReport condition_ratios;
};

// Thresholds compare d against C1*T (near-Bayes side) and C3*T (sub-optimal
// side); the band between them, when the constants leave one, is reported as
// indeterminate rather than guessed. A satisfied negative-transfer predicate
// wins over the phase label.
RegimeReport classify_regime(const RegimeInputs& in);

} // namespace xferlab::theory
