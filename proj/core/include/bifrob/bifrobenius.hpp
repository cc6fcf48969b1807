#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bifrob/algebra.hpp"
#include "bifrob/report.hpp"

namespace bifrob {

/// Construction failure with a stable machine-readable code naming the
/// violated invariant ("integral-not-unique", "not-frobenius", ...).
class BuildError : public std::runtime_error {
public:
    BuildError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// An algebra/coalgebra pair on one space together with a right integral t,
/// a right cointegral phi normalized to phi(t) = 1, and everything derived
/// from them. Instances only come out of build_bifrobenius, which refuses
/// inputs whose antipode is not an antiautomorphism of both structures.
struct BiFrobeniusAlgebra {
    FinDimAlgebra algebra;
    FinDimCoalgebra coalgebra;

    Vec integral;            // t, right integral: t x = eps(x) t
    LinearForm cointegral;   // phi, right cointegral: phi(x) 1 = sum phi(x1) x2

    LinearEndo antipode;     // S(x) = sum phi(t1 x) t2
    LinearEndo antipode_inv; // composition inverse of S

    Vec modular_element;             // a = phi -> t (group-like)
    Vec modular_element_inv;         // inverse of a in the algebra
    LinearForm modular_function;     // alpha = t -> phi (algebra map)
    LinearForm modular_function_inv; // inverse of alpha in the dual algebra

    Vec left_integral;          // s = S t
    LinearForm left_cointegral; // lambda = phi o S

    LinearEndo nakayama_map;   // N with phi(x y) = phi(y N(x))
    LinearEndo conakayama_map; // cN with sum cN(t2) (x) t1 = sum t1 (x) t2

    Matrix gram;           // gram(i,j) = phi(e_i e_j), the matrix of c_phi
    Matrix integral_comul; // Delta(t) as a matrix; its transpose is tc

    std::size_t dim() const { return algebra.dim; }
    const FieldSpec& field() const { return algebra.field; }
};

// --- integral spaces --------------------------------------------------------

/// Canonical basis of { t : t x = eps(x) t for every basis x }.
std::vector<Vec> right_integral_space(const FinDimAlgebra& a, const FinDimCoalgebra& c);
/// Canonical basis of { phi : phi(x) 1 = sum phi(x1) x2 for every basis x }.
std::vector<LinearForm> right_cointegral_space(const FinDimAlgebra& a, const FinDimCoalgebra& c);

// --- construction -----------------------------------------------------------

/// Builds the full structure. When t or phi is omitted the corresponding
/// space must be one-dimensional and the canonical basis vector is taken.
/// phi is rescaled so that phi(t) = 1. Throws BuildError when the input is
/// not a biFrobenius algebra; the code() names the first violated invariant.
BiFrobeniusAlgebra build_bifrobenius(const FinDimAlgebra& a, const FinDimCoalgebra& c,
                                     std::optional<Vec> integral = std::nullopt,
                                     std::optional<LinearForm> cointegral = std::nullopt);

const LinearEndo& nakayama(const BiFrobeniusAlgebra& b);
const LinearEndo& conakayama(const BiFrobeniusAlgebra& b);

// --- verification suites -----------------------------------------------------

/// The defining data and every structural identity that holds in an
/// arbitrary biFrobenius algebra: integral/cointegral conditions and
/// normalizations, Frobenius/coFrobenius bijectivity, the antipode as their
/// composite, antiautomorphism properties, modular data, left integral and
/// cointegral laws, and the exchange/reconstruction formulas. Exhaustive
/// over basis elements (pairs for two-variable identities).
VerificationReport verify_core_identities(const BiFrobeniusAlgebra& b);

/// Nakayama and coNakayama: defining equations, automorphism properties,
/// their expressions through the antipode and modular data, and their action
/// on the modular element.
VerificationReport nakayama_report(const BiFrobeniusAlgebra& b);

/// S^4 = a (alpha^{-1} -> x <- alpha) a^{-1} on every basis element; in the
/// unimodular and counimodular case additionally S^4 = id as a matrix.
VerificationReport radford_check(const BiFrobeniusAlgebra& b);

struct TraceS2 {
    Scalar tr_s2;        // trace of S^2
    Scalar phi_conv;     // phi((S * id)(t))
    Scalar eps_t_phi_1;  // eps(t) phi(1)
};
/// tr(S^2) = phi((S * id)(t)) always; equal to eps(t) phi(1) exactly on SbF
/// algebras.
TraceS2 trace_s2(const BiFrobeniusAlgebra& b);

struct TraceNakayama {
    Scalar tr_n;           // trace of N
    Scalar tr_n_formula;   // (phi o S^{-1})((S * id)(t))
    Scalar tr_cn;          // trace of cN
    Scalar tr_cn_formula;  // (phi o S^{-1})((id * S)(t))
    Scalar dim_field;      // phi((id * S^{-1})(t)), the dimension as a field element
    std::size_t dim_int;   // the integer dimension
};
TraceNakayama trace_nakayama(const BiFrobeniusAlgebra& b);

/// Trace identities as report entries, including the SbF-only trace formula
/// (skipped with a reason on non-SbF inputs).
VerificationReport trace_report(const BiFrobeniusAlgebra& b);

/// True iff S * id = id * S = u eps, i.e. the antipode is the convolution
/// inverse of the identity.
bool is_sbf(const BiFrobeniusAlgebra& b);

struct Modularity {
    bool unimodular = false;   // a = 1
    bool counimodular = false; // alpha = eps
};
Modularity modularity(const BiFrobeniusAlgebra& b);

/// In the unimodular and counimodular case: N = cN = S^2 = S^{-2}, N^2 = id,
/// S t = t, phi o S = phi, and the four-way equality of the integral
/// convolution chain. All entries are skipped otherwise.
VerificationReport collapse_report(const BiFrobeniusAlgebra& b);

struct IntegralConditionResult {
    bool holds = false; // sum (S t2) t1 = eps(t) 1
    Vec value;          // sum (S t2) t1
};
IntegralConditionResult antipode_integral_condition(const BiFrobeniusAlgebra& b);

enum class Verdict { Yes, No, Inconclusive };
std::string verdict_str(Verdict v);

struct SemisimplicityResult {
    Verdict semisimple = Verdict::Inconclusive;   // trace-form oracle on the algebra
    Verdict cosemisimple = Verdict::Inconclusive; // same oracle on the dual algebra
    Scalar counit_of_integral;                    // eps(t)
    Scalar cointegral_of_unit;                    // phi(1)
    VerificationReport report;                    // cross-check entries
};

/// Semisimplicity via nondegeneracy of the trace bilinear form
/// (x,y) -> tr(L_x L_y) of the regular representation -- conclusive in
/// characteristic zero only -- plus the cross-checks tying the verdicts to
/// eps(t), phi(1), modularity and the Nakayama trace identity.
SemisimplicityResult semisimplicity_report(const BiFrobeniusAlgebra& b);

/// Trace-form verdict for a bare algebra (shared with the dual route).
Verdict trace_form_semisimple(const FinDimAlgebra& a);

} // namespace bifrob
