#pragma once

#include <string>
#include <vector>

#include "bifrob/linalg.hpp"
#include "bifrob/report.hpp"

namespace bifrob {

/// Finite-dimensional unital algebra given by structure constants:
/// mul(i,j,k) is the coefficient of e_k in the product e_i e_j.
struct FinDimAlgebra {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    Tensor3 mul;
    Vec unit;
};

/// Finite-dimensional counital coalgebra given by structure constants:
/// comul(k,i,j) is the coefficient of e_i (x) e_j in Delta(e_k).
struct FinDimCoalgebra {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    Tensor3 comul;
    Vec counit;
};

/// Functional on the underlying space, as a coefficient row.
struct LinearForm {
    Vec coeffs;
};

/// Endomorphism of the underlying space; column j is the image of e_j.
struct LinearEndo {
    Matrix matrix;
};

// --- axiom checks ----------------------------------------------------------

/// Exhaustive associativity and two-sided-unit scan. Every violated instance
/// is reported with its basis indices and both sides.
VerificationReport check_algebra(const FinDimAlgebra& a);

/// Exhaustive coassociativity and counit scan.
VerificationReport check_coalgebra(const FinDimCoalgebra& c);

// --- evaluation ------------------------------------------------------------

Vec mul(const FinDimAlgebra& a, const Vec& u, const Vec& v);
/// Comultiplication of a vector as an n x n matrix: entry (i,j) is the
/// coefficient of e_i (x) e_j.
Matrix comul(const FinDimCoalgebra& c, const Vec& u);
Scalar apply_form(const LinearForm& f, const Vec& u);

/// Left-multiplication operator x -> u x as a matrix.
Matrix left_mult_matrix(const FinDimAlgebra& a, const Vec& u);
/// Right-multiplication operator x -> x u as a matrix.
Matrix right_mult_matrix(const FinDimAlgebra& a, const Vec& u);

// --- duality ----------------------------------------------------------------

/// Convolution algebra on the dual space: mul*(i,j,k) = comul(k,i,j),
/// unit = counit.
FinDimAlgebra dual_algebra(const FinDimCoalgebra& c);
/// Dual coalgebra of an algebra: comul*(k,i,j) = mul(i,j,k), counit = unit.
FinDimCoalgebra dual_coalgebra(const FinDimAlgebra& a);

// --- harpoon actions ---------------------------------------------------------
// (x -> f)(y) = f(yx)   and   (f <- x)(y) = f(xy)  on the dual;
// f -> x = sum x1 f(x2) and   x <- f = sum f(x1) x2  on the space.

LinearForm act_h_on_dual_left(const FinDimAlgebra& a, const Vec& x, const LinearForm& f);
LinearForm act_h_on_dual_right(const FinDimAlgebra& a, const LinearForm& f, const Vec& x);
Vec act_dual_on_h_left(const FinDimCoalgebra& c, const LinearForm& f, const Vec& x);
Vec act_dual_on_h_right(const FinDimCoalgebra& c, const Vec& x, const LinearForm& f);

// --- convolution -------------------------------------------------------------

/// (F * G)(x) = sum F(x1) G(x2) on endomorphisms.
LinearEndo convolve(const FinDimCoalgebra& c, const FinDimAlgebra& a, const LinearEndo& f,
                    const LinearEndo& g);

/// Two-sided convolution identity u o eps : x -> eps(x) 1.
LinearEndo convolution_unit(const FinDimCoalgebra& c, const FinDimAlgebra& a);

struct ConvInverseDiagnostics {
    bool left_inverse_exists = false;
    bool right_inverse_exists = false;
};

/// Two-sided convolution inverse of F, solved as a linear system in the n^2
/// matrix entries. Returns nullopt when no two-sided inverse exists; the
/// optional diagnostics record whether a one-sided inverse would exist.
std::optional<LinearEndo> convolution_inverse(const FinDimCoalgebra& c, const FinDimAlgebra& a,
                                              const LinearEndo& f,
                                              ConvInverseDiagnostics* diagnostics = nullptr);

// --- structural predicates ----------------------------------------------------

/// Delta(g) = g (x) g and eps(g) = 1.
bool is_grouplike(const FinDimCoalgebra& c, const Vec& g);
/// f(xy) = f(x) f(y) on all basis pairs and f(1) = 1.
bool is_algebra_morphism(const FinDimAlgebra& a, const LinearForm& f);
/// T(xy) = T(y) T(x) on all basis pairs and T(1) = 1.
bool is_antimorphism_of_algebras(const FinDimAlgebra& a, const LinearEndo& t);
/// Delta T = (T (x) T) o swap o Delta on all basis elements and eps o T = eps.
bool is_antimorphism_of_coalgebras(const FinDimCoalgebra& c, const LinearEndo& t);

} // namespace bifrob
