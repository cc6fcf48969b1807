#include "bifrob/algebra.hpp"

#include <stdexcept>

namespace bifrob {

namespace {

void require_algebra_shape(const FinDimAlgebra& a) {
    const std::size_t n = a.dim;
    if (a.mul.dim(0) != n || a.mul.dim(1) != n || a.mul.dim(2) != n)
        throw std::invalid_argument("multiplication tensor shape mismatch");
    if (a.unit.size() != n) throw std::invalid_argument("unit vector length mismatch");
    if (!a.basis_names.empty() && a.basis_names.size() != n)
        throw std::invalid_argument("basis label count mismatch");
}

void require_coalgebra_shape(const FinDimCoalgebra& c) {
    const std::size_t n = c.dim;
    if (c.comul.dim(0) != n || c.comul.dim(1) != n || c.comul.dim(2) != n)
        throw std::invalid_argument("comultiplication tensor shape mismatch");
    if (c.counit.size() != n) throw std::invalid_argument("counit vector length mismatch");
    if (!c.basis_names.empty() && c.basis_names.size() != n)
        throw std::invalid_argument("basis label count mismatch");
}

Matrix outer(const Vec& u, const Vec& v) {
    Matrix m(u.front().field(), u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = u[i] * v[j];
    return m;
}

} // namespace

VerificationReport check_algebra(const FinDimAlgebra& a) {
    require_algebra_shape(a);
    VerificationReport report;
    const std::size_t n = a.dim;
    const FieldSpec& f = a.field;

    bool assoc_ok = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t s = 0; s < n; ++s) {
                    Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
                    for (std::size_t r = 0; r < n; ++r) {
                        lhs += a.mul.at(i, j, r) * a.mul.at(r, k, s);
                        rhs += a.mul.at(j, k, r) * a.mul.at(i, r, s);
                    }
                    if (lhs != rhs) {
                        assoc_ok = false;
                        report.add_fail("algebra-associativity", {{i, j, k, s}, lhs.str(), rhs.str()});
                    }
                }
    if (assoc_ok) report.add_pass("algebra-associativity");

    bool unit_ok = true;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec ej = unit_vec(f, n, j);
        const Vec left = mul(a, a.unit, ej);
        const Vec right = mul(a, ej, a.unit);
        if (left != ej) {
            unit_ok = false;
            report.add_fail("algebra-unit", {{j}, vec_str(left), vec_str(ej)}, "left unit");
        }
        if (right != ej) {
            unit_ok = false;
            report.add_fail("algebra-unit", {{j}, vec_str(right), vec_str(ej)}, "right unit");
        }
    }
    if (unit_ok) report.add_pass("algebra-unit");
    return report;
}

VerificationReport check_coalgebra(const FinDimCoalgebra& c) {
    require_coalgebra_shape(c);
    VerificationReport report;
    const std::size_t n = c.dim;
    const FieldSpec& f = c.field;

    bool coassoc_ok = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t m = 0; m < n; ++m) {
                    Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
                    for (std::size_t r = 0; r < n; ++r) {
                        lhs += c.comul.at(k, r, m) * c.comul.at(r, i, j);
                        rhs += c.comul.at(k, i, r) * c.comul.at(r, j, m);
                    }
                    if (lhs != rhs) {
                        coassoc_ok = false;
                        report.add_fail("coalgebra-coassociativity",
                                        {{k, i, j, m}, lhs.str(), rhs.str()});
                    }
                }
    if (coassoc_ok) report.add_pass("coalgebra-coassociativity");

    bool counit_ok = true;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar left = Scalar::zero(f), right = Scalar::zero(f);
            for (std::size_t r = 0; r < n; ++r) {
                left += c.comul.at(k, r, j) * c.counit[r];
                right += c.comul.at(k, j, r) * c.counit[r];
            }
            const Scalar expected =
                k == j ? Scalar::one(f) : Scalar::zero(f);
            if (left != expected) {
                counit_ok = false;
                report.add_fail("coalgebra-counit", {{k, j}, left.str(), expected.str()},
                                "(eps (x) id) Delta");
            }
            if (right != expected) {
                counit_ok = false;
                report.add_fail("coalgebra-counit", {{k, j}, right.str(), expected.str()},
                                "(id (x) eps) Delta");
            }
        }
    }
    if (counit_ok) report.add_pass("coalgebra-counit");
    return report;
}

Vec mul(const FinDimAlgebra& a, const Vec& u, const Vec& v) {
    if (u.size() != a.dim || v.size() != a.dim)
        throw std::invalid_argument("product operand length mismatch");
    Vec out = zero_vec(a.field, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (v[j].is_zero()) continue;
            const Scalar w = u[i] * v[j];
            for (std::size_t k = 0; k < a.dim; ++k) out[k] += w * a.mul.at(i, j, k);
        }
    }
    return out;
}

Matrix comul(const FinDimCoalgebra& c, const Vec& u) {
    if (u.size() != c.dim) throw std::invalid_argument("comultiplication operand length mismatch");
    Matrix out(c.field, c.dim, c.dim);
    for (std::size_t k = 0; k < c.dim; ++k) {
        if (u[k].is_zero()) continue;
        for (std::size_t i = 0; i < c.dim; ++i)
            for (std::size_t j = 0; j < c.dim; ++j) out.at(i, j) += u[k] * c.comul.at(k, i, j);
    }
    return out;
}

Scalar apply_form(const LinearForm& f, const Vec& u) {
    return dot(f.coeffs, u);
}

Matrix left_mult_matrix(const FinDimAlgebra& a, const Vec& u) {
    Matrix out(a.field, a.dim, a.dim);
    for (std::size_t q = 0; q < a.dim; ++q) out.set_column(q, mul(a, u, unit_vec(a.field, a.dim, q)));
    return out;
}

Matrix right_mult_matrix(const FinDimAlgebra& a, const Vec& u) {
    Matrix out(a.field, a.dim, a.dim);
    for (std::size_t q = 0; q < a.dim; ++q) out.set_column(q, mul(a, unit_vec(a.field, a.dim, q), u));
    return out;
}

FinDimAlgebra dual_algebra(const FinDimCoalgebra& c) {
    FinDimAlgebra a;
    a.field = c.field;
    a.dim = c.dim;
    a.basis_names.reserve(c.basis_names.size());
    for (const auto& name : c.basis_names) a.basis_names.push_back(name + "*");
    a.mul = Tensor3(c.field, c.dim, c.dim, c.dim);
    for (std::size_t i = 0; i < c.dim; ++i)
        for (std::size_t j = 0; j < c.dim; ++j)
            for (std::size_t k = 0; k < c.dim; ++k) a.mul.at(i, j, k) = c.comul.at(k, i, j);
    a.unit = c.counit;
    return a;
}

FinDimCoalgebra dual_coalgebra(const FinDimAlgebra& a) {
    FinDimCoalgebra c;
    c.field = a.field;
    c.dim = a.dim;
    c.basis_names.reserve(a.basis_names.size());
    for (const auto& name : a.basis_names) c.basis_names.push_back(name + "*");
    c.comul = Tensor3(a.field, a.dim, a.dim, a.dim);
    for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) c.comul.at(k, i, j) = a.mul.at(i, j, k);
    c.counit = a.unit;
    return c;
}

LinearForm act_h_on_dual_left(const FinDimAlgebra& a, const Vec& x, const LinearForm& f) {
    LinearForm out{zero_vec(a.field, a.dim)};
    for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t i = 0; i < a.dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t k = 0; k < a.dim; ++k)
                out.coeffs[j] += x[i] * f.coeffs[k] * a.mul.at(j, i, k);
        }
    return out;
}

LinearForm act_h_on_dual_right(const FinDimAlgebra& a, const LinearForm& f, const Vec& x) {
    LinearForm out{zero_vec(a.field, a.dim)};
    for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t i = 0; i < a.dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t k = 0; k < a.dim; ++k)
                out.coeffs[j] += x[i] * f.coeffs[k] * a.mul.at(i, j, k);
        }
    return out;
}

Vec act_dual_on_h_left(const FinDimCoalgebra& c, const LinearForm& f, const Vec& x) {
    Vec out = zero_vec(c.field, c.dim);
    for (std::size_t k = 0; k < c.dim; ++k) {
        if (x[k].is_zero()) continue;
        for (std::size_t i = 0; i < c.dim; ++i)
            for (std::size_t j = 0; j < c.dim; ++j)
                out[i] += x[k] * c.comul.at(k, i, j) * f.coeffs[j];
    }
    return out;
}

Vec act_dual_on_h_right(const FinDimCoalgebra& c, const Vec& x, const LinearForm& f) {
    Vec out = zero_vec(c.field, c.dim);
    for (std::size_t k = 0; k < c.dim; ++k) {
        if (x[k].is_zero()) continue;
        for (std::size_t i = 0; i < c.dim; ++i)
            for (std::size_t j = 0; j < c.dim; ++j)
                out[j] += x[k] * c.comul.at(k, i, j) * f.coeffs[i];
    }
    return out;
}

LinearEndo convolve(const FinDimCoalgebra& c, const FinDimAlgebra& a, const LinearEndo& f,
                    const LinearEndo& g) {
    const std::size_t n = a.dim;
    Matrix out(a.field, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec col = zero_vec(a.field, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& w = c.comul.at(k, i, j);
                if (w.is_zero()) continue;
                col = add(col, scale(w, mul(a, f.matrix.column(i), g.matrix.column(j))));
            }
        out.set_column(k, col);
    }
    return {out};
}

LinearEndo convolution_unit(const FinDimCoalgebra& c, const FinDimAlgebra& a) {
    return {outer(a.unit, c.counit)};
}

std::optional<LinearEndo> convolution_inverse(const FinDimCoalgebra& c, const FinDimAlgebra& a,
                                              const LinearEndo& f,
                                              ConvInverseDiagnostics* diagnostics) {
    const std::size_t n = a.dim;
    const FieldSpec& field = a.field;
    // Unknown G packed as columns: entry (q, j) at index q*n + j.
    const std::size_t unknowns = n * n;

    // Products of F-images with basis vectors, both ways around.
    std::vector<std::vector<Vec>> f_then_basis(n), basis_then_f(n);
    for (std::size_t i = 0; i < n; ++i) {
        f_then_basis[i].resize(n);
        basis_then_f[i].resize(n);
        for (std::size_t q = 0; q < n; ++q) {
            f_then_basis[i][q] = mul(a, f.matrix.column(i), unit_vec(field, n, q));
            basis_then_f[i][q] = mul(a, unit_vec(field, n, q), f.matrix.column(i));
        }
    }

    Matrix left_sys(field, n * n, unknowns), right_sys(field, n * n, unknowns);
    Vec rhs = zero_vec(field, n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s) {
            const std::size_t row = k * n + s;
            rhs[row] = c.counit[k] * a.unit[s];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar& w = c.comul.at(k, i, j);
                    if (w.is_zero()) continue;
                    for (std::size_t q = 0; q < n; ++q) {
                        // (F * G)(e_k): G contributes in the second slot.
                        left_sys.at(row, q * n + j) += w * f_then_basis[i][q][s];
                        // (G * F)(e_k): G contributes in the first slot.
                        right_sys.at(row, q * n + i) += w * basis_then_f[j][q][s];
                    }
                }
        }

    Matrix stacked(field, 2 * n * n, unknowns);
    for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t q = 0; q < unknowns; ++q) {
            stacked.at(r, q) = left_sys.at(r, q);
            stacked.at(n * n + r, q) = right_sys.at(r, q);
        }
    Vec stacked_rhs = rhs;
    stacked_rhs.insert(stacked_rhs.end(), rhs.begin(), rhs.end());

    if (auto x = solve(stacked, stacked_rhs)) {
        Matrix g(field, n, n);
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t j = 0; j < n; ++j) g.at(q, j) = (*x)[q * n + j];
        if (diagnostics) *diagnostics = {true, true};
        return LinearEndo{g};
    }
    if (diagnostics) {
        diagnostics->left_inverse_exists = solve(right_sys, rhs).has_value();
        diagnostics->right_inverse_exists = solve(left_sys, rhs).has_value();
    }
    return std::nullopt;
}

bool is_grouplike(const FinDimCoalgebra& c, const Vec& g) {
    return comul(c, g) == outer(g, g) && dot(c.counit, g).is_one();
}

bool is_algebra_morphism(const FinDimAlgebra& a, const LinearForm& f) {
    if (!apply_form(f, a.unit).is_one()) return false;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Scalar on_product = Scalar::zero(a.field);
            for (std::size_t k = 0; k < a.dim; ++k) on_product += a.mul.at(i, j, k) * f.coeffs[k];
            if (on_product != f.coeffs[i] * f.coeffs[j]) return false;
        }
    return true;
}

bool is_antimorphism_of_algebras(const FinDimAlgebra& a, const LinearEndo& t) {
    if (t.matrix * a.unit != a.unit) return false;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec product = zero_vec(a.field, a.dim);
            for (std::size_t k = 0; k < a.dim; ++k) product[k] = a.mul.at(i, j, k);
            const Vec lhs = t.matrix * product;
            const Vec rhs = mul(a, t.matrix.column(j), t.matrix.column(i));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_antimorphism_of_coalgebras(const FinDimCoalgebra& c, const LinearEndo& t) {
    const std::size_t n = c.dim;
    for (std::size_t k = 0; k < n; ++k) {
        if (dot(c.counit, t.matrix.column(k)) != c.counit[k]) return false;
        Matrix lhs = comul(c, t.matrix.column(k));
        Matrix rhs(c.field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& w = c.comul.at(k, i, j);
                if (w.is_zero()) continue;
                const Vec tj = t.matrix.column(j);
                const Vec ti = t.matrix.column(i);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) rhs.at(p, q) += w * tj[p] * ti[q];
            }
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace bifrob
