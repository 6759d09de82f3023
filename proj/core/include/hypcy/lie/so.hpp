#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/exact/qmatrix.hpp"

namespace hypcy {

using QVector = std::vector<Rational>;

/**
 * so(2n,1) as (2n+1)x(2n+1) matrices [[0, u^T], [u, A]], A antisymmetric.
 * Coordinates: u_1..u_2n first, then A_ij for 1 <= i < j <= 2n in
 * lexicographic order.
 */
struct SoElement {
    int n = 0;
    QVector u;
    QMatrix A;

    QMatrix matrix() const;
    static SoElement from_matrix(int n, const QMatrix& X);
};

int so_dim(int n);
std::vector<QMatrix> so_basis(int n);
QVector so_coords(int n, const QMatrix& X);
QMatrix so_from_coords(int n, const QVector& c);
QMatrix bracket(const QMatrix& X, const QMatrix& Y);
/// X^T J + J X == 0 with J = diag(-1, 1, ..., 1).
bool in_so(const QMatrix& X);

struct XiPoint {
    int n = 0;
    QMatrix J0;  // standard block form, J0^2 = -1

    static XiPoint standard(int n);
    QMatrix matrix() const;
};

/// Matrix of ad_X on so(2n,1) in the coordinate basis.
QMatrix ad_matrix(int n, const QMatrix& X);

/// Basis (in coordinates) of the centralizer of xi.
std::vector<QVector> stabilizer_of_xi(const XiPoint& xi);

struct RepDecomposition {
    int n = 0;
    std::vector<QVector> stabilizer;
    std::vector<QVector> lambda2;  // ad_xi^2 = -4
    std::vector<QVector> cn;       // ad_xi^2 = -1

    /// Complement basis: lambda2 then cn.
    std::vector<QVector> complement() const;
    nlohmann::json to_json() const;
};

/// Throws std::logic_error if ad_xi^2 has an eigenvalue other than 0, -1, -4.
RepDecomposition tangent_decomposition(const XiPoint& xi);

/// Matrix of ad_h restricted to the complement, in the complement basis.
QMatrix ad_on_complement(const RepDecomposition& d, const QVector& h);

struct InvariantForms {
    std::vector<QMatrix> forms;  // antisymmetric, on the complement basis
    int on_lambda2 = 0;
    int on_cn = 0;
    int cross = 0;  // invariant pairings lambda2 x cn (expected none)
    int dim() const { return static_cast<int>(forms.size()); }
};

InvariantForms invariant_two_forms(const RepDecomposition& d);

struct KirillovForm {
    QMatrix omega;  // on the complement basis
    bool antisymmetric = false;
    bool nondegenerate = false;
    bool block_diagonal = false;
    std::vector<QVector> kernel;
    /// omega restricted to cn, divided by the standard area form on each
    /// (u_{2i-1}, u_{2i}) plane; all entries equal when proportional.
    std::vector<Rational> cn_ratios;
};

/// omega(X, Y) = tr(xi [X, Y]).
KirillovForm kirillov_form(const XiPoint& xi);

/**
 * omega_{n+1}(iota X, iota Y) / omega_n(X, Y) over the complement of n,
 * where iota pads with zeros. Returns the constant ratio or throws if it is
 * not constant.
 */
Rational kirillov_inclusion_ratio(int n);

}  // namespace hypcy
