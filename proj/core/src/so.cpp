#include "hypcy/lie/so.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace hypcy {

namespace {

int pair_index(int n, int i, int j) {
    // 1 <= i < j <= 2n
    const int N = 2 * n;
    int idx = N;
    for (int a = 1; a < i; ++a) idx += N - a;
    return idx + (j - i - 1);
}

/// Solve for coefficients of v in the given independent basis; throws if v is outside the span.
QVector expand(const std::vector<QVector>& basis, const QVector& v) {
    QMatrix B = QMatrix::from_columns(static_cast<int>(v.size()), basis);
    QVector x;
    if (!B.solve(v, x)) throw std::logic_error("expand: vector outside span");
    return x;
}

}  // namespace

int so_dim(int n) { return n * (2 * n + 1); }

QMatrix SoElement::matrix() const {
    QMatrix X(2 * n + 1, 2 * n + 1);
    for (int i = 0; i < 2 * n; ++i) X(i + 1, 0) = X(0, i + 1) = u[i];
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) X(i + 1, j + 1) = A(i, j);
    return X;
}

SoElement SoElement::from_matrix(int n, const QMatrix& X) {
    if (!in_so(X) || X.rows() != 2 * n + 1) throw std::invalid_argument("SoElement: not in so(2n,1)");
    SoElement e{n, QVector(2 * n), QMatrix(2 * n, 2 * n)};
    for (int i = 0; i < 2 * n; ++i) e.u[i] = X(i + 1, 0);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) e.A(i, j) = X(i + 1, j + 1);
    return e;
}

std::vector<QMatrix> so_basis(int n) {
    std::vector<QMatrix> b;
    for (int c = 0; c < so_dim(n); ++c) {
        QVector e(so_dim(n), Rational(0));
        e[c] = 1;
        b.push_back(so_from_coords(n, e));
    }
    return b;
}

QVector so_coords(int n, const QMatrix& X) {
    QVector c(so_dim(n), Rational(0));
    for (int i = 1; i <= 2 * n; ++i) c[i - 1] = X(i, 0);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j) c[pair_index(n, i, j)] = X(i, j);
    return c;
}

QMatrix so_from_coords(int n, const QVector& c) {
    QMatrix X(2 * n + 1, 2 * n + 1);
    for (int i = 1; i <= 2 * n; ++i) X(i, 0) = X(0, i) = c[i - 1];
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j) {
            X(i, j) = c[pair_index(n, i, j)];
            X(j, i) = -c[pair_index(n, i, j)];
        }
    return X;
}

QMatrix bracket(const QMatrix& X, const QMatrix& Y) { return X * Y - Y * X; }

bool in_so(const QMatrix& X) {
    if (X.rows() != X.cols() || X.rows() < 1) return false;
    QMatrix J = QMatrix::identity(X.rows());
    J(0, 0) = -1;
    return (X.transpose() * J + J * X).is_zero();
}

XiPoint XiPoint::standard(int n) {
    if (n < 1) throw std::invalid_argument("XiPoint: n >= 1");
    XiPoint xi{n, QMatrix(2 * n, 2 * n)};
    for (int k = 0; k < n; ++k) {
        xi.J0(2 * k, 2 * k + 1) = -1;
        xi.J0(2 * k + 1, 2 * k) = 1;
    }
    return xi;
}

QMatrix XiPoint::matrix() const {
    QMatrix X(2 * n + 1, 2 * n + 1);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) X(i + 1, j + 1) = J0(i, j);
    return X;
}

QMatrix ad_matrix(int n, const QMatrix& X) {
    const int d = so_dim(n);
    std::vector<QVector> cols;
    for (const QMatrix& b : so_basis(n)) cols.push_back(so_coords(n, bracket(X, b)));
    return QMatrix::from_columns(d, cols);
}

std::vector<QVector> stabilizer_of_xi(const XiPoint& xi) { return ad_matrix(xi.n, xi.matrix()).nullspace(); }

std::vector<QVector> RepDecomposition::complement() const {
    std::vector<QVector> c = lambda2;
    c.insert(c.end(), cn.begin(), cn.end());
    return c;
}

nlohmann::json RepDecomposition::to_json() const {
    auto basis = [](const std::vector<QVector>& b) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& v : b) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& x : v) row.push_back(x.get_str());
            a.push_back(row);
        }
        return a;
    };
    return {{"n", n},
            {"dims", {{"so", so_dim(n)}, {"stabilizer", stabilizer.size()}, {"lambda2", lambda2.size()}, {"cn", cn.size()}}},
            {"stabilizer", basis(stabilizer)},
            {"lambda2", basis(lambda2)},
            {"cn", basis(cn)}};
}

RepDecomposition tangent_decomposition(const XiPoint& xi) {
    const int n = xi.n, d = so_dim(n);
    const QMatrix ad = ad_matrix(n, xi.matrix());
    const QMatrix ad2 = ad * ad;
    RepDecomposition r;
    r.n = n;
    r.stabilizer = ad.nullspace();
    r.lambda2 = (ad2 + QMatrix::identity(d).scaled(4)).nullspace();
    r.cn = (ad2 + QMatrix::identity(d)).nullspace();
    // eigenspaces of distinct eigenvalues are independent, so a full count
    // rules out any other eigenvalue
    const int total = static_cast<int>(r.stabilizer.size() + r.lambda2.size() + r.cn.size());
    if (total != d)
        throw std::logic_error("tangent_decomposition: ad_xi^2 has an unexpected eigenvalue (eigenspaces span " +
                               std::to_string(total) + " of " + std::to_string(d) + ")");
    // ad_xi-stability of each summand
    for (const auto* part : {&r.lambda2, &r.cn})
        for (const auto& v : *part) expand(*part, ad.apply(v));
    return r;
}

QMatrix ad_on_complement(const RepDecomposition& d, const QVector& h) {
    const int n = d.n;
    const std::vector<QVector> comp = d.complement();
    const QMatrix H = so_from_coords(n, h);
    std::vector<QVector> imgs;
    for (const auto& x : comp) imgs.push_back(so_coords(n, bracket(H, so_from_coords(n, x))));
    // solve B * M = imgs in one elimination
    std::vector<QVector> cols = comp;
    cols.insert(cols.end(), imgs.begin(), imgs.end());
    QMatrix aug = QMatrix::from_columns(so_dim(n), cols);
    const std::vector<int> piv = aug.rref();
    const int c = static_cast<int>(comp.size());
    for (int i = 0; i < static_cast<int>(piv.size()); ++i)
        if (piv[i] != i) throw std::logic_error("ad_on_complement: complement is not stabilizer-invariant");
    QMatrix M(c, c);
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < c; ++i) M(i, j) = aug(i, c + j);
    return M;
}

namespace {

// Bilinear forms B on span(rows) x span(cols) blocks of the complement with
// B(Mx, y) + B(x, My) = 0 for all M. Variables are B(i, j) for i in I, j in J;
// antisymmetric when I == J (then only i < j are variables).
std::vector<QMatrix> invariant_block(const std::vector<QMatrix>& Ms, const std::vector<int>& I,
                                     const std::vector<int>& J, bool antisym, int c) {
    std::map<std::pair<int, int>, int> var;
    for (int i : I)
        for (int j : J)
            if (!antisym || i < j) var.emplace(std::make_pair(i, j), static_cast<int>(var.size()));
    // coefficient of variable for B(a, b), with a in I-block and b in J-block
    auto term = [&](SparseRow& row, int a, int b, const Rational& coef) {
        if (coef == 0) return;
        if (antisym) {
            if (a == b) return;
            if (a > b) {
                std::swap(a, b);
                row[var.at({a, b})] -= coef;
            } else {
                row[var.at({a, b})] += coef;
            }
        } else {
            auto it = var.find({a, b});
            if (it != var.end()) row[it->second] += coef;
        }
    };
    SparseEliminator el(static_cast<int>(var.size()));
    std::vector<char> inI(c, 0), inJ(c, 0);
    for (int i : I) inI[i] = 1;
    for (int j : J) inJ[j] = 1;
    for (const QMatrix& M : Ms)
        for (int x : I)
            for (int y : J) {
                if (antisym && x >= y) continue;
                // sum_a M(a,x) B(a,y) + sum_b M(b,y) B(x,b)
                SparseRow row;
                for (int a = 0; a < c; ++a)
                    if (inI[a]) term(row, a, y, M(a, x));
                for (int b = 0; b < c; ++b)
                    if (inJ[b]) term(row, x, b, M(b, y));
                for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
                if (!row.empty()) el.add(row);
            }
    std::vector<QMatrix> out;
    for (const QVector& sol : el.nullspace()) {
        QMatrix B(c, c);
        for (const auto& [ij, k] : var) {
            B(ij.first, ij.second) = sol[k];
            if (antisym) B(ij.second, ij.first) = -sol[k];
        }
        out.push_back(B);
    }
    return out;
}

}  // namespace

InvariantForms invariant_two_forms(const RepDecomposition& d) {
    const int l = static_cast<int>(d.lambda2.size()), m = static_cast<int>(d.cn.size()), c = l + m;
    std::vector<QMatrix> Ms;
    for (const auto& h : d.stabilizer) {
        QMatrix M = ad_on_complement(d, h);
        for (int i = 0; i < l; ++i)
            for (int j = l; j < c; ++j)
                if (M(i, j) != 0 || M(j, i) != 0) throw std::logic_error("invariant_two_forms: summands not invariant");
        Ms.push_back(std::move(M));
    }
    std::vector<int> L, C;
    for (int i = 0; i < l; ++i) L.push_back(i);
    for (int i = l; i < c; ++i) C.push_back(i);
    InvariantForms r;
    std::vector<QMatrix> fl = invariant_block(Ms, L, L, true, c);
    std::vector<QMatrix> fc = invariant_block(Ms, C, C, true, c);
    r.cross = static_cast<int>(invariant_block(Ms, L, C, false, c).size());
    r.on_lambda2 = static_cast<int>(fl.size());
    r.on_cn = static_cast<int>(fc.size());
    r.forms = fl;
    r.forms.insert(r.forms.end(), fc.begin(), fc.end());
    return r;
}

KirillovForm kirillov_form(const XiPoint& xi) {
    const int n = xi.n;
    const RepDecomposition d = tangent_decomposition(xi);
    const std::vector<QVector> comp = d.complement();
    const int c = static_cast<int>(comp.size()), l = static_cast<int>(d.lambda2.size());
    const QMatrix X = xi.matrix();
    std::vector<QMatrix> mats;
    for (const auto& v : comp) mats.push_back(so_from_coords(n, v));
    KirillovForm k;
    k.omega = QMatrix(c, c);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            const QMatrix P = X * bracket(mats[i], mats[j]);
            Rational t = 0;
            for (int a = 0; a < P.rows(); ++a) t += P(a, a);
            k.omega(i, j) = t;
        }
    k.antisymmetric = k.omega.is_antisymmetric();
    k.kernel = k.omega.nullspace();
    k.nondegenerate = k.kernel.empty();
    k.block_diagonal = true;
    for (int i = 0; i < l; ++i)
        for (int j = l; j < c; ++j)
            if (k.omega(i, j) != 0 || k.omega(j, i) != 0) k.block_diagonal = false;
    // cn basis vectors are pure u-directions; locate each plane (u_{2i-1}, u_{2i})
    for (int p = 0; p < n; ++p) {
        int a = -1, b = -1;
        for (int j = l; j < c; ++j) {
            QVector e(so_dim(n), Rational(0));
            e[2 * p] = 1;
            if (comp[j] == e) a = j;
            e[2 * p] = 0;
            e[2 * p + 1] = 1;
            if (comp[j] == e) b = j;
        }
        if (a < 0 || b < 0) continue;
        k.cn_ratios.push_back(k.omega(a, b));
    }
    return k;
}

Rational kirillov_inclusion_ratio(int n) {
    const XiPoint small = XiPoint::standard(n), big = XiPoint::standard(n + 1);
    const RepDecomposition d = tangent_decomposition(small);
    const QMatrix Xb = big.matrix();
    const KirillovForm ks = kirillov_form(small);
    const std::vector<QVector> comp = d.complement();
    auto embed = [&](const QVector& v) {
        const QMatrix s = so_from_coords(n, v);
        QMatrix b(2 * n + 3, 2 * n + 3);
        for (int i = 0; i <= 2 * n; ++i)
            for (int j = 0; j <= 2 * n; ++j) b(i, j) = s(i, j);
        return b;
    };
    std::optional<Rational> ratio;
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
        for (int j = 0; j < static_cast<int>(comp.size()); ++j) {
            const QMatrix P = Xb * bracket(embed(comp[i]), embed(comp[j]));
            Rational t = 0;
            for (int a = 0; a < P.rows(); ++a) t += P(a, a);
            const Rational& s = ks.omega(i, j);
            if (s == 0) {
                if (t != 0) throw std::logic_error("kirillov_inclusion_ratio: not proportional");
                continue;
            }
            const Rational r = t / s;
            if (ratio && *ratio != r) throw std::logic_error("kirillov_inclusion_ratio: ratio not constant");
            ratio = r;
        }
    if (!ratio) throw std::logic_error("kirillov_inclusion_ratio: form vanishes");
    return *ratio;
}

}  // namespace hypcy
