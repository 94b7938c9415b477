#include "flagforge/exactlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flagforge {

// ---------------------------------------------------------------- rationals

namespace {

using i128 = __int128;

long long narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw Error("rational overflow (desk-scale arithmetic exceeded)");
    return static_cast<long long>(v);
}

Rat rat_norm(i128 n, i128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 an = n < 0 ? -n : n;
    i128 g = 1;
    { // gcd on i128
        i128 x = an, y = d;
        while (y) { i128 t = x % y; x = y; y = t; }
        g = x == 0 ? 1 : x;
    }
    Rat r;
    r.num = narrow(n / g);
    r.den = narrow(d / g);
    return r;
}

} // namespace

Rat::Rat(long long n, long long d) { *this = rat_norm(n, d); }

Rat rat_add(const Rat& x, const Rat& y) {
    return rat_norm(i128(x.num) * y.den + i128(y.num) * x.den, i128(x.den) * y.den);
}
Rat rat_sub(const Rat& x, const Rat& y) {
    return rat_norm(i128(x.num) * y.den - i128(y.num) * x.den, i128(x.den) * y.den);
}
Rat rat_mul(const Rat& x, const Rat& y) {
    return rat_norm(i128(x.num) * y.num, i128(x.den) * y.den);
}
Rat rat_div(const Rat& x, const Rat& y) {
    if (y.num == 0) throw Error("rational division by zero");
    return rat_norm(i128(x.num) * y.den, i128(x.den) * y.num);
}
Rat rat_neg(const Rat& x) { Rat r; r.num = -x.num; r.den = x.den; return r; }

std::string rat_str(const Rat& x) {
    return std::to_string(x.num) + "/" + std::to_string(x.den);
}

Rat rat_parse(const std::string& s) {
    auto bad = [&] { throw SchemaError("malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    auto parse_int = [&](const std::string& t) -> long long {
        if (t.empty()) bad();
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (...) {
            bad();
        }
        if (pos != t.size()) bad();
        return v;
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    long long n = parse_int(s.substr(0, slash));
    long long d = parse_int(s.substr(slash + 1));
    if (d == 0) throw SchemaError("malformed rational '" + s + "' (zero denominator)");
    return Rat(n, d);
}

// ------------------------------------------------------------------- fields

namespace {

long long mod_norm(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

bool is_square_mod_p(long long v, long long p) {
    v = mod_norm(v, p);
    for (long long x = 0; x < p; ++x)
        if (x * x % p == v) return true;
    return false;
}

bool is_perfect_square(long long v) {
    if (v < 0) return false;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    for (long long x = std::max(0LL, r - 2); x <= r + 2; ++x)
        if (x * x == v) return true;
    return false;
}

} // namespace

FieldDesc field_Q() { return FieldDesc{FieldKind::Q, 0, Rat(0)}; }

FieldDesc field_Fp(long long p) {
    if (!is_prime_ll(p)) throw Error("GF(p) needs a prime, got " + std::to_string(p));
    return FieldDesc{FieldKind::Fp, p, Rat(0)};
}

FieldDesc field_quad(const FieldDesc& base, const Rat& delta) {
    FieldDesc f;
    f.kind = FieldKind::Quad;
    if (base.kind == FieldKind::Q) {
        f.p = 0;
        if (delta.num == 0) throw Error("quadratic extension needs delta != 0");
        if (is_perfect_square(delta.num) && is_perfect_square(delta.den))
            throw Error("delta " + rat_str(delta) + " is a square in Q");
        f.delta = delta;
    } else if (base.kind == FieldKind::Fp) {
        f.p = base.p;
        if (base.p == 2) {
            // Only quadratic extension of GF(2); encoded with delta = 1.
            if (!(delta == Rat(1)))
                throw Error("char-2 quadratic extension must be GF(4) (delta = 1)");
            f.delta = Rat(1);
        } else {
            // delta must be a nonzero nonsquare element of GF(p)
            if (delta.den % base.p == 0) throw Error("delta denominator not invertible mod p");
            long long den_inv = 0;
            for (long long x = 1; x < base.p; ++x)
                if (mod_norm(delta.den * x, base.p) == 1) { den_inv = x; break; }
            long long d = mod_norm(mod_norm(delta.num, base.p) * den_inv, base.p);
            if (d == 0) throw Error("quadratic extension needs delta != 0");
            if (is_square_mod_p(d, base.p))
                throw Error("delta " + std::to_string(d) + " is a square mod " +
                            std::to_string(base.p));
            f.delta = Rat(d);
        }
    } else {
        throw Error("quadratic extension base must be Q or GF(p)");
    }
    return f;
}

FieldDesc field_F4() { return FieldDesc{FieldKind::Quad, 2, Rat(1)}; }

bool is_quadratic(const FieldDesc& f) { return f.kind == FieldKind::Quad; }

FieldDesc base_field_of(const FieldDesc& f) {
    if (f.kind != FieldKind::Quad) throw Error("base_field_of: not a quadratic extension");
    return f.p == 0 ? field_Q() : field_Fp(f.p);
}

Rat quad_s(const FieldDesc& f) {
    if (f.kind != FieldKind::Quad) throw Error("quad_s: not a quadratic extension");
    return (f.p == 2) ? Rat(1) : Rat(0);
}

Rat quad_t(const FieldDesc& f) {
    if (f.kind != FieldKind::Quad) throw Error("quad_t: not a quadratic extension");
    return (f.p == 2) ? Rat(1) : f.delta;
}

long long field_size(const FieldDesc& f) {
    switch (f.kind) {
    case FieldKind::Q: return 0;
    case FieldKind::Fp: return f.p;
    case FieldKind::Quad: return f.p == 0 ? 0 : f.p * f.p;
    }
    return 0;
}

std::string field_str(const FieldDesc& f) {
    switch (f.kind) {
    case FieldKind::Q: return "Q";
    case FieldKind::Fp: return "GF(" + std::to_string(f.p) + ")";
    case FieldKind::Quad:
        if (f.p == 0) return "Q(sqrt(" + rat_str(f.delta) + "))";
        if (f.p == 2) return "GF(4)";
        return "GF(" + std::to_string(f.p) + ")(sqrt(" + std::to_string(f.delta.num) + "))";
    }
    return "?";
}

// ------------------------------------------------------------------ scalars

namespace {

// base-field arithmetic on Rat components (Q when p == 0, else GF(p))
Rat comp_norm(const FieldDesc& f, const Rat& x) {
    long long p = (f.kind == FieldKind::Fp) ? f.p : (f.kind == FieldKind::Quad ? f.p : 0);
    if (p == 0) return x;
    if (x.den % p == 0) throw Error("denominator not invertible mod p");
    long long den_inv = 0;
    long long d = mod_norm(x.den, p);
    for (long long c = 1; c < p; ++c)
        if (mod_norm(d * c, p) == 1) { den_inv = c; break; }
    return Rat(mod_norm(mod_norm(x.num, p) * den_inv, p));
}

Rat comp_add(const FieldDesc& f, const Rat& x, const Rat& y) { return comp_norm(f, rat_add(x, y)); }
Rat comp_sub(const FieldDesc& f, const Rat& x, const Rat& y) { return comp_norm(f, rat_sub(x, y)); }
Rat comp_mul(const FieldDesc& f, const Rat& x, const Rat& y) { return comp_norm(f, rat_mul(x, y)); }

Rat comp_inv(const FieldDesc& f, const Rat& x) {
    if (x.num == 0) throw Error("division by zero");
    long long p = (f.kind == FieldKind::Fp || f.kind == FieldKind::Quad) ? f.p : 0;
    if (p == 0) return rat_div(Rat(1), x);
    long long v = mod_norm(x.num, p);
    for (long long c = 1; c < p; ++c)
        if (mod_norm(v * c, p) == 1) return Rat(c);
    throw Error("division by zero");
}

void check_same_field(const Scalar& x, const Scalar& y) {
    if (!(x.field == y.field))
        throw FieldMismatch("scalars over " + field_str(x.field) + " and " +
                            field_str(y.field));
}

} // namespace

Scalar s_zero(const FieldDesc& f) { return Scalar{f, Rat(0), Rat(0)}; }
Scalar s_one(const FieldDesc& f) { return s_make(f, Rat(1)); }
Scalar s_int(const FieldDesc& f, long long n) { return s_make(f, Rat(n)); }

Scalar s_make(const FieldDesc& f, const Rat& a, const Rat& b) {
    Scalar s;
    s.field = f;
    s.a = comp_norm(f, a);
    if (f.kind == FieldKind::Quad) {
        s.b = comp_norm(f, b);
    } else {
        if (!(b == Rat(0))) throw Error("non-quadratic scalar with theta component");
        s.b = Rat(0);
    }
    return s;
}

Scalar s_add(const Scalar& x, const Scalar& y) {
    check_same_field(x, y);
    Scalar r = x;
    r.a = comp_add(x.field, x.a, y.a);
    r.b = comp_add(x.field, x.b, y.b);
    return r;
}

Scalar s_sub(const Scalar& x, const Scalar& y) {
    check_same_field(x, y);
    Scalar r = x;
    r.a = comp_sub(x.field, x.a, y.a);
    r.b = comp_sub(x.field, x.b, y.b);
    return r;
}

Scalar s_mul(const Scalar& x, const Scalar& y) {
    check_same_field(x, y);
    Scalar r = x;
    if (x.field.kind != FieldKind::Quad) {
        r.a = comp_mul(x.field, x.a, y.a);
        return r;
    }
    // (a + b th)(c + d th) = ac + bd*t + (ad + bc + bd*s) th  with th^2 = s th + t
    const FieldDesc& f = x.field;
    Rat s = quad_s(f), t = quad_t(f);
    Rat bd = comp_mul(f, x.b, y.b);
    r.a = comp_add(f, comp_mul(f, x.a, y.a), comp_mul(f, bd, t));
    r.b = comp_add(f, comp_add(f, comp_mul(f, x.a, y.b), comp_mul(f, x.b, y.a)),
                   comp_mul(f, bd, s));
    return r;
}

Scalar s_neg(const Scalar& x) {
    Scalar r = x;
    r.a = comp_norm(x.field, rat_neg(x.a));
    r.b = comp_norm(x.field, rat_neg(x.b));
    return r;
}

Scalar s_conj(const Scalar& x) {
    if (x.field.kind != FieldKind::Quad) return x;
    // a + b th  |->  (a + s b) - b th
    const FieldDesc& f = x.field;
    Scalar r = x;
    r.a = comp_add(f, x.a, comp_mul(f, quad_s(f), x.b));
    r.b = comp_norm(f, rat_neg(x.b));
    return r;
}

Scalar s_inv(const Scalar& x) {
    if (s_is_zero(x)) throw Error("division by zero");
    if (x.field.kind != FieldKind::Quad) {
        Scalar r = x;
        r.a = comp_inv(x.field, x.a);
        return r;
    }
    // x^-1 = conj(x) / N(x), N(x) = x * conj(x) in the base field
    Scalar c = s_conj(x);
    Scalar n = s_mul(x, c);
    if (!(n.b == Rat(0))) throw Error("internal: norm not in base field");
    Rat ninv = comp_inv(x.field, n.a);
    Scalar r = c;
    r.a = comp_mul(x.field, c.a, ninv);
    r.b = comp_mul(x.field, c.b, ninv);
    return r;
}

Scalar s_div(const Scalar& x, const Scalar& y) { return s_mul(x, s_inv(y)); }

bool s_is_zero(const Scalar& x) { return x.a == Rat(0) && x.b == Rat(0); }
bool s_is_one(const Scalar& x) { return x.a == Rat(1) && x.b == Rat(0); }

std::string s_str(const Scalar& x) {
    if (x.field.kind == FieldKind::Quad)
        return "(" + rat_str(x.a) + "," + rat_str(x.b) + ")";
    return rat_str(x.a);
}

// ----------------------------------------------------------------- matrices

namespace {

void check_same_field_m(const Matrix& x, const Matrix& y) {
    if (!(x.field == y.field))
        throw FieldMismatch("matrices over " + field_str(x.field) + " and " +
                            field_str(y.field));
}

} // namespace

Matrix m_zero(const FieldDesc& f, int rows, int cols) {
    Matrix m;
    m.field = f;
    m.rows = rows;
    m.cols = cols;
    m.e.assign(static_cast<size_t>(rows) * cols, s_zero(f));
    return m;
}

Matrix m_identity(const FieldDesc& f, int n) {
    Matrix m = m_zero(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s_one(f);
    return m;
}

Matrix m_add(const Matrix& x, const Matrix& y) {
    check_same_field_m(x, y);
    if (x.rows != y.rows || x.cols != y.cols)
        throw DimensionMismatch("matrix add: shapes differ");
    Matrix r = x;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = s_add(x.e[i], y.e[i]);
    return r;
}

Matrix m_sub(const Matrix& x, const Matrix& y) {
    check_same_field_m(x, y);
    if (x.rows != y.rows || x.cols != y.cols)
        throw DimensionMismatch("matrix sub: shapes differ");
    Matrix r = x;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = s_sub(x.e[i], y.e[i]);
    return r;
}

Matrix m_mul(const Matrix& x, const Matrix& y) {
    check_same_field_m(x, y);
    if (x.cols != y.rows)
        throw DimensionMismatch("matrix mul: " + std::to_string(x.cols) + " vs " +
                                std::to_string(y.rows));
    Matrix r = m_zero(x.field, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (s_is_zero(x.at(i, k))) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = s_add(r.at(i, j), s_mul(x.at(i, k), y.at(k, j)));
        }
    return r;
}

Matrix m_neg(const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.e) v = s_neg(v);
    return r;
}

Matrix m_scale(const Scalar& c, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.e) v = s_mul(c, v);
    return r;
}

Matrix m_transpose(const Matrix& x) {
    Matrix r = m_zero(x.field, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Matrix m_conj(const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.e) v = s_conj(v);
    return r;
}

bool m_is_zero(const Matrix& x) {
    for (const auto& v : x.e)
        if (!s_is_zero(v)) return false;
    return true;
}

Matrix rref(const Matrix& m) {
    Matrix a = m;
    int lead = 0;
    for (int r = 0; r < a.rows && lead < a.cols; ++r) {
        int pr = -1;
        for (; lead < a.cols; ++lead) {
            for (int i = r; i < a.rows; ++i)
                if (!s_is_zero(a.at(i, lead))) { pr = i; break; }
            if (pr >= 0) break;
        }
        if (pr < 0) break;
        if (pr != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
        Scalar piv_inv = s_inv(a.at(r, lead));
        for (int j = 0; j < a.cols; ++j) a.at(r, j) = s_mul(piv_inv, a.at(r, j));
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || s_is_zero(a.at(i, lead))) continue;
            Scalar c = a.at(i, lead);
            for (int j = 0; j < a.cols; ++j)
                a.at(i, j) = s_sub(a.at(i, j), s_mul(c, a.at(r, j)));
        }
        ++lead;
    }
    return a;
}

int rank(const Matrix& m) {
    Matrix a = rref(m);
    int r = 0;
    for (int i = 0; i < a.rows; ++i) {
        bool nz = false;
        for (int j = 0; j < a.cols; ++j)
            if (!s_is_zero(a.at(i, j))) { nz = true; break; }
        if (nz) ++r;
    }
    return r;
}

Matrix m_inverse(const Matrix& m) {
    if (m.rows != m.cols) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows;
    Matrix aug = m_zero(m.field, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = s_one(m.field);
    }
    Matrix r = rref(aug);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(r.at(i, j) == (i == j ? s_one(m.field) : s_zero(m.field))))
                throw NotInvertible("matrix is singular");
    Matrix inv = m_zero(m.field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Matrix kernel_basis(const Matrix& m) {
    Matrix a = rref(m);
    int n = a.cols;
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < n; ++j)
            if (!s_is_zero(a.at(i, j))) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<std::vector<Scalar>> rows;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(n, s_zero(m.field));
        v[j] = s_one(m.field);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = s_neg(a.at(static_cast<int>(i), j));
        rows.push_back(std::move(v));
    }
    Matrix k = m_zero(m.field, static_cast<int>(rows.size()), n);
    for (int i = 0; i < k.rows; ++i)
        for (int j = 0; j < n; ++j) k.at(i, j) = rows[i][j];
    return rref(k); // canonical form
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
    check_same_field_m(top, bottom);
    if (top.cols != bottom.cols) throw DimensionMismatch("stack: column counts differ");
    Matrix r = m_zero(top.field, top.rows + bottom.rows, top.cols);
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < top.cols; ++j) r.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows; ++i)
        for (int j = 0; j < top.cols; ++j) r.at(top.rows + i, j) = bottom.at(i, j);
    return r;
}

// ---------------------------------------------------------------- subspaces

Subspace span_rows(const Matrix& rows) {
    Matrix a = rref(rows);
    int r = 0;
    for (int i = 0; i < a.rows; ++i) {
        bool nz = false;
        for (int j = 0; j < a.cols; ++j)
            if (!s_is_zero(a.at(i, j))) { nz = true; break; }
        if (nz) ++r;
    }
    Matrix b = m_zero(rows.field, r, rows.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rows.cols; ++j) b.at(i, j) = a.at(i, j);
    Subspace s;
    s.field = rows.field;
    s.ambient = rows.cols;
    s.basis = b;
    return s;
}

Subspace span_vectors(const FieldDesc& f, int ambient,
                      const std::vector<std::vector<Scalar>>& gens) {
    Matrix m = m_zero(f, static_cast<int>(gens.size()), ambient);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<int>(gens[i].size()) != ambient)
            throw DimensionMismatch("generator has wrong length");
        for (int j = 0; j < ambient; ++j) {
            if (!(gens[i][j].field == f)) throw FieldMismatch("generator entry field");
            m.at(static_cast<int>(i), j) = gens[i][j];
        }
    }
    return span_rows(m);
}

Subspace zero_subspace(const FieldDesc& f, int ambient) {
    Subspace s;
    s.field = f;
    s.ambient = ambient;
    s.basis = m_zero(f, 0, ambient);
    return s;
}

Subspace full_subspace(const FieldDesc& f, int ambient) {
    Subspace s;
    s.field = f;
    s.ambient = ambient;
    s.basis = m_identity(f, ambient);
    return s;
}

bool is_zero(const Subspace& s) { return s.dim() == 0; }
bool is_full(const Subspace& s) { return s.dim() == s.ambient; }

namespace {

void check_compatible(const Subspace& x, const Subspace& y) {
    if (!(x.field == y.field)) throw FieldMismatch("subspaces over different fields");
    if (x.ambient != y.ambient)
        throw DimensionMismatch("subspaces of ambient " + std::to_string(x.ambient) +
                                " and " + std::to_string(y.ambient));
}

} // namespace

Subspace sum(const Subspace& x, const Subspace& y) {
    check_compatible(x, y);
    return span_rows(stack_rows(x.basis, y.basis));
}

Subspace annihilator(const Subspace& s) {
    Matrix k = kernel_basis(s.basis);
    Subspace r;
    r.field = s.field;
    r.ambient = s.ambient;
    r.basis = k;
    return r;
}

Subspace intersect(const Subspace& x, const Subspace& y) {
    check_compatible(x, y);
    // (X^0 + Y^0)^0 with ^0 the dual-space annihilator (valid over any field)
    return annihilator(sum(annihilator(x), annihilator(y)));
}

bool contains(const Subspace& v, const Subspace& w) {
    check_compatible(v, w);
    if (w.dim() > v.dim()) return false;
    return rank(stack_rows(v.basis, w.basis)) == v.dim();
}

bool member(const Subspace& s, const std::vector<Scalar>& vec) {
    if (static_cast<int>(vec.size()) != s.ambient)
        throw DimensionMismatch("vector length vs ambient");
    Matrix row = m_zero(s.field, 1, s.ambient);
    for (int j = 0; j < s.ambient; ++j) row.at(0, j) = vec[j];
    return rank(stack_rows(s.basis, row)) == s.dim();
}

Subspace complement(const Subspace& v, const Subspace& w) {
    check_compatible(v, w);
    if (!contains(w, v))
        throw ContainmentError("complement: first argument not contained in second");
    Subspace cur = v;
    std::vector<std::vector<Scalar>> picked;
    for (int i = 0; i < w.basis.rows; ++i) {
        std::vector<Scalar> row(static_cast<size_t>(w.ambient));
        for (int j = 0; j < w.ambient; ++j) row[static_cast<size_t>(j)] = w.basis.at(i, j);
        if (!member(cur, row)) {
            picked.push_back(row);
            cur = sum(cur, span_vectors(w.field, w.ambient, {row}));
        }
    }
    return span_vectors(w.field, w.ambient, picked);
}

Subspace conj_subspace(const Subspace& s) {
    // conjugation fixes 0/1, so the conjugated RREF basis is still RREF
    Subspace r = s;
    r.basis = m_conj(s.basis);
    return r;
}

Subspace apply_matrix(const Subspace& s, const Matrix& g) {
    if (!(s.field == g.field)) throw FieldMismatch("apply_matrix field");
    if (g.rows != s.ambient || g.cols != s.ambient)
        throw DimensionMismatch("apply_matrix: matrix not ambient x ambient");
    return span_rows(m_mul(s.basis, m_transpose(g)));
}

// -------------------------------------------------- desk-scale enumeration

std::vector<Scalar> all_field_elements(const FieldDesc& f) {
    long long q = field_size(f);
    if (q == 0) throw BoundError("cannot enumerate an infinite field");
    std::vector<Scalar> out;
    if (f.kind == FieldKind::Fp) {
        for (long long v = 0; v < f.p; ++v) out.push_back(s_int(f, v));
    } else {
        for (long long a = 0; a < f.p; ++a)
            for (long long b = 0; b < f.p; ++b) out.push_back(s_make(f, Rat(a), Rat(b)));
    }
    return out;
}

std::vector<std::vector<Scalar>> all_vectors(const FieldDesc& f, int len) {
    auto elems = all_field_elements(f);
    std::vector<std::vector<Scalar>> out;
    std::vector<size_t> idx(static_cast<size_t>(len), 0);
    while (true) {
        std::vector<Scalar> v;
        v.reserve(static_cast<size_t>(len));
        for (int j = 0; j < len; ++j) v.push_back(elems[idx[static_cast<size_t>(j)]]);
        out.push_back(std::move(v));
        int k = len - 1;
        while (k >= 0) {
            if (++idx[static_cast<size_t>(k)] < elems.size()) break;
            idx[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

std::vector<Subspace> all_subspaces(const FieldDesc& f, int ambient) {
    auto vecs = all_vectors(f, ambient);
    std::vector<Subspace> out{zero_subspace(f, ambient)};
    size_t frontier_begin = 0;
    while (frontier_begin < out.size()) {
        size_t frontier_end = out.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const auto& v : vecs) {
                Subspace s = out[i]; // copy: out may reallocate below
                if (member(s, v)) continue;
                Subspace t = sum(s, span_vectors(f, ambient, {v}));
                bool seen = false;
                for (const auto& u : out)
                    if (u == t) { seen = true; break; }
                if (!seen) out.push_back(t);
            }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

std::vector<Matrix> all_matrices(const FieldDesc& f, int rows, int cols) {
    auto vecs = all_vectors(f, rows * cols);
    std::vector<Matrix> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) {
        Matrix m = m_zero(f, rows, cols);
        m.e = v;
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Matrix> all_invertible(const FieldDesc& f, int n) {
    std::vector<Matrix> out;
    for (auto& m : all_matrices(f, n, n))
        if (rank(m) == n) out.push_back(std::move(m));
    return out;
}

} // namespace flagforge
