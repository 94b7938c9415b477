#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

// Exact linear algebra over small fields: rationals, prime fields GF(p), and
// quadratic extensions (including GF(4) over GF(2)). Subspaces are canonical:
// the stored basis is the unique RREF basis, so operator== is semantic equality.

namespace flagforge {

// ---------------------------------------------------------------- rationals

struct Rat {
    long long num = 0, den = 1; // reduced, den > 0
    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(long long n, long long d);
    friend bool operator==(const Rat&, const Rat&) = default;
};

Rat rat_add(const Rat&, const Rat&);
Rat rat_sub(const Rat&, const Rat&);
Rat rat_mul(const Rat&, const Rat&);
Rat rat_div(const Rat&, const Rat&);
Rat rat_neg(const Rat&);
std::string rat_str(const Rat&);
Rat rat_parse(const std::string&); // "a/b" or "a"; rejects b == 0

// ------------------------------------------------------------------- fields

enum class FieldKind { Q, Fp, Quad };

// Quadratic extensions are generated by theta with theta^2 = s*theta + t:
// char != 2 uses (s,t) = (0, delta); GF(4) = GF(2)[x]/(x^2+x+1) uses (1,1).
// Conjugation is a + b*theta |-> (a + s*b) - b*theta, which specializes to
// b-negation (char != 2) and to Frobenius x |-> x^2 (GF(4)).
struct FieldDesc {
    FieldKind kind = FieldKind::Q;
    long long p = 0; // Fp: the prime; Quad: base prime (0 = rational base)
    Rat delta;       // Quad only: char != 2 nonsquare, or 1 for GF(4)
    friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

FieldDesc field_Q();
FieldDesc field_Fp(long long p);
FieldDesc field_quad(const FieldDesc& base, const Rat& delta); // validates nonsquare
FieldDesc field_F4();
bool is_quadratic(const FieldDesc&);
FieldDesc base_field_of(const FieldDesc&); // Quad -> base descriptor
Rat quad_s(const FieldDesc&);
Rat quad_t(const FieldDesc&);
long long field_size(const FieldDesc&); // 0 for infinite
std::string field_str(const FieldDesc&);

// ------------------------------------------------------------------ scalars

struct Scalar {
    FieldDesc field;
    Rat a, b; // Q/Fp: value in a (b = 0). Quad: a + b*theta, components in base
    friend bool operator==(const Scalar&, const Scalar&) = default;
};

Scalar s_zero(const FieldDesc&);
Scalar s_one(const FieldDesc&);
Scalar s_int(const FieldDesc&, long long n);
Scalar s_make(const FieldDesc&, const Rat& a, const Rat& b = Rat(0));
Scalar s_add(const Scalar&, const Scalar&);
Scalar s_sub(const Scalar&, const Scalar&);
Scalar s_mul(const Scalar&, const Scalar&);
Scalar s_div(const Scalar&, const Scalar&);
Scalar s_neg(const Scalar&);
Scalar s_inv(const Scalar&);
Scalar s_conj(const Scalar&); // identity on Q/Fp
bool s_is_zero(const Scalar&);
bool s_is_one(const Scalar&);
std::string s_str(const Scalar&);

// ----------------------------------------------------------------- matrices

struct Matrix {
    FieldDesc field;
    int rows = 0, cols = 0;
    std::vector<Scalar> e; // row-major
    Scalar& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix m_zero(const FieldDesc&, int rows, int cols);
Matrix m_identity(const FieldDesc&, int n);
Matrix m_add(const Matrix&, const Matrix&);
Matrix m_sub(const Matrix&, const Matrix&);
Matrix m_mul(const Matrix&, const Matrix&);
Matrix m_neg(const Matrix&);
Matrix m_scale(const Scalar&, const Matrix&);
Matrix m_transpose(const Matrix&);
Matrix m_conj(const Matrix&);
Matrix m_inverse(const Matrix&); // throws NotInvertible
bool m_is_zero(const Matrix&);
Matrix rref(const Matrix&);
int rank(const Matrix&);
Matrix kernel_basis(const Matrix& m); // rows r with m * r^T = 0, canonical
Matrix stack_rows(const Matrix& top, const Matrix& bottom);

// ---------------------------------------------------------------- subspaces

struct Subspace {
    FieldDesc field;
    int ambient = 0;
    Matrix basis; // RREF with zero rows dropped; unique per subspace
    int dim() const { return basis.rows; }
    friend bool operator==(const Subspace&, const Subspace&) = default;
};

Subspace span_rows(const Matrix& rows);
Subspace span_vectors(const FieldDesc&, int ambient,
                      const std::vector<std::vector<Scalar>>& gens);
Subspace zero_subspace(const FieldDesc&, int ambient);
Subspace full_subspace(const FieldDesc&, int ambient);
bool is_zero(const Subspace&);
bool is_full(const Subspace&);
Subspace sum(const Subspace&, const Subspace&);
Subspace intersect(const Subspace&, const Subspace&);
bool contains(const Subspace& v, const Subspace& w); // w subset of v
bool member(const Subspace&, const std::vector<Scalar>& vec);
// v must be contained in w; returns C with v (+) C = w, picked greedily from
// w's RREF rows in pivot order (deterministic).
Subspace complement(const Subspace& v, const Subspace& w);
Subspace conj_subspace(const Subspace&);
Subspace annihilator(const Subspace&); // {x : basis * x^T = 0}, same ambient
Subspace apply_matrix(const Subspace&, const Matrix& g); // x |-> g x image

// -------------------------------------------------- desk-scale enumeration

std::vector<Scalar> all_field_elements(const FieldDesc&); // finite only
std::vector<std::vector<Scalar>> all_vectors(const FieldDesc&, int len);
std::vector<Subspace> all_subspaces(const FieldDesc&, int ambient);
std::vector<Matrix> all_matrices(const FieldDesc&, int rows, int cols);
std::vector<Matrix> all_invertible(const FieldDesc&, int n);

} // namespace flagforge
