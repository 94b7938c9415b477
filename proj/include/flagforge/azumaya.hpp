#pragma once
#include "flags.hpp"

// The split rank-d matrix algebra: right/left ideals as subspaces of the
// flattened d*d carrier (closure checked at construction), the bijection
// between submodules of F^d and right ideals, one-sided annihilators, flags
// of ideals, and tuples of orthogonal idempotents summing to 1.

namespace flagforge {

// row-major flattening of d x d matrices into vectors of length d*d
std::vector<Scalar> flatten(const Matrix&);
Matrix unflatten(const FieldDesc&, int d, const std::vector<Scalar>& row);
Matrix matrix_unit(const FieldDesc&, int d, int i, int j);

bool is_right_ideal(int d, const Subspace& carrier);
bool is_left_ideal(int d, const Subspace& carrier);

struct RightIdeal {
    int d = 0;
    Subspace carrier; // ambient d*d, right-mult closed, dim divisible by d
    int dim() const { return carrier.dim(); }
    friend bool operator==(const RightIdeal&, const RightIdeal&) = default;
};

struct LeftIdeal {
    int d = 0;
    Subspace carrier;
    int dim() const { return carrier.dim(); }
    friend bool operator==(const LeftIdeal&, const LeftIdeal&) = default;
};

RightIdeal make_right_ideal(int d, Subspace carrier); // throws NotAnIdeal
LeftIdeal make_left_ideal(int d, Subspace carrier);

// V <= F^d |-> { M : column space of M inside V }; dim = d * dim V
RightIdeal ideal_from_submodule(const Subspace& V);
// I |-> span of the columns of its basis matrices (inverse of the above)
Subspace submodule_from_ideal(const RightIdeal&);
// {B : B * M = 0 for all M in I}; dim = d^2 - dim I
LeftIdeal left_annihilator(const RightIdeal&);
// {C : M * C = 0 for all M in L}
RightIdeal right_annihilator(const LeftIdeal&);
// view in the opposite algebra: transpose every carrier element
RightIdeal op_view(const LeftIdeal&);
LeftIdeal op_view(const RightIdeal&);
Subspace transpose_carrier(int d, const Subspace&);
Subspace column_space(const Matrix&);

// flags of submodules <-> flags of right ideals (componentwise I_V)
GlobalLoweredFlag flag_to_ideal_flag(const GlobalLoweredFlag&);
GlobalLoweredFlag ideal_flag_to_flag(const GlobalLoweredFlag&, int d); // NotAnIdeal on bad member
// member dims must be multiples of d; tuple entries dim/d with n = d-1
TypeSection type_of_ideal_flag(const GlobalLoweredFlag&, int d);

// --------------------------------------------------------------- idempotents

struct IdempTuple {
    BaseSpace base;
    int d = 0;
    std::vector<std::vector<Matrix>> es; // per component, truncated: no zero entries
    int global_length() const;           // max component tuple length (>= 1)
    std::vector<Matrix> padded(int comp) const; // zeros appended to global length
    friend bool operator==(const IdempTuple&, const IdempTuple&) = default;
};

struct RaisedIdempTuple {
    BaseSpace base;
    int d = 0;
    std::vector<std::vector<Matrix>> es;
    int global_length() const;
    std::vector<Matrix> padded(int comp) const; // zeros prepended to global length
    friend bool operator==(const RaisedIdempTuple&, const RaisedIdempTuple&) = default;
};

// padded family (zero entries allowed): orthogonal idempotents summing to 1 on
// every component, zeros only in the tail, last column nonzero somewhere.
// On failure *why names the first offending component/pair.
bool validate_idemp(const BaseSpace&, int d,
                    const std::vector<std::vector<Matrix>>& padded,
                    std::string* why = nullptr);

IdempTuple make_idemp_tuple(const BaseSpace&, int d,
                            std::vector<std::vector<Matrix>> per_component);
IdempTuple glue_idemps(const BaseSpace&, int d,
                       std::vector<std::vector<Matrix>> per_component);
IdempTuple restrict_idemp(const IdempTuple&, const Restriction&);

// the raising staircase on idempotent tuples (zeros slide to the front)
RaisedIdempTuple rho_idemp(const IdempTuple&);
IdempTuple rho_idemp_inverse(const RaisedIdempTuple&);

// chain member j = (e_1 + ... + e_j) * Mat_d, j < component length
GlobalLoweredFlag idemp_to_flag(const IdempTuple&);
// surjectivity witness: complements of consecutive members give projections
IdempTuple idemps_from_flag(const GlobalLoweredFlag&);

} // namespace flagforge
