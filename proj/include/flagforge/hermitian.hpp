#pragma once
#include "azumaya.hpp"

// Structures over a degree-2 cover: modules with a hermitian pairing, the
// perpendicular/annihilator involutions twisted by the cover, symmetric
// lowered flags and their ideal-flag incarnation, outer direct-sum and
// idempotent tuples, outer types, and the opposite-algebra flag involution.
//
// Carriers per component: a split component holds a pair of subspaces (one
// per sheet, both over the base field); a field component holds a single
// subspace over the quadratic extension. Split components use the hyperbolic
// pairing h((x,y),(z,w)) = (y^T z, w^T x) / the standard swap-transpose
// involution; field components use h(x,y) = conj(x)^T H y with Gram H and
// tau(M) = H^-1 conj(M)^T H.

namespace flagforge {

// ------------------------------------------------------------ L-submodules

struct LSub {
    bool split = true;
    Subspace s0, s1; // split: sheets 0/1; field: s0 over ext (s1 unused)
    friend bool operator==(const LSub&, const LSub&) = default;
};

LSub lsub_split(Subspace s0, Subspace s1);
LSub lsub_field(Subspace s0);
LSub lsub_zero(const DoubleCover&, int comp, int ambient);
LSub lsub_full(const DoubleCover&, int comp, int ambient);
bool lsub_is_zero(const LSub&);
bool lsub_is_full(const LSub&);
bool lsub_contains(const LSub& v, const LSub& w); // w subset of v
LSub lsub_sum(const LSub&, const LSub&);
LSub lsub_intersect(const LSub&, const LSub&);
int lsub_rank(const LSub&); // base rank: dim0+dim1, or 2*dim_ext

// locally constant invariants of the cover-module structure
int subrank_L(const DoubleCover&, int comp, const LSub&);
int gap_L(const DoubleCover&, int comp, const LSub& v, const LSub& w); // v subset w

// ------------------------------------------------------- hermitian spaces

struct HermitianSpace {
    DoubleCover cover;
    int d = 0;
    // per component: Gram matrix over ext on field components (conj-symmetric,
    // invertible); ignored on split components (canonical hyperbolic pairing)
    std::vector<Matrix> gram;
    friend bool operator==(const HermitianSpace&, const HermitianSpace&) = default;
};

HermitianSpace make_hermitian(DoubleCover, int d, std::vector<Matrix> gram = {});

struct LVec {
    bool split = true;
    std::vector<Scalar> v0, v1; // split: sheet vectors; field: v0 over ext
};

// the pairing value is a cover scalar on the component
LScalar h_eval(const HermitianSpace&, int comp, const LVec& x, const LVec& y);

// perpendicular of an L-submodule of H (ambient d per sheet)
LSub perp(const HermitianSpace&, int comp, const LSub&);

// tau applied to the left annihilator of an L-right-ideal of End(H)
// (ambient d*d per sheet); split: (I,J) |-> ((0J)^T, (0I)^T)
LSub tau_ann(const HermitianSpace&, int comp, const LSub& ideal);
// tau of a single algebra element on a field component / pair on split
Matrix tau_field(const HermitianSpace&, int comp, const Matrix&);

// --------------------------------------------------------- lowered L-flags

struct LComponentFlag {
    int ambient = 0;               // per sheet
    std::vector<LSub> chain;       // all consecutive L-gaps (incl. 0, full) positive
    int length() const { return static_cast<int>(chain.size()); }
    friend bool operator==(const LComponentFlag&, const LComponentFlag&) = default;
};

struct LLoweredFlag {
    DoubleCover cover;
    int ambient = 0;               // d for module flags, d*d for ideal flags
    std::vector<LComponentFlag> comps;
    int global_length() const;
    std::vector<LSub> padded_chain(int comp) const; // full-padded at the tail
    std::vector<LSub> raised_chain(int comp) const; // zero-padded at the front
    friend bool operator==(const LLoweredFlag&, const LLoweredFlag&) = default;
};

LComponentFlag make_l_component_flag(const DoubleCover&, int comp, int ambient,
                                     std::vector<LSub> chain);
LLoweredFlag make_l_flag(const DoubleCover&, int ambient, std::vector<LComponentFlag>);
LLoweredFlag restrict_l_flag(const LLoweredFlag&, const Restriction&);

// twisted involution on module flags: per component, reverse the proper chain
// and apply perp, keeping the padding
LLoweredFlag pi_h(const HermitianSpace&, const LLoweredFlag&);
bool is_symmetric_flag(const HermitianSpace&, const LLoweredFlag&);

// twisted involution on ideal flags via tau of the annihilator
LLoweredFlag pi_B(const HermitianSpace&, const LLoweredFlag&);
bool is_symmetric_ideal_flag(const HermitianSpace&, const LLoweredFlag&);

// split cover: V |-> (V_i x perp of the reversed raised chain); bijection
// between plain lowered flags and symmetric L-flags
LLoweredFlag inner_to_outer_flag(const HermitianSpace&, const GlobalLoweredFlag&);
GlobalLoweredFlag outer_to_inner_flag(const HermitianSpace&, const LLoweredFlag&);

// componentwise Hom(H, V): split (V0,V1) |-> (I_V0, I_V1); field V |-> I_V
LLoweredFlag outer_ideal_iso(const HermitianSpace&, const LLoweredFlag& module_flag);
LLoweredFlag outer_ideal_iso_inverse(const HermitianSpace&, const LLoweredFlag& ideal_flag);

// ---------------------------------------------------------------- outer type

struct OuterTypeEntry {
    bool split = true;
    TypeTuple t0, t1; // split: per sheet; field: t0 only
    friend bool operator==(const OuterTypeEntry&, const OuterTypeEntry&) = default;
};

struct OuterTypeSection {
    DoubleCover cover;
    std::vector<OuterTypeEntry> entries;
    friend bool operator==(const OuterTypeSection&, const OuterTypeSection&) = default;
};

// ideal_flag selects /d scaling of member ranks
OuterTypeSection outer_type(const HermitianSpace&, const LLoweredFlag&, bool ideal_flag);

// flag involution into the opposite algebra: members reversed-annihilated and
// carried by transpose; exchanges a type with its vee
LLoweredFlag opposite_iso(const HermitianSpace&, const LLoweredFlag& ideal_flag);

// symmetric ideal flags whose type lies in the {(1),(n)} orbit on every
// component; sheet0_one additionally requires type (1) on the distinguished sheet
bool sb_fiber_member(const HermitianSpace&, const LLoweredFlag& ideal_flag);
bool sb_fiber_sheet0_one(const HermitianSpace&, const LLoweredFlag& ideal_flag);

// ------------------------------------------------------ outer direct tuples

// per component, a common-length tuple of L-submodules (zeros allowed per the
// lowered rule); checks direct sum = H, lowered tail, and the twisted
// symmetry condition through the raised tuple
bool validate_outer_stiefel(const HermitianSpace&,
                            const std::vector<std::vector<LSub>>& per_comp,
                            std::string* why = nullptr);

// partial sums of a valid outer tuple form a symmetric lowered flag
LLoweredFlag outer_stiefel_to_flag(const HermitianSpace&,
                                   const std::vector<std::vector<LSub>>& per_comp);

// ---------------------------------------------------- outer idempotents

struct LIdem {
    bool split = true;
    Matrix e0, e1; // split: one per sheet; field: e0 over ext
    friend bool operator==(const LIdem&, const LIdem&) = default;
};

LIdem lidem_split(Matrix e0, Matrix e1);
LIdem lidem_field(Matrix e0);
bool lidem_is_zero(const LIdem&);

// tau of an L-algebra element: split (e0,e1) |-> (e1^T, e0^T); field H-twisted
LIdem tau_idem(const HermitianSpace&, int comp, const LIdem&);

// orthogonal idempotents summing to 1, lowered with literal-zero tail, and
// tau(e_i) = raised-tuple entry at the mirrored position
bool validate_outer_idemp(const HermitianSpace&,
                          const std::vector<std::vector<LIdem>>& per_comp,
                          std::string* why = nullptr);

// image tuple (V_{e_1}, ..., V_{e_k}) of an outer idempotent tuple
std::vector<std::vector<LSub>> outer_idemp_to_stiefel(
    const HermitianSpace&, const std::vector<std::vector<LIdem>>& per_comp);

} // namespace flagforge
