#pragma once
#include "hermitian.hpp"

// Group-side vocabulary: flag stabilizers, standard parabolic patterns from
// block partitions, cocharacters attached to idempotent tuples with their
// limit parabolic / Levi membership predicates, and unitary actions on
// L-flags over a double cover.
//
// A group element over the base is one invertible matrix per component. On a
// split cover component the sheet-0 matrix determines the sheet-1 action
// (inverse transpose), which preserves the hyperbolic pairing; on a field
// component the element is a matrix over the extension.

namespace flagforge {

// ------------------------------------------------------------- stabilizers

bool stabilizes_sub_flag(const std::vector<Matrix>& g, const GlobalLoweredFlag&);
// left multiplication on ideal carriers of rank-d matrices
bool stabilizes_ideal_flag(const std::vector<Matrix>& g, const GlobalLoweredFlag&, int d);

struct ParabolicHandle {
    GlobalLoweredFlag flag;
    friend bool operator==(const ParabolicHandle&, const ParabolicHandle&) = default;
};

bool parabolic_member(const ParabolicHandle&, const std::vector<Matrix>& g);
// complement convention: the tuple records the Levi's simple-root set
TypeSection type_of_parabolic(const ParabolicHandle&);

// ------------------------------------------------------ standard parabolics

struct BlockPartition {
    int d = 0;
    std::vector<int> sizes; // positive, summing to d
    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

BlockPartition make_partition(int d, std::vector<int> sizes);
std::vector<BlockPartition> all_partitions(int d); // all compositions of d

struct StandardParabolic {
    BlockPartition blocks;
    ComponentFlag flag;                      // coordinate partial-sum flag
    std::vector<std::vector<bool>> pattern;  // allowed-entry mask (block upper)
    TypeTuple type;                          // complement of the partial sums
};

StandardParabolic standard_parabolic(const FieldDesc&, const BlockPartition&);
bool pattern_member(const StandardParabolic&, const Matrix& g);

// ------------------------------------------------- cocharacters from tuples

struct Cocharacter {
    BaseSpace base;
    int d = 0;
    std::vector<std::vector<Matrix>> es;  // truncated idempotent tuples
    std::vector<std::vector<int>> exps;   // per component: k+1-2i, strictly decreasing
};

Cocharacter cochar_from_idemps(const IdempTuple&);

// the conjugation limit exists: every strictly lower block e_p g e_q (p > q)
// vanishes, for g and for its inverse
bool in_limit_parabolic(const Cocharacter&, const std::vector<Matrix>& g);
// centralizer of the tuple: g commutes with every idempotent
bool in_levi(const Cocharacter&, const std::vector<Matrix>& g);
// value of the limit for a member: the block-diagonal part, one per component
std::vector<Matrix> limit_of(const Cocharacter&, const std::vector<Matrix>& g);

// transport of an idempotent tuple along conjugation by g
IdempTuple conj_transport(const std::vector<Matrix>& g, const IdempTuple&);

// --------------------------------------------------------- unitary elements

// field component: tau(u) u = 1 over the extension
bool is_unitary_field(const HermitianSpace&, int comp, const Matrix& u);
// split component: the action induced on the other sheet by the sheet-0 matrix
Matrix sheet1_action(const Matrix& a); // inverse transpose

// act on a module L-flag, one matrix per component (sheet-0 / extension form);
// field components require a unitary matrix
LLoweredFlag act_unitary(const HermitianSpace&, const std::vector<Matrix>& g,
                         const LLoweredFlag&);
bool stabilizes_l_flag(const HermitianSpace&, const std::vector<Matrix>& g,
                       const LLoweredFlag&);

} // namespace flagforge
