#pragma once
#include "exactlin.hpp"

// Finite-component base spaces, degree-2 covers over them (per component:
// either a split double sheet or a quadratic field extension), restrictions
// to component subsets, and the rank-d module structure over the cover ring.

namespace flagforge {

struct BaseSpace {
    FieldDesc field;
    std::vector<std::string> components; // nonempty, unique ids
    int count() const { return static_cast<int>(components.size()); }
    int index_of(const std::string& name) const;
    friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
};

BaseSpace make_base(const FieldDesc&, std::vector<std::string> components);

enum class CoverTag { Split, Field };

struct CoverComponent {
    CoverTag tag = CoverTag::Split;
    FieldDesc ext; // valid when tag == Field: quadratic extension of base.field
    friend bool operator==(const CoverComponent&, const CoverComponent&) = default;
};

struct DoubleCover {
    BaseSpace base;
    std::vector<CoverComponent> comps; // parallel to base.components
    bool all_split() const;
    friend bool operator==(const DoubleCover&, const DoubleCover&) = default;
};

DoubleCover make_cover(BaseSpace, std::vector<CoverComponent>);
DoubleCover split_cover(BaseSpace); // every component split

struct Restriction {
    std::vector<std::string> kept; // subset of source components, source order
};

// validates: nonempty subset; reorders kept names into source order
Restriction make_restriction(const BaseSpace& source, std::vector<std::string> kept);
BaseSpace restrict_base(const BaseSpace&, const Restriction&);
DoubleCover restrict_cover(const DoubleCover&, const Restriction&);

// The canonical sheet involution of the cover: on a split component it swaps
// the two sheets; on a field component it conjugates. swap_sheet returns the
// (sheet, conjugate?) address a given sheet maps to; applying it twice is the
// identity by construction, which the tests verify.
std::pair<int, bool> swap_sheet(const DoubleCover&, int comp, int sheet);

// Scalar of the cover ring restricted to one component: a pair of base-field
// scalars on a split component, one extension scalar on a field component.
struct LScalar {
    bool split = true;
    Scalar c0, c1; // split: (c0, c1); field: c0 over ext, c1 unused
};

LScalar lscalar_split(const Scalar& c0, const Scalar& c1);
LScalar lscalar_field(const Scalar& c0);
LScalar lscalar_one(const DoubleCover&, int comp);
LScalar lscalar_mul(const LScalar&, const LScalar&);

// Action of an LScalar on a sheet-addressed vector of the rank-d module:
// sheet 0/1 of a split component scales by c0/c1; a field component (single
// sheet 0) multiplies by the extension scalar.
std::vector<Scalar> l_scalar_action(const DoubleCover&, int comp, int sheet,
                                    const LScalar&, const std::vector<Scalar>& v);

// Multiplication by an extension scalar c on ext^d, written as a 2d x 2d
// base-field matrix w.r.t. the basis (1, theta) in each coordinate.
Matrix ext_action_matrix(const Scalar& c, int d);

} // namespace flagforge
