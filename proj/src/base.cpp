#include "flagforge/base.hpp"

#include <algorithm>
#include <set>

namespace flagforge {

int BaseSpace::index_of(const std::string& name) const {
    for (int i = 0; i < count(); ++i)
        if (components[static_cast<size_t>(i)] == name) return i;
    throw Error("no component named '" + name + "'");
}

BaseSpace make_base(const FieldDesc& f, std::vector<std::string> components) {
    if (components.empty()) throw InvariantViolation("base space needs >= 1 component");
    std::set<std::string> seen;
    for (const auto& c : components) {
        if (c.empty()) throw InvariantViolation("empty component id");
        if (!seen.insert(c).second)
            throw InvariantViolation("duplicate component id '" + c + "'");
    }
    return BaseSpace{f, std::move(components)};
}

bool DoubleCover::all_split() const {
    return std::all_of(comps.begin(), comps.end(),
                       [](const CoverComponent& c) { return c.tag == CoverTag::Split; });
}

DoubleCover make_cover(BaseSpace base, std::vector<CoverComponent> comps) {
    if (comps.size() != base.components.size())
        throw DimensionMismatch("cover components vs base components");
    for (const auto& c : comps) {
        if (c.tag == CoverTag::Field) {
            if (!is_quadratic(c.ext))
                throw InvariantViolation("field cover component needs a quadratic extension");
            if (!(base_field_of(c.ext) == base.field))
                throw InvariantViolation("cover extension does not extend the base field");
        }
    }
    return DoubleCover{std::move(base), std::move(comps)};
}

DoubleCover split_cover(BaseSpace base) {
    std::vector<CoverComponent> comps(base.components.size(), CoverComponent{});
    return DoubleCover{std::move(base), std::move(comps)};
}

Restriction make_restriction(const BaseSpace& source, std::vector<std::string> kept) {
    if (kept.empty()) throw EmptyRestriction("restriction keeps no component");
    std::set<std::string> want(kept.begin(), kept.end());
    if (want.size() != kept.size()) throw InvariantViolation("restriction repeats a component");
    Restriction r;
    for (const auto& c : source.components)
        if (want.count(c)) {
            r.kept.push_back(c);
            want.erase(c);
        }
    if (!want.empty()) throw Error("restriction names unknown component '" + *want.begin() + "'");
    return r;
}

BaseSpace restrict_base(const BaseSpace& b, const Restriction& r) {
    Restriction checked = make_restriction(b, r.kept);
    return make_base(b.field, checked.kept);
}

DoubleCover restrict_cover(const DoubleCover& c, const Restriction& r) {
    Restriction checked = make_restriction(c.base, r.kept);
    std::vector<CoverComponent> comps;
    for (const auto& name : checked.kept)
        comps.push_back(c.comps[static_cast<size_t>(c.base.index_of(name))]);
    return make_cover(restrict_base(c.base, checked), std::move(comps));
}

std::pair<int, bool> swap_sheet(const DoubleCover& c, int comp, int sheet) {
    const CoverComponent& cc = c.comps.at(static_cast<size_t>(comp));
    if (cc.tag == CoverTag::Split) {
        if (sheet != 0 && sheet != 1) throw Error("split component has sheets 0 and 1");
        return {1 - sheet, false};
    }
    if (sheet != 0) throw Error("field component has a single sheet 0");
    return {0, true};
}

LScalar lscalar_split(const Scalar& c0, const Scalar& c1) {
    if (!(c0.field == c1.field)) throw FieldMismatch("split scalar sheets differ in field");
    return LScalar{true, c0, c1};
}

LScalar lscalar_field(const Scalar& c0) { return LScalar{false, c0, c0}; }

LScalar lscalar_one(const DoubleCover& c, int comp) {
    const CoverComponent& cc = c.comps.at(static_cast<size_t>(comp));
    if (cc.tag == CoverTag::Split)
        return lscalar_split(s_one(c.base.field), s_one(c.base.field));
    return lscalar_field(s_one(cc.ext));
}

LScalar lscalar_mul(const LScalar& x, const LScalar& y) {
    if (x.split != y.split) throw FieldMismatch("mixing split and field cover scalars");
    if (x.split) return lscalar_split(s_mul(x.c0, y.c0), s_mul(x.c1, y.c1));
    return lscalar_field(s_mul(x.c0, y.c0));
}

std::vector<Scalar> l_scalar_action(const DoubleCover& c, int comp, int sheet,
                                    const LScalar& s, const std::vector<Scalar>& v) {
    const CoverComponent& cc = c.comps.at(static_cast<size_t>(comp));
    std::vector<Scalar> out;
    out.reserve(v.size());
    if (cc.tag == CoverTag::Split) {
        if (!s.split) throw FieldMismatch("field scalar on a split component");
        if (sheet != 0 && sheet != 1) throw Error("split component has sheets 0 and 1");
        const Scalar& m = (sheet == 0) ? s.c0 : s.c1;
        for (const auto& x : v) {
            if (!(x.field == c.base.field)) throw FieldMismatch("vector entry field");
            out.push_back(s_mul(m, x));
        }
        return out;
    }
    if (s.split) throw FieldMismatch("split scalar on a field component");
    if (sheet != 0) throw Error("field component has a single sheet 0");
    for (const auto& x : v) {
        if (!(x.field == cc.ext)) throw FieldMismatch("vector entry field");
        out.push_back(s_mul(s.c0, x));
    }
    return out;
}

Matrix ext_action_matrix(const Scalar& c, int d) {
    if (!is_quadratic(c.field)) throw Error("ext_action_matrix needs an extension scalar");
    FieldDesc base = base_field_of(c.field);
    Rat s = quad_s(c.field), t = quad_t(c.field);
    // per coordinate, multiplication by a + b*theta on basis (1, theta):
    //   1 |-> a + b*theta, theta |-> t*b + (a + s*b)*theta
    Matrix m = m_zero(base, 2 * d, 2 * d);
    Scalar a = s_make(base, c.a), b = s_make(base, c.b);
    Scalar tb = s_mul(s_make(base, t), b);
    Scalar asb = s_add(a, s_mul(s_make(base, s), b));
    for (int i = 0; i < d; ++i) {
        m.at(2 * i, 2 * i) = a;
        m.at(2 * i, 2 * i + 1) = tb;
        m.at(2 * i + 1, 2 * i) = b;
        m.at(2 * i + 1, 2 * i + 1) = asb;
    }
    return m;
}

} // namespace flagforge
