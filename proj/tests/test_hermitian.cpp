#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flagforge/hermitian.hpp"

using namespace flagforge;

namespace {

Subspace coord_span(const FieldDesc& f, int ambient, std::vector<int> axes) {
    std::vector<std::vector<Scalar>> gens;
    for (int a : axes) {
        std::vector<Scalar> v(static_cast<size_t>(ambient), s_zero(f));
        v[static_cast<size_t>(a)] = s_one(f);
        gens.push_back(v);
    }
    return span_vectors(f, ambient, gens);
}

std::vector<Scalar> random_vector(const FieldDesc& f, int len, std::mt19937& rng) {
    auto elems = all_field_elements(f);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    std::vector<Scalar> v;
    for (int i = 0; i < len; ++i) v.push_back(elems[pick(rng)]);
    return v;
}

Subspace grow_to(const Subspace& lo, int dim, std::mt19937& rng) {
    Subspace s = lo;
    while (s.dim() < dim)
        s = sum(s, span_vectors(s.field, s.ambient, {random_vector(s.field, s.ambient, rng)}));
    return s;
}

ComponentFlag random_component_flag(const FieldDesc& f, int d, std::mt19937& rng) {
    int len = static_cast<int>(rng() % static_cast<unsigned>(d));
    std::vector<int> dims;
    for (int v = 1; v <= d - 1; ++v) dims.push_back(v);
    std::shuffle(dims.begin(), dims.end(), rng);
    dims.resize(static_cast<size_t>(len));
    std::sort(dims.begin(), dims.end());
    std::vector<Subspace> chain;
    Subspace cur = zero_subspace(f, d);
    for (int dim : dims) {
        cur = grow_to(cur, dim, rng);
        chain.push_back(cur);
    }
    return make_component_flag(f, d, std::move(chain));
}

// random L-flag component: same length on both sheets, independent chains
LComponentFlag random_l_component(const DoubleCover& cover, int comp, int d, std::mt19937& rng) {
    if (cover.comps[comp].tag == CoverTag::Field) {
        ComponentFlag a = random_component_flag(cover.comps[comp].ext, d, rng);
        std::vector<LSub> chain;
        for (const Subspace& s : a.chain) chain.push_back(lsub_field(s));
        return make_l_component_flag(cover, comp, d, std::move(chain));
    }
    ComponentFlag a = random_component_flag(cover.base.field, d, rng);
    ComponentFlag b = random_component_flag(cover.base.field, d, rng);
    while (b.length() != a.length()) b = random_component_flag(cover.base.field, d, rng);
    std::vector<LSub> chain;
    for (int i = 0; i < a.length(); ++i) chain.push_back(lsub_split(a.chain[i], b.chain[i]));
    return make_l_component_flag(cover, comp, d, std::move(chain));
}

LLoweredFlag random_l_flag(const DoubleCover& cover, int d, std::mt19937& rng) {
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < cover.base.count(); ++c)
        comps.push_back(random_l_component(cover, c, d, rng));
    return make_l_flag(cover, d, comps);
}

LVec lvec_split(std::vector<Scalar> v0, std::vector<Scalar> v1) {
    return LVec{true, std::move(v0), std::move(v1)};
}

LVec lvec_field(std::vector<Scalar> v0) { return LVec{false, std::move(v0), {}}; }

std::vector<std::vector<Scalar>> span_elements(const Subspace& s) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& coeff : all_vectors(s.field, s.dim())) {
        std::vector<Scalar> v(static_cast<size_t>(s.ambient), s_zero(s.field));
        for (int r = 0; r < s.dim(); ++r)
            for (int c = 0; c < s.ambient; ++c)
                v[static_cast<size_t>(c)] =
                    s_add(v[static_cast<size_t>(c)], s_mul(coeff[static_cast<size_t>(r)], s.basis.at(r, c)));
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("hyperbolic pairing on split components is hermitian and sesquilinear") {
    FieldDesc f3 = field_Fp(3);
    BaseSpace b = make_base(f3, {"c0"});
    HermitianSpace hs = make_hermitian(split_cover(b), 2);
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        LVec x = lvec_split(random_vector(f3, 2, rng), random_vector(f3, 2, rng));
        LVec y = lvec_split(random_vector(f3, 2, rng), random_vector(f3, 2, rng));
        LScalar xy = h_eval(hs, 0, x, y);
        LScalar yx = h_eval(hs, 0, y, x);
        // conjugation on a split component swaps the sheets
        CHECK(yx.c0 == xy.c1);
        CHECK(yx.c1 == xy.c0);
        // conjugate-linear in the first slot, linear in the second
        Scalar a = random_vector(f3, 1, rng)[0], c = random_vector(f3, 1, rng)[0];
        LVec sx = lvec_split(l_scalar_action(hs.cover, 0, 0, lscalar_split(a, c), x.v0),
                             l_scalar_action(hs.cover, 0, 1, lscalar_split(a, c), x.v1));
        LScalar sxy = h_eval(hs, 0, sx, y);
        CHECK(sxy.c0 == s_mul(c, xy.c0));
        CHECK(sxy.c1 == s_mul(a, xy.c1));
        LVec sy = lvec_split(l_scalar_action(hs.cover, 0, 0, lscalar_split(a, c), y.v0),
                             l_scalar_action(hs.cover, 0, 1, lscalar_split(a, c), y.v1));
        LScalar xsy = h_eval(hs, 0, x, sy);
        CHECK(xsy.c0 == s_mul(a, xy.c0));
        CHECK(xsy.c1 == s_mul(c, xy.c1));
    }
}

TEST_CASE("extension pairing is hermitian and perp kills exactly the pairing") {
    FieldDesc f4 = field_F4();
    BaseSpace b = make_base(field_Fp(2), {"c0"});
    DoubleCover cover = make_cover(b, {CoverComponent{CoverTag::Field, f4}});
    Matrix swap = m_zero(f4, 2, 2);
    swap.at(0, 1) = s_one(f4);
    swap.at(1, 0) = s_one(f4);
    for (const Matrix& gram : {m_identity(f4, 2), swap}) {
        HermitianSpace hs = make_hermitian(cover, 2, {gram});
        // hermitian symmetry h(y,x) = conj h(x,y)
        for (const auto& xv : all_vectors(f4, 2))
            for (const auto& yv : all_vectors(f4, 2)) {
                Scalar xy = h_eval(hs, 0, lvec_field(xv), lvec_field(yv)).c0;
                Scalar yx = h_eval(hs, 0, lvec_field(yv), lvec_field(xv)).c0;
                CHECK(yx == s_conj(xy));
            }
        // perp is the exact vanishing locus and an involution of complementary rank
        for (const Subspace& v : all_subspaces(f4, 2)) {
            LSub lv = lsub_field(v);
            LSub pv = perp(hs, 0, lv);
            CHECK(pv.s0.dim() == 2 - v.dim());
            CHECK(perp(hs, 0, pv) == lv);
            for (const auto& xv : span_elements(v))
                for (const auto& yv : span_elements(pv.s0))
                    CHECK(s_is_zero(h_eval(hs, 0, lvec_field(xv), lvec_field(yv)).c0));
        }
    }
    // degenerate and non-hermitian grams are rejected
    Matrix zero = m_zero(f4, 2, 2);
    CHECK_THROWS_AS(make_hermitian(cover, 2, {zero}), NotInvertible);
    Matrix skew = m_identity(f4, 2);
    skew.at(0, 1) = s_make(f4, Rat(0), Rat(1)); // theta is not fixed by conjugation
    CHECK_THROWS_AS(make_hermitian(cover, 2, {skew}), InvariantViolation);
}

TEST_CASE("split perp exchanges sheet annihilators and pairs with gaps") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    HermitianSpace hs = make_hermitian(split_cover(b), 2);
    auto subs = all_subspaces(f2, 2);
    for (const Subspace& a : subs)
        for (const Subspace& v : subs) {
            LSub s = lsub_split(a, v);
            LSub p = perp(hs, 0, s);
            CHECK(p.s0 == annihilator(v));
            CHECK(p.s1 == annihilator(a));
            CHECK(perp(hs, 0, p) == s);
            CHECK(lsub_rank(p) == 4 - lsub_rank(s));
            // gap to the top is the subrank of the perpendicular
            CHECK(gap_L(hs.cover, 0, s, lsub_full(hs.cover, 0, 2)) == subrank_L(hs.cover, 0, p));
            CHECK(gap_L(hs.cover, 0, lsub_zero(hs.cover, 0, 2), s) == subrank_L(hs.cover, 0, s));
            // pairing vanishes between a submodule and its perp
            for (const auto& x0 : span_elements(s.s0))
                for (const auto& x1 : span_elements(s.s1))
                    for (const auto& y0 : span_elements(p.s0))
                        for (const auto& y1 : span_elements(p.s1)) {
                            LScalar val = h_eval(hs, 0, lvec_split(x0, x1), lvec_split(y0, y1));
                            CHECK(s_is_zero(val.c0));
                            CHECK(s_is_zero(val.c1));
                        }
        }
    CHECK_THROWS_AS(gap_L(hs.cover, 0, lsub_full(hs.cover, 0, 2), lsub_zero(hs.cover, 0, 2)),
                    ContainmentError);
}

TEST_CASE("self-perpendicular line over the swapped gram is frozen") {
    FieldDesc f4 = field_F4();
    BaseSpace b = make_base(field_Fp(2), {"c0"});
    DoubleCover cover = make_cover(b, {CoverComponent{CoverTag::Field, f4}});
    Matrix swap = m_zero(f4, 2, 2);
    swap.at(0, 1) = s_one(f4);
    swap.at(1, 0) = s_one(f4);
    HermitianSpace hs = make_hermitian(cover, 2, {swap});
    Subspace e0 = coord_span(f4, 2, {0});
    CHECK(perp(hs, 0, lsub_field(e0)) == lsub_field(e0));
    // with the identity gram the same line goes to the other axis
    HermitianSpace hi = make_hermitian(cover, 2);
    CHECK(perp(hi, 0, lsub_field(e0)) == lsub_field(coord_span(f4, 2, {1})));
}

TEST_CASE("twisted annihilator of an attached ideal is the ideal of the perp") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    HermitianSpace hs = make_hermitian(split_cover(b), 2);
    auto subs = all_subspaces(f2, 2);
    for (const Subspace& a : subs)
        for (const Subspace& v : subs) {
            LSub ideal = lsub_split(ideal_from_submodule(a).carrier, ideal_from_submodule(v).carrier);
            LSub expect = perp(hs, 0, lsub_split(a, v));
            LSub got = tau_ann(hs, 0, ideal);
            CHECK(got.s0 == ideal_from_submodule(expect.s0).carrier);
            CHECK(got.s1 == ideal_from_submodule(expect.s1).carrier);
            CHECK(tau_ann(hs, 0, got) == ideal);
        }
    // extension component, both gram choices
    FieldDesc f4 = field_F4();
    DoubleCover fc = make_cover(make_base(f2, {"c0"}), {CoverComponent{CoverTag::Field, f4}});
    Matrix swap = m_zero(f4, 2, 2);
    swap.at(0, 1) = s_one(f4);
    swap.at(1, 0) = s_one(f4);
    for (const Matrix& gram : {m_identity(f4, 2), swap}) {
        HermitianSpace hf = make_hermitian(fc, 2, {gram});
        for (const Subspace& v : all_subspaces(f4, 2)) {
            LSub ideal = lsub_field(ideal_from_submodule(v).carrier);
            LSub got = tau_ann(hf, 0, ideal);
            CHECK(got == lsub_field(ideal_from_submodule(perp(hf, 0, lsub_field(v)).s0).carrier));
            CHECK(tau_ann(hf, 0, got) == ideal);
        }
    }
}

TEST_CASE("lowered L-chains require positive gaps on every sheet") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    DoubleCover cover = split_cover(b);
    Subspace e0 = coord_span(f2, 3, {0});
    Subspace e01 = coord_span(f2, 3, {0, 1});
    Subspace z = zero_subspace(f2, 3);
    Subspace full = full_subspace(f2, 3);
    // both sheets strictly increase: fine
    CHECK(make_l_component_flag(cover, 0, 3, {lsub_split(e0, e0), lsub_split(e01, e01)}).length() == 2);
    // one sheet stalls: zero gap
    CHECK_THROWS_AS(make_l_component_flag(cover, 0, 3, {lsub_split(e0, e0), lsub_split(e01, e0)}),
                    InvariantViolation);
    // one sheet zero at the bottom member
    CHECK_THROWS_AS(make_l_component_flag(cover, 0, 3, {lsub_split(e0, z)}), InvariantViolation);
    // one sheet full at the top member
    CHECK_THROWS_AS(make_l_component_flag(cover, 0, 3, {lsub_split(e0, full)}), InvariantViolation);
    // not nested
    CHECK_THROWS_AS(
        make_l_component_flag(cover, 0, 3, {lsub_split(e01, e0), lsub_split(e0, e01)}),
        InvariantViolation);
    // empty chains are lowered flags of length zero
    CHECK(make_l_component_flag(cover, 0, 3, {}).length() == 0);
}

TEST_CASE("flag involution is an involution and acts on types by sheet-swapped vee") {
    std::mt19937 rng(2025);
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0", "c1"});
    HermitianSpace hs = make_hermitian(split_cover(b), 4);
    for (int it = 0; it < 60; ++it) {
        LLoweredFlag f = random_l_flag(hs.cover, 4, rng);
        LLoweredFlag pf = pi_h(hs, f);
        CHECK(pi_h(hs, pf) == f);
        CHECK(pf.global_length() == f.global_length());
        OuterTypeSection t = outer_type(hs, f, false);
        OuterTypeSection pt = outer_type(hs, pf, false);
        for (int c = 0; c < 2; ++c) {
            CHECK(pt.entries[c].t0 == vee(t.entries[c].t1));
            CHECK(pt.entries[c].t1 == vee(t.entries[c].t0));
        }
    }
    // extension component: same statements on a single sheet
    FieldDesc f4 = field_F4();
    DoubleCover fc = make_cover(make_base(f2, {"c0"}), {CoverComponent{CoverTag::Field, f4}});
    HermitianSpace hf = make_hermitian(fc, 3);
    for (int it = 0; it < 40; ++it) {
        LLoweredFlag f = random_l_flag(fc, 3, rng);
        LLoweredFlag pf = pi_h(hf, f);
        CHECK(pi_h(hf, pf) == f);
        CHECK(outer_type(hf, pf, false).entries[0].t0 == vee(outer_type(hf, f, false).entries[0].t0));
    }
}

TEST_CASE("ordinary flags correspond to the symmetric L-flags over a split cover") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    HermitianSpace hs = make_hermitian(split_cover(b), 3);

    // every lowered flag on a 3-dim space maps to a distinct symmetric L-flag
    auto subs = all_subspaces(f2, 3);
    std::vector<GlobalLoweredFlag> flags;
    flags.push_back(glue_flags(b, {make_component_flag(f2, 3, {})}));
    for (const Subspace& v : subs) {
        if (v.dim() == 0 || v.dim() == 3) continue;
        flags.push_back(glue_flags(b, {make_component_flag(f2, 3, {v})}));
        for (const Subspace& w : subs)
            if (w.dim() > v.dim() && w.dim() < 3 && contains(w, v))
                flags.push_back(glue_flags(b, {make_component_flag(f2, 3, {v, w})}));
    }
    CHECK(flags.size() == 36);

    std::vector<LLoweredFlag> images;
    for (const GlobalLoweredFlag& f : flags) {
        LLoweredFlag outer = inner_to_outer_flag(hs, f);
        CHECK(is_symmetric_flag(hs, outer));
        GlobalLoweredFlag back = outer_to_inner_flag(hs, outer);
        CHECK(back.comps[0].chain == f.comps[0].chain);
        for (const LLoweredFlag& seen : images) CHECK_FALSE(seen == outer);
        images.push_back(outer);
    }

    // exhaustive census: the symmetric L-flags are exactly those 36 images
    std::vector<LSub> lsubs;
    for (const Subspace& a : subs)
        for (const Subspace& v : subs) lsubs.push_back(lsub_split(a, v));
    int symmetric = 0;
    std::vector<std::vector<LSub>> chains{{}};
    for (size_t i = 0; i < chains.size(); ++i) {
        std::vector<LSub> cur = chains[i];
        bool valid = true;
        try {
            LLoweredFlag f = make_l_flag(hs.cover, 3, {make_l_component_flag(hs.cover, 0, 3, cur)});
            if (is_symmetric_flag(hs, f)) ++symmetric;
        } catch (const Error&) {
            valid = false;
        }
        if (!valid) continue;
        for (const LSub& next : lsubs) {
            std::vector<LSub> ext = cur;
            ext.push_back(next);
            try {
                make_l_component_flag(hs.cover, 0, 3, ext);
                chains.push_back(std::move(ext));
            } catch (const Error&) {
            }
        }
    }
    CHECK(symmetric == 36);
}

TEST_CASE("attaching ideals scales gaps by the rank and commutes with the involutions") {
    std::mt19937 rng(77);
    FieldDesc f3 = field_Fp(3);
    BaseSpace b = make_base(f3, {"c0", "c1"});
    HermitianSpace hs = make_hermitian(split_cover(b), 3);
    for (int it = 0; it < 25; ++it) {
        LLoweredFlag f = random_l_flag(hs.cover, 3, rng);
        LLoweredFlag fi = outer_ideal_iso(hs, f);
        CHECK(fi.ambient == 9);
        CHECK(outer_ideal_iso_inverse(hs, fi) == f);
        CHECK(outer_type(hs, fi, true) == outer_type(hs, f, false));
        for (int c = 0; c < 2; ++c) {
            const auto& mods = f.comps[c].chain;
            const auto& ids = fi.comps[c].chain;
            for (size_t i = 0; i < mods.size(); ++i) {
                LSub lo = i == 0 ? lsub_zero(hs.cover, c, 3) : mods[i - 1];
                LSub hi = i == 0 ? lsub_zero(hs.cover, c, 9) : ids[i - 1];
                CHECK(gap_L(hs.cover, c, hi, ids[i]) == 3 * gap_L(hs.cover, c, lo, mods[i]));
            }
        }
        // the module involution and the ideal involution match across the attachment
        CHECK(pi_B(hs, fi) == outer_ideal_iso(hs, pi_h(hs, f)));
        CHECK(is_symmetric_ideal_flag(hs, fi) == is_symmetric_flag(hs, f));
    }
    // non-ideal members are rejected on the way back
    Subspace junk = span_vectors(f3, 9, {{s_one(f3), s_zero(f3), s_zero(f3), s_zero(f3), s_zero(f3),
                                          s_zero(f3), s_zero(f3), s_zero(f3), s_zero(f3)}});
    LComponentFlag bad = make_l_component_flag(hs.cover, 0, 9, {lsub_split(junk, junk)});
    LLoweredFlag badflag = make_l_flag(hs.cover, 9, {bad, LComponentFlag{9, {}}});
    CHECK_THROWS_AS(outer_ideal_iso_inverse(hs, badflag), NotAnIdeal);
}

TEST_CASE("opposite attachment is an involution exchanging a type with its vee") {
    std::mt19937 rng(99);
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0", "c1"});
    HermitianSpace hs = make_hermitian(split_cover(b), 3);
    FieldDesc f4 = field_F4();
    DoubleCover fc = make_cover(make_base(f2, {"c0"}), {CoverComponent{CoverTag::Field, f4}});
    HermitianSpace hf = make_hermitian(fc, 2);
    for (int it = 0; it < 25; ++it) {
        LLoweredFlag fi = outer_ideal_iso(hs, random_l_flag(hs.cover, 3, rng));
        LLoweredFlag op = opposite_iso(hs, fi);
        CHECK(opposite_iso(hs, op) == fi);
        OuterTypeSection t = outer_type(hs, fi, true);
        OuterTypeSection ot = outer_type(hs, op, true);
        for (int c = 0; c < 2; ++c) {
            CHECK(ot.entries[c].t0 == vee(t.entries[c].t0));
            CHECK(ot.entries[c].t1 == vee(t.entries[c].t1));
        }
        LLoweredFlag gi = outer_ideal_iso(hf, random_l_flag(fc, 2, rng));
        LLoweredFlag gop = opposite_iso(hf, gi);
        CHECK(opposite_iso(hf, gop) == gi);
        CHECK(outer_type(hf, gop, true).entries[0].t0 ==
              vee(outer_type(hf, gi, true).entries[0].t0));
    }
}

TEST_CASE("section fibers over a split component are the two projective families") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    HermitianSpace hs = make_hermitian(split_cover(b), 3);
    auto subs = all_subspaces(f2, 3);
    int members = 0, sheet0 = 0;
    for (const Subspace& a : subs)
        for (const Subspace& v : subs) {
            if (a.dim() == 0 || a.dim() == 3 || v.dim() == 0 || v.dim() == 3) continue;
            LSub m = lsub_split(ideal_from_submodule(a).carrier, ideal_from_submodule(v).carrier);
            LLoweredFlag f = make_l_flag(hs.cover, 9, {make_l_component_flag(hs.cover, 0, 9, {m})});
            if (sb_fiber_member(hs, f)) {
                ++members;
                if (sb_fiber_sheet0_one(hs, f)) ++sheet0;
                // symmetry pins the second sheet to the perp of the first
                CHECK(v == annihilator(a));
                // the opposite attachment stays in the fiber and flips the family
                LLoweredFlag op = opposite_iso(hs, f);
                CHECK(sb_fiber_member(hs, op));
                CHECK(sb_fiber_sheet0_one(hs, op) != sb_fiber_sheet0_one(hs, f));
            }
        }
    CHECK(members == 14);
    CHECK(sheet0 == 7);
}

TEST_CASE("section fiber over an extension component consists of self-perp lines") {
    FieldDesc f2 = field_Fp(2);
    FieldDesc f4 = field_F4();
    DoubleCover fc = make_cover(make_base(f2, {"c0"}), {CoverComponent{CoverTag::Field, f4}});
    HermitianSpace hf = make_hermitian(fc, 2);
    int members = 0;
    for (const Subspace& v : all_subspaces(f4, 2)) {
        if (v.dim() != 1) continue;
        LSub m = lsub_field(ideal_from_submodule(v).carrier);
        LLoweredFlag f = make_l_flag(fc, 4, {make_l_component_flag(fc, 0, 4, {m})});
        bool in_fiber = sb_fiber_member(hf, f);
        CHECK(in_fiber == (perp(hf, 0, lsub_field(v)) == lsub_field(v)));
        if (in_fiber) {
            ++members;
            CHECK(sb_fiber_sheet0_one(hf, f));
        }
    }
    CHECK(members == 3);
}

TEST_CASE("outer idempotent tuples validate, project, and recover the flag") {
    std::mt19937 rng(4242);
    for (const FieldDesc& f : {field_Fp(2), field_Fp(3)}) {
        BaseSpace b = make_base(f, {"c0", "c1"});
        HermitianSpace hs = make_hermitian(split_cover(b), 3);
        for (int it = 0; it < 20; ++it) {
            std::vector<ComponentFlag> parts{random_component_flag(f, 3, rng),
                                             random_component_flag(f, 3, rng)};
            GlobalLoweredFlag inner = glue_flags(b, parts);
            IdempTuple tup = idemps_from_flag(inner);
            const int m = inner.global_length() + 1;
            // mirror of the idempotents on the second sheet
            std::vector<std::vector<LIdem>> outer;
            for (int c = 0; c < 2; ++c) {
                const auto& es = tup.es[static_cast<size_t>(c)];
                const int k = static_cast<int>(es.size());
                std::vector<LIdem> row;
                for (int i = 0; i < k; ++i)
                    row.push_back(lidem_split(es[static_cast<size_t>(i)],
                                              m_transpose(es[static_cast<size_t>(k - 1 - i)])));
                while (static_cast<int>(row.size()) < m)
                    row.push_back(lidem_split(m_zero(f, 3, 3), m_zero(f, 3, 3)));
                outer.push_back(std::move(row));
            }
            std::string why;
            CHECK_MESSAGE(validate_outer_idemp(hs, outer, &why), why);
            auto stiefel = outer_idemp_to_stiefel(hs, outer);
            CHECK_MESSAGE(validate_outer_stiefel(hs, stiefel, &why), why);
            LLoweredFlag flag = outer_stiefel_to_flag(hs, stiefel);
            CHECK(flag == inner_to_outer_flag(hs, inner));
            CHECK(is_symmetric_flag(hs, flag));
        }
    }
}

TEST_CASE("outer idempotent validation names the broken axiom") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    HermitianSpace hs = make_hermitian(split_cover(b), 2);
    Matrix p = m_zero(f2, 2, 2);
    p.at(0, 0) = s_one(f2);
    Matrix q = m_sub(m_identity(f2, 2), p);
    std::string why;

    // a valid mirrored pair
    std::vector<std::vector<LIdem>> good{{lidem_split(p, m_transpose(q)), lidem_split(q, m_transpose(p))}};
    CHECK(validate_outer_idemp(hs, good, &why));

    // sheets that do not sum to one
    std::vector<std::vector<LIdem>> short_sum{{lidem_split(p, m_transpose(q))}};
    CHECK_FALSE(validate_outer_idemp(hs, short_sum, &why));
    CHECK(why.find("sum to 1") != std::string::npos);

    // non-idempotent entry
    Matrix nil = m_zero(f2, 2, 2);
    nil.at(0, 1) = s_one(f2);
    std::vector<std::vector<LIdem>> notid{
        {lidem_split(nil, m_transpose(q)), lidem_split(m_sub(m_identity(f2, 2), nil), m_transpose(p))}};
    CHECK_FALSE(validate_outer_idemp(hs, notid, &why));
    CHECK(why.find("idempotent") != std::string::npos);

    // broken mirror symmetry: both sheets are fine but tau misaligns
    std::vector<std::vector<LIdem>> askew{{lidem_split(p, m_transpose(p)), lidem_split(q, m_transpose(q))}};
    CHECK_FALSE(validate_outer_idemp(hs, askew, &why));
    CHECK(why.find("symmetry") != std::string::npos);

    // interior zero entry
    std::vector<std::vector<LIdem>> gap{{lidem_split(m_zero(f2, 2, 2), m_zero(f2, 2, 2)),
                                         lidem_split(m_identity(f2, 2), m_identity(f2, 2))}};
    CHECK_FALSE(validate_outer_idemp(hs, gap, &why));
    CHECK(why.find("not lowered") != std::string::npos);

    // orthogonality failure
    Matrix r = m_zero(f2, 2, 2);
    r.at(0, 0) = s_one(f2);
    r.at(0, 1) = s_one(f2);
    std::vector<std::vector<LIdem>> notorth{
        {lidem_split(p, m_transpose(q)), lidem_split(r, m_transpose(r)), lidem_split(m_add(q, r), m_zero(f2, 2, 2))}};
    CHECK_FALSE(validate_outer_idemp(hs, notorth, &why));
    CHECK((why.find("orthogonal") != std::string::npos || why.find("idempotent") != std::string::npos));
}

TEST_CASE("outer direct tuples validate against the twisted symmetry") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0", "c1"});
    HermitianSpace hs = make_hermitian(split_cover(b), 2);
    Subspace e0 = coord_span(f2, 2, {0});
    Subspace e1 = coord_span(f2, 2, {1});
    std::string why;

    // two components of different lengths: the mirrored line pair and a full block
    std::vector<std::vector<LSub>> tuple{
        {lsub_split(e0, annihilator(e0)), lsub_split(e1, annihilator(e1))},
        {lsub_split(full_subspace(f2, 2), full_subspace(f2, 2)),
         lsub_split(zero_subspace(f2, 2), zero_subspace(f2, 2))}};
    CHECK_MESSAGE(validate_outer_stiefel(hs, tuple, &why), why);
    LLoweredFlag flag = outer_stiefel_to_flag(hs, tuple);
    CHECK(flag.comps[0].length() == 1);
    CHECK(flag.comps[0].chain[0] == lsub_split(e0, annihilator(e0)));
    CHECK(flag.comps[1].length() == 0);
    CHECK(is_symmetric_flag(hs, flag));

    // un-mirroring the second sheet breaks the symmetry check by name
    std::vector<std::vector<LSub>> askew{
        {lsub_split(e0, annihilator(e1)), lsub_split(e1, annihilator(e0))},
        {lsub_split(full_subspace(f2, 2), full_subspace(f2, 2)),
         lsub_split(zero_subspace(f2, 2), zero_subspace(f2, 2))}};
    CHECK_FALSE(validate_outer_stiefel(hs, askew, &why));
    CHECK(why.find("symmetry") != std::string::npos);

    // not a decomposition
    std::vector<std::vector<LSub>> overlap{
        {lsub_split(e0, annihilator(e0)), lsub_split(e0, annihilator(e0))},
        {lsub_split(full_subspace(f2, 2), full_subspace(f2, 2)),
         lsub_split(zero_subspace(f2, 2), zero_subspace(f2, 2))}};
    CHECK_FALSE(validate_outer_stiefel(hs, overlap, &why));
    CHECK(why.find("decompose") != std::string::npos);

    // zero before a nonzero entry
    std::vector<std::vector<LSub>> gap{
        {lsub_split(zero_subspace(f2, 2), zero_subspace(f2, 2)),
         lsub_split(full_subspace(f2, 2), full_subspace(f2, 2))},
        {lsub_split(full_subspace(f2, 2), full_subspace(f2, 2)),
         lsub_split(zero_subspace(f2, 2), zero_subspace(f2, 2))}};
    CHECK_FALSE(validate_outer_stiefel(hs, gap, &why));
    CHECK(why.find("not lowered") != std::string::npos);
}

TEST_CASE("image spaces of extension idempotents match tau through the pairing") {
    FieldDesc f4 = field_F4();
    DoubleCover fc = make_cover(make_base(field_Fp(2), {"c0"}), {CoverComponent{CoverTag::Field, f4}});
    HermitianSpace hs = make_hermitian(fc, 2);
    int seen = 0;
    for (const Matrix& e : all_matrices(f4, 2, 2)) {
        if (!(m_mul(e, e) == e)) continue;
        ++seen;
        Matrix co = m_sub(m_identity(f4, 2), e);
        LSub image = lsub_field(column_space(e));
        LSub mirror = lsub_field(column_space(tau_field(hs, 0, co)));
        CHECK(perp(hs, 0, image) == mirror);
    }
    CHECK(seen > 20); // idempotents of a 2x2 algebra over 4 elements: 0, 1, and rank-1 family
}

TEST_CASE("restriction keeps the chosen components of an L-flag") {
    std::mt19937 rng(31);
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0", "c1", "c2"});
    DoubleCover cover = make_cover(b, {CoverComponent{CoverTag::Split, {}},
                                       CoverComponent{CoverTag::Field, field_F4()},
                                       CoverComponent{CoverTag::Split, {}}});
    for (int it = 0; it < 20; ++it) {
        LLoweredFlag f = random_l_flag(cover, 3, rng);
        Restriction r = make_restriction(b, {"c0", "c2"});
        LLoweredFlag g = restrict_l_flag(f, r);
        CHECK(g.cover.base.count() == 2);
        CHECK(g.comps[0].chain == f.comps[0].chain);
        CHECK(g.comps[1].chain == f.comps[2].chain);
        Restriction mid = make_restriction(b, {"c1"});
        LLoweredFlag h = restrict_l_flag(f, mid);
        CHECK(h.comps[0].chain == f.comps[1].chain);
        CHECK(h.cover.comps[0].tag == CoverTag::Field);
    }
}
