#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "flagforge/groups.hpp"

using namespace flagforge;

namespace {

Matrix diag_idem(const FieldDesc& f, int d, std::vector<int> ones) {
    Matrix m = m_zero(f, d, d);
    for (int i : ones) m.at(i, i) = s_one(f);
    return m;
}

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

// ordered partitions of {0..n-1} into nonempty blocks
void ordered_partitions(std::vector<int> rest, std::vector<std::vector<int>> acc,
                        std::vector<std::vector<std::vector<int>>>& out) {
    if (rest.empty()) {
        out.push_back(acc);
        return;
    }
    const size_t n = rest.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> block, remain;
        for (size_t i = 0; i < n; ++i)
            (mask & (1u << i) ? block : remain).push_back(rest[i]);
        auto next = acc;
        next.push_back(block);
        ordered_partitions(remain, std::move(next), out);
    }
}

} // namespace

TEST_CASE("the worked rank-3 limit parabolic has 24 members cut out by two entries") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    IdempTuple t = make_idemp_tuple(b, 3, {{diag_idem(f2, 3, {0}), diag_idem(f2, 3, {1, 2})}});
    Cocharacter co = cochar_from_idemps(t);
    REQUIRE(co.exps[0] == std::vector<int>{1, -1});
    int members = 0, levi = 0;
    for (const Matrix& g : all_invertible(f2, 3)) {
        bool in = in_limit_parabolic(co, {g});
        CHECK(in == (s_is_zero(g.at(1, 0)) && s_is_zero(g.at(2, 0))));
        if (in) {
            ++members;
            std::vector<Matrix> lim = limit_of(co, {g});
            CHECK(in_levi(co, lim));
            CHECK(in_limit_parabolic(co, lim));
            // the limit keeps the diagonal blocks and kills the rest
            Matrix expect = m_zero(f2, 3, 3);
            expect.at(0, 0) = g.at(0, 0);
            for (int i = 1; i < 3; ++i)
                for (int j = 1; j < 3; ++j) expect.at(i, j) = g.at(i, j);
            CHECK(lim[0] == expect);
        }
        if (in_levi(co, {g})) {
            ++levi;
            CHECK(in);
        }
    }
    CHECK(members == 24);
    CHECK(levi == 6);
}

TEST_CASE("coordinate tuples give exactly the flag stabilizers") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    std::vector<std::vector<std::vector<int>>> parts;
    ordered_partitions({0, 1, 2}, {}, parts);
    CHECK(parts.size() == 13);
    auto gl3 = all_invertible(f2, 3);
    std::map<size_t, int> expected{{1, 168}, {2, 24}, {3, 8}};
    for (const auto& blocks : parts) {
        std::vector<Matrix> es;
        for (const auto& blk : blocks) es.push_back(diag_idem(f2, 3, blk));
        IdempTuple t = make_idemp_tuple(b, 3, {es});
        Cocharacter co = cochar_from_idemps(t);
        GlobalLoweredFlag ideal = idemp_to_flag(t);
        ParabolicHandle handle{ideal_flag_to_flag(ideal, 3)};
        int members = 0;
        for (const Matrix& g : gl3) {
            bool in = in_limit_parabolic(co, {g});
            CHECK(in == parabolic_member(handle, {g}));
            CHECK(in == stabilizes_ideal_flag({g}, ideal, 3));
            if (in) ++members;
        }
        CHECK(members == expected[blocks.size()]);
    }
}

TEST_CASE("standard parabolics carry the partial-sum flag and complementary type") {
    FieldDesc f2 = field_Fp(2);
    StandardParabolic half = standard_parabolic(f2, make_partition(4, {2, 2}));
    CHECK(half.flag.length() == 1);
    CHECK(half.flag.chain[0].dim() == 2);
    CHECK(half.type == make_type_tuple(3, {1, 3}));
    StandardParabolic whole = standard_parabolic(f2, make_partition(3, {3}));
    CHECK(whole.flag.length() == 0);
    CHECK(whole.type == make_type_tuple(2, {1, 2}));
    CHECK(all_partitions(3).size() == 4);
    CHECK(all_partitions(4).size() == 8);
    CHECK_THROWS_AS(make_partition(3, {2, 2}), InvariantViolation);
    CHECK_THROWS_AS(make_partition(3, {3, 0}), InvariantViolation);

    // pattern membership, stabilizer membership, and the Borel count agree
    BaseSpace b = make_base(f2, {"c0"});
    auto gl3 = all_invertible(f2, 3);
    for (const BlockPartition& bp : all_partitions(3)) {
        StandardParabolic sp = standard_parabolic(f2, bp);
        GlobalLoweredFlag gf = glue_flags(b, {sp.flag});
        ParabolicHandle handle{gf};
        CHECK(type_of_parabolic(handle).tuples[0] == sp.type);
        int count = 0;
        for (const Matrix& g : gl3) {
            bool in = pattern_member(sp, g);
            CHECK(in == stabilizes_sub_flag({g}, gf));
            if (in) ++count;
        }
        if (bp.sizes.size() == 3) CHECK(count == 8);
        if (bp.sizes.size() == 1) CHECK(count == 168);
        if (bp.sizes.size() == 2) CHECK(count == 24);
    }
    CHECK_FALSE(pattern_member(standard_parabolic(f2, make_partition(2, {1, 1})), m_zero(f2, 2, 2)));
}

TEST_CASE("conjugation exponents decide the limit and its value") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    std::mt19937 rng(555);
    auto gl3 = all_invertible(f2, 3);
    for (int it = 0; it < 8; ++it) {
        ComponentFlag cf = random_component_flag(f2, 3, rng);
        IdempTuple t = idemps_from_flag(glue_flags(b, {cf}));
        Cocharacter co = cochar_from_idemps(t);
        const auto& es = t.es[0];
        const auto& a = co.exps[0];
        for (const Matrix& g : gl3) {
            // group the two-sided blocks of g by conjugation exponent
            std::map<int, Matrix> groups;
            for (size_t p = 0; p < es.size(); ++p)
                for (size_t q = 0; q < es.size(); ++q) {
                    Matrix blk = m_mul(m_mul(es[p], g), es[q]);
                    int x = a[p] - a[q];
                    auto it2 = groups.find(x);
                    if (it2 == groups.end())
                        groups.emplace(x, blk);
                    else
                        it2->second = m_add(it2->second, blk);
                }
            // the blocks reassemble the element
            Matrix total = m_zero(f2, 3, 3);
            for (const auto& kv : groups) total = m_add(total, kv.second);
            CHECK(total == g);
            bool neg_clear = true;
            for (const auto& kv : groups)
                if (kv.first < 0 && !m_is_zero(kv.second)) neg_clear = false;
            // membership needs the same condition for the inverse as well
            if (in_limit_parabolic(co, {g})) {
                CHECK(neg_clear);
                CHECK(limit_of(co, {g})[0] == groups.at(0));
            } else if (neg_clear) {
                Matrix inv = m_inverse(g);
                bool inv_clear = true;
                for (size_t p = 0; p < es.size(); ++p)
                    for (size_t q = 0; q < p; ++q)
                        if (!m_is_zero(m_mul(m_mul(es[p], inv), es[q]))) inv_clear = false;
                CHECK_FALSE(inv_clear);
            }
        }
    }
}

TEST_CASE("exponents are computed per component from the truncated lengths") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0", "c1"});
    Matrix p0 = diag_idem(f2, 3, {0}), p1 = diag_idem(f2, 3, {1}), p2 = diag_idem(f2, 3, {2});
    IdempTuple t = make_idemp_tuple(b, 3, {{p0, p1, p2}, {m_identity(f2, 3)}});
    Cocharacter co = cochar_from_idemps(t);
    CHECK(co.exps[0] == std::vector<int>{2, 0, -2});
    CHECK(co.exps[1] == std::vector<int>{0});
    // the second component is the whole group; the first is the Borel
    auto gl3 = all_invertible(f2, 3);
    int members = 0;
    for (const Matrix& g : gl3)
        if (in_limit_parabolic(co, {g, g})) ++members;
    CHECK(members == 8);
}

TEST_CASE("transport by conjugation matches transported membership and flags") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    std::mt19937 rng(808);
    auto gl3 = all_invertible(f2, 3);
    std::uniform_int_distribution<size_t> pick(0, gl3.size() - 1);
    for (int it = 0; it < 6; ++it) {
        ComponentFlag cf = random_component_flag(f2, 3, rng);
        IdempTuple t = idemps_from_flag(glue_flags(b, {cf}));
        Matrix g = gl3[pick(rng)];
        Matrix ginv = m_inverse(g);
        IdempTuple moved = conj_transport({g}, t);
        CHECK(ideal_flag_to_flag(idemp_to_flag(moved), 3) ==
              act_gl({g}, ideal_flag_to_flag(idemp_to_flag(t), 3)));
        Cocharacter co = cochar_from_idemps(t);
        Cocharacter moved_co = cochar_from_idemps(moved);
        for (int trial = 0; trial < 40; ++trial) {
            Matrix x = gl3[pick(rng)];
            CHECK(in_limit_parabolic(moved_co, {x}) ==
                  in_limit_parabolic(co, {m_mul(m_mul(ginv, x), g)}));
        }
    }
}

TEST_CASE("left multiplication stabilizes an ideal flag exactly when the flag is kept") {
    std::mt19937 rng(99);
    for (const FieldDesc& f : {field_Fp(2), field_Fp(3)}) {
        BaseSpace b = make_base(f, {"c0"});
        auto gl = all_invertible(f, 2);
        std::uniform_int_distribution<size_t> pick(0, gl.size() - 1);
        for (int it = 0; it < 10; ++it) {
            ComponentFlag cf = random_component_flag(f, 2, rng);
            GlobalLoweredFlag flag = glue_flags(b, {cf});
            GlobalLoweredFlag ideal = flag_to_ideal_flag(flag);
            for (int trial = 0; trial < 15; ++trial) {
                Matrix g = gl[pick(rng)];
                CHECK(stabilizes_sub_flag({g}, flag) == stabilizes_ideal_flag({g}, ideal, 2));
            }
        }
    }
}

TEST_CASE("the unitary group of the rank-2 extension space has 18 elements") {
    FieldDesc f4 = field_F4();
    DoubleCover fc = make_cover(make_base(field_Fp(2), {"c0"}), {CoverComponent{CoverTag::Field, f4}});
    HermitianSpace hs = make_hermitian(fc, 2);
    std::vector<Matrix> unitary;
    for (const Matrix& u : all_matrices(f4, 2, 2))
        if (m_mul(tau_field(hs, 0, u), u) == m_identity(f4, 2)) unitary.push_back(u);
    CHECK(unitary.size() == 18);
    for (const Matrix& u : unitary) {
        CHECK(is_unitary_field(hs, 0, u));
        // unitary elements commute with the perpendicular
        for (const Subspace& v : all_subspaces(f4, 2))
            CHECK(perp(hs, 0, lsub_field(apply_matrix(v, u))) ==
                  lsub_field(apply_matrix(perp(hs, 0, lsub_field(v)).s0, u)));
    }
    // scalar matrices are unitary (every nonzero element has norm 1 here), a
    // unipotent off-diagonal is not
    CHECK(is_unitary_field(hs, 0, m_scale(s_make(f4, Rat(0), Rat(1)), m_identity(f4, 2))));
    Matrix unip = m_identity(f4, 2);
    unip.at(0, 1) = s_one(f4);
    CHECK_FALSE(is_unitary_field(hs, 0, unip));
}

TEST_CASE("acting on L-flags commutes with the flag involution") {
    std::mt19937 rng(1212);
    FieldDesc f2 = field_Fp(2);

    // split side: arbitrary invertible sheet-0 matrices
    BaseSpace b = make_base(f2, {"c0", "c1"});
    HermitianSpace hs = make_hermitian(split_cover(b), 3);
    auto gl3 = all_invertible(f2, 3);
    std::uniform_int_distribution<size_t> pick(0, gl3.size() - 1);
    for (int it = 0; it < 15; ++it) {
        std::vector<ComponentFlag> parts{random_component_flag(f2, 3, rng),
                                         random_component_flag(f2, 3, rng)};
        LLoweredFlag f = inner_to_outer_flag(hs, glue_flags(b, parts));
        std::vector<Matrix> g{gl3[pick(rng)], gl3[pick(rng)]};
        LLoweredFlag gf = act_unitary(hs, g, f);
        CHECK(pi_h(hs, gf) == act_unitary(hs, g, pi_h(hs, f)));
        std::vector<Matrix> ginv{m_inverse(g[0]), m_inverse(g[1])};
        CHECK(act_unitary(hs, ginv, gf) == f);
        CHECK(stabilizes_l_flag(hs, {m_identity(f2, 3), m_identity(f2, 3)}, f));
    }

    // extension side: the 18 unitary elements act on the five lines
    FieldDesc f4 = field_F4();
    DoubleCover fc = make_cover(make_base(f2, {"c0"}), {CoverComponent{CoverTag::Field, f4}});
    HermitianSpace hf = make_hermitian(fc, 2);
    std::vector<Matrix> unitary;
    for (const Matrix& u : all_matrices(f4, 2, 2))
        if (is_unitary_field(hf, 0, u)) unitary.push_back(u);
    for (const Subspace& v : all_subspaces(f4, 2)) {
        if (v.dim() != 1) continue;
        LLoweredFlag f = make_l_flag(fc, 2, {make_l_component_flag(fc, 0, 2, {lsub_field(v)})});
        for (const Matrix& u : unitary)
            CHECK(pi_h(hf, act_unitary(hf, {u}, f)) == act_unitary(hf, {u}, pi_h(hf, f)));
    }
    Matrix bad = m_identity(f4, 2);
    bad.at(0, 1) = s_one(f4);
    LLoweredFlag line = make_l_flag(
        fc, 2, {make_l_component_flag(fc, 0, 2, {lsub_field(coord_span(f4, 2, {0}))})});
    CHECK_THROWS_AS(act_unitary(hf, {bad}, line), InvariantViolation);
}

TEST_CASE("mirrored outer tuples pair mirrored exponents under tau") {
    FieldDesc f2 = field_Fp(2);
    BaseSpace b = make_base(f2, {"c0"});
    HermitianSpace hs = make_hermitian(split_cover(b), 3);
    std::mt19937 rng(77);
    for (int it = 0; it < 10; ++it) {
        ComponentFlag cf = random_component_flag(f2, 3, rng);
        IdempTuple t = idemps_from_flag(glue_flags(b, {cf}));
        const auto& es = t.es[0];
        const int k = static_cast<int>(es.size());
        std::vector<LIdem> outer;
        for (int i = 0; i < k; ++i)
            outer.push_back(lidem_split(es[static_cast<size_t>(i)],
                                        m_transpose(es[static_cast<size_t>(k - 1 - i)])));
        Cocharacter co = cochar_from_idemps(t);
        for (int i = 0; i < k; ++i) {
            CHECK(tau_idem(hs, 0, outer[static_cast<size_t>(i)]) ==
                  outer[static_cast<size_t>(k - 1 - i)]);
            CHECK(co.exps[0][static_cast<size_t>(i)] ==
                  -co.exps[0][static_cast<size_t>(k - 1 - i)]);
        }
    }
}
