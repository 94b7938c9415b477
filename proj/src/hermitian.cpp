#include "flagforge/hermitian.hpp"

#include <algorithm>

namespace flagforge {

// ------------------------------------------------------------ L-submodules

static void check_pair(const Subspace& a, const Subspace& b) {
    if (!(a.field == b.field)) throw FieldMismatch("sheet fields differ");
    if (a.ambient != b.ambient) throw DimensionMismatch("sheet ambients differ");
}

LSub lsub_split(Subspace s0, Subspace s1) {
    check_pair(s0, s1);
    return LSub{true, std::move(s0), std::move(s1)};
}

LSub lsub_field(Subspace s0) {
    Subspace pad = zero_subspace(s0.field, s0.ambient);
    return LSub{false, std::move(s0), std::move(pad)};
}

LSub lsub_zero(const DoubleCover& c, int comp, int ambient) {
    if (c.comps[comp].tag == CoverTag::Split) {
        Subspace z = zero_subspace(c.base.field, ambient);
        return lsub_split(z, z);
    }
    return lsub_field(zero_subspace(c.comps[comp].ext, ambient));
}

LSub lsub_full(const DoubleCover& c, int comp, int ambient) {
    if (c.comps[comp].tag == CoverTag::Split) {
        Subspace f = full_subspace(c.base.field, ambient);
        return lsub_split(f, f);
    }
    return lsub_field(full_subspace(c.comps[comp].ext, ambient));
}

bool lsub_is_zero(const LSub& v) {
    return v.split ? (is_zero(v.s0) && is_zero(v.s1)) : is_zero(v.s0);
}

bool lsub_is_full(const LSub& v) {
    return v.split ? (is_full(v.s0) && is_full(v.s1)) : is_full(v.s0);
}

static void check_same_kind(const LSub& v, const LSub& w) {
    if (v.split != w.split) throw FieldMismatch("mixed split/field submodules");
}

bool lsub_contains(const LSub& v, const LSub& w) {
    check_same_kind(v, w);
    if (v.split) return contains(v.s0, w.s0) && contains(v.s1, w.s1);
    return contains(v.s0, w.s0);
}

LSub lsub_sum(const LSub& v, const LSub& w) {
    check_same_kind(v, w);
    if (v.split) return lsub_split(sum(v.s0, w.s0), sum(v.s1, w.s1));
    return lsub_field(sum(v.s0, w.s0));
}

LSub lsub_intersect(const LSub& v, const LSub& w) {
    check_same_kind(v, w);
    if (v.split) return lsub_split(intersect(v.s0, w.s0), intersect(v.s1, w.s1));
    return lsub_field(intersect(v.s0, w.s0));
}

int lsub_rank(const LSub& v) {
    return v.split ? v.s0.dim() + v.s1.dim() : 2 * v.s0.dim();
}

static void check_tag(const DoubleCover& c, int comp, const LSub& v) {
    bool split = c.comps[comp].tag == CoverTag::Split;
    if (v.split != split) throw FieldMismatch("submodule kind does not match cover component");
    const FieldDesc want = split ? c.base.field : c.comps[comp].ext;
    if (!(v.s0.field == want)) throw FieldMismatch("submodule field does not match cover component");
}

int subrank_L(const DoubleCover& c, int comp, const LSub& v) {
    check_tag(c, comp, v);
    return v.split ? std::min(v.s0.dim(), v.s1.dim()) : v.s0.dim();
}

int gap_L(const DoubleCover& c, int comp, const LSub& v, const LSub& w) {
    check_tag(c, comp, v);
    check_tag(c, comp, w);
    if (!lsub_contains(w, v)) throw ContainmentError("gap of non-nested submodules");
    if (v.split) return std::min(w.s0.dim() - v.s0.dim(), w.s1.dim() - v.s1.dim());
    return w.s0.dim() - v.s0.dim();
}

// ------------------------------------------------------- hermitian spaces

HermitianSpace make_hermitian(DoubleCover cover, int d, std::vector<Matrix> gram) {
    if (d < 1) throw DimensionMismatch("module rank must be positive");
    const int n = cover.base.count();
    if (!gram.empty() && static_cast<int>(gram.size()) != n)
        throw DimensionMismatch("one gram matrix per component expected");
    std::vector<Matrix> out;
    for (int i = 0; i < n; ++i) {
        if (cover.comps[i].tag == CoverTag::Split) {
            out.push_back(m_identity(cover.base.field, d)); // canonical hyperbolic pairing
            continue;
        }
        const FieldDesc ext = cover.comps[i].ext;
        Matrix h = gram.empty() ? m_identity(ext, d) : gram[i];
        if (!(h.field == ext) || h.rows != d || h.cols != d)
            throw DimensionMismatch("gram matrix shape/field mismatch");
        if (!(m_conj(m_transpose(h)) == h))
            throw InvariantViolation("gram matrix is not conj-symmetric");
        m_inverse(h); // throws NotInvertible on degenerate pairing
        out.push_back(std::move(h));
    }
    return HermitianSpace{std::move(cover), d, std::move(out)};
}

LScalar h_eval(const HermitianSpace& hs, int comp, const LVec& x, const LVec& y) {
    const int d = hs.d;
    if (hs.cover.comps[comp].tag == CoverTag::Split) {
        if (!x.split || !y.split) throw FieldMismatch("split component expects sheet pairs");
        if (static_cast<int>(x.v0.size()) != d || static_cast<int>(x.v1.size()) != d ||
            static_cast<int>(y.v0.size()) != d || static_cast<int>(y.v1.size()) != d)
            throw DimensionMismatch("vector length mismatch");
        Scalar c0 = s_zero(hs.cover.base.field), c1 = c0;
        for (int t = 0; t < d; ++t) {
            c0 = s_add(c0, s_mul(x.v1[t], y.v0[t]));
            c1 = s_add(c1, s_mul(y.v1[t], x.v0[t]));
        }
        return lscalar_split(c0, c1);
    }
    if (x.split || y.split) throw FieldMismatch("field component expects extension vectors");
    const FieldDesc ext = hs.cover.comps[comp].ext;
    if (static_cast<int>(x.v0.size()) != d || static_cast<int>(y.v0.size()) != d)
        throw DimensionMismatch("vector length mismatch");
    const Matrix& h = hs.gram[comp];
    Scalar acc = s_zero(ext);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            acc = s_add(acc, s_mul(s_mul(s_conj(x.v0[i]), h.at(i, j)), y.v0[j]));
    return lscalar_field(acc);
}

LSub perp(const HermitianSpace& hs, int comp, const LSub& v) {
    check_tag(hs.cover, comp, v);
    if (v.s0.ambient != hs.d) throw DimensionMismatch("perp expects submodules of the module");
    if (v.split) return lsub_split(annihilator(v.s1), annihilator(v.s0));
    if (v.s0.dim() == 0) return lsub_full(hs.cover, comp, hs.d);
    // y is perpendicular iff conj(B) * H * y = 0 for the basis rows B
    Matrix sys = m_mul(m_conj(v.s0.basis), hs.gram[comp]);
    return lsub_field(span_rows(kernel_basis(sys)));
}

Matrix tau_field(const HermitianSpace& hs, int comp, const Matrix& m) {
    if (hs.cover.comps[comp].tag != CoverTag::Field)
        throw FieldMismatch("tau_field expects a field component");
    const Matrix& h = hs.gram[comp];
    return m_mul(m_mul(m_inverse(h), m_conj(m_transpose(m))), h);
}

static Subspace tau_carrier_field(const HermitianSpace& hs, int comp, const Subspace& carrier) {
    const int d = hs.d;
    std::vector<std::vector<Scalar>> rows;
    for (int r = 0; r < carrier.basis.rows; ++r) {
        std::vector<Scalar> row(carrier.basis.e.begin() + r * carrier.basis.cols,
                                carrier.basis.e.begin() + (r + 1) * carrier.basis.cols);
        rows.push_back(flatten(tau_field(hs, comp, unflatten(carrier.field, d, row))));
    }
    return span_vectors(carrier.field, d * d, rows);
}

LSub tau_ann(const HermitianSpace& hs, int comp, const LSub& ideal) {
    check_tag(hs.cover, comp, ideal);
    const int d = hs.d;
    if (ideal.s0.ambient != d * d) throw DimensionMismatch("tau_ann expects ideal carriers");
    if (ideal.split) {
        Subspace a = left_annihilator(make_right_ideal(d, ideal.s0)).carrier;
        Subspace b = left_annihilator(make_right_ideal(d, ideal.s1)).carrier;
        return lsub_split(transpose_carrier(d, b), transpose_carrier(d, a));
    }
    Subspace a = left_annihilator(make_right_ideal(d, ideal.s0)).carrier;
    return lsub_field(tau_carrier_field(hs, comp, a));
}

// --------------------------------------------------------- lowered L-flags

LComponentFlag make_l_component_flag(const DoubleCover& cover, int comp, int ambient,
                                     std::vector<LSub> chain) {
    if (ambient < 1) throw DimensionMismatch("ambient must be positive");
    LSub prev = lsub_zero(cover, comp, ambient);
    for (const LSub& m : chain) {
        check_tag(cover, comp, m);
        if (m.s0.ambient != ambient) throw DimensionMismatch("chain ambient mismatch");
        if (!lsub_contains(m, prev)) throw InvariantViolation("chain members not nested");
        if (gap_L(cover, comp, prev, m) <= 0)
            throw InvariantViolation("chain gap not positive on every sheet");
        prev = m;
    }
    if (gap_L(cover, comp, prev, lsub_full(cover, comp, ambient)) <= 0)
        throw InvariantViolation("chain gap not positive on every sheet");
    return LComponentFlag{ambient, std::move(chain)};
}

int LLoweredFlag::global_length() const {
    int m = 0;
    for (const auto& c : comps) m = std::max(m, c.length());
    return m;
}

std::vector<LSub> LLoweredFlag::padded_chain(int comp) const {
    std::vector<LSub> out = comps[comp].chain;
    const int m = global_length();
    while (static_cast<int>(out.size()) < m) out.push_back(lsub_full(cover, comp, ambient));
    return out;
}

std::vector<LSub> LLoweredFlag::raised_chain(int comp) const {
    const int m = global_length();
    std::vector<LSub> out(m - comps[comp].length(), lsub_zero(cover, comp, ambient));
    out.insert(out.end(), comps[comp].chain.begin(), comps[comp].chain.end());
    return out;
}

LLoweredFlag make_l_flag(const DoubleCover& cover, int ambient,
                         std::vector<LComponentFlag> comps) {
    if (static_cast<int>(comps.size()) != cover.base.count())
        throw DimensionMismatch("one chain per component expected");
    for (int c = 0; c < cover.base.count(); ++c)
        comps[c] = make_l_component_flag(cover, c, ambient, comps[c].chain);
    return LLoweredFlag{cover, ambient, std::move(comps)};
}

LLoweredFlag restrict_l_flag(const LLoweredFlag& f, const Restriction& r) {
    DoubleCover sub = restrict_cover(f.cover, r);
    std::vector<LComponentFlag> comps;
    for (const std::string& name : r.kept)
        comps.push_back(f.comps[f.cover.base.index_of(name)]);
    return make_l_flag(sub, f.ambient, std::move(comps));
}

static void check_space_flag(const HermitianSpace& hs, const LLoweredFlag& f, int ambient) {
    if (!(f.cover == hs.cover)) throw FieldMismatch("flag cover does not match the space");
    if (f.ambient != ambient) throw DimensionMismatch("flag ambient mismatch");
}

static LLoweredFlag reversal_twist(const HermitianSpace& hs, const LLoweredFlag& f,
                                   LSub (*twist)(const HermitianSpace&, int, const LSub&)) {
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        const auto& chain = f.comps[c].chain;
        std::vector<LSub> out;
        for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i)
            out.push_back(twist(hs, c, chain[i]));
        comps.push_back(LComponentFlag{f.ambient, std::move(out)});
    }
    return make_l_flag(hs.cover, f.ambient, std::move(comps));
}

LLoweredFlag pi_h(const HermitianSpace& hs, const LLoweredFlag& f) {
    check_space_flag(hs, f, hs.d);
    return reversal_twist(hs, f, &perp);
}

bool is_symmetric_flag(const HermitianSpace& hs, const LLoweredFlag& f) {
    return pi_h(hs, f) == f;
}

LLoweredFlag pi_B(const HermitianSpace& hs, const LLoweredFlag& f) {
    check_space_flag(hs, f, hs.d * hs.d);
    return reversal_twist(hs, f, &tau_ann);
}

bool is_symmetric_ideal_flag(const HermitianSpace& hs, const LLoweredFlag& f) {
    return pi_B(hs, f) == f;
}

LLoweredFlag inner_to_outer_flag(const HermitianSpace& hs, const GlobalLoweredFlag& f) {
    if (!hs.cover.all_split())
        throw UnsupportedCover("inner/outer correspondence needs a split cover");
    if (!(f.base == hs.cover.base)) throw FieldMismatch("flag base does not match the space");
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < f.base.count(); ++c) {
        const auto& chain = f.comps[c].chain;
        const int k = static_cast<int>(chain.size());
        std::vector<LSub> out;
        for (int i = 0; i < k; ++i)
            out.push_back(lsub_split(chain[i], annihilator(chain[k - 1 - i])));
        comps.push_back(LComponentFlag{hs.d, std::move(out)});
    }
    return make_l_flag(hs.cover, hs.d, std::move(comps));
}

GlobalLoweredFlag outer_to_inner_flag(const HermitianSpace& hs, const LLoweredFlag& f) {
    if (!hs.cover.all_split())
        throw UnsupportedCover("inner/outer correspondence needs a split cover");
    check_space_flag(hs, f, hs.d);
    std::vector<ComponentFlag> comps;
    for (int c = 0; c < f.cover.base.count(); ++c) {
        std::vector<Subspace> chain;
        for (const LSub& m : f.comps[c].chain) chain.push_back(m.s0);
        comps.push_back(make_component_flag(f.cover.base.field, f.ambient, std::move(chain)));
    }
    return glue_flags(f.cover.base, std::move(comps));
}

LLoweredFlag outer_ideal_iso(const HermitianSpace& hs, const LLoweredFlag& f) {
    check_space_flag(hs, f, hs.d);
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        std::vector<LSub> out;
        for (const LSub& m : f.comps[c].chain) {
            if (m.split)
                out.push_back(lsub_split(ideal_from_submodule(m.s0).carrier,
                                         ideal_from_submodule(m.s1).carrier));
            else
                out.push_back(lsub_field(ideal_from_submodule(m.s0).carrier));
        }
        comps.push_back(LComponentFlag{hs.d * hs.d, std::move(out)});
    }
    return make_l_flag(hs.cover, hs.d * hs.d, std::move(comps));
}

LLoweredFlag outer_ideal_iso_inverse(const HermitianSpace& hs, const LLoweredFlag& f) {
    check_space_flag(hs, f, hs.d * hs.d);
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        std::vector<LSub> out;
        for (const LSub& m : f.comps[c].chain) {
            if (m.split)
                out.push_back(lsub_split(submodule_from_ideal(make_right_ideal(hs.d, m.s0)),
                                         submodule_from_ideal(make_right_ideal(hs.d, m.s1))));
            else
                out.push_back(lsub_field(submodule_from_ideal(make_right_ideal(hs.d, m.s0))));
        }
        comps.push_back(LComponentFlag{hs.d, std::move(out)});
    }
    return make_l_flag(hs.cover, hs.d, std::move(comps));
}

// ---------------------------------------------------------------- outer type

OuterTypeSection outer_type(const HermitianSpace& hs, const LLoweredFlag& f, bool ideal_flag) {
    const int scale = ideal_flag ? hs.d : 1;
    check_space_flag(hs, f, ideal_flag ? hs.d * hs.d : hs.d);
    const int n = hs.d - 1;
    std::vector<OuterTypeEntry> entries;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        std::vector<int> d0, d1;
        for (const LSub& m : f.comps[c].chain) {
            if (m.s0.dim() % scale != 0 || m.s1.dim() % scale != 0)
                throw InvariantViolation("member rank not divisible by the module rank");
            d0.push_back(m.s0.dim() / scale);
            if (m.split) d1.push_back(m.s1.dim() / scale);
        }
        bool split = hs.cover.comps[c].tag == CoverTag::Split;
        entries.push_back(OuterTypeEntry{split, make_type_tuple(n, std::move(d0)),
                                         make_type_tuple(n, std::move(d1))});
    }
    return OuterTypeSection{hs.cover, std::move(entries)};
}

LLoweredFlag opposite_iso(const HermitianSpace& hs, const LLoweredFlag& f) {
    check_space_flag(hs, f, hs.d * hs.d);
    const int d = hs.d;
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        const auto& chain = f.comps[c].chain;
        std::vector<LSub> out;
        for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i) {
            const LSub& m = chain[i];
            Subspace a = op_view(left_annihilator(make_right_ideal(d, m.s0))).carrier;
            if (m.split) {
                Subspace b = op_view(left_annihilator(make_right_ideal(d, m.s1))).carrier;
                out.push_back(lsub_split(std::move(a), std::move(b)));
            } else {
                out.push_back(lsub_field(std::move(a)));
            }
        }
        comps.push_back(LComponentFlag{d * d, std::move(out)});
    }
    return make_l_flag(hs.cover, d * d, std::move(comps));
}

static bool is_one_or_n(const TypeTuple& t) {
    if (t.length() != 1) return false;
    return t.entries[0] == 1 || t.entries[0] == t.n;
}

bool sb_fiber_member(const HermitianSpace& hs, const LLoweredFlag& f) {
    if (hs.d < 2) return false;
    check_space_flag(hs, f, hs.d * hs.d);
    for (const auto& c : f.comps)
        if (c.length() != 1) return false;
    if (!is_symmetric_ideal_flag(hs, f)) return false;
    OuterTypeSection t = outer_type(hs, f, true);
    for (const auto& e : t.entries) {
        if (!is_one_or_n(e.t0)) return false;
        if (e.split && !(e.t1 == vee(e.t0))) return false;
    }
    return true;
}

bool sb_fiber_sheet0_one(const HermitianSpace& hs, const LLoweredFlag& f) {
    if (!sb_fiber_member(hs, f)) return false;
    OuterTypeSection t = outer_type(hs, f, true);
    for (const auto& e : t.entries)
        if (e.t0.entries[0] != 1) return false;
    return true;
}

// ------------------------------------------------------ outer direct tuples

static bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool validate_outer_stiefel(const HermitianSpace& hs,
                            const std::vector<std::vector<LSub>>& per_comp,
                            std::string* why) {
    const int n = hs.cover.base.count(), d = hs.d;
    if (static_cast<int>(per_comp.size()) != n)
        return fail(why, "one tuple per component expected");
    int m = per_comp.empty() ? 0 : static_cast<int>(per_comp[0].size());
    for (int c = 0; c < n; ++c) {
        const std::string tag = "component " + hs.cover.base.components[c];
        const auto& tup = per_comp[c];
        if (static_cast<int>(tup.size()) != m)
            return fail(why, tag + ": tuple lengths differ across components");
        for (const LSub& t : tup) {
            try {
                check_tag(hs.cover, c, t);
            } catch (const Error& e) {
                return fail(why, tag + ": " + e.what());
            }
            if (t.s0.ambient != d) return fail(why, tag + ": ambient mismatch");
        }
        // direct sum of all entries is the whole module, sheet by sheet
        int r0 = 0, r1 = 0;
        LSub total = lsub_zero(hs.cover, c, d);
        for (const LSub& t : tup) {
            r0 += t.s0.dim();
            r1 += t.split ? t.s1.dim() : t.s0.dim();
            total = lsub_sum(total, t);
        }
        if (r0 != d || r1 != d || !lsub_is_full(total))
            return fail(why, tag + ": entries do not decompose the module");
        // positive-subrank prefix followed by literal zeros
        int k = 0;
        while (k < m && subrank_L(hs.cover, c, tup[k]) > 0) ++k;
        for (int i = k; i < m; ++i)
            if (!lsub_is_zero(tup[i]))
                return fail(why, tag + ": not lowered at entry " + std::to_string(i + 1));
        // twisted symmetry against the raised tuple
        std::vector<LSub> raised(m - k, lsub_zero(hs.cover, c, d));
        raised.insert(raised.end(), tup.begin(), tup.begin() + k);
        for (int i = 1; i <= m; ++i) {
            LSub s = lsub_zero(hs.cover, c, d);
            for (int j = 1; j <= m; ++j)
                if (j != m + 1 - i) s = lsub_sum(s, raised[j - 1]);
            if (!(perp(hs, c, s) == tup[i - 1]))
                return fail(why, tag + ": symmetry fails at entry " + std::to_string(i));
        }
    }
    return true;
}

LLoweredFlag outer_stiefel_to_flag(const HermitianSpace& hs,
                                   const std::vector<std::vector<LSub>>& per_comp) {
    std::string why;
    if (!validate_outer_stiefel(hs, per_comp, &why)) throw InvariantViolation(why);
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        const auto& tup = per_comp[c];
        int k = 0;
        while (k < static_cast<int>(tup.size()) && !lsub_is_zero(tup[k])) ++k;
        std::vector<LSub> chain;
        LSub acc = lsub_zero(hs.cover, c, hs.d);
        for (int i = 0; i + 1 < k; ++i) {
            acc = lsub_sum(acc, tup[i]);
            chain.push_back(acc);
        }
        comps.push_back(LComponentFlag{hs.d, std::move(chain)});
    }
    return make_l_flag(hs.cover, hs.d, std::move(comps));
}

// ---------------------------------------------------- outer idempotents

LIdem lidem_split(Matrix e0, Matrix e1) {
    if (!(e0.field == e1.field)) throw FieldMismatch("sheet fields differ");
    if (e0.rows != e0.cols || e1.rows != e1.cols || e0.rows != e1.rows)
        throw DimensionMismatch("square sheet matrices expected");
    return LIdem{true, std::move(e0), std::move(e1)};
}

LIdem lidem_field(Matrix e0) {
    if (e0.rows != e0.cols) throw DimensionMismatch("square matrix expected");
    Matrix pad = m_zero(e0.field, e0.rows, e0.cols);
    return LIdem{false, std::move(e0), std::move(pad)};
}

bool lidem_is_zero(const LIdem& e) {
    return e.split ? (m_is_zero(e.e0) && m_is_zero(e.e1)) : m_is_zero(e.e0);
}

LIdem tau_idem(const HermitianSpace& hs, int comp, const LIdem& e) {
    if (hs.cover.comps[comp].tag == CoverTag::Split) {
        if (!e.split) throw FieldMismatch("split component expects sheet pairs");
        return lidem_split(m_transpose(e.e1), m_transpose(e.e0));
    }
    if (e.split) throw FieldMismatch("field component expects extension matrices");
    return lidem_field(tau_field(hs, comp, e.e0));
}

// one sheet of the orthogonal-idempotent axioms
static bool sheet_axioms(const FieldDesc& f, int d, const std::vector<const Matrix*>& es,
                         const std::string& tag, std::string* why) {
    Matrix total = m_zero(f, d, d);
    for (size_t i = 0; i < es.size(); ++i) {
        const Matrix& e = *es[i];
        if (!(e.field == f) || e.rows != d || e.cols != d)
            return fail(why, tag + ": entry shape/field mismatch");
        if (!(m_mul(e, e) == e))
            return fail(why, tag + ": e_" + std::to_string(i + 1) + " is not idempotent");
        total = m_add(total, e);
    }
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j)
            if (i != j && !m_is_zero(m_mul(*es[i], *es[j])))
                return fail(why, tag + ": e_" + std::to_string(i + 1) + " and e_" +
                                     std::to_string(j + 1) + " are not orthogonal");
    if (!(total == m_identity(f, d))) return fail(why, tag + ": entries do not sum to 1");
    return true;
}

bool validate_outer_idemp(const HermitianSpace& hs,
                          const std::vector<std::vector<LIdem>>& per_comp,
                          std::string* why) {
    const int n = hs.cover.base.count(), d = hs.d;
    if (static_cast<int>(per_comp.size()) != n)
        return fail(why, "one tuple per component expected");
    int m = per_comp.empty() ? 0 : static_cast<int>(per_comp[0].size());
    for (int c = 0; c < n; ++c) {
        const std::string tag = "component " + hs.cover.base.components[c];
        const auto& tup = per_comp[c];
        if (static_cast<int>(tup.size()) != m)
            return fail(why, tag + ": tuple lengths differ across components");
        const bool split = hs.cover.comps[c].tag == CoverTag::Split;
        const FieldDesc f = split ? hs.cover.base.field : hs.cover.comps[c].ext;
        std::vector<const Matrix*> sheet0, sheet1;
        for (const LIdem& e : tup) {
            if (e.split != split) return fail(why, tag + ": entry kind mismatch");
            sheet0.push_back(&e.e0);
            if (split) sheet1.push_back(&e.e1);
        }
        if (!sheet_axioms(f, d, sheet0, tag, why)) return false;
        if (split && !sheet_axioms(f, d, sheet1, tag, why)) return false;
        // positive prefix on every sheet, then literal zeros
        int k = 0;
        while (k < m && !m_is_zero(tup[k].e0) && (!split || !m_is_zero(tup[k].e1))) ++k;
        for (int i = k; i < m; ++i)
            if (!lidem_is_zero(tup[i]))
                return fail(why, tag + ": not lowered at entry " + std::to_string(i + 1));
        // twisted symmetry: tau carries entry i to raised entry m+1-i
        std::vector<const LIdem*> raised;
        LIdem zero = split ? lidem_split(m_zero(f, d, d), m_zero(f, d, d))
                           : lidem_field(m_zero(f, d, d));
        for (int i = k; i < m; ++i) raised.push_back(&zero);
        for (int i = 0; i < k; ++i) raised.push_back(&tup[i]);
        for (int i = 1; i <= m; ++i)
            if (!(tau_idem(hs, c, tup[i - 1]) == *raised[m - i]))
                return fail(why, tag + ": symmetry fails at entry " + std::to_string(i));
    }
    return true;
}

std::vector<std::vector<LSub>> outer_idemp_to_stiefel(
    const HermitianSpace& hs, const std::vector<std::vector<LIdem>>& per_comp) {
    std::vector<std::vector<LSub>> out;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        std::vector<LSub> tup;
        for (const LIdem& e : per_comp[c]) {
            if (e.split)
                tup.push_back(lsub_split(column_space(e.e0), column_space(e.e1)));
            else
                tup.push_back(lsub_field(column_space(e.e0)));
        }
        out.push_back(std::move(tup));
    }
    return out;
}

} // namespace flagforge
