#include "flagforge/groups.hpp"

#include <numeric>

namespace flagforge {

// ------------------------------------------------------------- stabilizers

static void check_element(const std::vector<Matrix>& g, const BaseSpace& b, int d) {
    if (static_cast<int>(g.size()) != b.count())
        throw DimensionMismatch("one matrix per component expected");
    for (const Matrix& m : g) {
        if (m.rows != d || m.cols != d) throw DimensionMismatch("element shape mismatch");
        m_inverse(m); // throws NotInvertible outside the group
    }
}

bool stabilizes_sub_flag(const std::vector<Matrix>& g, const GlobalLoweredFlag& f) {
    check_element(g, f.base, f.comps.empty() ? 0 : f.comps[0].ambient);
    for (int c = 0; c < f.base.count(); ++c)
        for (const Subspace& v : f.comps[c].chain)
            if (!(apply_matrix(v, g[c]) == v)) return false;
    return true;
}

static Subspace left_mul_carrier(const Matrix& g, const Subspace& carrier, int d) {
    std::vector<std::vector<Scalar>> rows;
    for (int r = 0; r < carrier.basis.rows; ++r) {
        std::vector<Scalar> row(carrier.basis.e.begin() + r * carrier.basis.cols,
                                carrier.basis.e.begin() + (r + 1) * carrier.basis.cols);
        rows.push_back(flatten(m_mul(g, unflatten(carrier.field, d, row))));
    }
    return span_vectors(carrier.field, d * d, rows);
}

bool stabilizes_ideal_flag(const std::vector<Matrix>& g, const GlobalLoweredFlag& f, int d) {
    check_element(g, f.base, d);
    for (int c = 0; c < f.base.count(); ++c)
        for (const Subspace& v : f.comps[c].chain) {
            if (v.ambient != d * d) throw DimensionMismatch("ideal carrier ambient mismatch");
            if (!(left_mul_carrier(g[c], v, d) == v)) return false;
        }
    return true;
}

bool parabolic_member(const ParabolicHandle& p, const std::vector<Matrix>& g) {
    return stabilizes_sub_flag(g, p.flag);
}

TypeSection type_of_parabolic(const ParabolicHandle& p) {
    TypeSection t = type_of_flag(p.flag);
    for (TypeTuple& tuple : t.tuples) tuple = comp(tuple);
    return t;
}

// ------------------------------------------------------ standard parabolics

BlockPartition make_partition(int d, std::vector<int> sizes) {
    if (d < 1) throw DimensionMismatch("rank must be positive");
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw InvariantViolation("block sizes must be positive");
        total += s;
    }
    if (total != d) throw InvariantViolation("block sizes must sum to the rank");
    return BlockPartition{d, std::move(sizes)};
}

std::vector<BlockPartition> all_partitions(int d) {
    std::vector<BlockPartition> out;
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::vector<int> sizes;
        int run = 1;
        for (int i = 0; i < d - 1; ++i) {
            if (mask & (1u << i)) {
                sizes.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        sizes.push_back(run);
        out.push_back(make_partition(d, std::move(sizes)));
    }
    return out;
}

StandardParabolic standard_parabolic(const FieldDesc& f, const BlockPartition& bp) {
    const int d = bp.d;
    std::vector<int> block_of(static_cast<size_t>(d));
    std::vector<int> sums;
    int at = 0;
    for (size_t b = 0; b < bp.sizes.size(); ++b) {
        for (int i = 0; i < bp.sizes[b]; ++i) block_of[static_cast<size_t>(at + i)] = static_cast<int>(b);
        at += bp.sizes[b];
        if (at < d) sums.push_back(at);
    }
    std::vector<Subspace> chain;
    for (int s : sums) {
        Matrix rows = m_zero(f, s, d);
        for (int i = 0; i < s; ++i) rows.at(i, i) = s_one(f);
        chain.push_back(span_rows(rows));
    }
    std::vector<std::vector<bool>> pattern(static_cast<size_t>(d),
                                           std::vector<bool>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            pattern[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                block_of[static_cast<size_t>(i)] <= block_of[static_cast<size_t>(j)];
    TypeTuple type = comp(make_type_tuple(d - 1, sums));
    return StandardParabolic{bp, make_component_flag(f, d, std::move(chain)), std::move(pattern),
                             std::move(type)};
}

bool pattern_member(const StandardParabolic& sp, const Matrix& g) {
    const int d = sp.blocks.d;
    if (g.rows != d || g.cols != d) throw DimensionMismatch("element shape mismatch");
    try {
        m_inverse(g);
    } catch (const NotInvertible&) {
        return false;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!sp.pattern[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                !s_is_zero(g.at(i, j)))
                return false;
    return true;
}

// ------------------------------------------------- cocharacters from tuples

Cocharacter cochar_from_idemps(const IdempTuple& t) {
    std::vector<std::vector<int>> exps;
    for (const auto& es : t.es) {
        const int k = static_cast<int>(es.size());
        std::vector<int> a;
        for (int i = 1; i <= k; ++i) a.push_back(k + 1 - 2 * i);
        exps.push_back(std::move(a));
    }
    return Cocharacter{t.base, t.d, t.es, std::move(exps)};
}

bool in_limit_parabolic(const Cocharacter& co, const std::vector<Matrix>& g) {
    if (static_cast<int>(g.size()) != co.base.count())
        throw DimensionMismatch("one matrix per component expected");
    for (int c = 0; c < co.base.count(); ++c) {
        Matrix inv = g[c];
        try {
            inv = m_inverse(g[c]);
        } catch (const NotInvertible&) {
            return false;
        }
        const auto& es = co.es[static_cast<size_t>(c)];
        for (size_t p = 0; p < es.size(); ++p)
            for (size_t q = 0; q < p; ++q) {
                if (!m_is_zero(m_mul(m_mul(es[p], g[c]), es[q]))) return false;
                if (!m_is_zero(m_mul(m_mul(es[p], inv), es[q]))) return false;
            }
    }
    return true;
}

bool in_levi(const Cocharacter& co, const std::vector<Matrix>& g) {
    if (static_cast<int>(g.size()) != co.base.count())
        throw DimensionMismatch("one matrix per component expected");
    for (int c = 0; c < co.base.count(); ++c) {
        try {
            m_inverse(g[c]);
        } catch (const NotInvertible&) {
            return false;
        }
        for (const Matrix& e : co.es[static_cast<size_t>(c)])
            if (!(m_mul(e, g[c]) == m_mul(g[c], e))) return false;
    }
    return true;
}

std::vector<Matrix> limit_of(const Cocharacter& co, const std::vector<Matrix>& g) {
    if (!in_limit_parabolic(co, g))
        throw InvariantViolation("limit exists only on the limit parabolic");
    std::vector<Matrix> out;
    for (int c = 0; c < co.base.count(); ++c) {
        Matrix acc = m_zero(g[c].field, co.d, co.d);
        for (const Matrix& e : co.es[static_cast<size_t>(c)])
            acc = m_add(acc, m_mul(m_mul(e, g[c]), e));
        out.push_back(std::move(acc));
    }
    return out;
}

IdempTuple conj_transport(const std::vector<Matrix>& g, const IdempTuple& t) {
    check_element(g, t.base, t.d);
    std::vector<std::vector<Matrix>> moved;
    for (int c = 0; c < t.base.count(); ++c) {
        Matrix inv = m_inverse(g[c]);
        std::vector<Matrix> row;
        for (const Matrix& e : t.es[static_cast<size_t>(c)])
            row.push_back(m_mul(m_mul(g[c], e), inv));
        moved.push_back(std::move(row));
    }
    return make_idemp_tuple(t.base, t.d, std::move(moved));
}

// --------------------------------------------------------- unitary elements

bool is_unitary_field(const HermitianSpace& hs, int comp, const Matrix& u) {
    if (u.rows != hs.d || u.cols != hs.d) throw DimensionMismatch("element shape mismatch");
    return m_mul(tau_field(hs, comp, u), u) == m_identity(u.field, hs.d);
}

Matrix sheet1_action(const Matrix& a) { return m_transpose(m_inverse(a)); }

LLoweredFlag act_unitary(const HermitianSpace& hs, const std::vector<Matrix>& g,
                         const LLoweredFlag& f) {
    if (!(f.cover == hs.cover)) throw FieldMismatch("flag cover does not match the space");
    if (f.ambient != hs.d) throw DimensionMismatch("flag ambient mismatch");
    if (static_cast<int>(g.size()) != hs.cover.base.count())
        throw DimensionMismatch("one matrix per component expected");
    std::vector<LComponentFlag> comps;
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        std::vector<LSub> chain;
        if (hs.cover.comps[c].tag == CoverTag::Split) {
            Matrix other = sheet1_action(g[c]);
            for (const LSub& m : f.comps[c].chain)
                chain.push_back(lsub_split(apply_matrix(m.s0, g[c]), apply_matrix(m.s1, other)));
        } else {
            if (!is_unitary_field(hs, c, g[c]))
                throw InvariantViolation("element is not unitary for the pairing");
            for (const LSub& m : f.comps[c].chain)
                chain.push_back(lsub_field(apply_matrix(m.s0, g[c])));
        }
        comps.push_back(LComponentFlag{f.ambient, std::move(chain)});
    }
    return make_l_flag(hs.cover, f.ambient, std::move(comps));
}

bool stabilizes_l_flag(const HermitianSpace& hs, const std::vector<Matrix>& g,
                       const LLoweredFlag& f) {
    return act_unitary(hs, g, f) == f;
}

} // namespace flagforge
