#include "flagforge/azumaya.hpp"

#include <algorithm>

namespace flagforge {

std::vector<Scalar> flatten(const Matrix& m) {
    if (m.rows != m.cols) throw DimensionMismatch("flatten expects a square matrix");
    return m.e;
}

Matrix unflatten(const FieldDesc& f, int d, const std::vector<Scalar>& row) {
    if (static_cast<int>(row.size()) != d * d)
        throw DimensionMismatch("unflatten: want length d*d");
    Matrix m = m_zero(f, d, d);
    m.e = row;
    for (const auto& v : m.e)
        if (!(v.field == f)) throw FieldMismatch("unflatten entry field");
    return m;
}

Matrix matrix_unit(const FieldDesc& f, int d, int i, int j) {
    Matrix m = m_zero(f, d, d);
    m.at(i, j) = s_one(f);
    return m;
}

namespace {

Matrix basis_matrix(const Subspace& s, int d, int row) {
    std::vector<Scalar> v(static_cast<size_t>(d) * d);
    for (int j = 0; j < d * d; ++j) v[static_cast<size_t>(j)] = s.basis.at(row, j);
    return unflatten(s.field, d, v);
}

bool closed_under(int d, const Subspace& carrier, bool right) {
    if (carrier.ambient != d * d) return false;
    for (int r = 0; r < carrier.dim(); ++r) {
        Matrix m = basis_matrix(carrier, d, r);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Matrix u = matrix_unit(carrier.field, d, i, j);
                Matrix prod = right ? m_mul(m, u) : m_mul(u, m);
                if (!member(carrier, flatten(prod))) return false;
            }
    }
    return true;
}

} // namespace

bool is_right_ideal(int d, const Subspace& carrier) { return closed_under(d, carrier, true); }
bool is_left_ideal(int d, const Subspace& carrier) { return closed_under(d, carrier, false); }

RightIdeal make_right_ideal(int d, Subspace carrier) {
    if (!is_right_ideal(d, carrier))
        throw NotAnIdeal("carrier is not closed under right multiplication");
    if (carrier.dim() % d != 0)
        throw NotAnIdeal("right ideal dimension must be divisible by d");
    return RightIdeal{d, std::move(carrier)};
}

LeftIdeal make_left_ideal(int d, Subspace carrier) {
    if (!is_left_ideal(d, carrier))
        throw NotAnIdeal("carrier is not closed under left multiplication");
    if (carrier.dim() % d != 0)
        throw NotAnIdeal("left ideal dimension must be divisible by d");
    return LeftIdeal{d, std::move(carrier)};
}

RightIdeal ideal_from_submodule(const Subspace& V) {
    int d = V.ambient;
    std::vector<std::vector<Scalar>> gens;
    for (int r = 0; r < V.dim(); ++r)
        for (int col = 0; col < d; ++col) {
            // matrix whose column `col` is the r-th basis vector of V
            Matrix m = m_zero(V.field, d, d);
            for (int i = 0; i < d; ++i) m.at(i, col) = V.basis.at(r, i);
            gens.push_back(flatten(m));
        }
    return make_right_ideal(d, span_vectors(V.field, d * d, gens));
}

Subspace column_space(const Matrix& m) { return span_rows(m_transpose(m)); }

Subspace submodule_from_ideal(const RightIdeal& I) {
    std::vector<std::vector<Scalar>> gens;
    for (int r = 0; r < I.carrier.dim(); ++r) {
        Matrix m = basis_matrix(I.carrier, I.d, r);
        for (int col = 0; col < I.d; ++col) {
            std::vector<Scalar> v;
            for (int i = 0; i < I.d; ++i) v.push_back(m.at(i, col));
            gens.push_back(std::move(v));
        }
    }
    return span_vectors(I.carrier.field, I.d, gens);
}

namespace {

// solve {B : B * M_k = 0 for all k} (left == true) or {C : M_k * C = 0}
Subspace annihilator_system(int d, const Subspace& carrier, bool left) {
    const FieldDesc& f = carrier.field;
    // unknowns: d*d entries of B; constraints: one row per (k, i, j)
    int nc = carrier.dim() * d * d;
    Matrix sys = m_zero(f, nc, d * d);
    int row = 0;
    for (int k = 0; k < carrier.dim(); ++k) {
        Matrix m = basis_matrix(carrier, d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                // left: (B*M)_{ij} = sum_t B_{it} M_{tj}; unknown B_{it} has
                // coefficient M_{tj}. right: (M*C)_{ij} = sum_t M_{it} C_{tj}.
                for (int t = 0; t < d; ++t) {
                    if (left)
                        sys.at(row, i * d + t) = m.at(t, j);
                    else
                        sys.at(row, t * d + j) = m.at(i, t);
                }
                ++row;
            }
    }
    Subspace sol;
    sol.field = f;
    sol.ambient = d * d;
    sol.basis = kernel_basis(sys);
    return sol;
}

} // namespace

LeftIdeal left_annihilator(const RightIdeal& I) {
    return make_left_ideal(I.d, annihilator_system(I.d, I.carrier, true));
}

RightIdeal right_annihilator(const LeftIdeal& L) {
    return make_right_ideal(L.d, annihilator_system(L.d, L.carrier, false));
}

Subspace transpose_carrier(int d, const Subspace& s) {
    if (s.ambient != d * d) throw DimensionMismatch("transpose_carrier ambient");
    std::vector<std::vector<Scalar>> gens;
    for (int r = 0; r < s.dim(); ++r) {
        Matrix m = basis_matrix(s, d, r);
        gens.push_back(flatten(m_transpose(m)));
    }
    return span_vectors(s.field, d * d, gens);
}

RightIdeal op_view(const LeftIdeal& L) {
    return make_right_ideal(L.d, transpose_carrier(L.d, L.carrier));
}

LeftIdeal op_view(const RightIdeal& I) {
    return make_left_ideal(I.d, transpose_carrier(I.d, I.carrier));
}

GlobalLoweredFlag flag_to_ideal_flag(const GlobalLoweredFlag& f) {
    std::vector<ComponentFlag> comps;
    for (const auto& c : f.comps) {
        std::vector<Subspace> chain;
        for (const auto& v : c.chain) chain.push_back(ideal_from_submodule(v).carrier);
        comps.push_back(make_component_flag(f.base.field, c.ambient * c.ambient,
                                            std::move(chain)));
    }
    return glue_flags(f.base, std::move(comps));
}

GlobalLoweredFlag ideal_flag_to_flag(const GlobalLoweredFlag& f, int d) {
    std::vector<ComponentFlag> comps;
    for (const auto& c : f.comps) {
        if (c.ambient != d * d)
            throw DimensionMismatch("ideal flag members must live in the d*d carrier");
        std::vector<Subspace> chain;
        for (const auto& v : c.chain)
            chain.push_back(submodule_from_ideal(make_right_ideal(d, v)));
        comps.push_back(make_component_flag(f.base.field, d, std::move(chain)));
    }
    return glue_flags(f.base, std::move(comps));
}

TypeSection type_of_ideal_flag(const GlobalLoweredFlag& f, int d) {
    std::vector<TypeTuple> tuples;
    for (const auto& c : f.comps) {
        if (c.ambient != d * d)
            throw DimensionMismatch("ideal flag members must live in the d*d carrier");
        std::vector<int> dims;
        for (const auto& v : c.chain) {
            if (v.dim() % d != 0)
                throw InvariantViolation("ideal flag member rank not divisible by d");
            dims.push_back(v.dim() / d);
        }
        tuples.push_back(make_type_tuple(d - 1, std::move(dims)));
    }
    return TypeSection{f.base, std::move(tuples)};
}

// --------------------------------------------------------------- idempotents

int IdempTuple::global_length() const {
    size_t m = 0;
    for (const auto& t : es) m = std::max(m, t.size());
    return static_cast<int>(m);
}

std::vector<Matrix> IdempTuple::padded(int comp) const {
    std::vector<Matrix> out = es.at(static_cast<size_t>(comp));
    while (static_cast<int>(out.size()) < global_length())
        out.push_back(m_zero(base.field, d, d));
    return out;
}

int RaisedIdempTuple::global_length() const {
    size_t m = 0;
    for (const auto& t : es) m = std::max(m, t.size());
    return static_cast<int>(m);
}

std::vector<Matrix> RaisedIdempTuple::padded(int comp) const {
    const auto& t = es.at(static_cast<size_t>(comp));
    std::vector<Matrix> out(static_cast<size_t>(global_length()) - t.size(),
                            m_zero(base.field, d, d));
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

bool validate_idemp(const BaseSpace& base, int d,
                    const std::vector<std::vector<Matrix>>& padded, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (padded.size() != base.components.size())
        return fail("one tuple per base component required");
    size_t len = padded.empty() ? 0 : padded[0].size();
    bool last_nonzero = false;
    for (size_t c = 0; c < padded.size(); ++c) {
        const std::string& name = base.components[c];
        const auto& t = padded[c];
        if (t.size() != len) return fail("component " + name + ": tuple length differs");
        if (t.empty()) return fail("component " + name + ": empty tuple cannot sum to 1");
        Matrix sum_e = m_zero(base.field, d, d);
        for (const auto& e : t) {
            if (!(e.field == base.field) || e.rows != d || e.cols != d)
                return fail("component " + name + ": entry is not a d x d base-field matrix");
            sum_e = m_add(sum_e, e);
        }
        if (!(sum_e == m_identity(base.field, d)))
            return fail("component " + name + ": entries do not sum to 1");
        for (size_t i = 0; i < t.size(); ++i) {
            if (!(m_mul(t[i], t[i]) == t[i]))
                return fail("component " + name + ": e_" + std::to_string(i + 1) +
                            " is not idempotent");
            for (size_t j = 0; j < t.size(); ++j)
                if (i != j && !m_is_zero(m_mul(t[i], t[j])))
                    return fail("component " + name + ": e_" + std::to_string(i + 1) +
                                " and e_" + std::to_string(j + 1) + " are not orthogonal");
        }
        // zeros only in the tail
        bool seen_zero = false;
        for (size_t i = 0; i < t.size(); ++i) {
            if (m_is_zero(t[i])) {
                seen_zero = true;
            } else if (seen_zero) {
                return fail("component " + name + ": zero entry before e_" +
                            std::to_string(i + 1) + " (not lowered)");
            }
        }
        if (!m_is_zero(t.back())) last_nonzero = true;
    }
    if (!last_nonzero) return fail("last entry is zero on every component");
    return true;
}

IdempTuple make_idemp_tuple(const BaseSpace& base, int d,
                            std::vector<std::vector<Matrix>> per_component) {
    // strip trailing zeros, pad to the common length, validate, store truncated
    for (auto& t : per_component)
        while (!t.empty() && m_is_zero(t.back())) t.pop_back();
    size_t len = 0;
    for (const auto& t : per_component) len = std::max(len, t.size());
    std::vector<std::vector<Matrix>> padded = per_component;
    for (auto& t : padded)
        while (t.size() < len) t.push_back(m_zero(base.field, d, d));
    std::string why;
    if (!validate_idemp(base, d, padded, &why)) throw InvariantViolation(why);
    std::vector<std::vector<Matrix>> trunc;
    for (auto& t : padded) {
        while (!t.empty() && m_is_zero(t.back())) t.pop_back();
        trunc.push_back(std::move(t));
    }
    return IdempTuple{base, d, std::move(trunc)};
}

IdempTuple glue_idemps(const BaseSpace& base, int d,
                       std::vector<std::vector<Matrix>> per_component) {
    return make_idemp_tuple(base, d, std::move(per_component));
}

IdempTuple restrict_idemp(const IdempTuple& t, const Restriction& r) {
    Restriction checked = make_restriction(t.base, r.kept);
    std::vector<std::vector<Matrix>> es;
    for (const auto& name : checked.kept)
        es.push_back(t.es[static_cast<size_t>(t.base.index_of(name))]);
    return make_idemp_tuple(restrict_base(t.base, checked), t.d, std::move(es));
}

RaisedIdempTuple rho_idemp(const IdempTuple& t) { return RaisedIdempTuple{t.base, t.d, t.es}; }

IdempTuple rho_idemp_inverse(const RaisedIdempTuple& t) {
    return make_idemp_tuple(t.base, t.d, t.es);
}

GlobalLoweredFlag idemp_to_flag(const IdempTuple& t) {
    std::vector<ComponentFlag> comps;
    for (const auto& tuple : t.es) {
        std::vector<Subspace> chain;
        Matrix partial = m_zero(t.base.field, t.d, t.d);
        for (size_t j = 0; j + 1 < tuple.size(); ++j) {
            partial = m_add(partial, tuple[j]);
            chain.push_back(ideal_from_submodule(column_space(partial)).carrier);
        }
        comps.push_back(make_component_flag(t.base.field, t.d * t.d, std::move(chain)));
    }
    return glue_flags(t.base, std::move(comps));
}

IdempTuple idemps_from_flag(const GlobalLoweredFlag& f) {
    int d = f.comps.empty() ? 0 : f.comps[0].ambient;
    std::vector<std::vector<Matrix>> es;
    for (const auto& c : f.comps) {
        if (c.ambient != d) throw DimensionMismatch("components have different ambient rank");
        // complement chain: W_1 = V_1, W_j between V_{j-1} and V_j, tail to full
        std::vector<Subspace> ws;
        Subspace prev = zero_subspace(f.base.field, d);
        for (const auto& v : c.chain) {
            ws.push_back(complement(prev, v));
            prev = v;
        }
        ws.push_back(complement(prev, full_subspace(f.base.field, d)));
        // coordinates w.r.t. the stacked basis give the projections
        Matrix b = m_zero(f.base.field, 0, d);
        for (const auto& w : ws) b = stack_rows(b, w.basis);
        Matrix bt = m_transpose(b);
        Matrix bt_inv = m_inverse(bt);
        std::vector<Matrix> tuple;
        int offset = 0;
        for (const auto& w : ws) {
            Matrix sel = m_zero(f.base.field, d, d);
            for (int k = 0; k < w.dim(); ++k) sel.at(offset + k, offset + k) = s_one(f.base.field);
            tuple.push_back(m_mul(bt, m_mul(sel, bt_inv)));
            offset += w.dim();
        }
        es.push_back(std::move(tuple));
    }
    return make_idemp_tuple(f.base, d, std::move(es));
}

} // namespace flagforge
