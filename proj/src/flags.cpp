#include "flagforge/flags.hpp"

#include <algorithm>

namespace flagforge {

ComponentFlag make_component_flag(const FieldDesc& f, int ambient,
                                  std::vector<Subspace> chain) {
    if (ambient <= 0) throw InvariantViolation("component flag needs positive ambient rank");
    int prev = 0;
    for (const auto& v : chain) {
        if (!(v.field == f)) throw FieldMismatch("flag member over the wrong field");
        if (v.ambient != ambient) throw DimensionMismatch("flag member ambient mismatch");
        if (v.dim() <= prev)
            throw InvariantViolation("flag chain dimensions must strictly increase");
        prev = v.dim();
    }
    if (!chain.empty() && chain.back().dim() >= ambient)
        throw InvariantViolation("flag member must be a proper subspace");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!contains(chain[i + 1], chain[i]))
            throw ContainmentError("flag members must be nested");
    return ComponentFlag{ambient, std::move(chain)};
}

ComponentFlag empty_component_flag(const FieldDesc&, int ambient) {
    return ComponentFlag{ambient, {}};
}

int GlobalLoweredFlag::global_length() const {
    int m = 0;
    for (const auto& c : comps) m = std::max(m, c.length());
    return m;
}

std::vector<Subspace> GlobalLoweredFlag::padded_chain(int comp) const {
    const ComponentFlag& c = comps.at(static_cast<size_t>(comp));
    std::vector<Subspace> out = c.chain;
    Subspace full = full_subspace(base.field, c.ambient);
    while (static_cast<int>(out.size()) < global_length()) out.push_back(full);
    return out;
}

int GlobalRaisedFlag::global_length() const {
    int m = 0;
    for (const auto& c : comps) m = std::max(m, c.length());
    return m;
}

std::vector<Subspace> GlobalRaisedFlag::padded_chain(int comp) const {
    const ComponentFlag& c = comps.at(static_cast<size_t>(comp));
    std::vector<Subspace> out(static_cast<size_t>(global_length() - c.length()),
                              zero_subspace(base.field, c.ambient));
    out.insert(out.end(), c.chain.begin(), c.chain.end());
    return out;
}

GlobalLoweredFlag glue_flags(const BaseSpace& base, std::vector<ComponentFlag> comps) {
    if (comps.size() != base.components.size())
        throw DimensionMismatch("one component flag per base component required");
    for (auto& c : comps)
        c = make_component_flag(base.field, c.ambient, c.chain); // re-validate
    return GlobalLoweredFlag{base, std::move(comps)};
}

bool is_lowered(const BaseSpace& base, const std::vector<std::vector<Subspace>>& padded) {
    if (padded.size() != base.components.size()) return false;
    size_t len = padded.empty() ? 0 : padded[0].size();
    for (const auto& chain : padded) {
        if (chain.size() != len) return false;
        for (const auto& v : chain) {
            if (!(v.field == base.field)) return false;
            if (is_zero(v)) return false; // equality with the implicit bottom
        }
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            if (!contains(chain[i + 1], chain[i])) return false;
            if (chain[i] == chain[i + 1] && !is_full(chain[i])) return false;
        }
        // a repeated full space is padding; anything after a full member must
        // be that same full member, which the two checks above already force
    }
    // the last column must be proper somewhere unless the section is empty
    if (len > 0) {
        bool proper_tail = false;
        for (const auto& chain : padded)
            if (!is_full(chain.back())) proper_tail = true;
        if (!proper_tail) return false;
    }
    return true;
}

GlobalLoweredFlag flag_from_padded(const BaseSpace& base, int ambient,
                                   const std::vector<std::vector<Subspace>>& padded) {
    if (!is_lowered(base, padded))
        throw InvariantViolation("padded family is not a lowered flag");
    std::vector<ComponentFlag> comps;
    for (const auto& chain : padded) {
        std::vector<Subspace> proper;
        for (const auto& v : chain) {
            if (v.ambient != ambient) throw DimensionMismatch("padded member ambient mismatch");
            if (!is_full(v)) proper.push_back(v);
        }
        comps.push_back(make_component_flag(base.field, ambient, std::move(proper)));
    }
    return glue_flags(base, std::move(comps));
}

GlobalLoweredFlag restrict_flag(const GlobalLoweredFlag& f, const Restriction& r) {
    Restriction checked = make_restriction(f.base, r.kept);
    std::vector<ComponentFlag> comps;
    for (const auto& name : checked.kept)
        comps.push_back(f.comps[static_cast<size_t>(f.base.index_of(name))]);
    return glue_flags(restrict_base(f.base, checked), std::move(comps));
}

GlobalRaisedFlag raise_flag(const GlobalLoweredFlag& f) {
    return GlobalRaisedFlag{f.base, f.comps};
}

GlobalLoweredFlag lower_flag(const GlobalRaisedFlag& f) {
    return glue_flags(f.base, f.comps);
}

// ------------------------------------------------------------- type tuples

TypeTuple make_type_tuple(int n, std::vector<int> entries) {
    if (n < 0) throw InvariantViolation("type tuple needs n >= 0");
    int prev = 0;
    for (int r : entries) {
        if (r < 1 || r > n) throw InvariantViolation("type entry out of {1..n}");
        if (r <= prev) throw InvariantViolation("type entries must strictly increase");
        prev = r;
    }
    return TypeTuple{n, std::move(entries)};
}

TypeTuple vee(const TypeTuple& t) {
    std::vector<int> out;
    for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it)
        out.push_back(t.n + 1 - *it);
    return make_type_tuple(t.n, std::move(out));
}

TypeTuple comp(const TypeTuple& t) {
    std::vector<int> out;
    size_t k = 0;
    for (int r = 1; r <= t.n; ++r) {
        if (k < t.entries.size() && t.entries[k] == r) {
            ++k;
            continue;
        }
        out.push_back(r);
    }
    return make_type_tuple(t.n, std::move(out));
}

bool type_lt_lex(const TypeTuple& a, const TypeTuple& b) {
    if (a.n != b.n) throw DimensionMismatch("comparing type tuples of different n");
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(),
                                        b.entries.begin(), b.entries.end());
}

std::vector<TypeTuple> all_type_tuples(int n) {
    std::vector<TypeTuple> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> entries;
        for (int r = 1; r <= n; ++r)
            if (mask & (1u << (r - 1))) entries.push_back(r);
        out.push_back(make_type_tuple(n, std::move(entries)));
    }
    return out;
}

bool is_sym_type(const TypeTuple& t) { return t == vee(t); }
bool is_lex_type(const TypeTuple& t) { return type_lt_lex(t, vee(t)); }

TypeSection type_of_flag(const GlobalLoweredFlag& f) {
    std::vector<TypeTuple> tuples;
    for (const auto& c : f.comps) {
        std::vector<int> dims;
        for (const auto& v : c.chain) dims.push_back(v.dim());
        tuples.push_back(make_type_tuple(c.ambient - 1, std::move(dims)));
    }
    return TypeSection{f.base, std::move(tuples)};
}

TypeSection restrict_type(const TypeSection& t, const Restriction& r) {
    Restriction checked = make_restriction(t.base, r.kept);
    std::vector<TypeTuple> tuples;
    for (const auto& name : checked.kept)
        tuples.push_back(t.tuples[static_cast<size_t>(t.base.index_of(name))]);
    return TypeSection{restrict_base(t.base, checked), std::move(tuples)};
}

GlobalLoweredFlag act_gl(const std::vector<Matrix>& g, const GlobalLoweredFlag& f) {
    if (g.size() != f.comps.size())
        throw DimensionMismatch("one matrix per component required");
    std::vector<ComponentFlag> comps;
    for (size_t i = 0; i < g.size(); ++i) {
        const ComponentFlag& c = f.comps[i];
        if (rank(g[i]) != g[i].rows || g[i].rows != c.ambient)
            throw NotInvertible("flag action needs an invertible ambient matrix");
        std::vector<Subspace> chain;
        for (const auto& v : c.chain) chain.push_back(apply_matrix(v, g[i]));
        comps.push_back(make_component_flag(f.base.field, c.ambient, std::move(chain)));
    }
    return glue_flags(f.base, std::move(comps));
}

} // namespace flagforge
