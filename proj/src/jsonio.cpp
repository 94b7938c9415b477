#include "flagforge/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace flagforge {

// ------------------------------------------------------------- json helpers

static const Json& need(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + ": missing key \"" + std::string(key) + "\"");
    return *it;
}

static bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

static long long as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return j.get<long long>();
}

static std::string as_str(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path + ": expected a string");
    return j.get<std::string>();
}

static const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path + ": expected an array");
    return j;
}

static std::string at(const std::string& path, const char* key) { return path + "." + key; }
static std::string at(const std::string& path, size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

static Rat rat_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            return rat_parse(j.get<std::string>());
        } catch (const Error& e) {
            throw SchemaError(path + ": " + e.what());
        }
    }
    throw SchemaError(path + ": expected a rational \"a/b\" string or integer");
}

static Json rat_to_json(const Rat& r) {
    if (r.den == 1) return Json(r.num);
    return Json(rat_str(r));
}

// ------------------------------------------------------- fields and scalars

Json field_to_json(const FieldDesc& f) {
    Json j = Json::object();
    switch (f.kind) {
        case FieldKind::Q:
            j["kind"] = "Q";
            break;
        case FieldKind::Fp:
            j["kind"] = "Fp";
            j["p"] = f.p;
            break;
        case FieldKind::Quad:
            j["kind"] = "Quad";
            if (f.p > 0) j["p"] = f.p;
            j["delta"] = rat_to_json(f.delta);
            break;
    }
    return j;
}

FieldDesc field_from_json(const Json& j, const std::string& path) {
    std::string kind = as_str(need(j, "kind", path), at(path, "kind"));
    if (kind == "Q") return field_Q();
    if (kind == "Fp") return field_Fp(as_int(need(j, "p", path), at(path, "p")));
    if (kind == "Quad") {
        FieldDesc base = has(j, "p") && as_int(j["p"], at(path, "p")) > 0
                             ? field_Fp(as_int(j["p"], at(path, "p")))
                             : field_Q();
        return field_quad(base, rat_from_json(need(j, "delta", path), at(path, "delta")));
    }
    throw SchemaError(at(path, "kind") + ": unknown field kind \"" + kind + "\"");
}

Json scalar_to_json(const Scalar& s) {
    switch (s.field.kind) {
        case FieldKind::Q:
            return rat_to_json(s.a);
        case FieldKind::Fp:
            return Json(s.a.num);
        case FieldKind::Quad: {
            FieldDesc base = base_field_of(s.field);
            Scalar sa{base, s.a, Rat(0)}, sb{base, s.b, Rat(0)};
            return Json::array({scalar_to_json(sa), scalar_to_json(sb)});
        }
    }
    return Json();
}

Scalar scalar_from_json(const FieldDesc& f, const Json& j, const std::string& path) {
    switch (f.kind) {
        case FieldKind::Q:
            return s_make(f, rat_from_json(j, path));
        case FieldKind::Fp:
            if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
            return s_int(f, j.get<long long>());
        case FieldKind::Quad: {
            if (!j.is_array() || j.size() != 2)
                throw SchemaError(path + ": expected a two-element [a, b] array");
            FieldDesc base = base_field_of(f);
            Scalar a = scalar_from_json(base, j[0], at(path, size_t(0)));
            Scalar b = scalar_from_json(base, j[1], at(path, size_t(1)));
            return s_make(f, a.a, b.a);
        }
    }
    throw SchemaError(path + ": unsupported field");
}

// ----------------------------------------------------------------- matrices

Json rows_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix rows_from_json(const FieldDesc& f, const Json& j, const std::string& path,
                      int want_cols) {
    const Json& rows = as_array(j, path);
    int cols = want_cols;
    if (cols < 0) {
        if (rows.empty()) throw SchemaError(path + ": cannot infer row length from no rows");
        cols = static_cast<int>(as_array(rows[0], at(path, size_t(0))).size());
    }
    Matrix m = m_zero(f, static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        const Json& row = as_array(rows[r], at(path, r));
        if (static_cast<int>(row.size()) != cols)
            throw SchemaError(at(path, r) + ": expected " + std::to_string(cols) + " entries");
        for (size_t c = 0; c < row.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) =
                scalar_from_json(f, row[c], at(at(path, r), c));
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json j = Json::object();
    j["field"] = field_to_json(m.field);
    j["entries"] = rows_to_json(m);
    return j;
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
    FieldDesc f = field_from_json(need(j, "field", path), at(path, "field"));
    return rows_from_json(f, need(j, "entries", path), at(path, "entries"));
}

// -------------------------------------------------------------- subspaces

Json subspace_to_json(const Subspace& v) {
    Json j = Json::object();
    j["field"] = field_to_json(v.field);
    j["d"] = v.ambient;
    j["basis"] = rows_to_json(v.basis);
    return j;
}

Subspace subspace_from_json(const Json& j, const std::string& path) {
    FieldDesc f = field_from_json(need(j, "field", path), at(path, "field"));
    long long d = as_int(need(j, "d", path), at(path, "d"));
    if (d < 1) throw SchemaError(at(path, "d") + ": expected a positive ambient dimension");
    return span_rows(rows_from_json(f, need(j, "basis", path), at(path, "basis"),
                                    static_cast<int>(d)));
}

// ----------------------------------------------------------- base and cover

Json base_to_json(const BaseSpace& b) {
    Json j = Json::object();
    j["field"] = field_to_json(b.field);
    j["components"] = b.components;
    return j;
}

BaseSpace base_from_json(const Json& j, const std::string& path) {
    FieldDesc f = field_from_json(need(j, "field", path), at(path, "field"));
    const Json& comps = as_array(need(j, "components", path), at(path, "components"));
    std::vector<std::string> names;
    for (size_t i = 0; i < comps.size(); ++i)
        names.push_back(as_str(comps[i], at(at(path, "components"), i)));
    return make_base(f, std::move(names));
}

Json cover_to_json(const DoubleCover& c) {
    Json j = Json::object();
    j["base"] = base_to_json(c.base);
    Json arr = Json::array();
    for (int i = 0; i < c.base.count(); ++i) {
        Json e = Json::object();
        e["component"] = c.base.components[static_cast<size_t>(i)];
        if (c.comps[static_cast<size_t>(i)].tag == CoverTag::Split) {
            e["tag"] = "split";
        } else {
            e["tag"] = "field";
            e["delta"] = rat_to_json(c.comps[static_cast<size_t>(i)].ext.delta);
        }
        arr.push_back(std::move(e));
    }
    j["cover"] = std::move(arr);
    return j;
}

DoubleCover cover_from_json(const Json& j, const std::string& path) {
    BaseSpace b = base_from_json(need(j, "base", path), at(path, "base"));
    const Json& arr = as_array(need(j, "cover", path), at(path, "cover"));
    if (static_cast<int>(arr.size()) != b.count())
        throw SchemaError(at(path, "cover") + ": expected one entry per component");
    std::vector<CoverComponent> comps;
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string epath = at(at(path, "cover"), i);
        const Json& e = arr[i];
        std::string name = as_str(need(e, "component", epath), at(epath, "component"));
        if (name != b.components[i])
            throw SchemaError(at(epath, "component") + ": expected \"" + b.components[i] +
                              "\" (cover entries follow component order)");
        std::string tag = as_str(need(e, "tag", epath), at(epath, "tag"));
        if (tag == "split") {
            comps.push_back(CoverComponent{CoverTag::Split, {}});
        } else if (tag == "field") {
            Rat delta = rat_from_json(need(e, "delta", epath), at(epath, "delta"));
            comps.push_back(CoverComponent{CoverTag::Field, field_quad(b.field, delta)});
        } else {
            throw SchemaError(at(epath, "tag") + ": expected \"split\" or \"field\"");
        }
    }
    return make_cover(std::move(b), std::move(comps));
}

// ------------------------------------------------------------ flags / types

Json flag_to_json(const GlobalLoweredFlag& f) {
    Json j = Json::object();
    j["base"] = base_to_json(f.base);
    j["d"] = f.comps.empty() ? 0 : f.comps[0].ambient;
    Json arr = Json::array();
    for (int c = 0; c < f.base.count(); ++c) {
        Json e = Json::object();
        e["component"] = f.base.components[static_cast<size_t>(c)];
        Json chain = Json::array();
        for (const Subspace& v : f.comps[static_cast<size_t>(c)].chain)
            chain.push_back(rows_to_json(v.basis));
        e["chain"] = std::move(chain);
        arr.push_back(std::move(e));
    }
    j["flags"] = std::move(arr);
    return j;
}

static std::vector<Subspace> chain_from_json(const FieldDesc& f, int d, const Json& j,
                                             const std::string& path) {
    const Json& arr = as_array(j, path);
    std::vector<Subspace> chain;
    for (size_t i = 0; i < arr.size(); ++i)
        chain.push_back(span_rows(rows_from_json(f, arr[i], at(path, i), d)));
    return chain;
}

GlobalLoweredFlag flag_from_json(const Json& j, const std::string& path) {
    BaseSpace b = base_from_json(need(j, "base", path), at(path, "base"));
    int d = static_cast<int>(as_int(need(j, "d", path), at(path, "d")));
    const Json& arr = as_array(need(j, "flags", path), at(path, "flags"));
    if (static_cast<int>(arr.size()) != b.count())
        throw SchemaError(at(path, "flags") + ": expected one entry per component");
    std::vector<ComponentFlag> comps;
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string epath = at(at(path, "flags"), i);
        const Json& e = arr[i];
        std::string name = as_str(need(e, "component", epath), at(epath, "component"));
        if (name != b.components[i])
            throw SchemaError(at(epath, "component") + ": expected \"" + b.components[i] +
                              "\" (flag entries follow component order)");
        comps.push_back(make_component_flag(
            b.field, d, chain_from_json(b.field, d, need(e, "chain", epath), at(epath, "chain"))));
    }
    return glue_flags(b, std::move(comps));
}

Json raised_flag_to_json(const GlobalRaisedFlag& f) {
    Json j = Json::object();
    j["base"] = base_to_json(f.base);
    j["d"] = f.comps.empty() ? 0 : f.comps[0].ambient;
    j["raised"] = true;
    Json arr = Json::array();
    for (int c = 0; c < f.base.count(); ++c) {
        Json e = Json::object();
        e["component"] = f.base.components[static_cast<size_t>(c)];
        Json chain = Json::array();
        for (const Subspace& v : f.padded_chain(c)) chain.push_back(rows_to_json(v.basis));
        e["chain"] = std::move(chain);
        arr.push_back(std::move(e));
    }
    j["flags"] = std::move(arr);
    return j;
}

Json type_to_json(const TypeSection& t) {
    Json j = Json::object();
    j["base"] = base_to_json(t.base);
    Json arr = Json::array();
    for (int c = 0; c < t.base.count(); ++c) {
        Json e = Json::object();
        e["component"] = t.base.components[static_cast<size_t>(c)];
        e["n"] = t.tuples[static_cast<size_t>(c)].n;
        e["entries"] = t.tuples[static_cast<size_t>(c)].entries;
        arr.push_back(std::move(e));
    }
    j["types"] = std::move(arr);
    return j;
}

// -------------------------------------------------------- ideals and tuples

Json ideal_to_json(const RightIdeal& i) {
    Json j = Json::object();
    j["field"] = field_to_json(i.carrier.field);
    j["d"] = i.d;
    j["side"] = "right";
    j["basis"] = rows_to_json(i.carrier.basis);
    return j;
}

Json left_ideal_to_json(const LeftIdeal& i) {
    Json j = Json::object();
    j["field"] = field_to_json(i.carrier.field);
    j["d"] = i.d;
    j["side"] = "left";
    j["basis"] = rows_to_json(i.carrier.basis);
    return j;
}

RightIdeal ideal_from_json(const Json& j, const std::string& path) {
    FieldDesc f = field_from_json(need(j, "field", path), at(path, "field"));
    int d = static_cast<int>(as_int(need(j, "d", path), at(path, "d")));
    if (d < 1) throw SchemaError(at(path, "d") + ": expected a positive rank");
    if (has(j, "side") && as_str(j["side"], at(path, "side")) != "right")
        throw SchemaError(at(path, "side") + ": expected a right ideal");
    Matrix rows = rows_from_json(f, need(j, "basis", path), at(path, "basis"), d * d);
    return make_right_ideal(d, span_rows(rows));
}

Json idemp_to_json(const IdempTuple& t) {
    Json j = Json::object();
    j["base"] = base_to_json(t.base);
    j["d"] = t.d;
    Json arr = Json::array();
    for (int c = 0; c < t.base.count(); ++c) {
        Json e = Json::object();
        e["component"] = t.base.components[static_cast<size_t>(c)];
        Json es = Json::array();
        for (const Matrix& m : t.es[static_cast<size_t>(c)]) es.push_back(rows_to_json(m));
        e["es"] = std::move(es);
        arr.push_back(std::move(e));
    }
    j["idemps"] = std::move(arr);
    return j;
}

IdempTuple idemp_from_json(const Json& j, const std::string& path) {
    BaseSpace b = base_from_json(need(j, "base", path), at(path, "base"));
    int d = static_cast<int>(as_int(need(j, "d", path), at(path, "d")));
    const Json& arr = as_array(need(j, "idemps", path), at(path, "idemps"));
    if (static_cast<int>(arr.size()) != b.count())
        throw SchemaError(at(path, "idemps") + ": expected one entry per component");
    std::vector<std::vector<Matrix>> es;
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string epath = at(at(path, "idemps"), i);
        const Json& e = arr[i];
        std::string name = as_str(need(e, "component", epath), at(epath, "component"));
        if (name != b.components[i])
            throw SchemaError(at(epath, "component") + ": expected \"" + b.components[i] +
                              "\" (entries follow component order)");
        const Json& list = as_array(need(e, "es", epath), at(epath, "es"));
        std::vector<Matrix> ms;
        for (size_t k = 0; k < list.size(); ++k)
            ms.push_back(rows_from_json(b.field, list[k], at(at(epath, "es"), k), d));
        es.push_back(std::move(ms));
    }
    return make_idemp_tuple(b, d, std::move(es));
}

Json raised_idemp_to_json(const RaisedIdempTuple& t) {
    Json j = Json::object();
    j["base"] = base_to_json(t.base);
    j["d"] = t.d;
    j["raised"] = true;
    Json arr = Json::array();
    for (int c = 0; c < t.base.count(); ++c) {
        Json e = Json::object();
        e["component"] = t.base.components[static_cast<size_t>(c)];
        Json es = Json::array();
        for (const Matrix& m : t.padded(c)) es.push_back(rows_to_json(m));
        e["es"] = std::move(es);
        arr.push_back(std::move(e));
    }
    j["idemps"] = std::move(arr);
    return j;
}

// ----------------------------------------------- hermitian spaces / L-flags

Json hermitian_to_json(const HermitianSpace& hs) {
    Json j = Json::object();
    j["cover"] = cover_to_json(hs.cover);
    j["d"] = hs.d;
    Json gram = Json::array();
    for (int c = 0; c < hs.cover.base.count(); ++c)
        if (hs.cover.comps[static_cast<size_t>(c)].tag == CoverTag::Field)
            gram.push_back(rows_to_json(hs.gram[static_cast<size_t>(c)]));
    j["gram"] = std::move(gram);
    return j;
}

HermitianSpace hermitian_from_json(const Json& j, const std::string& path) {
    DoubleCover cover = cover_from_json(need(j, "cover", path), at(path, "cover"));
    int d = static_cast<int>(as_int(need(j, "d", path), at(path, "d")));
    std::vector<Matrix> gram;
    if (has(j, "gram") && !j["gram"].empty()) {
        const Json& arr = as_array(j["gram"], at(path, "gram"));
        size_t used = 0;
        for (int c = 0; c < cover.base.count(); ++c) {
            if (cover.comps[static_cast<size_t>(c)].tag == CoverTag::Field) {
                if (used >= arr.size())
                    throw SchemaError(at(path, "gram") +
                                      ": expected one matrix per field component");
                gram.push_back(rows_from_json(cover.comps[static_cast<size_t>(c)].ext, arr[used],
                                              at(at(path, "gram"), used), d));
                ++used;
            } else {
                gram.push_back(m_identity(cover.base.field, d));
            }
        }
        if (used != arr.size())
            throw SchemaError(at(path, "gram") + ": expected one matrix per field component");
    }
    return make_hermitian(std::move(cover), d, std::move(gram));
}

Json lsub_to_json(const LSub& v) {
    Json j = Json::object();
    if (v.split) {
        j["sheet0"] = rows_to_json(v.s0.basis);
        j["sheet1"] = rows_to_json(v.s1.basis);
    } else {
        j["ext"] = rows_to_json(v.s0.basis);
    }
    return j;
}

LSub lsub_from_json(const DoubleCover& cover, int comp, int ambient, const Json& j,
                    const std::string& path) {
    if (cover.comps[static_cast<size_t>(comp)].tag == CoverTag::Split) {
        Subspace s0 = span_rows(rows_from_json(cover.base.field, need(j, "sheet0", path),
                                               at(path, "sheet0"), ambient));
        Subspace s1 = span_rows(rows_from_json(cover.base.field, need(j, "sheet1", path),
                                               at(path, "sheet1"), ambient));
        return lsub_split(std::move(s0), std::move(s1));
    }
    const FieldDesc& ext = cover.comps[static_cast<size_t>(comp)].ext;
    return lsub_field(span_rows(rows_from_json(ext, need(j, "ext", path), at(path, "ext"), ambient)));
}

Json lflag_to_json(const HermitianSpace& hs, const LLoweredFlag& f) {
    Json j = hermitian_to_json(hs);
    j["ambient"] = f.ambient;
    Json arr = Json::array();
    for (int c = 0; c < hs.cover.base.count(); ++c) {
        Json e = Json::object();
        e["component"] = hs.cover.base.components[static_cast<size_t>(c)];
        if (hs.cover.comps[static_cast<size_t>(c)].tag == CoverTag::Split) {
            Json c0 = Json::array(), c1 = Json::array();
            for (const LSub& m : f.comps[static_cast<size_t>(c)].chain) {
                c0.push_back(rows_to_json(m.s0.basis));
                c1.push_back(rows_to_json(m.s1.basis));
            }
            e["chain0"] = std::move(c0);
            e["chain1"] = std::move(c1);
        } else {
            Json ch = Json::array();
            for (const LSub& m : f.comps[static_cast<size_t>(c)].chain)
                ch.push_back(rows_to_json(m.s0.basis));
            e["chain"] = std::move(ch);
        }
        arr.push_back(std::move(e));
    }
    j["flags"] = std::move(arr);
    return j;
}

std::pair<HermitianSpace, LLoweredFlag> lflag_from_json(const Json& j, const std::string& path) {
    HermitianSpace hs = hermitian_from_json(j, path);
    int ambient = hs.d;
    if (has(j, "ambient")) ambient = static_cast<int>(as_int(j["ambient"], at(path, "ambient")));
    const Json& arr = as_array(need(j, "flags", path), at(path, "flags"));
    if (static_cast<int>(arr.size()) != hs.cover.base.count())
        throw SchemaError(at(path, "flags") + ": expected one entry per component");
    std::vector<LComponentFlag> comps;
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string epath = at(at(path, "flags"), i);
        const Json& e = arr[i];
        std::string name = as_str(need(e, "component", epath), at(epath, "component"));
        if (name != hs.cover.base.components[i])
            throw SchemaError(at(epath, "component") + ": expected \"" +
                              hs.cover.base.components[i] + "\" (entries follow component order)");
        std::vector<LSub> chain;
        if (hs.cover.comps[i].tag == CoverTag::Split) {
            const Json& c0 = as_array(need(e, "chain0", epath), at(epath, "chain0"));
            const Json& c1 = as_array(need(e, "chain1", epath), at(epath, "chain1"));
            if (c0.size() != c1.size())
                throw SchemaError(at(epath, "chain1") + ": sheet chains differ in length");
            for (size_t k = 0; k < c0.size(); ++k) {
                Subspace s0 = span_rows(rows_from_json(hs.cover.base.field, c0[k],
                                                       at(at(epath, "chain0"), k), ambient));
                Subspace s1 = span_rows(rows_from_json(hs.cover.base.field, c1[k],
                                                       at(at(epath, "chain1"), k), ambient));
                chain.push_back(lsub_split(std::move(s0), std::move(s1)));
            }
        } else {
            const Json& ch = as_array(need(e, "chain", epath), at(epath, "chain"));
            for (size_t k = 0; k < ch.size(); ++k)
                chain.push_back(lsub_field(span_rows(rows_from_json(
                    hs.cover.comps[i].ext, ch[k], at(at(epath, "chain"), k), ambient))));
        }
        comps.push_back(LComponentFlag{ambient, std::move(chain)});
    }
    LLoweredFlag f = make_l_flag(hs.cover, ambient, std::move(comps));
    return {std::move(hs), std::move(f)};
}

Json outer_type_to_json(const OuterTypeSection& t) {
    Json j = Json::object();
    j["cover"] = cover_to_json(t.cover);
    Json arr = Json::array();
    for (int c = 0; c < t.cover.base.count(); ++c) {
        const OuterTypeEntry& e = t.entries[static_cast<size_t>(c)];
        Json o = Json::object();
        o["component"] = t.cover.base.components[static_cast<size_t>(c)];
        o["n"] = e.t0.n;
        if (e.split) {
            o["sheet0"] = e.t0.entries;
            o["sheet1"] = e.t1.entries;
        } else {
            o["ext"] = e.t0.entries;
        }
        arr.push_back(std::move(o));
    }
    j["types"] = std::move(arr);
    return j;
}

// ------------------------------------------------------------ group elements

Json element_to_json(const BaseSpace& b, const std::vector<Matrix>& g) {
    Json j = Json::object();
    j["base"] = base_to_json(b);
    Json arr = Json::array();
    for (const Matrix& m : g) arr.push_back(rows_to_json(m));
    j["elements"] = std::move(arr);
    return j;
}

std::vector<Matrix> element_from_json(const BaseSpace& b, const Json& j,
                                      const std::string& path) {
    const Json& arr = as_array(need(j, "elements", path), at(path, "elements"));
    if (static_cast<int>(arr.size()) != b.count())
        throw SchemaError(at(path, "elements") + ": expected one matrix per component");
    std::vector<Matrix> out;
    for (size_t i = 0; i < arr.size(); ++i) {
        Matrix m = rows_from_json(b.field, arr[i], at(at(path, "elements"), i));
        if (m.rows != m.cols)
            throw SchemaError(at(at(path, "elements"), i) + ": expected a square matrix");
        out.push_back(std::move(m));
    }
    return out;
}

// ----------------------------------------------------------- files and text

std::string dumps(const Json& j) { return j.dump(2) + "\n"; }

Json loads(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(what + ": " + e.what());
    }
}

Json load_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw SchemaError(file + ": cannot read file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return loads(ss.str(), file);
}

void save_file(const std::string& file, const Json& j) {
    std::ofstream out(file);
    if (!out) throw SchemaError(file + ": cannot write file");
    out << dumps(j);
}

} // namespace flagforge
