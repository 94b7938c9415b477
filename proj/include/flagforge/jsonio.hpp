#pragma once
#include <json.hpp>

#include "groups.hpp"

// JSON encodings. Scalars: rationals are reduced "a/b" strings, prime-field
// elements are plain integers, quadratic-extension elements are [a, b] pairs
// of base encodings. Matrices and basis rows are row-major nested arrays; the
// governing field travels in an explicit descriptor object. Parsers throw
// SchemaError with a path like "$.flags[0].chain[2]" naming the bad node.

namespace flagforge {

using Json = nlohmann::ordered_json;

// scalars and fields
Json field_to_json(const FieldDesc&);
FieldDesc field_from_json(const Json&, const std::string& path = "$");
Json scalar_to_json(const Scalar&);
Scalar scalar_from_json(const FieldDesc&, const Json&, const std::string& path = "$");

// matrices: standalone docs carry the field, embedded entries take it from context
Json matrix_to_json(const Matrix&); // {"field":…, "entries":[[…]]}
Matrix matrix_from_json(const Json&, const std::string& path = "$");
Json rows_to_json(const Matrix&);
Matrix rows_from_json(const FieldDesc&, const Json&, const std::string& path,
                      int want_cols = -1);

// standalone subspace docs: {"field":…, "d":…, "basis":[[…]]}
Json subspace_to_json(const Subspace&);
Subspace subspace_from_json(const Json&, const std::string& path = "$");

// base and cover
Json base_to_json(const BaseSpace&);
BaseSpace base_from_json(const Json&, const std::string& path = "$");
Json cover_to_json(const DoubleCover&); // {"base":…, "cover":[…]}
DoubleCover cover_from_json(const Json&, const std::string& path = "$");

// flags and types over the base
Json flag_to_json(const GlobalLoweredFlag&); // {"base":…, "d":…, "flags":[…]}
GlobalLoweredFlag flag_from_json(const Json&, const std::string& path = "$");
Json raised_flag_to_json(const GlobalRaisedFlag&); // adds "raised": true
Json type_to_json(const TypeSection&);

// ideals and idempotent tuples
Json ideal_to_json(const RightIdeal&); // {"field":…, "d":…, "basis":[…]}
RightIdeal ideal_from_json(const Json&, const std::string& path = "$");
Json left_ideal_to_json(const LeftIdeal&); // same shape, "side": "left"
Json idemp_to_json(const IdempTuple&); // {"base":…, "d":…, "idemps":[…]}
IdempTuple idemp_from_json(const Json&, const std::string& path = "$");
Json raised_idemp_to_json(const RaisedIdempTuple&);

// hermitian spaces, L-submodules, L-flags, outer types
Json hermitian_to_json(const HermitianSpace&); // {"cover":…, "d":…, "gram":[…]}
HermitianSpace hermitian_from_json(const Json&, const std::string& path = "$");
Json lsub_to_json(const LSub&); // {"sheet0":…, "sheet1":…} or {"ext":…}
LSub lsub_from_json(const DoubleCover&, int comp, int ambient, const Json&,
                    const std::string& path = "$");
Json lflag_to_json(const HermitianSpace&, const LLoweredFlag&);
// reads the space (cover + d + gram) and the flag from one document
std::pair<HermitianSpace, LLoweredFlag> lflag_from_json(const Json&,
                                                        const std::string& path = "$");
Json outer_type_to_json(const OuterTypeSection&);

// group elements over a base: one square matrix per component
Json element_to_json(const BaseSpace&, const std::vector<Matrix>&);
std::vector<Matrix> element_from_json(const BaseSpace&, const Json&,
                                      const std::string& path = "$");

// files and text
std::string dumps(const Json&); // canonical: 2-space indent, trailing newline
Json loads(const std::string& text, const std::string& what = "input");
Json load_file(const std::string& file);
void save_file(const std::string& file, const Json&);

} // namespace flagforge
