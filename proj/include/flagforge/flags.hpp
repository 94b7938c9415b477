#pragma once
#include "base.hpp"

// Lowered flags over a finite-component base: per component a strictly
// increasing chain of proper nonzero subspaces (the truncated form), with the
// global section realized by padding every component's chain with the full
// space up to the maximal length. The raised form pads with zeros in front
// instead. Type tuples record member dimensions and carry the two standard
// involutions (reversal-complement "vee" and set complement).

namespace flagforge {

struct ComponentFlag {
    int ambient = 0;
    std::vector<Subspace> chain; // strictly increasing, nonzero, proper
    int length() const { return static_cast<int>(chain.size()); }
    friend bool operator==(const ComponentFlag&, const ComponentFlag&) = default;
};

ComponentFlag make_component_flag(const FieldDesc&, int ambient, std::vector<Subspace>);
ComponentFlag empty_component_flag(const FieldDesc&, int ambient);

struct GlobalLoweredFlag {
    BaseSpace base;
    std::vector<ComponentFlag> comps; // parallel to base.components
    int global_length() const;
    // chain padded with full spaces at the tail to global_length
    std::vector<Subspace> padded_chain(int comp) const;
    friend bool operator==(const GlobalLoweredFlag&, const GlobalLoweredFlag&) = default;
};

struct GlobalRaisedFlag {
    BaseSpace base;
    std::vector<ComponentFlag> comps;
    int global_length() const;
    // chain padded with zero spaces at the front to global_length
    std::vector<Subspace> padded_chain(int comp) const;
    friend bool operator==(const GlobalRaisedFlag&, const GlobalRaisedFlag&) = default;
};

// gluing per-component flags is exactly assembling a global section
GlobalLoweredFlag glue_flags(const BaseSpace&, std::vector<ComponentFlag>);

// a padded family of chains is a lowered flag iff on every component it is a
// weakly increasing chain whose repeats happen only at the full space, with
// no zero members (equality with the implicit bottom 0 is a violation)
bool is_lowered(const BaseSpace&, const std::vector<std::vector<Subspace>>& padded);

// parse a padded family back into the truncated representation
GlobalLoweredFlag flag_from_padded(const BaseSpace&, int ambient,
                                   const std::vector<std::vector<Subspace>>& padded);

GlobalLoweredFlag restrict_flag(const GlobalLoweredFlag&, const Restriction&);

// the raising staircase: slide each component's proper chain to the top,
// zeros below; mutually inverse with lower_flag; fixes constant-length flags
GlobalRaisedFlag raise_flag(const GlobalLoweredFlag&);
GlobalLoweredFlag lower_flag(const GlobalRaisedFlag&);

// ------------------------------------------------------------- type tuples

struct TypeTuple {
    int n = 0;                // entries live in {1..n}
    std::vector<int> entries; // strictly increasing
    int length() const { return static_cast<int>(entries.size()); }
    friend bool operator==(const TypeTuple&, const TypeTuple&) = default;
};

TypeTuple make_type_tuple(int n, std::vector<int> entries);
TypeTuple vee(const TypeTuple&);  // r |-> (n+1 - r_l, ..., n+1 - r_1)
TypeTuple comp(const TypeTuple&); // set complement in {1..n}
bool type_lt_lex(const TypeTuple&, const TypeTuple&);
std::vector<TypeTuple> all_type_tuples(int n);
bool is_sym_type(const TypeTuple& t); // t == vee(t)
bool is_lex_type(const TypeTuple& t); // t <lex vee(t)

struct TypeSection {
    BaseSpace base;
    std::vector<TypeTuple> tuples;
    friend bool operator==(const TypeSection&, const TypeSection&) = default;
};

TypeSection type_of_flag(const GlobalLoweredFlag&); // per-component member dims
TypeSection restrict_type(const TypeSection&, const Restriction&);

// per-component change of basis x |-> g x on every member (g invertible)
GlobalLoweredFlag act_gl(const std::vector<Matrix>& g, const GlobalLoweredFlag&);

} // namespace flagforge
