#pragma once

#include <string>

#include "eqbase/derivation.hpp"
#include "eqbase/rees.hpp"

namespace eqbase {

// Monoid persistence: {"generator_words": [...], "max_len": N,
// "factors": [...]} with words in the text format.  The factor list is
// optional on load and revalidated against the generators when present.
std::string monoid_to_json(const ReesMonoid& m, bool include_factors);
ReesMonoid monoid_from_json(const std::string& text);
void save_monoid(const ReesMonoid& m, const std::string& path, bool include_factors);
ReesMonoid load_monoid(const std::string& path);

// Trace persistence mirrors the DerivationStep fields bit-exactly.
std::string trace_to_json(const DerivationTrace& t);
DerivationTrace trace_from_json(const std::string& text);
void save_trace(const DerivationTrace& t, const std::string& path);
DerivationTrace load_trace(const std::string& path);

}  // namespace eqbase
