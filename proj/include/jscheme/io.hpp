#pragma once

#include <iosfwd>
#include <string>

#include "jscheme/closure.hpp"
#include "jscheme/construct.hpp"
#include "jscheme/rainbow.hpp"
#include "jscheme/verify.hpp"

namespace jscheme {

// All writers emit a fixed key order, LF endings and no timestamps, so
// identical inputs always serialize byte-identically.

/// {"order": n, "rank": r, "colors": [[...],...]}
void write_rainbow_json(std::ostream& os, const Rainbow& x);
std::string rainbow_json(const Rainbow& x);

/// First line "n r", then n rows of n space-separated color ids.
void write_rainbow_text(std::ostream& os, const Rainbow& x);

/// Parses either format (sniffs a leading '{'). Non-canonical colorings are
/// renumbered with a warning on `warn`; invalid inputs raise NotARainbow or
/// ParseError.
Rainbow read_rainbow(std::istream& is, std::ostream& warn);
Rainbow read_rainbow_file(const std::string& path, std::ostream& warn);

void write_rainbow_file(const std::string& path, const Rainbow& x);  // .txt -> text, else JSON

/// Header "doubled=true|false", then one line "F C D value" per entry in
/// lexicographic order.
void write_tensor(std::ostream& os, const IntersectionTensor& t);

void write_closure_report(std::ostream& os, const ClosureReport& rep);
void write_properness_report(std::ostream& os, const PropernessReport& rep);
void write_structure_report(std::ostream& os, const Rainbow& x, const StructureReport& rep);

WfdfSpec read_wfdf_spec(std::istream& is);
void write_wfdf_spec(std::ostream& os, const WfdfSpec& spec);
CoverSpec read_cover_spec(std::istream& is);

}  // namespace jscheme
