#ifndef FILIPPOV_IO_HPP
#define FILIPPOV_IO_HPP

#include "filippov/contraction.hpp"
#include "filippov/structure_analysis.hpp"

#include <json.hpp>

#include <string>

namespace filippov {

using Json = nlohmann::ordered_json;

Json to_json(const NLieAlgebra& alg);
Json to_json(const LieAlgebra& lie);
Json to_json(const InducedLie& il);
Json to_json(const Splitting& s);
Json to_json(const Grading& g);
Json to_json(const StructureReport& r);
Json to_json(const Subspace& s);
Json to_json(const Matrix& m);

/// Any algebra file; extra fields (as in induced files) are ignored.
NLieAlgebra nlie_from_json(const Json& j);
/// Requires arity 2.
LieAlgebra lie_from_json(const Json& j);
/// Needs basis_words, source_arity and source_dim; ad_map is not stored and
/// stays empty.
InducedLie induced_from_json(const Json& j);
Splitting splitting_from_json(const Json& j);
Grading grading_from_json(const Json& j);
StructureReport report_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// Throws ParseError on unreadable or malformed files.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace filippov

#endif
