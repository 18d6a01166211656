#pragma once

#include <string>

#include <json.hpp>

#include "slopekit/covers.hpp"
#include "slopekit/density.hpp"
#include "slopekit/group.hpp"
#include "slopekit/jumping_loci.hpp"
#include "slopekit/surface.hpp"

namespace slopekit {

using Json = nlohmann::ordered_json;

/// Reads a presentation in either text or JSON form.
///
/// Text form, one item per line:
///
///     generators: a b
///     relator: a b A B
///
/// Generator names are lower-case identifiers; a token equal to a name in
/// upper case is its inverse. Blank lines and '#' comments are ignored.
/// JSON form: {"generators": ["a", "b"], "relators": [["a", "b", "A", "B"]]}
/// (relators may also be whitespace-separated strings).
///
/// Errors carry kind "parse" and the offending line number.
GroupPresentation parse_presentation(const std::string& source);

std::string format_presentation(const GroupPresentation& p);
Json presentation_to_json(const GroupPresentation& p);

Json report_to_json(const JumpingLocusReport& report);
JumpingLocusReport report_from_json(const Json& j);

Json epimorphism_to_json(const AbelianEpimorphism& alpha);
AbelianEpimorphism epimorphism_from_json(const Json& j);

Json invariants_to_json(const SurfaceInvariants& x);
SurfaceInvariants invariants_from_json(const Json& j);

Json certificate_to_json(const DensityCertificate& cert);

} // namespace slopekit
