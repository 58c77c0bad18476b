#pragma once

#include <string>

#include "divfam.hpp"
#include "variety.hpp"
#include "verify.hpp"
#include "witness.hpp"

namespace varembed {

// Byte-deterministic JSON (two-space indent, insertion-ordered keys): the
// same object always serializes to the same bytes.

std::string variety_to_json(const VarietyPresentation& v);
// Rebuilds the coordinate context from the coordinate names and reparses the
// equations over it.  Malformed documents raise ParseError.
VarietyPresentation variety_from_json(const std::string& text);

std::string witness_to_json(const EmbeddingWitness& w);
EmbeddingWitness witness_from_json(const std::string& text);

// Exactly {"constants": [...], "H": [...], "P": "..."} with rational
// constants rendered as strings.
std::string divfam_to_json(const DivFamily& fam);

std::string report_to_json(const VerificationReport& r);

}  // namespace varembed
