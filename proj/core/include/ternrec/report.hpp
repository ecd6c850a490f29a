#pragma once

// Serialization of sweep reports and parsing of user case files.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ternrec/verifier.hpp"

namespace ternrec {

/// One JSON object with the fixed field order
/// case, bound, primes_checked, mismatches, flagged_exceptions, verdict.
std::string to_json(const SweepReport& report);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
SweepReport report_from_json(std::string_view text);

std::string csv_header();
std::string to_csv_row(const SweepReport& report);

/// One case per JSON object:
///   {"id", "a1", "a2", "a3", "kind": "u"|"capU"|"sun", "n", "m",
///    "constraint", "exceptions"}
/// or, for congruence-class cases,
///   {"id", "a1": 0, "a2", "a3", "kind": "residue", "modulus", "residues",
///    "exceptions"}
TheoremCase parse_case(std::string_view json_line);

/// Parses every non-blank line that does not start with '#'.
std::vector<TheoremCase> read_case_file(std::istream& in);

}  // namespace ternrec
