#pragma once

#include <iosfwd>
#include <string>

#include "poprank/types.hpp"

namespace poprank {

/// Instance file format:
///   - optional comment lines starting with '#'
///   - header line "n m"
///   - n lines of m space-separated candidate ids (a permutation of 1..m),
///     most preferred first
/// Parse errors carry line numbers. parse(serialize(inst)) == inst.
VotingInstance parse_instance(std::istream& in);
VotingInstance parse_instance_text(const std::string& text);
VotingInstance load_instance(const std::string& path);

std::string serialize_instance(const VotingInstance& inst);
void save_instance(const VotingInstance& inst, const std::string& path);

/// Parses a ranking argument. Accepts both the bracketed notation
/// "[1,2,3],[4,5,6]" (brackets are cosmetic) and flat comma lists "1,2,3".
Ranking parse_ranking_arg(const std::string& text);

}  // namespace poprank
