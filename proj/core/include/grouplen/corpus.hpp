#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplen/group.hpp"

namespace grouplen {

struct GroupSpec {
    std::string name;
    unsigned degree = 0;
    std::vector<std::string> generator_text;  // cycle notation, 1-based
    std::vector<std::string> tags;
    PermutationGroup group;  // parsed and validated
};

// Parses the group-file grammar:
//
//   # comment
//   group <name>
//   degree <n>
//   gen <cycles>        (one or more)
//   tag <word> ...      (zero or more lines, one or more words each)
//   end
//
// Throws parse_error (with line/column) on syntax errors, duplicate names,
// repeated points in a cycle, or generator/degree mismatches.  Tags of the
// form "order:<n>" are re-verified against the computed group order.
std::vector<GroupSpec> parse_corpus(const std::string& text);
std::vector<GroupSpec> load_corpus_file(const std::string& path);

// Renders specs back to the grammar (used by the construct command).
std::string render_group_spec(const std::string& name,
                              const PermutationGroup& group,
                              const std::vector<std::string>& tags);

}  // namespace grouplen
