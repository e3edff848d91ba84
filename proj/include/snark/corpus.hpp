#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snark/catalog.hpp"
#include "snark/verify.hpp"

namespace snark {

// Line-oriented design format:
//
//   entry <id>
//   source <tag>                      (optional)
//   graph <NAME>                      (optional; needed only without blocks)
//   host <host grammar>
//   action <id> [fix INF] shift <s> mod <m> on <lo>..<hi> [; shift ...]
//   action <id> identity
//   block <GRAPH> <action-id> t1 ... tv
//   end
//
// `INF` denotes the last host vertex. Throws ParseError with the line number.
std::vector<Decomposition> parse_corpus(std::string_view text, const std::string& origin,
                                        const Catalog& catalog);

std::string render_action(const ActionSpec& a, const Decomposition& d);
std::string render_entry(const Decomposition& d);
std::string render_corpus(const std::vector<Decomposition>& entries);

// Files are parsed as given; directories contribute their *.design files in
// name order.
std::vector<Decomposition> load_corpus(const std::vector<std::string>& paths, const Catalog& catalog);

// The shipped corpus, parsed against the builtin catalog.
const std::vector<Decomposition>& builtin_corpus();

}  // namespace snark
