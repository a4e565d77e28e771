#pragma once

/*
  Command-line front end: single-element reports, whole-group surveys,
  JSON output, and a per-(type, rank) cache of the enumerated Weyl group.
*/

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schubaut/autreport.h"

namespace schubaut {

struct QueryConfig {
  char type = 'A';
  int rank = 0;
  std::optional<std::vector<int>> word;  // exactly one of word/survey
  bool survey = false;
  bool smooth_only = false;
  bool json = false;
  bool kernel = false;                   // ask for the structural kernel description
  std::vector<std::string> cohomology;   // "b", "g/b", "line:<coords>"
  long long cap = kDefaultCap;
  std::string cache_dir;                 // empty: no cache
};

// Comma-separated 1-based letters; parse failures name the byte position.
std::vector<int> parse_word(const std::string& text);

// Enumerate W, consulting and maintaining the word cache when dir is
// nonempty.  Corrupt cache files are rebuilt silently.
std::vector<WeylElement> enumerate_group_cached(const RootSystem& rs, long long cap,
                                                const std::string& dir);

int run_query(const QueryConfig& cfg, std::ostream& out);

// Parses argv, runs the query, maps errors to exit codes:
// 0 success, 2 invalid input or parse error, 3 resource cap, 4 internal.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubaut
