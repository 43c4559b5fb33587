// Machine-checked verification of the published tables: fixture files
// under data/ hold the printed table cells verbatim, the verifiers
// recompute every cell from first principles and compare numerically at
// deterministic sample points. Cells marked `suspect` in a fixture are
// the printed values whose recomputation disagrees; the verifier reports
// those as confirmed discrepancies (with the recomputed value) and treats
// any drift from the marked set — a new mismatch or a suspect cell that
// suddenly matches — as a failure.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieb/poisson.hpp"

namespace lieb {

// --- fixture files --------------------------------------------------------

struct FixtureCell {
  std::string key;                 // "L1".."R3" (frames) or "p12", "S23", ...
  std::vector<std::string> exprs;  // '|'-separated expression strings
  bool suspect = false;            // printed value known to disagree
};

struct FixtureBlock {
  std::string entry;    // "(VI0,V.ii)" — empty in per-algebra fixtures
  std::string algebra;  // model_algebra() name
  std::string r;        // r-matrix family — empty in per-algebra fixtures
  std::vector<FixtureCell> cells;
  std::map<std::string, const FixtureCell*> by_key() const;
};

// Parses a '#'-commented, blank-line-separated fixture file. Each block
// holds optional `entry`, `algebra` and `r` header lines followed by
// `KEY: expr [| expr ...] [suspect]` cell lines. Throws on malformed input.
std::vector<FixtureBlock> parse_table_fixture(const std::string& path);

// Absolute path of a data file: $LIEB_DATA_DIR (when set) or the built-in
// data directory, joined with `name`.
std::string data_file(const std::string& name);

}  // namespace lieb
