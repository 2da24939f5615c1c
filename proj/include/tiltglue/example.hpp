#pragma once

// Example files: a recollement, two input modules named by universe members,
// and the expected glued module.
//
//   example 5-2
//   glue tilting
//   total lambda.uni
//   a-side lambda1.uni
//   c-side lambda2.uni
//   a-vertices 1 2
//   t1 1 P(1) S(2)          # degree, then summands
//   t3 2 P(3) P(4) S(3)
//   expect (S(2)|0) ...
//   expect-n 2

#include <optional>
#include <string>
#include <vector>

#include "tiltglue/error.hpp"
#include "tiltglue/glue.hpp"
#include "tiltglue/io.hpp"

namespace tiltglue {

enum class GlueKind { Tilting, Cotilting };

struct ExampleSetup {
  std::string id;
  GlueKind kind = GlueKind::Tilting;
  std::string total, a_side, c_side;  // manifest paths, relative to the example file
  std::vector<std::string> a_vertices;
  std::size_t n1 = 0, n3 = 0;
  std::vector<std::string> t1, t3;
  std::vector<std::string> expect;
  std::optional<std::size_t> expect_n;
};

ExampleSetup parse_example(std::string_view text);

struct LoadedExample {
  ExampleSetup setup;
  UniverseTriple universes;
  Recollement recollement;
  Module t1, t3;
};

LoadedExample load_example(Workspace& ws, const std::string& path);

/// Bundled path of an example id such as "5-1".
std::string example_path(const std::string& id);

struct GlueOutcome {
  std::vector<std::string> members;  // display names of the glued summands, sorted
  std::size_t n2 = 0;
  bool certified = false;  // axioms, bounds and cross-checks all hold
  std::string report;      // full human-readable report
  std::string summary;     // decomposition and degree only; stable across seeds and primes
  std::optional<GluedTilting> tilting;
  std::optional<GluedCotilting> cotilting;
};

GlueOutcome run_glue(const LoadedExample& ex, const Settings& settings = {});

struct Reproduction {
  bool match = false;
  std::optional<ErrorCode> error;
  GlueOutcome outcome;
  std::vector<std::string> diff;  // "- X" expected but missing, "+ X" unexpected
  std::string report;
};

/// Loads, glues and compares against the expected decomposition. Errors are
/// reported in the text and leave `match` false.
Reproduction reproduce(Workspace& ws, const std::string& path, const Settings& settings = {});

/// Process exit status for an error code: 2 verification, 3 parse or config, 4 precondition.
int exit_code_for(ErrorCode code);

}  // namespace tiltglue
