#pragma once

#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace ecg::cli {

struct Outcome {
  json result = json::object();
  json certificates = json::array();
  int status = 0;  // 0, or 1 for a verified negative answer
};

std::vector<std::string> verb_names();
bool is_verb(const std::string& name);

// Runs one verb; library errors propagate to the caller.
Outcome run_verb(const std::string& verb, const Ring& ring, const json& payload);

// Bundle around an outcome: ring descriptor, hash, certificates stamped
// with the same hash.
json make_bundle(const std::string& verb, const Ring& ring, const Outcome& out);

// Re-checks every certificate of a bundle. `ring` overrides the embedded
// descriptor; its hash must still match the one in the bundle.
Outcome verify_bundle(const json& bundle, const std::optional<Ring>& ring);

}  // namespace ecg::cli
