#pragma once

#include <string>

#include "fftower/factor.hpp"
#include "fftower/tower.hpp"

namespace fftower {
namespace spec_io {

// JSON round trip for a tower description.  Big values are decimal strings.
std::string spec_to_json_string(const TowerSpec& spec);
TowerSpec spec_from_json_string(const std::string& text);

void save_spec(const std::string& path, const TowerSpec& spec);
TowerSpec load_spec(const std::string& path);

// Factorization hints: a JSON array of
//   {"n": "<decimal>", "factors": [["<prime>", exp], ...], "cofactor": "<decimal>"}
// Every listed prime is primality-checked and the product must reconstruct n;
// the cofactor (default 1) may be composite.
FactorHints hints_from_json_string(const std::string& text);
FactorHints load_hints(const std::string& path);

}  // namespace spec_io
}  // namespace fftower
