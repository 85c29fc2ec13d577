#pragma once

#include <string>

#include <json.hpp>

#include "recon/counting.hpp"
#include "recon/deck.hpp"
#include "recon/identities.hpp"
#include "recon/profile.hpp"
#include "recon/witness.hpp"

namespace recon {

/// JSON views of the report types. Rooted graphs are emitted as the graph6
/// of the canonical representative plus a root index (or root edge) in that
/// representative's labelling; canon keys ride along as hex strings.

nlohmann::json to_json(const Deck& d);
nlohmann::json to_json(const BallProfile& profile);
nlohmann::json to_json(const SolveTrace& trace);
nlohmann::json to_json(const CountReport& report);
nlohmann::json to_json(const IdentityRecord& record);
nlohmann::json to_json(const WitnessReport& report);
nlohmann::json to_json(const PseudoSimilarReport& report);
nlohmann::json to_json(const NonreconstructibilityReport& report);

nlohmann::json rooted_key_json(const CanonKey& key);

}  // namespace recon
