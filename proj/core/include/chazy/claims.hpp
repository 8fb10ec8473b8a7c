#pragma once

#include <functional>
#include <string>
#include <vector>

namespace chazy {

struct ClaimOutcome {
  bool pass = false;
  std::string witness;
};

/// One verifiable statement from the source material; id doubles as the CLI
/// addressing key and the anchor names the originating display.
struct Claim {
  std::string id;
  std::string anchor;
  std::string description;
  std::function<ClaimOutcome()> run;
};

struct ClaimResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string witness;
  double elapsed_sec = 0.0;
};

const std::vector<Claim>& claim_ledger();

/// Run ids (all when empty); deterministic result order; parallel workers.
std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids, unsigned seed,
                                    int workers = 0);

}  // namespace chazy
