#pragma once

// Human-readable and JSON renderings of solver, classifier and gadget results.

#include <optional>
#include <string>

#include "l3col/classify.hpp"
#include "l3col/hardness.hpp"
#include "l3col/propagation.hpp"
#include "l3col/solver.hpp"

namespace l3col {

/// "answer: yes" / "route: ..." lines, then notes. No witness.
std::string report_text(const SolveReport& r);
/// Single-line JSON object; includes the witness when yes.
std::string report_json(const SolveReport& r);

std::string profile_json(const ClassProfile& p);

std::string propagation_text(const PropagationResult& r);
std::string propagation_json(const PropagationResult& r);

std::string verification_text(const GadgetVerification& v);
/// `equivalence`: result of check_equivalence, null when not run.
std::string verification_json(const GadgetVerification& v, std::optional<bool> equivalence = std::nullopt);

}  // namespace l3col
