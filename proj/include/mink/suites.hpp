#pragma once

#include <vector>

#include "mink/report.hpp"
#include "mink/scenario.hpp"

namespace mink {

// Seeded random sweep of the algebra/calculus identities: graded
// anticommutativity, Hodge involution, volume pairing, d² = 0, δ² = 0,
// δ*d = 0, and the three connection identities. One report per identity,
// `count` instances each; reports come back sorted by name and are
// deterministic for a fixed (seed, count).
std::vector<VerificationReport> identity_suite(std::uint64_t seed, int count);

// The component identity and the residual equivalence for one scenario.
std::vector<VerificationReport> theorem1_suite(const Scenario& sc);

// Charge of the scenario's photon family: the value and its invariance
// across the scenario's maps and gauge constants {C, 0, 1, i}, plus the
// sign flip under conjugation.
std::vector<VerificationReport> charge_suite(const Scenario& sc);

// Both sign branches at a constant purely electric potential (A₀, 0, 0, 0).
std::vector<VerificationReport> dispersion_suite(const Rational& A0);

// Stable order for report assembly: sort by name, keeping relative order of
// duplicates.
void sort_reports(std::vector<VerificationReport>& reports);

} // namespace mink
