#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "afd/rng.hpp"
#include "afd/scenario.hpp"

namespace afd {

enum class ReassociationScheme { SnrAware = 0, LoadAware = 1, RandomHandover = 2 };

const char* to_string(ReassociationScheme scheme);

// Output of the controller: altitudes H, hovering powers and the transmit
// power matrix P (inside association), plus the layout needed to audit it.
struct DeploymentPlan {
    std::vector<double> altitudes;
    std::vector<double> hover_powers;
    AssociationMap association;
    std::vector<GroundUser> users;
    std::vector<UavBsState> uavs;  // final state, same order as altitudes

    bool operator==(const DeploymentPlan&) const = default;
};

// Snapshot a world as a plan without running the controller (greedy baseline).
DeploymentPlan plan_from_world(const WorldState& world);

struct Reassignment {
    int user = -1;
    int uav = -1;
    std::size_t operations = 0;  // candidates examined, for the complexity bounds
};

// One call of the re-association procedure for overloaded UAV `overloaded`.
// Neighbors already at omega_max are not candidates. Throws NoCandidateError
// when no neighbor has room.
Reassignment reassociate(ReassociationScheme scheme, int overloaded, const WorldState& world, Rng& rng);

// The operation bound for one reassociate call on a set of size omega_size.
std::size_t reassociation_bound(ReassociationScheme scheme, std::size_t omega_size, std::size_t n_uavs);

struct ReassociationRecord {
    int from = -1;
    Reassignment choice;
    std::size_t omega_size = 0;  // |Omega_from| when the call was made
    double committed_altitude = 0.0;
};

struct AfdTrace {
    std::vector<ReassociationRecord> records;
    std::vector<int> reoptimized_uavs;
};

// Re-associates every excess user, raises neighbor altitudes just enough to
// cover them, then re-provisions hovering and link powers of every UAV whose
// altitude or association set changed. Throws InfeasibleError when excess
// users remain and no neighbor has capacity.
DeploymentPlan run_afd(WorldState world, ReassociationScheme scheme, Rng& rng, AfdTrace* trace = nullptr);

enum class ViolationKind { Altitude, HoverPower, TxPower, MinPower, Capacity, Association, Fairness };

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int uav = -1;
    int user = -1;
    double value = 0.0;
    double limit = 0.0;

    std::string describe() const;
};

std::vector<Violation> validate_plan(const DeploymentPlan& plan, const ScenarioConfig& config);

}  // namespace afd
