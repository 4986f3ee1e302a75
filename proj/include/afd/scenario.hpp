#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "afd/channel_model.hpp"
#include "afd/rng.hpp"
#include "afd/uav_power.hpp"

namespace afd {

struct GroundUser {
    int id = 0;
    double x = 0.0;
    double y = 0.0;

    bool operator==(const GroundUser&) const = default;
};

struct UavBsState {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    double h = 0.0;
    double p_hov = 0.0;
    bool altitude_changed = false;

    bool operator==(const UavBsState&) const = default;
};

// Dense user x UAV table of doubles.
class LinkMatrix {
public:
    LinkMatrix() = default;
    LinkMatrix(std::size_t users, std::size_t uavs, double fill = 0.0)
        : users_(users), uavs_(uavs), data_(users * uavs, fill) {}

    double& at(std::size_t user, std::size_t uav) { return data_[user * uavs_ + uav]; }
    double at(std::size_t user, std::size_t uav) const { return data_[user * uavs_ + uav]; }

    std::size_t users() const { return users_; }
    std::size_t uavs() const { return uavs_; }

    bool operator==(const LinkMatrix&) const = default;

private:
    std::size_t users_ = 0;
    std::size_t uavs_ = 0;
    std::vector<double> data_;
};

struct AssociationMap {
    std::vector<std::vector<int>> omega;  // per UAV, insertion order
    LinkMatrix tx_power;                  // W; zero for non-associated pairs
    std::vector<bool> served;             // per user
    std::vector<int> serving;             // per user: UAV id, or -1

    AssociationMap() = default;
    AssociationMap(std::size_t users, std::size_t uavs);

    std::size_t load(int uav) const { return omega[static_cast<std::size_t>(uav)].size(); }
    std::size_t associated_count() const;

    void assign(int user, int uav);
    // Atomic remove + insert; tx power of the old link is cleared.
    void move(int user, int from, int to);

    bool operator==(const AssociationMap&) const = default;
};

struct ScenarioConfig {
    std::size_t n_users = 250;
    std::size_t n_uavs = 7;
    std::size_t omega_max = 50;
    double cell_radius = 0.0;  // m; see defaults()
    std::size_t excess_users = 0;
    EnvironmentParams env;
    UavPhysicalParams phys;
    RadioParams radio;
    AltitudeBounds bounds;
    double h_init = 30.0;
    double jfi_threshold = 0.0;
    double pl_allow_db = 0.0;  // informational; the angle solver does not use it
    std::uint64_t rng_seed = 1;

    // Table defaults. cell_radius is the coverage radius at h_init and the
    // optimal elevation angle, about 32.8 m for the urban environment.
    static ScenarioConfig defaults();

    void validate() const;
};

// Hexagonal layout: UAV 0 at the origin, others on the triangular lattice
// with spacing sqrt(3) * cell_radius, filled ring by ring.
std::vector<UavBsState> place_uavbs(const ScenarioConfig& config);

// UAV 0's disk receives omega_max + excess_users users; the rest go
// round-robin to the other disks. Uniform on each disk.
std::vector<GroundUser> generate_users(const ScenarioConfig& config, Rng& rng);

// Best-SNR association at a common reference power (p_max). Ties go to the
// lowest UAV id. With enforce_capacity each UAV keeps its omega_max best
// candidates and the rest are left unserved.
AssociationMap greedy_associate(const std::vector<GroundUser>& users, const std::vector<UavBsState>& uavs,
                                const RadioParams& radio, const EnvironmentParams& env, std::size_t omega_max,
                                bool enforce_capacity);

inline std::size_t count_excess(const std::vector<int>& omega_j, std::size_t omega_max) {
    return omega_j.size() > omega_max ? omega_j.size() - omega_max : 0;
}

double horizontal_distance(const GroundUser& user, const UavBsState& uav);

// Everything one trial of the controller operates on.
struct WorldState {
    ScenarioConfig config;
    std::vector<GroundUser> users;
    std::vector<UavBsState> uavs;
    AssociationMap association;
    LinkMatrix horizontal;  // r_{i,j}

    double path_loss(int user, int uav) const;
    // SNR at the committed transmit power.
    double snr(int user, int uav) const;
};

WorldState build_world(const ScenarioConfig& config, Rng& rng, bool enforce_capacity);

}  // namespace afd
