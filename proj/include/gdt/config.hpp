#ifndef GDT_CONFIG_HPP
#define GDT_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gdt {

enum class Scheme { DataModel, Heuristic, Drl };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

enum class PreferenceMode { Dirichlet, Archetypes };
enum class KMode { Ddqn, Fixed };

struct VideoParams {
    int n_types = 10;
    int videos_per_type = 50;
    int segments_per_video = 20;
    double segment_duration_s = 1.0;
    std::vector<double> bitrates_bps = {1e6, 2.5e6, 5e6};  // ascending ladder
    // transcoding down from the top-ladder master copy; the top version is
    // served as stored and costs nothing
    double transcode_units_per_mbit = 100.0;
};

struct ChannelParams {
    double pl0_db = 40.0;      // reference loss at d0
    double d0_m = 1.0;
    double path_loss_exp = 3.0;
    double shadow_sigma_db = 4.0;
    double shadow_rho = 0.9;   // AR(1) per slot
    double tx_power_dbm = 30.0;
    double noise_floor_dbm = -100.0;
    double bandwidth_hz = 20e6;
};

struct LevyParams {
    double x_min_m = 1.0;
    double alpha = 1.5;
    double max_step_m = 100.0;
    double speed_cap_mps = 0.4;
};

struct SwipeParams {
    double base_hazard = 0.3;  // per-segment swipe hazard scale h0
    PreferenceMode preference_mode = PreferenceMode::Dirichlet;
    // archetype mode: half the users prefer the low type ids, half the high
    double archetype_major_pref = 0.18;  // per liked type; 5 liked + 5 disliked
};

struct QoEWeights {
    double w_bitrate = 1.0;
    double w_rebuffer = 4.0;
    double w_switch = 1.0;
};

struct LoopParams {
    int t_min = 1;
    int t_max = 64;
    int t_init = 8;
    double theta_lo_m = 3.0;
    double theta_hi_m = 10.0;
    int predictor_train_traces = 100;
    int predictor_trace_len = 64;
    int predictor_train_steps = 5000;
};

struct AbstractionParams {
    int window = 8;           // slots per status window
    int latent_dim = 8;
    int ae_train_steps = 3000;
    int ae_batch = 32;
    KMode k_mode = KMode::Ddqn;
    int k_fixed = 2;          // used when k_mode == Fixed
    int k_min = 2;
    int k_max = 8;
    int selector_pretrain_steps = 2000;
    // feature normalization ranges
    double rate_cap_bps = 200e6;
    double swipe_count_cap = 20.0;
};

struct DecisionParams {
    double safety_rho = 0.9;        // buffer-plan capacity safety factor
    double gamma = 0.9;
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    int epsilon_decay_steps = 2000;
    int target_sync_every = 100;
    int replay_capacity = 1000;
    int batch_size = 16;
    double softmin_sharpness = 20.0;
    double sqp_step_tol = 1e-6;
    double sqp_subproblem_tol = 1e-8;
    int sqp_max_outer = 100;
    int plan_lookahead_segments = 10;  // candidate depth per video
    int next_likely_videos = 3;       // prefetch candidates per group
};

struct SimConfig {
    int n_users = 40;
    int n_aps = 2;
    double arena_w_m = 1000.0;
    double arena_h_m = 1000.0;
    double slot_duration_s = 1.0;
    int n_slots = 600;
    int decision_epoch_slots = 10;
    double compute_capacity_units = 2000.0;  // compute-units per second
    Scheme scheme = Scheme::DataModel;
    uint64_t seed = 1;

    VideoParams video;
    ChannelParams channel;
    LevyParams levy;
    SwipeParams swipe;
    QoEWeights qoe;
    LoopParams loop;
    AbstractionParams abstraction;
    DecisionParams decision;

    // throws ConfigError naming the offending field
    void validate() const;

    // canonical key-value serialization (sorted sections); basis of the
    // config hash recorded in run manifests
    std::string canonical_text() const;
    uint64_t hash() const;
};

// Structured-text config file: [section] headers, key = value lines,
// '#' comments. Unknown section/key is an error naming it.
SimConfig parse_config_text(const std::string& text);
SimConfig load_config_file(const std::string& path);

// applies "section.key=value"; used by the parser and CLI overrides
void apply_config_entry(SimConfig& cfg, const std::string& section, const std::string& key,
                        const std::string& value);

}  // namespace gdt

#endif
