//! Quantum-information measures on one-body densities and two-mode reduced states.

mod discord;
mod entropy;
mod two_mode;

pub use discord::{
    discord_report, hf_discord_closed_form_three_level, hf_discord_closed_form_two_level,
    quantum_discord, DiscordReport, LevelPair, MeasurementSet,
};
pub use entropy::{entropies, entropy_f, entropy_g, entropy_s, von_neumann, EntropyReport};
pub use two_mode::{
    mutual_information, purity, two_mode_state_from_block, two_mode_state_from_correlators,
    TwoModeState,
};
