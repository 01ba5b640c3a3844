/// Human-readable description of [`derive_trial_seed`], echoed into summaries.
pub const SEED_DERIVATION: &str = "splitmix64: g = mix(master + 0x9e3779b97f4a7c15*(grid+1)); \
seed = mix(g ^ mix(trial + 0xd1b54a32d192ed03))";

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;
const TRIAL_OFFSET: u64 = 0xd1b5_4a32_d192_ed03;

/// SplitMix64 finalizer; a bijection on `u64`.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one trial at one grid point.
///
/// For fixed `(master_seed, grid_index)` the map `trial_index -> seed` is a
/// bijection, so trials of a grid point never share a seed.
pub fn derive_trial_seed(master_seed: u64, grid_index: u64, trial_index: u64) -> u64 {
    let grid = mix(master_seed.wrapping_add(GOLDEN.wrapping_mul(grid_index.wrapping_add(1))));
    mix(grid ^ mix(trial_index.wrapping_add(TRIAL_OFFSET)))
}
