//! Classical comparison policies: UCB-type index rules and randomized rules.
//!
//! All deterministic argmax ties go to the smallest arm index. `n` is always
//! the total number of observations so far and `n_k` the arm's own count.

mod index;
mod klucb;
mod randomized;

pub use index::{
    ucb1_index, ucb1_normal_step, ucb1_tuned_index, ucb_agrawal_index, ucb_lai_index, IndexPolicy, IndexRule,
    Ucb1Normal,
};
pub use klucb::{bernoulli_kl, klucb_bernoulli_index, KlExploration};
pub use randomized::{
    boltzmann_probabilities, boltzmann_step, epsilon_greedy_step, thompson_bernoulli_step, Boltzmann,
    EpsilonGreedy, EpsilonSchedule, Thompson,
};
