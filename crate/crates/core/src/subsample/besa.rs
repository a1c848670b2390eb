use crate::history::ArmHistory;
use crate::policy::{Policy, PolicyDecision};
use crate::rng::Stream;
use rand::seq::{index, SliceRandom};
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuelWinner {
    Larger,
    Smaller,
}

/// One BESA duel.
///
/// Draws `n_small` of the larger arm's rewards uniformly without replacement;
/// the smaller arm wins if its full mean is at least the subsample mean. With
/// equal counts the subsample is the whole history and no randomness is used.
pub fn besa_duel<R: Rng + ?Sized>(larger: &ArmHistory, smaller: &ArmHistory, rng: &mut R) -> DuelWinner {
    let (nl, ns) = (larger.count(), smaller.count());
    assert!(ns >= 1 && nl >= ns, "duel needs larger >= smaller >= 1 observations");
    let sub_sum = if nl == ns {
        larger.total()
    } else {
        let ys = larger.rewards();
        index::sample(rng, nl, ns).iter().map(|i| ys[i]).sum()
    };
    if smaller.total() >= sub_sum {
        DuelWinner::Smaller
    } else {
        DuelWinner::Larger
    }
}

fn duel_arms<R: Rng + ?Sized>(arms: &[ArmHistory], a: usize, b: usize, rng: &mut R) -> usize {
    // With equal counts the lower index plays the challenger role.
    let (small, large) = match arms[a].count().cmp(&arms[b].count()) {
        std::cmp::Ordering::Less => (a, b),
        std::cmp::Ordering::Greater => (b, a),
        std::cmp::Ordering::Equal => (a.min(b), a.max(b)),
    };
    match besa_duel(&arms[large], &arms[small], rng) {
        DuelWinner::Smaller => small,
        DuelWinner::Larger => large,
    }
}

/// One BESA round: a single duel for two arms, otherwise a freshly shuffled
/// single-elimination bracket where an odd player out gets a bye.
pub fn besa_round<R: Rng + ?Sized>(arms: &[ArmHistory], rng: &mut R) -> PolicyDecision {
    match arms.len() {
        0 => panic!("no arms"),
        1 => return PolicyDecision::single(0),
        2 => return PolicyDecision::single(duel_arms(arms, 0, 1, rng)),
        _ => {}
    }
    let mut players: Vec<usize> = (0..arms.len()).collect();
    players.shuffle(rng);
    while players.len() > 1 {
        players = players
            .chunks(2)
            .map(|pair| match *pair {
                [a, b] => duel_arms(arms, a, b, rng),
                [a] => a,
                _ => unreachable!(),
            })
            .collect();
    }
    PolicyDecision::single(players[0])
}

/// BESA with an optional warm start (BESAT uses 10 seeding pulls per arm).
#[derive(Debug, Clone)]
pub struct BesaPolicy {
    warm_start: usize,
}

impl BesaPolicy {
    pub fn new(warm_start: usize) -> Self {
        assert!(warm_start >= 1);
        Self { warm_start }
    }
}

impl Default for BesaPolicy {
    fn default() -> Self {
        Self::new(1)
    }
}

impl Policy for BesaPolicy {
    fn initial_pulls(&self) -> usize {
        self.warm_start
    }

    fn decide(&mut self, arms: &[ArmHistory], rng: &mut Stream) -> PolicyDecision {
        besa_round(arms, rng)
    }
}
