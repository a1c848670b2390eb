use crate::history::ArmHistory;

/// Result of one leader-versus-challenger comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChallengeOutcome {
    /// Challenger has as many observations as the leader and loses outright.
    EqualSizeLoss,
    /// Challenger is below the exploration threshold and wins outright.
    ForcedWin,
    Won,
    Lost,
}

impl ChallengeOutcome {
    pub fn challenger_wins(self) -> bool {
        matches!(self, Self::ForcedWin | Self::Won)
    }
}

/// Which leader windows of the challenger's length are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowLayout {
    /// Every start `t = 1, …, n_ζ − n_k + 1`.
    Sliding,
    /// Disjoint blocks starting at `t = 1 + u·n_k`, `0 ≤ u < ⌊n_ζ / n_k⌋`.
    Blocks,
}

impl WindowLayout {
    fn windows(self, leader_count: usize, len: usize) -> usize {
        match self {
            Self::Sliding => leader_count + 1 - len,
            Self::Blocks => leader_count / len,
        }
    }

    /// 1-based start of the `i`-th window (also 1-based).
    fn start(self, i: usize, len: usize) -> usize {
        match self {
            Self::Sliding => i,
            Self::Blocks => 1 + (i - 1) * len,
        }
    }
}

fn automatic(leader: &ArmHistory, challenger: &ArmHistory, floor: f64) -> Option<ChallengeOutcome> {
    let (nz, nk) = (leader.count(), challenger.count());
    assert!(nk >= 1 && nk <= nz, "challenger must have 1..=n_leader observations");
    if nk == nz {
        Some(ChallengeOutcome::EqualSizeLoss)
    } else if (nk as f64) < floor {
        Some(ChallengeOutcome::ForcedWin)
    } else {
        None
    }
}

/// Running minimum of the leader's window sums for one challenger.
///
/// Windows `1..=windows_covered` have been scanned; the cache only ever
/// appends windows, so while the leader and the challenger's sample size
/// persist each round costs O(1) new window evaluations.
#[derive(Debug, Clone, Default)]
pub struct WindowMinCache {
    window_length: usize,
    covered: usize,
    min_sum: f64,
    evaluations: u64,
}

impl WindowMinCache {
    pub fn is_valid(&self) -> bool {
        self.window_length > 0
    }

    pub fn invalidate(&mut self) {
        self.window_length = 0;
        self.covered = 0;
        self.min_sum = f64::INFINITY;
    }

    pub fn window_length(&self) -> usize {
        self.window_length
    }

    pub fn windows_covered(&self) -> usize {
        self.covered
    }

    /// Minimum window mean over the covered windows.
    pub fn running_min(&self) -> Option<f64> {
        (self.is_valid() && self.covered > 0).then(|| self.min_sum / self.window_length as f64)
    }

    /// Window evaluations performed over the cache's lifetime.
    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    fn reset(&mut self, len: usize) {
        self.window_length = len;
        self.covered = 0;
        self.min_sum = f64::INFINITY;
    }

    /// Scans new windows until one has sum `<= target`; returns whether the
    /// running minimum reaches `target`.
    fn advance(&mut self, leader: &ArmHistory, layout: WindowLayout, target: f64) -> bool {
        if self.min_sum <= target {
            return true;
        }
        let len = self.window_length;
        let total = layout.windows(leader.count(), len);
        let p = leader.raw_prefix();
        const CHUNK: usize = 256;
        while self.covered < total {
            let from = self.covered + 1;
            let to = (self.covered + CHUNK).min(total);
            let mut m = self.min_sum;
            match layout {
                WindowLayout::Sliding => {
                    for (hi, lo) in p[from + len - 1..to + len].iter().zip(&p[from - 1..to]) {
                        let s = hi - lo;
                        if s < m {
                            m = s;
                        }
                    }
                }
                WindowLayout::Blocks => {
                    for i in from..=to {
                        let t = layout.start(i, len);
                        let s = p[t + len - 1] - p[t - 1];
                        if s < m {
                            m = s;
                        }
                    }
                }
            }
            self.evaluations += (to + 1 - from) as u64;
            self.covered = to;
            self.min_sum = m;
            if m <= target {
                return true;
            }
        }
        false
    }
}

pub(crate) fn window_min_challenge(
    leader: &ArmHistory,
    challenger: &ArmHistory,
    c_n: f64,
    layout: WindowLayout,
    cache: &mut WindowMinCache,
) -> ChallengeOutcome {
    if let Some(o) = automatic(leader, challenger, c_n) {
        return o;
    }
    let len = challenger.count();
    if cache.window_length != len || cache.covered > layout.windows(leader.count(), len) {
        cache.reset(len);
    }
    // Equal lengths: mean comparison is a sum comparison.
    if cache.advance(leader, layout, challenger.total()) {
        ChallengeOutcome::Won
    } else {
        ChallengeOutcome::Lost
    }
}

/// SSMC challenge: the challenger wins if its mean is at least the minimum of
/// the leader's sliding window means of the challenger's length.
///
/// `cache` must belong to this (leader, challenger) pair; invalidate it when
/// the leader changes.
pub fn ssmc_challenge(
    leader: &ArmHistory,
    challenger: &ArmHistory,
    c_n: f64,
    cache: &mut WindowMinCache,
) -> ChallengeOutcome {
    window_min_challenge(leader, challenger, c_n, WindowLayout::Sliding, cache)
}

/// SSMC* challenge over disjoint leader blocks.
pub fn ssmc_star_challenge(leader: &ArmHistory, challenger: &ArmHistory, c_n: f64) -> ChallengeOutcome {
    let mut cache = WindowMinCache::default();
    window_min_challenge(leader, challenger, c_n, WindowLayout::Blocks, &mut cache)
}

/// `d / s` on the extended reals, with `d / 0 = ±∞` by sign and `0 / 0 = 0`.
fn studentized(d: f64, s: f64) -> f64 {
    if s > 0.0 {
        d / s
    } else if d > 0.0 {
        f64::INFINITY
    } else if d < 0.0 {
        f64::NEG_INFINITY
    } else {
        0.0
    }
}

/// SSTC challenge, evaluated directly at every window.
///
/// The challenger wins if its mean is at least the leader's full mean, or if
/// `(Ȳ_k − Ȳ_ζ)/σ̂_k ≥ (Ȳ_{ζ,t:t+n_k−1} − Ȳ_ζ)/σ̂_{ζ,t:t+n_k−1}` for some `t`.
/// Challengers with fewer than `max(c_n, 2)` observations win outright.
pub fn sstc_challenge(leader: &ArmHistory, challenger: &ArmHistory, c_n: f64) -> ChallengeOutcome {
    if let Some(o) = automatic(leader, challenger, c_n.max(2.0)) {
        return o;
    }
    let x = leader.mean();
    let mk = challenger.mean();
    if mk >= x {
        return ChallengeOutcome::Won;
    }
    let len = challenger.count();
    let lhs = studentized(mk - x, challenger.stddev());
    for t in 1..=leader.count() + 1 - len {
        let u = t + len - 1;
        let rhs = studentized(leader.window_mean(t, u) - x, leader.window_stddev(t, u));
        if lhs >= rhs {
            return ChallengeOutcome::Won;
        }
    }
    ChallengeOutcome::Lost
}

/// Set of leader means `x` for which the studentized comparison holds at some
/// covered window, for a fixed challenger sample.
///
/// For `x` above the challenger mean each window contributes a half-line
/// `x ≤ β/α` or `x ≥ β/α` (or everything / nothing), so the union over windows
/// is summarized by a maximum upper bound, a minimum lower bound, and a flag.
#[derive(Debug, Clone, Default)]
pub struct StudentCache {
    window_length: usize,
    covered: usize,
    challenger_mean: f64,
    challenger_sd: f64,
    always: bool,
    max_upper: f64,
    min_lower: f64,
    // Smallest mean among zero-dispersion windows: they win for every x above it.
    min_flat: f64,
    evaluations: u64,
}

impl StudentCache {
    pub fn is_valid(&self) -> bool {
        self.window_length > 0
    }

    pub fn invalidate(&mut self) {
        self.window_length = 0;
    }

    pub fn windows_covered(&self) -> usize {
        self.covered
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    fn reset(&mut self, challenger: &ArmHistory) {
        *self = Self {
            window_length: challenger.count(),
            covered: 0,
            challenger_mean: challenger.mean(),
            challenger_sd: challenger.stddev(),
            always: false,
            max_upper: f64::NEG_INFINITY,
            min_lower: f64::INFINITY,
            min_flat: f64::INFINITY,
            evaluations: self.evaluations,
        };
    }

    fn extend(&mut self, leader: &ArmHistory) {
        let len = self.window_length;
        let total = leader.count() + 1 - len;
        let (mk, sk) = (self.challenger_mean, self.challenger_sd);
        for t in self.covered + 1..=total {
            let u = t + len - 1;
            let w = leader.window_mean(t, u);
            let st = leader.window_stddev(t, u);
            if st == 0.0 {
                self.min_flat = self.min_flat.min(w);
            } else if sk > 0.0 {
                let alpha = 1.0 / sk - 1.0 / st;
                let beta = mk / sk - w / st;
                if alpha > 0.0 {
                    self.max_upper = self.max_upper.max(beta / alpha);
                } else if alpha < 0.0 {
                    self.min_lower = self.min_lower.min(beta / alpha);
                } else if beta >= 0.0 {
                    self.always = true;
                }
            }
        }
        self.evaluations += (total - self.covered) as u64;
        self.covered = total;
    }

    fn holds_at(&self, x: f64) -> bool {
        x > self.min_flat || (self.challenger_sd > 0.0 && (self.always || x <= self.max_upper || x >= self.min_lower))
    }
}

/// SSTC challenge using an incrementally maintained [`StudentCache`].
///
/// Agrees with [`sstc_challenge`] up to floating-point rounding of the
/// per-window thresholds.
pub fn sstc_challenge_cached(
    leader: &ArmHistory,
    challenger: &ArmHistory,
    c_n: f64,
    cache: &mut StudentCache,
) -> ChallengeOutcome {
    if let Some(o) = automatic(leader, challenger, c_n.max(2.0)) {
        return o;
    }
    let x = leader.mean();
    if challenger.mean() >= x {
        return ChallengeOutcome::Won;
    }
    if cache.window_length != challenger.count() || cache.covered > leader.count() + 1 - challenger.count() {
        cache.reset(challenger);
    }
    cache.extend(leader);
    if cache.holds_at(x) {
        ChallengeOutcome::Won
    } else {
        ChallengeOutcome::Lost
    }
}
