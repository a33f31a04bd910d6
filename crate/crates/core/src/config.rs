use crate::geom::EPS;

/// Solver knobs shared by all three shapes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Absolute tolerance for membership and ordering comparisons.
    pub eps: f64,
    /// Recompute incremental sweep state from scratch after every event and
    /// cross-check binary searches against a linear scan. Slow.
    pub verify: bool,
    /// Worker threads for independent candidate families; 1 runs inline.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            eps: EPS,
            verify: false,
            threads: 1,
        }
    }
}

impl Config {
    pub fn verifying() -> Self {
        Config {
            verify: true,
            ..Config::default()
        }
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    /// Tolerance used inside the solvers and oracles. Half of `eps`, so that
    /// an annulus placed right at the edge of a tolerance band still passes a
    /// membership check at `eps` after rounding.
    pub fn slack(&self) -> f64 {
        0.5 * self.eps
    }
}

/// Runs `work` over `0..n` split into contiguous chunks, one per thread, and
/// returns the per-chunk results in chunk order.
pub(crate) fn chunked<T: Send>(
    n: usize,
    threads: usize,
    work: impl Fn(std::ops::Range<usize>) -> T + Sync,
) -> Vec<T> {
    let threads = threads.clamp(1, n.max(1));
    if threads == 1 {
        return vec![work(0..n)];
    }
    let chunk = n.div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let range = (t * chunk).min(n)..((t + 1) * chunk).min(n);
                let work = &work;
                scope.spawn(move || work(range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}
