//! Density window checks on fixed-size vertex subsets: exact scans of all
//! `w`-subsets, or seeded uniform samples.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{binomial, format_rat, rat, rat_int, Rat};
use crate::rng;
use crate::search::Budget;

#[derive(Clone, Debug)]
pub struct DensityWindowSpec {
    pub w: u32,
    pub eps: Rat,
    pub center: Rat,
}

impl DensityWindowSpec {
    pub fn new(w: u32, eps: Rat) -> Self {
        DensityWindowSpec {
            w,
            eps,
            center: rat(1, 2),
        }
    }

    fn validate(&self, h: &Hypergraph) -> Result<()> {
        if !self.eps.is_positive() || self.eps >= rat(1, 2) {
            return Err(Error::input(format!(
                "window half-width must lie in (0, 1/2), got {}",
                format_rat(&self.eps)
            )));
        }
        if self.w < h.r() || self.w > h.n() {
            return Err(Error::input(format!(
                "subset size {} outside [r={}, n={}]",
                self.w,
                h.r(),
                h.n()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WindowMode {
    Exact,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct WindowOutcome {
    /// First subset observed outside the window, with its density.
    pub witness: Option<(Vec<u32>, Rat)>,
    /// Largest `|d - center|` among scanned subsets.
    pub worst_deviation: Rat,
    pub subsets_checked: u64,
    pub complete: bool,
}

pub fn density_window_check(
    h: &Hypergraph,
    spec: &DensityWindowSpec,
    mode: WindowMode,
    budget: &Budget,
) -> Result<WindowOutcome> {
    spec.validate(h)?;
    let total = binomial(spec.w as u64, h.r() as u64)?;
    if total == 0 || total > i128::MAX as u128 {
        return Err(Error::Overflow("window subset slots".into()));
    }
    let lo = &spec.center - &spec.eps;
    let hi = &spec.center + &spec.eps;

    let mut worst = rat_int(0);
    let mut witness: Option<(Vec<u32>, Rat)> = None;
    let mut checked = 0u64;

    let mut consider = |wset: &[u32]| -> Result<bool> {
        checked += 1;
        let e = h.edges_within_sorted(wset)?;
        let d = Rat::new(e as i128, total as i128);
        let dev = (&d - &spec.center).abs();
        if dev > worst {
            worst = dev;
        }
        if d < lo || d > hi {
            witness = Some((wset.to_vec(), d));
            return Ok(false);
        }
        Ok(true)
    };

    let complete = match mode {
        WindowMode::Exact => {
            let mut tracker = budget.tracker();
            let mut aborted = false;
            crate::search::for_each_subset(h.n(), spec.w, |wset| {
                tracker.tick()?;
                let keep_going = consider(wset)?;
                if !keep_going {
                    aborted = true;
                }
                Ok(keep_going)
            })?;
            !aborted
        }
        WindowMode::Sampled { samples, seed } => {
            let mut rng = rng::stream(seed, "window/sample");
            for _ in 0..samples {
                let wset = rng::sample_subset(&mut rng, h.n(), spec.w);
                if !consider(&wset)? {
                    break;
                }
            }
            false
        }
    };

    Ok(WindowOutcome {
        witness,
        worst_deviation: worst,
        subsets_checked: checked,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_density_whole_set_is_in_window() {
        // 5 of 10 triples on 5 vertices, w = n: deviation 0
        let mut h = Hypergraph::empty(3, 5).unwrap();
        for e in [[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 4]] {
            h.add_edge(&e).unwrap();
        }
        let spec = DensityWindowSpec::new(5, rat(1, 10));
        let out = density_window_check(&h, &spec, WindowMode::Exact, &Budget::default()).unwrap();
        assert!(out.witness.is_none());
        assert_eq!(out.worst_deviation, rat_int(0));
        assert!(out.complete);
    }

    #[test]
    fn complete_host_is_out_of_window_immediately() {
        let h = Hypergraph::complete(3, 8).unwrap();
        let spec = DensityWindowSpec::new(4, rat(1, 10));
        let out = density_window_check(&h, &spec, WindowMode::Exact, &Budget::default()).unwrap();
        let (w, d) = out.witness.unwrap();
        assert_eq!(w, vec![0, 1, 2, 3]);
        assert_eq!(d, rat_int(1));
        assert_eq!(out.worst_deviation, rat(1, 2));
    }

    #[test]
    fn sampled_mode_is_seeded() {
        let h = crate::gen::random_hypergraph(3, 20, 0.5, 4).unwrap();
        let spec = DensityWindowSpec::new(8, rat(49, 100));
        let mode = WindowMode::Sampled { samples: 50, seed: 9 };
        let a = density_window_check(&h, &spec, mode, &Budget::default()).unwrap();
        let b = density_window_check(&h, &spec, mode, &Budget::default()).unwrap();
        assert_eq!(a.worst_deviation, b.worst_deviation);
        assert_eq!(a.subsets_checked, b.subsets_checked);
        assert!(!a.complete);
    }

    #[test]
    fn spec_validation() {
        let h = Hypergraph::complete(3, 8).unwrap();
        assert!(density_window_check(
            &h,
            &DensityWindowSpec::new(2, rat(1, 10)),
            WindowMode::Exact,
            &Budget::default()
        )
        .is_err());
        assert!(density_window_check(
            &h,
            &DensityWindowSpec::new(4, rat(1, 2)),
            WindowMode::Exact,
            &Budget::default()
        )
        .is_err());
    }
}
