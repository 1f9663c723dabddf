//! Orbit closures of the constant flow (1, ω) on the unit torus and the
//! asymptotics of their invariants.
//!
//! The orbit from x runs for time T and is closed by the short geodesic
//! chord back to x. At integer times T = p with ‖pω‖ < ε the chord is local,
//! the closed curve is embedded, and its knot type is the (p, q) torus knot
//! with q the nearest integer to pω, represented by the braid (σ1⋯σ_{p−1})^q.
//! Floating point only ever enters the return-time search; every invariant
//! is then computed exactly from the integer pair (p, q).
//!
//! Time is measured in first-coordinate windings of the unit-square torus,
//! which puts the s/T² limit at ω itself; the normalization-free target is
//! the ratio s = 2σ in the limit.

use num_traits::{Float, FromPrimitive, ToPrimitive};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::seifert::link_signature;

/// Linear torus flow sampling parameters.
#[derive(Debug, Clone, Copy)]
pub struct TorusFlowConfig<F = crate::Real> {
    /// Slope of the constant field (1, ω); irrational slopes are the
    /// interesting case.
    pub omega: F,
    /// Start point in [0,1)².
    pub x0: (F, F),
    /// Return-proximity threshold, strictly between 0 and 1/2.
    pub epsilon: F,
}

impl<F: Float + FromPrimitive> TorusFlowConfig<F> {
    pub fn new(omega: F, x0: (F, F), epsilon: F) -> Result<Self> {
        let half = F::from_f64(0.5).unwrap();
        if !(epsilon > F::zero() && epsilon < half) {
            return Err(Error::BadEpsilon);
        }
        Ok(TorusFlowConfig { omega, x0, epsilon })
    }
}

fn frac<F: Float>(x: F) -> F {
    x - x.floor()
}

/// Distance to the nearest integer.
fn circle_distance<F: Float>(x: F) -> F {
    (x - x.round()).abs()
}

/// Position of the orbit after time `t`: (x₁ + t, x₂ + ωt) mod 1.
pub fn orbit_endpoint<F: Float>(cfg: &TorusFlowConfig<F>, t: F) -> (F, F) {
    (frac(cfg.x0.0 + t), frac(cfg.x0.1 + cfg.omega * t))
}

/// Integer times T = p ≤ t_max at which the orbit returns ε-close to its
/// start. For irrational ω these cluster at continued-fraction denominators.
pub fn return_times<F: Float + FromPrimitive>(cfg: &TorusFlowConfig<F>, t_max: F) -> Vec<F> {
    let mut out = Vec::new();
    let mut p = 1u64;
    loop {
        let t = F::from_u64(p).unwrap();
        if t > t_max {
            break;
        }
        if circle_distance(cfg.omega * t) < cfg.epsilon {
            out.push(t);
        }
        p += 1;
    }
    out
}

/// A closed orbit piece identified as a torus knot.
#[derive(Debug, Clone)]
pub struct OrbitKnot {
    /// Closing time, equal to the first-coordinate winding count.
    pub t: f64,
    /// Windings in the first coordinate.
    pub p: i64,
    /// Windings in the second coordinate.
    pub q: i64,
    /// Length of the closing chord on the torus.
    pub chord_displacement: f64,
    /// Braid representative (σ1⋯σ_{p−1})^q of the (p, q) torus knot.
    pub braid_rep: BraidWord,
}

/// Identifies the knot type of the orbit closed at time `t`. Refuses times
/// whose chord is not shorter than ε, and closures that are not embedded
/// (non-coprime windings).
pub fn orbit_closure_knot<F: Float + FromPrimitive + ToPrimitive>(
    cfg: &TorusFlowConfig<F>,
    t: F,
) -> Result<OrbitKnot> {
    let t_f64 = t.to_f64().unwrap();
    let p = t_f64.round() as i64;
    let chord = circle_distance(cfg.omega * t).to_f64().unwrap();
    let integral = (t_f64 - p as f64).abs() < 1e-9;
    if !integral || p < 1 || chord >= cfg.epsilon.to_f64().unwrap() {
        return Err(Error::ChordTooLong {
            t: t_f64,
            chord: if integral { chord } else { f64::INFINITY },
            epsilon: cfg.epsilon.to_f64().unwrap(),
        });
    }
    let q = (cfg.omega * t).round().to_f64().unwrap() as i64;
    if num_integer::gcd(p, q.abs()) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let braid_rep = torus_braid(p, q);
    debug_assert_eq!(braid_rep.closure_component_count(), 1);
    Ok(OrbitKnot { t: t_f64, p, q, chord_displacement: chord, braid_rep })
}

/// The braid (σ1⋯σ_{p−1})^q; p = 1 closes to the unknot, represented on two
/// strands.
fn torus_braid(p: i64, q: i64) -> BraidWord {
    if p == 1 {
        return BraidWord::new(2, vec![1]).unwrap();
    }
    let round: Vec<i32> = (1..p as i32).collect();
    BraidWord::new(p as usize, round).unwrap().power(q)
}

/// One sampled return time with its exact invariants.
#[derive(Debug, Clone)]
pub struct SeriesRow {
    pub t: f64,
    pub p: i64,
    pub q: i64,
    /// Writhe q(p−1) of the torus-braid diagram.
    pub writhe: i64,
    /// Seifert circle count p of the torus-braid diagram.
    pub circles: i64,
    /// Rasmussen invariant sign(q)·(p−1)(|q|−1), exact.
    pub s: i64,
    /// Exact signature, absent when the Seifert matrix was above the
    /// configured size limit.
    pub sigma: Option<i64>,
}

impl SeriesRow {
    pub fn w_per_t2(&self) -> f64 {
        self.writhe as f64 / (self.t * self.t)
    }

    pub fn o_per_t2(&self) -> f64 {
        self.circles as f64 / (self.t * self.t)
    }

    pub fn s_per_t2(&self) -> f64 {
        self.s as f64 / (self.t * self.t)
    }

    pub fn sigma_per_t2(&self) -> Option<f64> {
        self.sigma.map(|s| s as f64 / (self.t * self.t))
    }

    pub fn s_over_sigma(&self) -> Option<f64> {
        match self.sigma {
            Some(sig) if sig != 0 => Some(self.s as f64 / sig as f64),
            _ => None,
        }
    }
}

/// Sampled asymptotic series over all return times up to `t_max`.
#[derive(Debug, Clone)]
pub struct AsymptoticSeries {
    pub rows: Vec<SeriesRow>,
    /// Return times that were skipped because the closure was not embedded.
    pub skipped: Vec<(f64, i64, i64)>,
}

/// Caps the Seifert-matrix size used for exact signatures in series rows.
pub const DEFAULT_SIGMA_SIZE_LIMIT: usize = 2000;

/// Computes one row per return time: the braid representative, the exact
/// Rasmussen invariant through the positive-braid formula, and the exact
/// signature from the Seifert matrix.
pub fn asymptotic_series<F: Float + FromPrimitive + ToPrimitive>(
    cfg: &TorusFlowConfig<F>,
    t_max: F,
    sigma_size_limit: usize,
) -> AsymptoticSeries {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for t in return_times(cfg, t_max) {
        let knot = match orbit_closure_knot(cfg, t) {
            Ok(k) => k,
            Err(Error::NotCoprime { p, q }) => {
                skipped.push((t.to_f64().unwrap(), p, q));
                continue;
            }
            Err(_) => continue,
        };
        let (p, q) = (knot.p, knot.q);
        let writhe = q * (p - 1);
        let s = q.signum() * (p - 1) * (q.abs() - 1);
        let loops = (q.abs() * (p - 1) - p + 1).max(0) as usize;
        let sigma = if p == 1 {
            Some(0)
        } else if loops <= sigma_size_limit {
            Some(link_signature(&knot.braid_rep))
        } else {
            None
        };
        rows.push(SeriesRow { t: knot.t, p, q, writhe, circles: p, s, sigma });
    }
    AsymptoticSeries { rows, skipped }
}

impl AsymptoticSeries {
    /// CSV with a header row; float columns fixed to 10 digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("T,p,q,w,o,s,sigma,w_T2,o_T2,sigma_T2,s_T2,s_sigma\n");
        for r in &self.rows {
            let sigma = r.sigma.map(|s| s.to_string()).unwrap_or_default();
            let sigma_t2 = r
                .sigma_per_t2()
                .map(|x| format!("{x:.10}"))
                .unwrap_or_default();
            let ratio = r
                .s_over_sigma()
                .map(|x| format!("{x:.10}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{:.10},{},{},{},{},{},{},{:.10},{:.10},{},{:.10},{}\n",
                r.t,
                r.p,
                r.q,
                r.writhe,
                r.circles,
                r.s,
                sigma,
                r.w_per_t2(),
                r.o_per_t2(),
                sigma_t2,
                r.s_per_t2(),
                ratio,
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOLDEN: f64 = 0.618_033_988_749_894_9;

    fn cfg(omega: f64, epsilon: f64) -> TorusFlowConfig {
        TorusFlowConfig::new(omega, (0.0, 0.0), epsilon).unwrap()
    }

    #[test]
    fn endpoints() {
        let c = cfg(0.5, 0.01);
        assert_eq!(orbit_endpoint(&c, 3.0), (0.0, 0.5));
        assert_eq!(orbit_endpoint(&c, 0.0), (0.0, 0.0));
        let g = cfg(GOLDEN, 0.05);
        let (x, y) = orbit_endpoint(&g, 13.0);
        assert!(x.abs() < 1e-12);
        assert!((y - 0.034441853748).abs() < 1e-9);
    }

    #[test]
    fn fibonacci_return_times() {
        let g = cfg(GOLDEN, 0.05);
        let times = return_times(&g, 40.0);
        assert!(times.contains(&13.0));
        assert!(times.contains(&34.0));
        assert!(!times.contains(&14.0));

        let rational = cfg(0.5, 0.01);
        let times = return_times(&rational, 10.0);
        assert_eq!(times, vec![2.0, 4.0, 6.0, 8.0, 10.0]);

        let tiny = cfg(GOLDEN, 0.001);
        assert!(return_times(&tiny, 30.0).is_empty());
    }

    #[test]
    fn knot_identification() {
        let g = cfg(GOLDEN, 0.05);
        let k13 = orbit_closure_knot(&g, 13.0).unwrap();
        assert_eq!((k13.p, k13.q), (13, 8));
        assert_eq!(k13.braid_rep.strands(), 13);
        assert_eq!(k13.braid_rep.len(), 12 * 8);
        assert_eq!(k13.braid_rep.closure_component_count(), 1);

        let k34 = orbit_closure_knot(&g, 34.0).unwrap();
        assert_eq!((k34.p, k34.q), (34, 21));

        let r = cfg(0.5, 0.01);
        let k2 = orbit_closure_knot(&r, 2.0).unwrap();
        assert_eq!((k2.p, k2.q), (2, 1));
        assert_eq!(k2.braid_rep.len(), 1);

        assert!(matches!(
            orbit_closure_knot(&g, 14.0),
            Err(Error::ChordTooLong { .. })
        ));
    }

    #[test]
    fn non_coprime_times_are_refused() {
        // ω = 0.5: at T = 4 the closure winds (4, 2), a (2, 1)-cabled link.
        let r = cfg(0.5, 0.01);
        assert!(matches!(
            orbit_closure_knot(&r, 4.0),
            Err(Error::NotCoprime { p: 4, q: 2 })
        ));
    }

    #[test]
    fn series_rows() {
        let g = cfg(GOLDEN, 0.05);
        let series = asymptotic_series(&g, 40.0, DEFAULT_SIGMA_SIZE_LIMIT);
        let t13 = series.rows.iter().find(|r| r.p == 13).unwrap();
        assert_eq!(t13.s, 84);
        assert!((t13.s_per_t2() - 84.0 / 169.0).abs() < 1e-12);
        let t34 = series.rows.iter().find(|r| r.p == 34).unwrap();
        assert_eq!(t34.s, 660);

        // o/T² decreases along the series.
        let o: Vec<f64> = series.rows.iter().map(|r| r.o_per_t2()).collect();
        assert!(o.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn csv_shape() {
        let r = cfg(0.5, 0.01);
        let series = asymptotic_series(&r, 2.0, DEFAULT_SIGMA_SIZE_LIMIT);
        let csv = series.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "T,p,q,w,o,s,sigma,w_T2,o_T2,sigma_T2,s_T2,s_sigma"
        );
        assert!(lines.next().unwrap().starts_with("2.0000000000,2,1,1,2,0,0,"));
    }

    #[test]
    fn epsilon_validation() {
        assert!(TorusFlowConfig::new(0.5, (0.0, 0.0), 0.0).is_err());
        assert!(TorusFlowConfig::new(0.5, (0.0, 0.0), 0.5).is_err());
    }
}
