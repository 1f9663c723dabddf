//! Quasi-morphism measurements on braid groups: defect sampling,
//! homogenization, the odd/even signature–Rasmussen combinations, and the
//! stable commutator/torsion length bounds they certify.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::braid::{braids_equal, delta_braid, parse_braid, torsion_generators, BraidWord};
use crate::error::{Error, Result};
use crate::lee::{rasmussen_s, SConfig};
use crate::seifert::link_signature;
use crate::Rational;

/// Renders a rational as a plain integer when possible, else "p/q".
pub fn rational_string(r: &Rational) -> String {
    if r.denom() == &crate::Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses an integer or "p/q" string.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    match text.split_once('/') {
        None => {
            let n: crate::Int = text.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: crate::Int = p.trim().parse().map_err(|_| bad())?;
            let q: crate::Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

/// The braid invariants that are studied as (quasi-)morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    /// Exponent-sum homomorphism.
    LinkingNumber,
    /// Signature of the closure.
    Signature,
    /// Rasmussen invariant of the closure.
    RasmussenS,
    /// s − lk + n − 1, which vanishes on positive braids.
    SlkCombination,
}

impl InvariantKind {
    pub fn name(&self) -> &'static str {
        match self {
            InvariantKind::LinkingNumber => "lk",
            InvariantKind::Signature => "sigma",
            InvariantKind::RasmussenS => "s",
            InvariantKind::SlkCombination => "s-lk+n-1",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "lk" => Some(InvariantKind::LinkingNumber),
            "sigma" => Some(InvariantKind::Signature),
            "s" => Some(InvariantKind::RasmussenS),
            "slk" | "s-lk+n-1" => Some(InvariantKind::SlkCombination),
            _ => None,
        }
    }
}

/// An invariant together with the engine configuration used to evaluate it.
#[derive(Debug, Clone)]
pub struct BraidInvariant {
    kind: InvariantKind,
    config: SConfig,
}

impl BraidInvariant {
    pub fn new(kind: InvariantKind) -> Self {
        BraidInvariant { kind, config: SConfig::default() }
    }

    pub fn with_config(kind: InvariantKind, config: SConfig) -> Self {
        BraidInvariant { kind, config }
    }

    pub fn kind(&self) -> InvariantKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// Defect bound carried by each invariant on B_n: n+1 for s, n for the
    /// signature, 0 for the homomorphism lk, and 2n for s − lk + n − 1.
    pub fn defect_bound(&self, n: usize) -> i64 {
        let n = n as i64;
        match self.kind {
            InvariantKind::LinkingNumber => 0,
            InvariantKind::Signature => n,
            InvariantKind::RasmussenS => n + 1,
            InvariantKind::SlkCombination => 2 * n,
        }
    }

    /// Evaluates on a word; `None` when the closure is out of reach of the
    /// exact engine and no closed form applies.
    pub fn eval(&self, w: &BraidWord) -> Option<i64> {
        match self.kind {
            InvariantKind::LinkingNumber => Some(w.linking_number()),
            InvariantKind::Signature => Some(link_signature(w)),
            InvariantKind::RasmussenS => rasmussen_s(w, &self.config).value(),
            InvariantKind::SlkCombination => rasmussen_s(w, &self.config)
                .value()
                .map(|s| s - w.linking_number() + w.strands() as i64 - 1),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DefectWitness {
    pub alpha: String,
    pub beta: String,
    pub defect: i64,
}

/// Outcome of seeded defect sampling for one invariant on one braid group.
#[derive(Debug, Clone, Serialize)]
pub struct DefectReport {
    pub invariant: String,
    pub strands: usize,
    pub samples: usize,
    pub max_len: usize,
    pub seed: u64,
    pub max_observed: i64,
    pub bound: i64,
    /// Sample pairs exceeding the bound; must stay empty.
    pub violations: Vec<DefectWitness>,
    /// Samples skipped because the invariant was not computable.
    pub skipped: usize,
    /// A pair realizing the maximal observed defect.
    pub witness: Option<DefectWitness>,
}

pub(crate) fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(1..=max_len.max(1));
    let letters = (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..n) as i32;
            if rng.gen_bool(0.5) {
                idx
            } else {
                -idx
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("sampled letters are in range")
}

/// Samples `samples` independent pairs (α, β) of seeded uniform random words
/// and records the extremes of |φ(αβ) − φ(α) − φ(β)|.
pub fn defect_sample(
    inv: &BraidInvariant,
    n: usize,
    samples: usize,
    max_len: usize,
    seed: u64,
) -> Result<DefectReport> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = inv.defect_bound(n);
    let mut report = DefectReport {
        invariant: inv.name().to_string(),
        strands: n,
        samples,
        max_len,
        seed,
        max_observed: 0,
        bound,
        violations: Vec::new(),
        skipped: 0,
        witness: None,
    };
    for _ in 0..samples {
        let alpha = random_word(&mut rng, n, max_len);
        let beta = random_word(&mut rng, n, max_len);
        let product = alpha.concat(&beta)?;
        let (Some(fab), Some(fa), Some(fb)) =
            (inv.eval(&product), inv.eval(&alpha), inv.eval(&beta))
        else {
            report.skipped += 1;
            continue;
        };
        let defect = (fab - fa - fb).abs();
        if defect > report.max_observed {
            report.max_observed = defect;
            report.witness = Some(DefectWitness {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                defect,
            });
        }
        if defect > bound {
            report.violations.push(DefectWitness {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                defect,
            });
        }
    }
    Ok(report)
}

/// The sampled sequence φ(g^k)/k with an exact closed-form limit when one is
/// known (positive words, powers of the full twist).
#[derive(Debug, Clone)]
pub struct HomogenizationEstimate {
    pub invariant: String,
    pub braid: String,
    /// (k, φ(g^k)/k) as exact rationals.
    pub samples: Vec<(u32, Rational)>,
    pub extrapolated: Option<Rational>,
    /// Powers where the invariant was not computable.
    pub failed: Vec<u32>,
}

impl HomogenizationEstimate {
    /// CSV rows k, exact value, decimal approximation.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,value,decimal\n");
        for (k, v) in &self.samples {
            let dec = num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::NAN);
            out.push_str(&format!("{},{},{:.10}\n", k, rational_string(v), dec));
        }
        out
    }
}

impl Serialize for HomogenizationEstimate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Sample<'a> {
            k: u32,
            value: &'a str,
        }
        let mut st = serializer.serialize_struct("HomogenizationEstimate", 5)?;
        st.serialize_field("invariant", &self.invariant)?;
        st.serialize_field("braid", &self.braid)?;
        let samples: Vec<(u32, String)> = self
            .samples
            .iter()
            .map(|(k, v)| (*k, rational_string(v)))
            .collect();
        struct Samples<'a>(&'a [(u32, String)]);
        impl Serialize for Samples<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    seq.serialize_element(&Sample { k: *k, value: v })?;
                }
                seq.end()
            }
        }
        st.serialize_field("samples", &Samples(&samples))?;
        st.serialize_field(
            "extrapolated",
            &self.extrapolated.as_ref().map(rational_string),
        )?;
        st.serialize_field("failed", &self.failed)?;
        st.end()
    }
}

/// Is `g` a power of the full twist? Returns the exponent when it is.
fn full_twist_power(g: &BraidWord) -> Option<i64> {
    let n = g.strands() as i64;
    let full_lk = n * (n - 1);
    let lk = g.linking_number();
    if lk % full_lk != 0 {
        return None;
    }
    let m = lk / full_lk;
    let delta = delta_braid(g.strands()).ok()?.power(m);
    braids_equal(g, &delta).ok()?.then_some(m)
}

/// Computes φ(g^k)/k for k = 1..k_max and attaches the exact limit when the
/// word admits one.
pub fn homogenize(inv: &BraidInvariant, g: &BraidWord, k_max: u32) -> HomogenizationEstimate {
    let mut samples = Vec::new();
    let mut failed = Vec::new();
    for k in 1..=k_max.max(1) {
        match inv.eval(&g.power(k as i64)) {
            Some(v) => samples.push((k, Rational::new(v.into(), (k as i64).into()))),
            None => failed.push(k),
        }
    }

    let n = g.strands() as i64;
    let extrapolated = match inv.kind() {
        InvariantKind::LinkingNumber => Some(Rational::from_integer(g.linking_number().into())),
        InvariantKind::RasmussenS => {
            if g.is_positive() || full_twist_power(g).is_some() {
                // s(g^k) = 1 + k·lk(g) − n for positive words, so the
                // homogenization is exactly lk(g); central powers included.
                Some(Rational::from_integer(g.linking_number().into()))
            } else {
                None
            }
        }
        InvariantKind::SlkCombination => {
            if g.is_positive() {
                Some(Rational::zero())
            } else {
                None
            }
        }
        InvariantKind::Signature => full_twist_power(g).map(|m| {
            let per_twist = if n % 2 == 1 {
                Rational::new((n * n - 1).into(), 2.into())
            } else {
                Rational::new((n * n).into(), 2.into())
            };
            per_twist * Rational::from_integer(m.into())
        }),
    };

    HomogenizationEstimate {
        invariant: inv.name().to_string(),
        braid: g.to_string(),
        samples,
        extrapolated,
        failed,
    }
}

/// 2n(n−1)·σ̃ − (n²−1)·s̃ for odd n; vanishes on the full twist.
pub fn phi_odd(n: i64, sigma_tilde: &Rational, s_tilde: &Rational) -> Result<Rational> {
    if n % 2 == 0 {
        return Err(Error::ParityMismatch(n, "odd"));
    }
    Ok(combination(n, n * n - 1, sigma_tilde, s_tilde))
}

/// 2n(n−1)·σ̃ − n²·s̃ for even n; vanishes on the full twist.
pub fn phi_even(n: i64, sigma_tilde: &Rational, s_tilde: &Rational) -> Result<Rational> {
    if n % 2 == 1 {
        return Err(Error::ParityMismatch(n, "even"));
    }
    Ok(combination(n, n * n, sigma_tilde, s_tilde))
}

fn combination(n: i64, s_coeff: i64, sigma_tilde: &Rational, s_tilde: &Rational) -> Rational {
    let a = Rational::from_integer((2 * n * (n - 1)).into());
    let b = Rational::from_integer(s_coeff.into());
    a * sigma_tilde.clone() - b * s_tilde.clone()
}

/// Lower bounds for stable commutator length (|φ|/2D) and stable torsion
/// length (|φ|/D) certified by a homogeneous quasi-morphism value φ with
/// defect D.
#[derive(Debug, Clone, Serialize)]
pub struct StableLengthBounds {
    #[serde(serialize_with = "ser_rational")]
    pub c_lower: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub t_lower: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub defect_used: Rational,
}

pub fn stable_length_bounds(phi_value: &Rational, defect: &Rational) -> Result<StableLengthBounds> {
    if !defect.is_positive() {
        return Err(Error::NonPositiveDefect(rational_string(defect)));
    }
    let abs = phi_value.abs();
    Ok(StableLengthBounds {
        c_lower: abs.clone() / (Rational::from_integer(2.into()) * defect.clone()),
        t_lower: abs / defect.clone(),
        defect_used: defect.clone(),
    })
}

/// Verification report for the torsion-generator and commutator structure of
/// B_n modulo its center.
#[derive(Debug, Clone, Serialize)]
pub struct Prop1Report {
    pub strands: usize,
    /// a^n equals the full twist, a = σ1⋯σ_{n−1}.
    pub a_power_is_full_twist: bool,
    /// b^{n−1} equals the full twist, b = σ1⋯σ_{n−1}σ1.
    pub b_power_is_full_twist: bool,
    pub sampled_words: usize,
    pub seed: u64,
    /// Sampled words w whose w^{n(n−1)}·Δ^{−lk(w)} failed to land in ker lk;
    /// must stay empty.
    pub kernel_failures: Vec<String>,
}

pub fn prop1_verify(n: usize, samples: usize, seed: u64) -> Result<Prop1Report> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let delta = delta_braid(n)?;
    let (a, b) = torsion_generators(n)?;
    let a_ok = braids_equal(&a.power(n as i64), &delta)?;
    let b_ok = braids_equal(&b.power(n as i64 - 1), &delta)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let exponent = (n * (n - 1)) as i64;
    for _ in 0..samples {
        let w = random_word(&mut rng, n, 4);
        let z = w.power(exponent).concat(&delta.power(-w.linking_number()))?;
        if z.linking_number() != 0 {
            failures.push(w.to_string());
        }
    }
    Ok(Prop1Report {
        strands: n,
        a_power_is_full_twist: a_ok,
        b_power_is_full_twist: b_ok,
        sampled_words: samples,
        seed,
        kernel_failures: failures,
    })
}

/// Verification report for the explicit small-braid identities: the B5
/// conjugation flipping σ1σ4⁻¹, the commutator expression for its even
/// powers, and the component counts of powers of σ1σ3σ5⁻² in B6.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleChecksReport {
    /// β (σ1σ4⁻¹) β⁻¹ = (σ1σ4⁻¹)⁻¹ for β = σ2σ3σ4σ1σ2σ3σ1⁻¹σ2⁻¹.
    pub b5_conjugation: bool,
    /// α^{2l} = α^l β⁻¹ α^{−l} β for l = 1, 2, 3.
    pub commutator_identity: Vec<(i64, bool)>,
    /// (m, components of the closure of (σ1σ3σ5⁻²)^m) for m = 1..4.
    pub component_counts: Vec<(i64, usize)>,
    /// lk((σ1σ3σ5⁻²)^m) = 0 for all sampled m.
    pub linking_numbers_vanish: bool,
    pub notes: Vec<String>,
}

pub fn example_checks() -> Result<ExampleChecksReport> {
    let alpha = parse_braid("1 -4", Some(5))?;
    let beta = parse_braid("2 3 4 1 2 3 -1 -2", Some(5))?;
    let conj = beta.concat(&alpha)?.concat(&beta.inverse())?;
    let b5 = braids_equal(&conj, &alpha.inverse())?;

    let mut commutator_identity = Vec::new();
    for l in 1..=3i64 {
        let lhs = alpha.power(2 * l);
        let rhs = alpha
            .power(l)
            .concat(&beta.inverse())?
            .concat(&alpha.power(-l))?
            .concat(&beta)?;
        commutator_identity.push((l, braids_equal(&lhs, &rhs)?));
    }

    let base = parse_braid("1 3 -5 -5", Some(6))?;
    let mut component_counts = Vec::new();
    let mut lk_zero = true;
    for m in 1..=4i64 {
        let p = base.power(m);
        component_counts.push((m, p.closure_component_count()));
        lk_zero &= p.linking_number() == 0;
    }

    Ok(ExampleChecksReport {
        b5_conjugation: b5,
        commutator_identity,
        component_counts,
        linking_numbers_vanish: lk_zero,
        notes: vec![
            "component counts alternate 4 (odd m) / 6 (even m): the two single-column \
             pieces close to (2,m) torus links with 1 or 2 components, and the doubled \
             third column always closes to a 2-component (2,-2m) torus link"
                .to_string(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(kind: InvariantKind) -> BraidInvariant {
        BraidInvariant::new(kind)
    }

    #[test]
    fn invariant_evaluations() {
        let w = parse_braid("1 1", Some(2)).unwrap();
        assert_eq!(inv(InvariantKind::LinkingNumber).eval(&w), Some(2));
        assert_eq!(inv(InvariantKind::Signature).eval(&w), Some(1));
        assert_eq!(inv(InvariantKind::RasmussenS).eval(&w), Some(1));
        assert_eq!(inv(InvariantKind::SlkCombination).eval(&w), Some(0));
    }

    #[test]
    fn lk_has_no_defect() {
        let report =
            defect_sample(&inv(InvariantKind::LinkingNumber), 4, 200, 8, 7).unwrap();
        assert_eq!(report.max_observed, 0);
        assert!(report.violations.is_empty());
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn hopf_defect_values() {
        // α = β = σ1 in B2: s(σ1²) − 2 s(σ1) = 1, within the bound 3.
        let s = inv(InvariantKind::RasmussenS);
        let w = parse_braid("1", Some(2)).unwrap();
        let prod = w.concat(&w).unwrap();
        let d = (s.eval(&prod).unwrap() - 2 * s.eval(&w).unwrap()).abs();
        assert_eq!(d, 1);
        assert!(d <= s.defect_bound(2));

        let sig = inv(InvariantKind::Signature);
        let d = (sig.eval(&prod).unwrap() - 2 * sig.eval(&w).unwrap()).abs();
        assert_eq!(d, 1);
        assert!(d <= sig.defect_bound(2));
    }

    #[test]
    fn defect_sampling_respects_bounds() {
        for kind in [
            InvariantKind::RasmussenS,
            InvariantKind::Signature,
        ] {
            let report = defect_sample(&inv(kind), 3, 120, 4, 11).unwrap();
            assert!(report.violations.is_empty(), "{:?}", kind);
            assert!(report.max_observed <= report.bound);
            assert_eq!(report.skipped, 0);
        }
    }

    #[test]
    fn homogenize_lk_is_constant() {
        let g = parse_braid("1 -2 2 1", Some(3)).unwrap();
        let est = homogenize(&inv(InvariantKind::LinkingNumber), &g, 6);
        for (_, v) in &est.samples {
            assert_eq!(v, &Rational::from_integer(2.into()));
        }
        assert_eq!(est.extrapolated, Some(Rational::from_integer(2.into())));
    }

    #[test]
    fn homogenize_full_twist() {
        let d2 = delta_braid(2).unwrap();
        let s_est = homogenize(&inv(InvariantKind::RasmussenS), &d2, 10);
        // s(Δ2^k)/k = (2k−1)/k.
        for (k, v) in &s_est.samples {
            let expect = Rational::new((2 * *k as i64 - 1).into(), (*k as i64).into());
            assert_eq!(v, &expect);
        }
        assert_eq!(s_est.extrapolated, Some(Rational::from_integer(2.into())));

        let sig_est = homogenize(&inv(InvariantKind::Signature), &d2, 10);
        for (k, v) in &sig_est.samples {
            let expect = Rational::new((2 * *k as i64 - 1).into(), (*k as i64).into());
            assert_eq!(v, &expect);
        }
        // n even: σ̃(Δ_n) = n²/2 = 2.
        assert_eq!(sig_est.extrapolated, Some(Rational::from_integer(2.into())));
    }

    #[test]
    fn phi_combinations_vanish_on_center_values() {
        let four = Rational::from_integer(4.into());
        let six = Rational::from_integer(6.into());
        assert_eq!(phi_odd(3, &four, &six).unwrap(), Rational::zero());
        let eight = Rational::from_integer(8.into());
        let twelve = Rational::from_integer(12.into());
        assert_eq!(phi_even(4, &eight, &twelve).unwrap(), Rational::zero());

        assert!(matches!(phi_odd(4, &four, &six), Err(Error::ParityMismatch(4, "odd"))));
        assert!(matches!(phi_even(3, &four, &six), Err(Error::ParityMismatch(3, "even"))));
    }

    #[test]
    fn phi_odd_on_alternating_input() {
        // σ̃ = s̃ collapses φ_odd to (n²−2n+1)·s̃.
        let n = 5i64;
        let s_tilde = Rational::new(7.into(), 3.into());
        let v = phi_odd(n, &s_tilde, &s_tilde).unwrap();
        let expect = Rational::from_integer((n * n - 2 * n + 1).into()) * s_tilde;
        assert_eq!(v, expect);
    }

    #[test]
    fn stable_bounds() {
        let b = stable_length_bounds(
            &Rational::from_integer(10.into()),
            &Rational::from_integer(5.into()),
        )
        .unwrap();
        assert_eq!(b.c_lower, Rational::from_integer(1.into()));
        assert_eq!(b.t_lower, Rational::from_integer(2.into()));

        let zero = stable_length_bounds(&Rational::zero(), &Rational::from_integer(5.into()))
            .unwrap();
        assert_eq!(zero.c_lower, Rational::zero());
        assert_eq!(zero.t_lower, Rational::zero());

        assert!(stable_length_bounds(
            &Rational::from_integer(1.into()),
            &Rational::zero()
        )
        .is_err());
    }

    #[test]
    fn prop1_small_cases() {
        for n in 2..=5 {
            let report = prop1_verify(n, 10, 3).unwrap();
            assert!(report.a_power_is_full_twist, "n={n}");
            assert!(report.b_power_is_full_twist, "n={n}");
            assert!(report.kernel_failures.is_empty());
        }
    }

    #[test]
    fn example_report() {
        let report = example_checks().unwrap();
        assert!(report.b5_conjugation);
        assert!(report.commutator_identity.iter().all(|&(_, ok)| ok));
        assert_eq!(
            report.component_counts,
            vec![(1, 4), (2, 6), (3, 4), (4, 6)]
        );
        assert!(report.linking_numbers_vanish);
    }

    #[test]
    fn rational_round_trip() {
        let r = parse_rational("-3/7").unwrap();
        assert_eq!(rational_string(&r), "-3/7");
        assert_eq!(rational_string(&parse_rational("5").unwrap()), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
