//! Predefined closed-form versus Fock-oracle comparison grids.

use num_complex::Complex64;

use crate::cat::{self, CatMixture};
use crate::coherent::{Amplitude, TwoStateMixture};
use crate::error::Result;
use crate::fock::{oracle, DEFAULT_TAIL_TOL};
use crate::purity::{self, SeparableCatMixture, ThermalMixture};
use crate::record::{OutputRecord, Quantity};
use crate::replica;
use crate::Subsystem;

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Full,
}

/// One comparison; evaluating it runs both the closed form and the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Case {
    TwoState(TwoStateMixture),
    Reduced(CatMixture, Subsystem),
    Joint(CatMixture),
    CatGap(SeparableCatMixture),
    ThermalGap(ThermalMixture),
}

impl Case {
    pub fn evaluate(&self) -> Result<OutputRecord> {
        let tol = DEFAULT_TAIL_TOL;
        Ok(match self {
            Case::TwoState(s) => {
                let inputs = [
                    ("a", s.a()),
                    ("b", s.b()),
                    ("c_re", s.c().re),
                    ("c_im", s.c().im),
                    ("alpha_re", s.alpha().re()),
                    ("alpha_im", s.alpha().im()),
                    ("beta_re", s.beta().re()),
                    ("beta_im", s.beta().im()),
                ];
                OutputRecord::new(Quantity::EntropyNats, inputs, replica::entropy_closed(s)?)
                    .with_oracle(oracle::two_state_entropy(s, tol)?)
            }
            Case::Reduced(s, keep) => {
                let mode = match keep {
                    Subsystem::First => 1.0,
                    Subsystem::Second => 2.0,
                };
                OutputRecord::new(
                    Quantity::ReducedEntropy,
                    cat_inputs(s.a(), s.b(), s.alpha1(), s.alpha2()).chain([("subsystem", mode)]),
                    cat::reduced_entropy(s, *keep)?,
                )
                .with_oracle(oracle::cat_reduced_entropy(s, *keep, tol)?)
            }
            Case::Joint(s) => OutputRecord::new(
                Quantity::JointEntropy,
                cat_inputs(s.a(), s.b(), s.alpha1(), s.alpha2()),
                cat::joint_entropy(s),
            )
            .with_oracle(oracle::cat_joint_entropy(s, tol)?),
            Case::CatGap(s) => OutputRecord::new(
                Quantity::PurityGap,
                cat_inputs(s.a, s.b, s.alpha1, s.alpha2),
                purity::purity_gap_cat(s)?,
            )
            .with_oracle(oracle::separable_cat_purities(s, tol)?.gap()),
            Case::ThermalGap(s) => OutputRecord::new(
                Quantity::PurityGap,
                [
                    ("alpha1_re", s.alpha1.re()),
                    ("alpha1_im", s.alpha1.im()),
                    ("alpha2_re", s.alpha2.re()),
                    ("alpha2_im", s.alpha2.im()),
                    ("mean_photons", s.mean_photons),
                ],
                purity::purity_gap_thermal(s),
            )
            .with_oracle(oracle::thermal_purities(s, tol)?.gap()),
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Case::TwoState(_) => "two_state_entropy",
            Case::Reduced(..) => "cat_reduced_entropy",
            Case::Joint(_) => "cat_joint_entropy",
            Case::CatGap(_) => "cat_purity_gap",
            Case::ThermalGap(_) => "thermal_purity_gap",
        }
    }
}

fn cat_inputs(
    a: f64,
    b: f64,
    alpha1: Amplitude,
    alpha2: Amplitude,
) -> impl Iterator<Item = (&'static str, f64)> {
    [
        ("a", a),
        ("b", b),
        ("alpha1_re", alpha1.re()),
        ("alpha1_im", alpha1.im()),
        ("alpha2_re", alpha2.re()),
        ("alpha2_im", alpha2.im()),
    ]
    .into_iter()
}

/// Deterministic two-state mixtures with `|α|, |β| <= 3`.
pub fn two_state_grid(full: bool) -> Vec<TwoStateMixture> {
    let labels: &[(f64, f64)] = if full {
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (-1.0, 0.0),
            (0.5, 1.5),
            (-2.0, 1.0),
            (3.0, 0.0),
            (0.3, -2.5),
        ]
    } else {
        &[(1.0, 0.0), (-1.0, 0.0), (0.5, 1.5), (-2.0, 1.0)]
    };
    let weights: &[(f64, f64, f64)] = if full {
        &[(0.5, 0.5, 0.0), (0.2, 0.8, 0.3), (0.7, 0.3, 0.8)]
    } else {
        &[(0.5, 0.5, 0.0), (0.2, 0.8, 0.6)]
    };
    let mut out = Vec::new();
    for (i, &(ar, ai)) in labels.iter().enumerate() {
        for &(br, bi) in &labels[i + 1..] {
            for (k, &(a, b, frac)) in weights.iter().enumerate() {
                let c = Complex64::from_polar(frac * (a * b).sqrt(), 0.9 * k as f64);
                let alpha = Amplitude::new(ar, ai).expect("finite");
                let beta = Amplitude::new(br, bi).expect("finite");
                if let Ok(s) = TwoStateMixture::normalized(a, b, c, alpha, beta) {
                    out.push(s);
                }
            }
        }
    }
    out
}

pub fn suite_cases(suite: Suite) -> Vec<Case> {
    let full = suite == Suite::Full;
    let mut cases: Vec<Case> = two_state_grid(full).into_iter().map(Case::TwoState).collect();

    let (moduli, ratios, weights): (&[f64], &[f64], &[f64]) = if full {
        (&[0.25, 0.5, 1.0, 2.0], &[0.5, 1.0, 2.0], &[0.2, 0.5, 0.8])
    } else {
        (&[0.5, 1.0], &[0.5, 1.0, 2.0], &[0.5])
    };
    let keeps: &[Subsystem] = if full {
        &[Subsystem::First, Subsystem::Second]
    } else {
        &[Subsystem::First]
    };
    for &x in moduli {
        for &r in ratios {
            for &a in weights {
                let spec = cat::sweep_spec(r, x, a, 1.0 - a).expect("nonzero amplitudes");
                for &keep in keeps {
                    cases.push(Case::Reduced(spec, keep));
                }
            }
        }
    }

    let joint: &[(f64, f64)] = if full {
        &[(0.3, 1.0), (0.5, 1.0), (0.9, 1.0)]
    } else {
        &[(0.3, 0.5), (0.5, 0.5)]
    };
    for &(a, x) in joint {
        let spec = cat::sweep_spec(1.0, x, a, 1.0 - a).expect("nonzero amplitudes");
        cases.push(Case::Joint(spec));
    }

    let amps: &[f64] = if full { &[0.0, 0.5, 1.0, 2.0] } else { &[0.0, 1.0] };
    let cat_weights: &[f64] = if full { &[0.2, 0.5, 0.8] } else { &[0.5] };
    for &x1 in amps {
        for &x2 in amps {
            for &a in cat_weights {
                let s = SeparableCatMixture::new(a, 1.0 - a, Amplitude::real(x1), Amplitude::real(x2))
                    .expect("weights sum to one");
                cases.push(Case::CatGap(s));
            }
        }
    }

    let photons: &[f64] = if full { &[0.0, 0.5, 1.0, 2.0] } else { &[0.0, 1.0] };
    for &n in photons {
        for &x1 in amps {
            for &x2 in amps {
                let s = ThermalMixture::new(Amplitude::real(x1), Amplitude::real(x2), n)
                    .expect("valid mean photon number");
                cases.push(Case::ThermalGap(s));
            }
        }
    }
    cases
}
