use serde::Serialize;

use crate::algebra_core::{admissible_presentation, canonical_form, collapse, AlgebraPresentation};
use crate::complexes::{band_complex, square_is_zero, string_complex, BandParameter};
use crate::groebner::{certify_strong_koszul, coeff, quadratic_dual, Coeff};
use crate::invariants::invariant_report;
use crate::strings_curves::{
    classify_symmetry, curve_to_word, enumerate_bands, enumerate_strings, same_word, word_to_curve,
};
use crate::surface::{algebra_of_dissection, dissection, dual_graph, euler_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatteryBounds {
    pub max_letters: usize,
    pub max_arrows: usize,
}

impl Default for BatteryBounds {
    fn default() -> Self {
        BatteryBounds { max_letters: 6, max_arrows: 6 }
    }
}

/// Counts from running every check on a set of algebras.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BatteryTally {
    pub algebras: usize,
    pub certified: usize,
    pub finite_dimensional: usize,
    pub dual_match: usize,
    pub words: usize,
    pub word_mismatches: usize,
    pub complexes: usize,
    pub square_failures: usize,
    pub determinant_match: usize,
    pub gorenstein_match: usize,
    pub euler_ok: usize,
    pub failures: Vec<String>,
}

impl BatteryTally {
    pub fn merge(&mut self, other: BatteryTally) {
        self.algebras += other.algebras;
        self.certified += other.certified;
        self.finite_dimensional += other.finite_dimensional;
        self.dual_match += other.dual_match;
        self.words += other.words;
        self.word_mismatches += other.word_mismatches;
        self.complexes += other.complexes;
        self.square_failures += other.square_failures;
        self.determinant_match += other.determinant_match;
        self.gorenstein_match += other.gorenstein_match;
        self.euler_ok += other.euler_ok;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn polynomials() -> Vec<BandParameter> {
    let c = |xs: &[i64]| xs.iter().map(|&x| coeff(x)).collect::<Vec<Coeff>>();
    vec![
        BandParameter::polynomial(c(&[2, 1])),
        BandParameter::polynomial(c(&[1, 1, 1])),
        BandParameter::polynomial(c(&[2, 0, 0, 1])),
    ]
}

/// Runs certificate, dual, word, complex, invariant and topology checks on
/// one algebra.
pub fn check_algebra(name: &str, p: &AlgebraPresentation, bounds: BatteryBounds) -> BatteryTally {
    let mut t = BatteryTally { algebras: 1, ..Default::default() };
    let fail = |t: &mut BatteryTally, what: String| t.failures.push(format!("{name}: {what}"));
    let a = match admissible_presentation(p) {
        Ok(a) => a,
        Err(e) => {
            fail(&mut t, e.to_string());
            return t;
        }
    };
    let (cert, gb) = certify_strong_koszul(&a);
    if cert.certified {
        t.certified += 1;
    } else {
        fail(&mut t, format!("certificate: {}", cert.failure.unwrap_or_default()));
    }
    let d = match dissection(p) {
        Ok(d) => d,
        Err(e) => {
            fail(&mut t, e.to_string());
            return t;
        }
    };
    if euler_check(&d.ribbon, &d.topology).holds {
        t.euler_ok += 1;
    } else {
        fail(&mut t, "Euler characteristic".into());
    }
    match invariant_report(p) {
        Ok(r) => {
            if r.gorenstein == r.gorenstein_oracle {
                t.gorenstein_match += 1;
            } else {
                fail(&mut t, format!("Gorenstein {} vs oracle {}", r.gorenstein, r.gorenstein_oracle));
            }
            if let Some(c) = &r.cartan {
                t.finite_dimensional += 1;
                if c.all_match() {
                    t.determinant_match += 1;
                } else {
                    fail(&mut t, format!("determinant {} vs {} vs {}", c.det, c.product, c.gentle_det));
                }
            }
        }
        Err(e) => fail(&mut t, e.to_string()),
    }
    let dual_ok = (|| -> Option<bool> {
        let dd = dual_graph(&d).ok()?;
        let da = algebra_of_dissection(&dd.ribbon).ok()?;
        let qd = collapse(&quadratic_dual(&a).ok()?).ok()?;
        Some(canonical_form(&da).ok()? == canonical_form(&qd).ok()?)
    })();
    if dual_ok == Some(true) {
        t.dual_match += 1;
    } else {
        fail(&mut t, "dual dissection and Koszul dual differ".into());
    }

    let words: Vec<_> = enumerate_strings(p, bounds.max_letters, bounds.max_arrows)
        .into_iter()
        .chain(enumerate_bands(p, bounds.max_letters, bounds.max_arrows))
        .collect();
    let params = polynomials();
    let shift = 3;
    for w in &words {
        t.words += 1;
        let ok = word_to_curve(w, p, &d.ribbon).ok().and_then(|c| {
            let back = curve_to_word(&c, p, &d.ribbon).ok()?;
            let shifted = word_to_curve(&w.shifted(shift), p, &d.ribbon).ok()?;
            let shifted_back = curve_to_word(&c.shifted(shift), p, &d.ribbon).ok()?;
            Some(same_word(&back, w) && shifted == c.shifted(shift) && same_word(&shifted_back, &w.shifted(shift)))
        });
        if ok != Some(true) {
            t.word_mismatches += 1;
            fail(&mut t, format!("word round trip: {}", w.display(p.quiver())));
        }
        if classify_symmetry(w, p).is_symmetric() || !gb.certified {
            continue;
        }
        let complexes = if w.is_band() {
            params.iter().map(|x| band_complex(w, p, &a, x)).collect()
        } else {
            vec![string_complex(w, p, &a)]
        };
        for c in complexes {
            t.complexes += 1;
            let good = c.ok().and_then(|c| square_is_zero(&c, &a, &gb).ok().flatten());
            if good != Some(true) {
                t.square_failures += 1;
                fail(&mut t, format!("d^2 on {}", w.display(p.quiver())));
            }
        }
    }
    t
}

/// Runs [`check_algebra`] over all inputs on a few threads.
pub fn run_battery(inputs: &[(String, AlgebraPresentation)], bounds: BatteryBounds) -> BatteryTally {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8).max(1);
    let chunk = inputs.len().div_ceil(workers).max(1);
    let mut total = BatteryTally::default();
    std::thread::scope(|s| {
        let handles: Vec<_> = inputs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    let mut t = BatteryTally::default();
                    for (name, p) in part {
                        t.merge(check_algebra(name, p, bounds));
                    }
                    t
                })
            })
            .collect();
        for h in handles {
            total.merge(h.join().expect("battery worker panicked"));
        }
    });
    total
}
