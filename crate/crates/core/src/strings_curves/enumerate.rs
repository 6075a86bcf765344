use super::word::{is_proper_power, HomotopyWord, Letter, WordRules};
use crate::algebra_core::AlgebraPresentation;

/// All letters of A+ with at most `max_len` arrows, direct and inverse.
pub fn homotopy_letters(p: &AlgebraPresentation, max_len: usize) -> Vec<Letter> {
    let rules = WordRules::new(p);
    let q = p.quiver();
    let mut paths: Vec<Vec<usize>> = (0..q.arrow_count()).map(|a| vec![a]).collect();
    let mut frontier = paths.clone();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for path in &frontier {
            let last = *path.last().expect("nonempty");
            for &b in q.out_arrows(q.target(last)) {
                if !rules.j(last, b) {
                    let mut longer = path.clone();
                    longer.push(b);
                    next.push(longer);
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out: Vec<Letter> = paths.iter().map(|x| Letter::direct(x.clone())).collect();
    out.extend(paths.into_iter().map(Letter::inverse_of));
    out
}

/// Finite graded strings with at most `max_letters` letters and at most
/// `max_arrows` arrows in total, graded from 0, trivial words included. A
/// string and its inverse are both listed.
pub fn enumerate_strings(p: &AlgebraPresentation, max_letters: usize, max_arrows: usize) -> Vec<HomotopyWord> {
    let rules = WordRules::new(p);
    let letters = homotopy_letters(p, max_arrows);
    let weight = |w: &[usize]| w.iter().map(|&i| letters[i].arrows.len()).sum::<usize>();
    let mut out: Vec<HomotopyWord> = (0..p.quiver().vertex_count()).map(|v| HomotopyWord::trivial(v, 0)).collect();
    let mut frontier: Vec<Vec<usize>> = (0..letters.len()).map(|i| vec![i]).collect();
    for depth in 1..=max_letters {
        for w in &frontier {
            out.push(HomotopyWord::string(w.iter().map(|&i| letters[i].clone()).collect(), 0));
        }
        if depth == max_letters {
            break;
        }
        let mut next = Vec::new();
        for w in &frontier {
            let last = &letters[*w.last().expect("nonempty")];
            for (i, l) in letters.iter().enumerate() {
                if rules.juncture_ok(last, l) && weight(w) + l.arrows.len() <= max_arrows {
                    let mut longer = w.clone();
                    longer.push(i);
                    next.push(longer);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Bands within the same bounds, one representative per class under rotation
/// and inversion, graded from 0.
pub fn enumerate_bands(p: &AlgebraPresentation, max_letters: usize, max_arrows: usize) -> Vec<HomotopyWord> {
    let rules = WordRules::new(p);
    let mut out: Vec<HomotopyWord> = Vec::new();
    for w in enumerate_strings(p, max_letters, max_arrows) {
        let ls = &w.letters;
        if ls.len() < 2 || 2 * w.direct_count() != ls.len() || is_proper_power(ls) {
            continue;
        }
        if !rules.juncture_ok(&ls[ls.len() - 1], &ls[0]) {
            continue;
        }
        let band = HomotopyWord::band(ls.clone(), 0);
        if canonical_rotation(&band) == band.letters {
            out.push(band);
        }
    }
    out
}

/// The least letter sequence among all rotations of a band and its inverse.
fn canonical_rotation(w: &HomotopyWord) -> Vec<Letter> {
    let r = w.letters.len();
    let inv = w.inverse();
    (0..r)
        .flat_map(|m| [w.rotated(m).letters, inv.rotated(m).letters])
        .min()
        .expect("nonempty band")
}
