//! Closed-form lower bounds on final vertex and face charges.

use crate::discharge::spec::Variant;
use crate::error::{Error, Result};
use crate::rational::{int, q, Rational};

pub const AUDIT_MAX: usize = 60;

/// Charge on a vertex of degree `d` after it has paid the 3-faces around it.
/// The minimum is taken over every count of incident 3-faces the forbidden
/// cycles leave room for.
pub fn verify_vertex_bound(variant: Variant, d: usize) -> Result<Rational> {
    if d < 4 {
        return Err(Error::input(format!("vertex degree {d} is below the minimum degree 4")));
    }
    let mu = variant.mu(d, false);
    Ok(match variant {
        Variant::C5 => match d {
            4 | 5 => c5_small_vertex(d),
            _ => mu,
        },
        Variant::Cc6 | Variant::Dcc67 => match d {
            4 => mu,
            // at most three 3-faces, 1/3 each
            5 => (0..=3).map(|t| mu - q(t, 3)).min().unwrap(),
            _ => mu - q(4, 9) * int((3 * d as i64) / 4),
        },
        Variant::Cc7 => cc7_vertex(d),
    })
}

/// Face arrangements around a 4- or 5-vertex: cyclic words over
/// {3-face, 4-face, 5⁺-face} with no 4-face beside a 3-face and no three
/// consecutive 3-faces. A 4⁺-face gives 1 to a 4-vertex when it is beside
/// one of that vertex's 3-faces, and 1/2 otherwise.
fn c5_small_vertex(d: usize) -> Rational {
    let mut best: Option<Rational> = None;
    for word in 0..3usize.pow(d as u32) {
        let faces: Vec<usize> = (0..d).map(|i| word / 3usize.pow(i as u32) % 3 + 3).collect();
        let at = |i: usize| faces[i % d];
        let ok = (0..d).all(|i| {
            let beside_3 = at(i + 1) == 3 || at(i + d - 1) == 3;
            !(at(i) == 4 && beside_3) && !(at(i) == 3 && at(i + 1) == 3 && at(i + 2) == 3)
        });
        if !ok {
            continue;
        }
        let gain: Rational = (0..d)
            .filter(|&i| at(i) > 3)
            .map(|i| if d == 4 && (at(i + 1) == 3 || at(i + d - 1) == 3) { int(1) } else { q(1, 2) })
            .sum();
        let val = int(d as i64 - 6) + gain;
        best = Some(best.map_or(val, |b: Rational| b.min(val)));
    }
    best.expect("some arrangement is allowed")
}

/// k incident 3-faces, r incident 6-faces that still need 1/4.
fn cc7_vertex(d: usize) -> Rational {
    let di = d as i64;
    let mu = int(di - 4);
    match d {
        4 => mu,
        // R2a pays 1/max(3, k) per face; the extra 1/4 only when k ≤ 2
        5 => {
            let plain = (0..=4).map(|k| mu - q(k, 3.max(k)));
            let with_r3 = (0..=2).map(|k| mu - q(k, 3) - q(1, 4));
            plain.chain(with_r3).min().unwrap()
        }
        6 => (0..=4).flat_map(|k| (0..=4 - k).map(move |r| mu - q(k, 2) - q(r, 4))).min().unwrap(),
        _ => (0..=(4 * di) / 5).flat_map(|k| (0..=(di - k) / 2).map(move |r| mu - q(k, 2) - q(r, 4))).min().unwrap(),
    }
}

/// What a face gives away: `(amount, count)` per boundary edge or incident
/// vertex, whichever the variant's rules are stated over.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceProfile {
    pub losses: Vec<(Rational, usize)>,
}

impl FaceProfile {
    pub fn new(losses: &[(Rational, usize)]) -> Self {
        FaceProfile { losses: losses.to_vec() }
    }

    pub fn total(&self) -> Rational {
        self.losses.iter().map(|&(a, c)| a * int(c as i64)).sum()
    }
}

fn allowed_losses(variant: Variant) -> Vec<Rational> {
    match variant {
        Variant::C5 => vec![int(1), q(1, 2)],
        Variant::Cc6 | Variant::Dcc67 => vec![q(1, 3), q(1, 9)],
        Variant::Cc7 => vec![q(3, 8), q(3, 16), q(1, 8)],
    }
}

fn check_profile(variant: Variant, l: usize, p: &FaceProfile) -> Result<()> {
    if l < 4 {
        return Err(Error::input(format!("face length {l} is below 4")));
    }
    let allowed = allowed_losses(variant);
    if let Some((a, _)) = p.losses.iter().find(|(a, _)| !allowed.contains(a)) {
        return Err(Error::input(format!("{variant} faces never give {a}")));
    }
    let slots: usize = p.losses.iter().map(|&(_, c)| c).sum();
    if slots > l {
        return Err(Error::input(format!("profile uses {slots} slots on a face of length {l}")));
    }
    Ok(())
}

/// Charge after the main rules, before any face is topped up.
pub fn face_charge_before_support(variant: Variant, l: usize, p: &FaceProfile) -> Result<Rational> {
    check_profile(variant, l, p)?;
    Ok(variant.nu(l, false) - p.total())
}

/// Final charge: a needy 5-face of the c5 variant gets 1/2 from its
/// 5-vertex, and a negative 6-face of the cc7 variant gets 1/4.
pub fn verify_face_bound(variant: Variant, l: usize, p: &FaceProfile) -> Result<Rational> {
    let before = face_charge_before_support(variant, l, p)?;
    let support = match (variant, l) {
        (Variant::C5, 5) if before < int(0) => q(1, 2),
        (Variant::Cc7, 6) if before < int(0) => q(1, 4),
        _ => int(0),
    };
    Ok(before + support)
}

/// The heaviest losses a face of length `l` can carry.
pub fn worst_face_profile(variant: Variant, l: usize) -> FaceProfile {
    match (variant, l) {
        (_, 4) if variant != Variant::C5 => FaceProfile::default(),
        // a 4-face is never beside a 3-face, so it pays 1/2 per vertex
        (Variant::C5, 4) => FaceProfile::new(&[(q(1, 2), 4)]),
        // five full payments would be a reducible configuration
        (Variant::C5, 5) => FaceProfile::new(&[(int(1), 4), (q(1, 2), 1)]),
        (Variant::C5, _) => FaceProfile::new(&[(int(1), l)]),
        (Variant::Cc6, 5) => FaceProfile::new(&[(q(1, 9), 5)]),
        (Variant::Dcc67, 5) => FaceProfile::new(&[(q(1, 3), 1), (q(1, 9), 4)]),
        (Variant::Cc6 | Variant::Dcc67, _) => FaceProfile::new(&[(q(1, 3), l)]),
        (Variant::Cc7, _) => FaceProfile::new(&[(q(3, 8), if l == 5 { 1 } else { l })]),
    }
}

/// Slope and intercept of the floor-free bound for large degree or length;
/// a positive slope with a nonnegative value at the end of the audited
/// range covers everything beyond it.
pub fn vertex_relaxation(variant: Variant) -> (Rational, Rational) {
    match variant {
        Variant::C5 => (int(1), int(-6)),
        Variant::Cc6 | Variant::Dcc67 => (q(2, 3), int(-4)),
        Variant::Cc7 => (q(23, 40), int(-4)),
    }
}

pub fn face_relaxation(variant: Variant) -> (Rational, Rational) {
    match variant {
        Variant::C5 => (int(1), int(-6)),
        Variant::Cc6 | Variant::Dcc67 => (q(2, 3), int(-4)),
        Variant::Cc7 => (q(5, 8), int(-4)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_small_vertices() {
        assert_eq!(c5_small_vertex(4), int(0));
        assert_eq!(c5_small_vertex(5), int(0));
    }

    #[test]
    fn profile_checks() {
        let too_many = FaceProfile::new(&[(q(1, 3), 7)]);
        assert!(verify_face_bound(Variant::Cc6, 6, &too_many).is_err());
        let wrong = FaceProfile::new(&[(q(3, 8), 1)]);
        assert!(verify_face_bound(Variant::Cc6, 6, &wrong).is_err());
        assert!(verify_face_bound(Variant::Cc6, 3, &FaceProfile::default()).is_err());
    }
}
