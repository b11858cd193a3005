//! The three-variable linear program bounding the charge of a 7⁺-vertex.
//!
//! Primal: minimise d − k/2 − ℓ/4 subject to d ≥ 7, 4d − 5k ≥ 0,
//! d − k − 2ℓ ≥ 0 and d, k, ℓ ≥ 0. Its dual maximises 7·a1 subject to
//! a1 + 4a2 + a3 ≤ 1, 5a2 + a3 ≥ 1/2, 2a3 ≥ 1/4 and a ≥ 0.
//!
//! A second reading puts 5 in place of the 4 on a2 (primal row 5d − 5k ≥ 0);
//! both readings are evaluated.

use crate::rational::{fmt_q, int, q, Rational};

pub type Vec3 = [Rational; 3];

/// `a · x ≤ b`.
#[derive(Debug, Clone, Copy)]
struct Half {
    a: Vec3,
    b: Rational,
}

fn dot(a: &Vec3, x: &Vec3) -> Rational {
    a[0] * x[0] + a[1] * x[1] + a[2] * x[2]
}

fn det3(m: [Vec3; 3]) -> Rational {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn solve(rows: [Half; 3]) -> Option<Vec3> {
    let m = [rows[0].a, rows[1].a, rows[2].a];
    let d = det3(m);
    if d == int(0) {
        return None;
    }
    let mut x = [int(0); 3];
    for (c, xc) in x.iter_mut().enumerate() {
        let mut mc = m;
        for r in 0..3 {
            mc[r][c] = rows[r].b;
        }
        *xc = det3(mc) / d;
    }
    Some(x)
}

/// Feasible vertices of a polyhedron in three variables.
fn vertices(hs: &[Half]) -> Vec<Vec3> {
    let mut out: Vec<Vec3> = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            for k in j + 1..hs.len() {
                if let Some(x) = solve([hs[i], hs[j], hs[k]]) {
                    if hs.iter().all(|h| dot(&h.a, &x) <= h.b) && !out.contains(&x) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

fn nonneg() -> [Half; 3] {
    let z = int(0);
    [
        Half { a: [int(-1), z, z], b: z },
        Half { a: [z, int(-1), z], b: z },
        Half { a: [z, z, int(-1)], b: z },
    ]
}

/// Primal feasible region with `c` the coefficient of d in the row c·d − 5k ≥ 0.
fn primal(c: i64) -> Vec<Half> {
    let z = int(0);
    let mut hs = nonneg().to_vec();
    hs.push(Half { a: [int(-1), z, z], b: int(-7) });
    hs.push(Half { a: [int(-c), int(5), z], b: z });
    hs.push(Half { a: [int(-1), int(1), int(2)], b: z });
    hs
}

/// Dual constraints with `c` the coefficient of a2 in the first row.
fn dual(c: i64) -> Vec<Half> {
    let z = int(0);
    let mut hs = nonneg().to_vec();
    hs.push(Half { a: [int(1), int(c), int(1)], b: int(1) });
    hs.push(Half { a: [z, int(-5), int(-1)], b: q(-1, 2) });
    hs.push(Half { a: [z, z, int(-2)], b: q(-1, 4) });
    hs
}

fn objective(x: &Vec3) -> Rational {
    x[0] - x[1] / 2 - x[2] / 4
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualCheck {
    /// Left side of the first dual row, a1 + c·a2 + a3.
    pub first_row: Rational,
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpAudit {
    pub integer_min: Rational,
    pub integer_argmin: (i64, i64, i64),
    pub relaxation_min: Rational,
    pub relaxation_argmin: Vec3,
    pub printed: Vec3,
    /// Against a1 + 4a2 + a3 ≤ 1.
    pub printed_vs_derived: DualCheck,
    /// Against a1 + 5a2 + a3 ≤ 1.
    pub printed_vs_printed: DualCheck,
    pub certificate: Vec3,
    pub certificate_objective: Rational,
    pub certificate_feasible: bool,
    /// Best bound available from the second reading's dual.
    pub alternate_dual_max: Rational,
    pub alternate_primal_min: Rational,
}

impl LpAudit {
    /// Minimum and certificate both strictly exceed 4, and the relaxation
    /// matches the certificate, so the bound is tight.
    pub fn passes(&self) -> bool {
        self.integer_min > int(4)
            && self.certificate_feasible
            && self.certificate_objective > int(4)
            && self.certificate_objective == self.relaxation_min
    }

    /// One line per finding: name, exact value, explanation.
    pub fn summary(&self) -> Vec<(String, Option<Rational>, String)> {
        let v = |x: &Vec3| format!("({}, {}, {})", fmt_q(&x[0]), fmt_q(&x[1]), fmt_q(&x[2]));
        let verdict = |c: &DualCheck| if c.feasible { "feasible" } else { "infeasible" };
        let (d, k, l) = self.integer_argmin;
        vec![
            ("integer-min".into(), Some(self.integer_min), format!("at (d,k,l)=({d},{k},{l})")),
            ("relaxation-min".into(), Some(self.relaxation_min), format!("at {}", v(&self.relaxation_argmin))),
            (
                "printed-certificate-derived-row".into(),
                Some(self.printed_vs_derived.first_row),
                format!("{} is {}: a1+4a2+a3 must be at most 1", v(&self.printed), verdict(&self.printed_vs_derived)),
            ),
            (
                "printed-certificate-printed-row".into(),
                Some(self.printed_vs_printed.first_row),
                format!("{} is {}: a1+5a2+a3 must be at most 1", v(&self.printed), verdict(&self.printed_vs_printed)),
            ),
            (
                "certificate".into(),
                Some(self.certificate_objective),
                format!("{} is {}, objective 7*a1", v(&self.certificate), if self.certificate_feasible { "feasible" } else { "infeasible" }),
            ),
            (
                "alternate-reading".into(),
                Some(self.alternate_dual_max),
                format!("with 5 in place of 4 the dual reaches only this, primal min {}", fmt_q(&self.alternate_primal_min)),
            ),
        ]
    }
}

fn dual_check(x: &Vec3, c: i64) -> DualCheck {
    let first_row = x[0] + x[1] * int(c) + x[2];
    DualCheck { first_row, feasible: dual(c).iter().all(|h| dot(&h.a, x) <= h.b) }
}

fn best_dual(c: i64) -> (Vec3, Rational) {
    vertices(&dual(c))
        .into_iter()
        .map(|x| (x, x[0] * 7))
        .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
        .expect("the dual has a feasible vertex")
}

fn best_primal(c: i64) -> (Vec3, Rational) {
    vertices(&primal(c))
        .into_iter()
        .map(|x| (x, objective(&x)))
        .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)))
        .expect("the primal has a feasible vertex")
}

pub fn audit_lp() -> LpAudit {
    audit_lp_up_to(60)
}

/// As `audit_lp`, scanning integer points with 7 ≤ d ≤ `max_d`.
pub fn audit_lp_up_to(max_d: i64) -> LpAudit {
    let mut best: Option<(Rational, (i64, i64, i64))> = None;
    for d in 7..=max_d {
        for k in 0..=(4 * d) / 5 {
            for l in 0..=(d - k) / 2 {
                let val = int(d) - q(k, 2) - q(l, 4);
                if best.is_none_or(|(b, _)| val < b) {
                    best = Some((val, (d, k, l)));
                }
            }
        }
    }
    let (integer_min, integer_argmin) = best.expect("nonempty scan");
    let (relaxation_argmin, relaxation_min) = best_primal(4);
    let printed = [q(23, 40), q(1, 20), q(1, 4)];
    let (certificate, certificate_objective) = best_dual(4);
    LpAudit {
        integer_min,
        integer_argmin,
        relaxation_min,
        relaxation_argmin,
        printed,
        printed_vs_derived: dual_check(&printed, 4),
        printed_vs_printed: dual_check(&printed, 5),
        certificate,
        certificate_objective,
        certificate_feasible: dual_check(&certificate, 4).feasible,
        alternate_dual_max: best_dual(5).1,
        alternate_primal_min: best_primal(5).1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_unit_system() {
        let z = int(0);
        let rows = [
            Half { a: [int(1), z, z], b: int(2) },
            Half { a: [z, int(2), z], b: int(3) },
            Half { a: [int(1), z, int(1)], b: int(5) },
        ];
        assert_eq!(solve(rows), Some([int(2), q(3, 2), int(3)]));
    }

    #[test]
    fn duality_holds_in_both_readings() {
        for c in [4, 5] {
            assert_eq!(best_dual(c).1, best_primal(c).1);
        }
    }
}
