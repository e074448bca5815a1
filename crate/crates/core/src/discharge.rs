//! Weights on the faces of `H`, counted in exact thirds.
//!
//! Each `j`-face starts with weight `j`. One simultaneous round of five
//! rules moves weight between faces that share cycle edges:
//!
//! * R1: a major face sends `m(f, f')` to each opposite minor face.
//! * R2: a minor face sends `2/3 m(f, f')` to each opposite minor 2-face.
//! * R3: a minor face sends `1` to an opposite minor 3-face across the
//!   middle cycle edge of the 3-face.
//! * R4: a minor 4-face `f1` receives `2/3` from an opposite minor `j`-face
//!   `f` with `j >= 4` and `m(f1, f) = 2`, provided `f1` also has an
//!   opposite minor 2- or 3-face `f2` with `m(f1, f2) = 2`.
//! * R5: a minor 5-face `f1` with two opposite minor 2-faces receives `1/3`
//!   from an opposite minor `j`-face `f` with `j >= 4` and `m(f1, f) = 2`.
//!
//! If no minor face ends below `10/3`, then `2c >= 10/3 |M|`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::Serialize;

use crate::cycle::{extendable_edges, CycleContext};
use crate::embed::FaceId;
use crate::error::{Error, Result};

/// An exact multiple of one third.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Thirds(pub i64);

impl Thirds {
    pub const TEN_THIRDS: Thirds = Thirds(10);

    pub fn whole(k: i64) -> Thirds {
        Thirds(3 * k)
    }
}

impl Add for Thirds {
    type Output = Thirds;
    fn add(self, o: Thirds) -> Thirds {
        Thirds(self.0 + o.0)
    }
}

impl Sub for Thirds {
    type Output = Thirds;
    fn sub(self, o: Thirds) -> Thirds {
        Thirds(self.0 - o.0)
    }
}

impl Neg for Thirds {
    type Output = Thirds;
    fn neg(self) -> Thirds {
        Thirds(-self.0)
    }
}

impl AddAssign for Thirds {
    fn add_assign(&mut self, o: Thirds) {
        self.0 += o.0;
    }
}

impl SubAssign for Thirds {
    fn sub_assign(&mut self, o: Thirds) {
        self.0 -= o.0;
    }
}

impl Sum for Thirds {
    fn sum<I: Iterator<Item = Thirds>>(iter: I) -> Thirds {
        Thirds(iter.map(|t| t.0).sum())
    }
}

impl fmt::Display for Thirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/3", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: Rule,
    pub from: FaceId,
    pub to: FaceId,
    pub amount: Thirds,
    /// Cycle edges shared by the two faces that justify the transfer.
    pub via_edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DischargeReport {
    pub n: usize,
    pub c: usize,
    pub minor_count: usize,
    pub off_cycle_count: usize,
    /// Indexed by face id of `H`.
    pub initial: Vec<Thirds>,
    pub transfers: Vec<Transfer>,
    #[serde(rename = "final")]
    pub final_weights: Vec<Thirds>,
    /// Minor faces whose final weight is below `10/3`.
    pub violations: Vec<FaceId>,
    pub conservation_ok: bool,
    pub counting_ok: bool,
    pub weight_bound_ok: bool,
}

/// Applies R1-R5 once, simultaneously, to the faces of `ctx`.
pub fn run_discharging(ctx: &CycleContext) -> Result<DischargeReport> {
    if ctx.side_empty() {
        return Err(Error::EmptySide);
    }
    if let Some(&((x, y), _)) = extendable_edges(ctx.base, &ctx.cycle).first() {
        return Err(Error::ExtendableEdgePresent(x, y));
    }
    let faces = &ctx.faces;
    let shared = |a: FaceId, b: FaceId| -> Vec<usize> {
        faces[b].c_edges.iter().copied().filter(|&e| ctx.opposite(b, e) == Some(a)).collect()
    };
    let mut transfers = Vec::new();

    for f in faces.iter().filter(|f| f.is_major()) {
        for (o, m) in ctx.opposites(f.id) {
            if faces[o].is_minor() {
                transfers.push(Transfer {
                    rule: Rule::R1,
                    from: f.id,
                    to: o,
                    amount: Thirds::whole(m as i64),
                    via_edges: shared(f.id, o),
                });
            }
        }
    }
    for f in ctx.minor_faces() {
        for (o, m) in ctx.opposites(f.id) {
            if faces[o].is_minor() && faces[o].j == 2 {
                transfers.push(Transfer {
                    rule: Rule::R2,
                    from: f.id,
                    to: o,
                    amount: Thirds(2 * m as i64),
                    via_edges: shared(f.id, o),
                });
            }
        }
    }
    for t in ctx.minor_faces().filter(|f| f.j == 3) {
        let middle = t.c_edges[1];
        let f = ctx.opposite(t.id, middle).expect("middle edge belongs to the face");
        if faces[f].is_minor() {
            transfers.push(Transfer {
                rule: Rule::R3,
                from: f,
                to: t.id,
                amount: Thirds(3),
                via_edges: vec![middle],
            });
        }
    }
    for f1 in ctx.minor_faces().filter(|f| f.j == 4 || f.j == 5) {
        let opp = ctx.opposites(f1.id);
        let minor_opp = |j_ok: &dyn Fn(usize) -> bool, m_req: Option<usize>| {
            opp.iter()
                .filter(move |&&(o, m)| {
                    faces[o].is_minor() && j_ok(faces[o].j) && m_req.map_or(true, |r| m == r)
                })
                .map(|&(o, _)| o)
                .collect::<Vec<_>>()
        };
        let senders = minor_opp(&|j| j >= 4, Some(2));
        let (premise, rule, amount) = if f1.j == 4 {
            let partners = minor_opp(&|j| j == 2 || j == 3, Some(2));
            (!partners.is_empty(), Rule::R4, Thirds(2))
        } else {
            let twos = minor_opp(&|j| j == 2, None);
            (twos.len() >= 2, Rule::R5, Thirds(1))
        };
        if premise {
            for f in senders {
                transfers.push(Transfer { rule, from: f, to: f1.id, amount, via_edges: shared(f, f1.id) });
            }
        }
    }
    transfers.sort_by_key(|t| (t.rule, t.from, t.to));

    let initial: Vec<Thirds> = faces.iter().map(|f| Thirds::whole(f.j as i64)).collect();
    let mut final_weights = initial.clone();
    for t in &transfers {
        final_weights[t.from] -= t.amount;
        final_weights[t.to] += t.amount;
    }
    for f in faces.iter().filter(|f| f.is_major()) {
        if final_weights[f.id] < Thirds(0) {
            return Err(Error::Internal(format!(
                "major face {} ends with negative weight {}",
                f.id, final_weights[f.id]
            )));
        }
    }
    let violations: Vec<FaceId> = ctx
        .minor_faces()
        .filter(|f| final_weights[f.id] < Thirds::TEN_THIRDS)
        .map(|f| f.id)
        .collect();
    let c = ctx.c();
    let total: Thirds = final_weights.iter().copied().sum();
    let minor_count = ctx.minor_count();
    Ok(DischargeReport {
        n: ctx.base.n(),
        c,
        minor_count,
        off_cycle_count: ctx.off_cycle_count(),
        conservation_ok: total == Thirds::whole(2 * c as i64)
            && initial.iter().copied().sum::<Thirds>() == total,
        counting_ok: ctx.counting_bound_holds(),
        weight_bound_ok: 6 * c >= 10 * minor_count,
        initial,
        transfers,
        final_weights,
        violations,
    })
}

/// Checks `2c >= 10/3 |M|` and the chain it gives with the counting lemma:
/// `|M| >= n - c + 2`, hence `6c >= 10(n - c + 2)`, hence `8c >= 5(n+2)`.
pub fn check_weight_bound(report: &DischargeReport) -> Result<bool> {
    if !report.violations.is_empty() {
        return Err(Error::ViolationsPresent { count: report.violations.len() });
    }
    let (n, c, m) = (report.n, report.c, report.minor_count);
    let ineq = 6 * c >= 10 * m;
    let counting = m + c >= n + 2;
    let chain = 6 * c + 10 * c >= 10 * (n + 2) && 8 * c >= 5 * (n + 2);
    Ok(ineq && counting && chain)
}
