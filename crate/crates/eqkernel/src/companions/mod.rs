//! Companions, conjoints and their verification.
//!
//! A companion of an arrow `f: x -> y` is a proarrow `f_!: x -|-> y` with
//! unit and counit binding cells satisfying two equations: the horizontal
//! composite of unit and counit is the identity on `f_!` (after unitor
//! normalization) and their vertical composite is the external identity on
//! `f`. Conjoints are the left–right mirror. Failures are reported, not
//! thrown; constructors that must succeed return errors instead.

pub mod comp;
pub mod sliding;

pub use comp::{comp_instance, counit_functor_eval, CompInstance};
pub use sliding::{
    is_cocommuter, is_commuter, slide_general, slide_general_conj, slide_general_conj_inv,
    slide_general_inv, slide_globular, slide_globular_conj, slide_globular_conj_inv,
    slide_globular_inv, CommuterVerdict,
};

use crate::core::{
    vcomp_list, Arrow, Cell, CoreError, CoreResult, Instance, Proarrow,
};
use serde::Serialize;
use serde_json::json;

/// Verdict of one law check, with a counterexample on failure and an
/// optional witness on success. Every report records the probe universe
/// (or input description) it was computed over.
#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub probe: String,
    pub status: LawStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
}

impl LawReport {
    pub fn pass(law: &str, probe: &str) -> Self {
        LawReport {
            law: law.to_string(),
            probe: probe.to_string(),
            status: LawStatus::Pass,
            counterexample: None,
            witness: None,
        }
    }

    pub fn pass_with(law: &str, probe: &str, witness: serde_json::Value) -> Self {
        LawReport {
            law: law.to_string(),
            probe: probe.to_string(),
            status: LawStatus::Pass,
            counterexample: None,
            witness: Some(witness),
        }
    }

    pub fn fail(law: &str, probe: &str, counterexample: serde_json::Value) -> Self {
        LawReport {
            law: law.to_string(),
            probe: probe.to_string(),
            status: LawStatus::Fail,
            counterexample: Some(counterexample),
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == LawStatus::Pass
    }
}

/// An arrow with a chosen companion proarrow and binding cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionPair {
    pub arrow: Arrow,
    pub pro: Proarrow,
    pub unit: Cell,
    pub counit: Cell,
}

/// An arrow with a chosen conjoint proarrow and binding cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjointPair {
    pub arrow: Arrow,
    pub pro: Proarrow,
    pub unit: Cell,
    pub counit: Cell,
}

/// The instance's chosen companion of `f`, verified before returning.
pub fn companion_of(d: &Instance, f: &Arrow) -> CoreResult<CompanionPair> {
    let (pro, unit, counit) = d
        .companion_data(f)
        .ok_or_else(|| CoreError::NoCompanion(format!("{:?}", f.payload)))?;
    let pair = CompanionPair {
        arrow: f.clone(),
        pro,
        unit,
        counit,
    };
    let report = verify_companion(d, &pair);
    if report.passed() {
        Ok(pair)
    } else {
        Err(CoreError::NoCompanion(format!(
            "chosen companion fails verification: {:?}",
            report.counterexample
        )))
    }
}

/// The instance's chosen conjoint of `f`, verified before returning.
pub fn conjoint_of(d: &Instance, f: &Arrow) -> CoreResult<ConjointPair> {
    let (pro, unit, counit) = d
        .conjoint_data(f)
        .ok_or_else(|| CoreError::NoConjoint(format!("{:?}", f.payload)))?;
    let pair = ConjointPair {
        arrow: f.clone(),
        pro,
        unit,
        counit,
    };
    let report = verify_conjoint(d, &pair);
    if report.passed() {
        Ok(pair)
    } else {
        Err(CoreError::NoConjoint(format!(
            "chosen conjoint fails verification: {:?}",
            report.counterexample
        )))
    }
}

fn check_eq(
    law: &str,
    probe: &str,
    lhs: CoreResult<Cell>,
    rhs: &Cell,
    context: &impl Serialize,
) -> LawReport {
    match lhs {
        Ok(c) if &c == rhs => LawReport::pass(law, probe),
        Ok(c) => LawReport::fail(
            law,
            probe,
            json!({ "input": context, "got": c, "expected": rhs }),
        ),
        Err(e) => LawReport::fail(
            law,
            probe,
            json!({ "input": context, "error": e.to_string() }),
        ),
    }
}

/// Checks the two companion equations, inserting unitors explicitly when
/// the instance is pseudo.
pub fn verify_companion(d: &Instance, pair: &CompanionPair) -> LawReport {
    let probe = format!("{}:companion", d.id());
    // shape of the binding cells
    let expected_unit_boundary = pair.unit.top == d.id_pro(&pair.arrow.src)
        && pair.unit.bottom == pair.pro
        && pair.unit.left == d.id_arrow(&pair.arrow.src)
        && pair.unit.right == pair.arrow;
    let expected_counit_boundary = pair.counit.top == pair.pro
        && pair.counit.bottom == d.id_pro(&pair.arrow.tgt)
        && pair.counit.left == pair.arrow
        && pair.counit.right == d.id_arrow(&pair.arrow.tgt);
    if !expected_unit_boundary || !expected_counit_boundary {
        return LawReport::fail(
            "companion.binding-boundaries",
            &probe,
            json!({ "unit": pair.unit, "counit": pair.counit }),
        );
    }
    if !d.check_cell(&pair.unit) || !d.check_cell(&pair.counit) {
        return LawReport::fail(
            "companion.binding-cells-invalid",
            &probe,
            json!({ "unit": pair.unit, "counit": pair.counit }),
        );
    }
    // unit ⊙ counit = identity on the companion, modulo unitors
    let eq1 = d
        .hcomp(&pair.unit, &pair.counit)
        .and_then(|mid| vcomp_list(&**d, &[d.lunitor_inv(&pair.pro), mid, d.runitor(&pair.pro)]));
    let r1 = check_eq(
        "companion.pro-equation",
        &probe,
        eq1,
        &d.id_cell_on_pro(&pair.pro),
        &pair.pro,
    );
    if !r1.passed() {
        return r1;
    }
    // unit · counit = external identity on the arrow
    let eq2 = d.vcomp(&pair.unit, &pair.counit);
    check_eq(
        "companion.arrow-equation",
        &probe,
        eq2,
        &d.id_cell_on_arrow(&pair.arrow),
        &pair.arrow,
    )
}

/// Checks the two conjoint equations (the mirror of `verify_companion`).
pub fn verify_conjoint(d: &Instance, pair: &ConjointPair) -> LawReport {
    let probe = format!("{}:conjoint", d.id());
    let expected_unit_boundary = pair.unit.top == d.id_pro(&pair.arrow.src)
        && pair.unit.bottom == pair.pro
        && pair.unit.left == pair.arrow
        && pair.unit.right == d.id_arrow(&pair.arrow.src);
    let expected_counit_boundary = pair.counit.top == pair.pro
        && pair.counit.bottom == d.id_pro(&pair.arrow.tgt)
        && pair.counit.left == d.id_arrow(&pair.arrow.tgt)
        && pair.counit.right == pair.arrow;
    if !expected_unit_boundary || !expected_counit_boundary {
        return LawReport::fail(
            "conjoint.binding-boundaries",
            &probe,
            json!({ "unit": pair.unit, "counit": pair.counit }),
        );
    }
    if !d.check_cell(&pair.unit) || !d.check_cell(&pair.counit) {
        return LawReport::fail(
            "conjoint.binding-cells-invalid",
            &probe,
            json!({ "unit": pair.unit, "counit": pair.counit }),
        );
    }
    // counit ⊙ unit = identity on the conjoint, modulo unitors
    let eq1 = d
        .hcomp(&pair.counit, &pair.unit)
        .and_then(|mid| vcomp_list(&**d, &[d.runitor_inv(&pair.pro), mid, d.lunitor(&pair.pro)]));
    let r1 = check_eq(
        "conjoint.pro-equation",
        &probe,
        eq1,
        &d.id_cell_on_pro(&pair.pro),
        &pair.pro,
    );
    if !r1.passed() {
        return r1;
    }
    let eq2 = d.vcomp(&pair.unit, &pair.counit);
    check_eq(
        "conjoint.arrow-equation",
        &probe,
        eq2,
        &d.id_cell_on_arrow(&pair.arrow),
        &pair.arrow,
    )
}

/// The canonical globular comparison `pair1.pro => pair2.pro` between two
/// companions of the same arrow. It is invertible whenever both pairs pass
/// verification, with inverse the comparison the other way around.
pub fn companion_comparison(
    d: &Instance,
    pair1: &CompanionPair,
    pair2: &CompanionPair,
) -> CoreResult<Cell> {
    if pair1.arrow != pair2.arrow {
        return Err(CoreError::Boundary(
            "companion comparison requires pairs over the same arrow".into(),
        ));
    }
    let mid = d.hcomp(&pair2.unit, &pair1.counit)?;
    vcomp_list(
        &**d,
        &[d.lunitor_inv(&pair1.pro), mid, d.runitor(&pair2.pro)],
    )
}

/// Canonical comparison between two conjoints of the same arrow.
pub fn conjoint_comparison(
    d: &Instance,
    pair1: &ConjointPair,
    pair2: &ConjointPair,
) -> CoreResult<Cell> {
    if pair1.arrow != pair2.arrow {
        return Err(CoreError::Boundary(
            "conjoint comparison requires pairs over the same arrow".into(),
        ));
    }
    let mid = d.hcomp(&pair1.counit, &pair2.unit)?;
    vcomp_list(
        &**d,
        &[d.runitor_inv(&pair1.pro), mid, d.lunitor(&pair2.pro)],
    )
}

/// The composite companion `k_! ⊙ l_!` of a composite arrow `k · l`, with
/// binding cells built from the factors'.
pub fn composite_companion(
    d: &Instance,
    k: &CompanionPair,
    l: &CompanionPair,
) -> CoreResult<CompanionPair> {
    let arrow = d.compose_arrows(&k.arrow, &l.arrow)?;
    let pro = d.compose_pro(&k.pro, &l.pro)?;
    let idx = d.id_pro(&k.arrow.src);
    let a = d.hcomp(&k.unit, &d.id_cell_on_arrow(&k.arrow))?;
    let b = d.hcomp(&d.id_cell_on_pro(&k.pro), &l.unit)?;
    let unit = vcomp_list(&**d, &[d.lunitor_inv(&idx), a, b])?;
    let idz = d.id_pro(&l.arrow.tgt);
    let c = d.hcomp(&k.counit, &d.id_cell_on_pro(&l.pro))?;
    let e = d.hcomp(&d.id_cell_on_arrow(&l.arrow), &l.counit)?;
    let counit = vcomp_list(&**d, &[c, e, d.lunitor(&idz)])?;
    Ok(CompanionPair {
        arrow,
        pro,
        unit,
        counit,
    })
}

/// Dual composite for conjoints: `(k · l)^* = l^* ⊙ k^*`.
pub fn composite_conjoint(
    d: &Instance,
    k: &ConjointPair,
    l: &ConjointPair,
) -> CoreResult<ConjointPair> {
    let arrow = d.compose_arrows(&k.arrow, &l.arrow)?;
    let pro = d.compose_pro(&l.pro, &k.pro)?;
    let idx = d.id_pro(&k.arrow.src);
    let a = d.hcomp(&d.id_cell_on_arrow(&k.arrow), &k.unit)?;
    let b = d.hcomp(&l.unit, &d.id_cell_on_pro(&k.pro))?;
    let unit = vcomp_list(&**d, &[d.lunitor_inv(&idx), a, b])?;
    let idz = d.id_pro(&l.arrow.tgt);
    let c = d.hcomp(&d.id_cell_on_pro(&l.pro), &k.counit)?;
    let e = d.hcomp(&l.counit, &d.id_cell_on_arrow(&l.arrow))?;
    let counit = vcomp_list(&**d, &[c, e, d.runitor(&idz)])?;
    Ok(ConjointPair {
        arrow,
        pro,
        unit,
        counit,
    })
}

/// The identity arrow's canonical companion: the unit proarrow, with both
/// binding cells the double identity.
pub fn identity_companion(d: &Instance, x: &crate::core::ObjectRef) -> CompanionPair {
    let arrow = d.id_arrow(x);
    let pro = d.id_pro(x);
    let cell = d.id_cell_on_arrow(&arrow);
    CompanionPair {
        arrow,
        pro,
        unit: cell.clone(),
        counit: cell,
    }
}

pub fn identity_conjoint(d: &Instance, x: &crate::core::ObjectRef) -> ConjointPair {
    let arrow = d.id_arrow(x);
    let pro = d.id_pro(x);
    let cell = d.id_cell_on_arrow(&arrow);
    ConjointPair {
        arrow,
        pro,
        unit: cell.clone(),
        counit: cell,
    }
}

/// Replaces the chosen companion by an isomorphic relabeling, when the
/// instance supports one. Key laws are re-run under perturbed choices to
/// make sure nothing depends on the canonical labels.
pub fn perturb_companion(
    d: &Instance,
    pair: &CompanionPair,
    seed: u64,
) -> Option<CompanionPair> {
    let (pro, iso, iso_inv) = d.perturb_pro(&pair.pro, seed)?;
    let unit = d.vcomp(&pair.unit, &iso).ok()?;
    let counit = d.vcomp(&iso_inv, &pair.counit).ok()?;
    Some(CompanionPair {
        arrow: pair.arrow.clone(),
        pro,
        unit,
        counit,
    })
}

/// Verifies that `unit: id => p ⊙ q` and `counit: q ⊙ p => id` exhibit the
/// adjunction `p ⊣ q` in the globular fragment, via the two triangle
/// identities up to unitors.
pub fn verify_proarrow_adjunction(
    d: &Instance,
    p: &Proarrow,
    q: &Proarrow,
    unit: &Cell,
    counit: &Cell,
) -> LawReport {
    let probe = format!("{}:pro-adjunction", d.id());
    let ctx = json!({ "left": p, "right": q });
    // triangle on p
    let t1 = (|| {
        let s1 = d.lunitor_inv(p);
        let s2 = d.hcomp(unit, &d.id_cell_on_pro(p))?;
        let s3 = d.associator(p, q, p)?;
        let s4 = d.hcomp(&d.id_cell_on_pro(p), counit)?;
        let s5 = d.runitor(p);
        vcomp_list(&**d, &[s1, s2, s3, s4, s5])
    })();
    let r1 = check_eq(
        "pro-adjunction.triangle-left",
        &probe,
        t1,
        &d.id_cell_on_pro(p),
        &ctx,
    );
    if !r1.passed() {
        return r1;
    }
    // triangle on q
    let t2 = (|| {
        let s1 = d.runitor_inv(q);
        let s2 = d.hcomp(&d.id_cell_on_pro(q), unit)?;
        let s3 = d.associator_inv(q, p, q)?;
        let s4 = d.hcomp(counit, &d.id_cell_on_pro(q))?;
        let s5 = d.lunitor(q);
        vcomp_list(&**d, &[s1, s2, s3, s4, s5])
    })();
    check_eq(
        "pro-adjunction.triangle-right",
        &probe,
        t2,
        &d.id_cell_on_pro(q),
        &ctx,
    )
}

/// The adjunction `f_! ⊣ f^*` induced by a companion–conjoint pair of the
/// same arrow, verified in the globular fragment.
pub fn mates_adjunction(
    d: &Instance,
    comp: &CompanionPair,
    conj: &ConjointPair,
) -> CoreResult<LawReport> {
    if comp.arrow != conj.arrow {
        return Err(CoreError::Boundary(
            "mates adjunction needs companion and conjoint of the same arrow".into(),
        ));
    }
    let x = &comp.arrow.src;
    let y = &comp.arrow.tgt;
    let unit = {
        let mid = d.hcomp(&comp.unit, &conj.unit)?;
        d.vcomp(&d.lunitor_inv(&d.id_pro(x)), &mid)?
    };
    let counit = {
        let mid = d.hcomp(&conj.counit, &comp.counit)?;
        d.vcomp(&mid, &d.lunitor(&d.id_pro(y)))?
    };
    Ok(verify_proarrow_adjunction(d, &comp.pro, &conj.pro, &unit, &counit))
}
