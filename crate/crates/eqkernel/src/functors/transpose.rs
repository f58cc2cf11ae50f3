//! Companions and conjoints of natural transformations.
//!
//! A natural transformation whose component arrows have companions
//! transposes to an oplax protransformation: object components are the
//! chosen companions, arrow components slide the naturality squares, and
//! naturality comparisons slide the cell components. Conjoints dualize to
//! lax protransformations. When every component cell is a commuter the
//! companion upgrades to a pseudo protransformation.

use super::{
    identity_nat, DoubleFunctor, Modification, NaturalTransformation, OplaxNatTransData,
    Protransformation, Variant,
};
use super::algebra::id_protrans;
use crate::companions::{
    companion_comparison, companion_of, composite_companion, conjoint_of, is_commuter,
    slide_general, slide_general_conj, slide_globular, slide_globular_conj, CompanionPair,
    ConjointPair, LawReport,
};
use crate::core::dualities::{reverse_instance, ReverseInstance};
use crate::core::{vcomp_list, Arrow, Cell, CoreError, CoreResult, Instance, ObjectRef, Proarrow};
use crate::instances::probe::ProbeUniverse;
use serde_json::json;
use std::sync::Arc;

/// Image of a companion pair under a pseudo functor: `F f_!` is a
/// companion of `F f`, with binding cells conjugated by the unit
/// comparisons.
pub fn functor_companion(f: &DoubleFunctor, pair: &CompanionPair) -> CoreResult<CompanionPair> {
    let e = f.tgt.clone();
    let arrow = f.apply_arr(&pair.arrow)?;
    let pro = f.apply_pro(&pair.pro)?;
    let unit = e.vcomp(&f.unit_cmp(&pair.arrow.src)?, &f.apply_cell(&pair.unit)?)?;
    let counit = e.vcomp(&f.apply_cell(&pair.counit)?, &f.unit_cmp_inv(&pair.arrow.tgt)?)?;
    Ok(CompanionPair {
        arrow,
        pro,
        unit,
        counit,
    })
}

/// Image of a conjoint pair under a pseudo functor.
pub fn functor_conjoint(f: &DoubleFunctor, pair: &ConjointPair) -> CoreResult<ConjointPair> {
    let e = f.tgt.clone();
    let arrow = f.apply_arr(&pair.arrow)?;
    let pro = f.apply_pro(&pair.pro)?;
    let unit = e.vcomp(&f.unit_cmp(&pair.arrow.src)?, &f.apply_cell(&pair.unit)?)?;
    let counit = e.vcomp(&f.apply_cell(&pair.counit)?, &f.unit_cmp_inv(&pair.arrow.tgt)?)?;
    Ok(ConjointPair {
        arrow,
        pro,
        unit,
        counit,
    })
}

/// The external identity on the naturality square of `alpha` at `a`,
/// bounded by the two equal composites `Ff · α_y = α_x · Gf`.
fn naturality_square_identity(
    alpha: &NaturalTransformation,
    a: &Arrow,
) -> CoreResult<(Cell, Arrow, Arrow, Arrow, Arrow)> {
    let e = alpha.src.tgt.clone();
    let ff = alpha.src.apply_arr(a)?;
    let gf = alpha.tgt.apply_arr(a)?;
    let ax = alpha.at_ob(&a.src)?;
    let ay = alpha.at_ob(&a.tgt)?;
    let via_f = e.compose_arrows(&ff, &ay)?;
    let via_g = e.compose_arrows(&ax, &gf)?;
    if via_f != via_g {
        return Err(CoreError::Boundary(format!(
            "naturality square of {} does not commute at {:?}",
            alpha.name, a.payload
        )));
    }
    let mut cell = e.id_cell_on_arrow(&via_f);
    // same square, remembering the two factorizations on left and right
    cell.left = via_f.clone();
    cell.right = via_g;
    Ok((cell, ff, gf, ax, ay))
}

/// The companion of a natural transformation: an oplax protransformation
/// with components the chosen companions of the `α_x`.
pub fn companion_protrans(alpha: &NaturalTransformation) -> Protransformation {
    let e = alpha.src.tgt.clone();
    let (a1, e1) = (alpha.clone(), e.clone());
    let (a2, e2) = (alpha.clone(), e.clone());
    let (a3, e3) = (alpha.clone(), e.clone());
    Protransformation {
        name: format!("({})_!", alpha.name),
        variant: Variant::Oplax,
        src: alpha.src.clone(),
        tgt: alpha.tgt.clone(),
        ob: Arc::new(move |x| Ok(companion_of(&e1, &a1.at_ob(x)?)?.pro)),
        arr: Arc::new(move |a| {
            let (sq, ff, gf, ax, ay) = naturality_square_identity(&a2, a)?;
            let px = companion_of(&e2, &ax)?;
            let py = companion_of(&e2, &ay)?;
            let slid = slide_general(&e2, &sq, &ff, &py, &px, &gf)?;
            vcomp_list(
                &*e2,
                &[e2.lunitor_inv(&px.pro), slid, e2.runitor(&py.pro)],
            )
        }),
        lax_cmp: None,
        oplax_cmp: Some(Arc::new(move |m| {
            let am = a3.at_pro(m)?;
            let px = companion_of(&e3, &am.left)?;
            let py = companion_of(&e3, &am.right)?;
            slide_globular(&e3, &am, &px, &py)
        })),
    }
}

/// The companion together with its binding modifications: the unit
/// `id_F => α_!` bounded by `(1_F, α)` and counit `α_! => id_G` bounded by
/// `(α, 1_G)`, with components the object-level binding cells.
pub fn companion_protrans_with_bindings(
    alpha: &NaturalTransformation,
) -> (Protransformation, Modification, Modification) {
    let tau = companion_protrans(alpha);
    let e = alpha.src.tgt.clone();
    let (a1, e1) = (alpha.clone(), e.clone());
    let (a2, e2) = (alpha.clone(), e);
    let eta = Modification {
        name: format!("η[{}]", alpha.name),
        top: id_protrans(&alpha.src),
        bottom: tau.clone(),
        left: identity_nat(&alpha.src),
        right: alpha.clone(),
        component: Arc::new(move |x| Ok(companion_of(&e1, &a1.at_ob(x)?)?.unit)),
    };
    let eps = Modification {
        name: format!("ε[{}]", alpha.name),
        top: tau.clone(),
        bottom: id_protrans(&alpha.tgt),
        left: alpha.clone(),
        right: identity_nat(&alpha.tgt),
        component: Arc::new(move |x| Ok(companion_of(&e2, &a2.at_ob(x)?)?.counit)),
    };
    (tau, eta, eps)
}

/// The conjoint of a natural transformation: a lax protransformation
/// `α^*: G -|-> F`.
pub fn conjoint_protrans(alpha: &NaturalTransformation) -> Protransformation {
    let e = alpha.src.tgt.clone();
    let (a1, e1) = (alpha.clone(), e.clone());
    let (a2, e2) = (alpha.clone(), e.clone());
    let (a3, e3) = (alpha.clone(), e.clone());
    Protransformation {
        name: format!("({})^*", alpha.name),
        variant: Variant::Lax,
        src: alpha.tgt.clone(),
        tgt: alpha.src.clone(),
        ob: Arc::new(move |x| Ok(conjoint_of(&e1, &a1.at_ob(x)?)?.pro)),
        arr: Arc::new(move |a| {
            let (sq, ff, gf, ax, ay) = naturality_square_identity(&a2, a)?;
            let px = conjoint_of(&e2, &ax)?;
            let py = conjoint_of(&e2, &ay)?;
            let slid = slide_general_conj(&e2, &sq, &px, &gf, &ff, &py)?;
            vcomp_list(
                &*e2,
                &[e2.runitor_inv(&px.pro), slid, e2.lunitor(&py.pro)],
            )
        }),
        lax_cmp: Some(Arc::new(move |m| {
            let am = a3.at_pro(m)?;
            let px = conjoint_of(&e3, &am.left)?;
            let py = conjoint_of(&e3, &am.right)?;
            slide_globular_conj(&e3, &am, &px, &py)
        })),
        oplax_cmp: None,
    }
}

/// The conjoint with its binding modifications in the lax double category:
/// unit `id_G => α^*` bounded by `(α, 1_G)` and counit `α^* => id_F`
/// bounded by `(1_F, α)`.
pub fn conjoint_protrans_with_bindings(
    alpha: &NaturalTransformation,
) -> (Protransformation, Modification, Modification) {
    let tau = conjoint_protrans(alpha);
    let e = alpha.src.tgt.clone();
    let (a1, e1) = (alpha.clone(), e.clone());
    let (a2, e2) = (alpha.clone(), e);
    let eta = Modification {
        name: format!("η*[{}]", alpha.name),
        top: id_protrans(&alpha.src),
        bottom: tau.clone(),
        left: alpha.clone(),
        right: identity_nat(&alpha.src),
        component: Arc::new(move |x| Ok(conjoint_of(&e1, &a1.at_ob(x)?)?.unit)),
    };
    let eps = Modification {
        name: format!("ε*[{}]", alpha.name),
        top: tau.clone(),
        bottom: id_protrans(&alpha.tgt),
        left: identity_nat(&alpha.tgt),
        right: alpha.clone(),
        component: Arc::new(move |x| Ok(conjoint_of(&e2, &a2.at_ob(x)?)?.counit)),
    };
    (tau, eta, eps)
}

/// True when every probe component cell `α_m` is a commuter, in which case
/// the companion protransformation is pseudo.
pub fn companion_is_pseudo(
    alpha: &NaturalTransformation,
    probe: &ProbeUniverse,
) -> CoreResult<bool> {
    let e = alpha.src.tgt.clone();
    for m in &probe.proarrows {
        let am = alpha.at_pro(m)?;
        if !is_commuter(&e, &am)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Upgrades an oplax companion protransformation to pseudo by inverting
/// its comparisons; fails if any probe comparison is not invertible.
pub fn upgrade_to_pseudo(tau: &Protransformation) -> Protransformation {
    let e = tau.ambient().clone();
    let mut out = tau.clone();
    match (&tau.lax_cmp, &tau.oplax_cmp) {
        (None, Some(opl)) => {
            let (opl, e) = (opl.clone(), e);
            out.lax_cmp = Some(Arc::new(move |m: &Proarrow| {
                let c = opl(m)?;
                e.invert_cell(&c).ok_or_else(|| {
                    CoreError::NotPseudo("comparison not invertible".to_string())
                })
            }));
        }
        (Some(lax), None) => {
            let (lax, e) = (lax.clone(), e);
            out.oplax_cmp = Some(Arc::new(move |m: &Proarrow| {
                let c = lax(m)?;
                e.invert_cell(&c).ok_or_else(|| {
                    CoreError::NotPseudo("comparison not invertible".to_string())
                })
            }));
        }
        _ => {}
    }
    out.variant = Variant::Pseudo;
    out
}

/// Checks that the component of `alpha` at a companion proarrow slides to
/// the external identity on the naturality square, and that its globular
/// reshaping is the canonical comparison between the two composite
/// companions of the common arrow.
pub fn components_at_companions_check(
    alpha: &NaturalTransformation,
    fpair: &CompanionPair,
    probe_id: &str,
) -> CoreResult<LawReport> {
    let e = alpha.src.tgt.clone();
    let f = &alpha.src;
    let g = &alpha.tgt;
    // the component α_{f_!}
    let am = alpha.at_pro(&fpair.pro)?;
    let ax = alpha.at_ob(&fpair.arrow.src)?;
    let ay = alpha.at_ob(&fpair.arrow.tgt)?;
    // slide with companions chosen as the functor images F(f_!), G(f_!)
    let gf_pair = functor_companion(g, fpair)?;
    let ff_pair = functor_companion(f, fpair)?;
    let slid = slide_general(&e, &am, &ax, &gf_pair, &ff_pair, &ay)?;
    let normalized = vcomp_list(
        &*e,
        &[
            e.lunitor_inv(&ff_pair.pro),
            slid,
            e.runitor(&gf_pair.pro),
        ],
    )?;
    // expected: the external identity on the common composite arrow,
    // reshaped the same way
    let (sq, ff_arr, gf_arr, ax2, ay2) = naturality_square_identity(alpha, &fpair.arrow)?;
    debug_assert_eq!(ax, ax2);
    debug_assert_eq!(ay, ay2);
    let _ = (ff_arr, gf_arr);
    let expected_slid = {
        let px = companion_of(&e, &sq.left)?;
        // reshape the identity square so both sides land on the same
        // boundary: slide with the same choices as above
        let s = slide_general(&e, &sq, &ax, &gf_pair, &ff_pair, &ay);
        match s {
            Ok(c) => vcomp_list(
                &*e,
                &[e.lunitor_inv(&ff_pair.pro), c, e.runitor(&gf_pair.pro)],
            )?,
            Err(_) => {
                let _ = px;
                return Ok(LawReport::fail(
                    "components-at-companions.slide",
                    probe_id,
                    json!({"arrow": fpair.arrow}),
                ));
            }
        }
    };
    if normalized != expected_slid {
        return Ok(LawReport::fail(
            "components-at-companions.identity",
            probe_id,
            json!({ "got": normalized, "expected": expected_slid }),
        ));
    }
    // the globular reshaping is the canonical comparison between the two
    // composite companions of Ff · α_y = α_x · Gf
    let ax_pair = companion_of(&e, &ax)?;
    let ay_pair = companion_of(&e, &ay)?;
    let slid_globular = slide_globular(&e, &am, &ax_pair, &ay_pair)?;
    let left_choice = composite_companion(&e, &ff_pair, &ay_pair)?;
    let right_choice = composite_companion(&e, &ax_pair, &gf_pair)?;
    let canonical = companion_comparison(&e, &left_choice, &right_choice)?;
    if slid_globular != canonical {
        return Ok(LawReport::fail(
            "components-at-companions.canonical-iso",
            probe_id,
            json!({ "got": slid_globular, "expected": canonical }),
        ));
    }
    Ok(LawReport::pass("components-at-companions", probe_id))
}

/// Forgets the component cells of a protransformation, keeping the
/// component proarrows and the naturality comparisons.
pub fn globular_fragment(tau: &Protransformation) -> OplaxNatTransData {
    OplaxNatTransData {
        name: format!("U({})", tau.name),
        variant: tau.variant,
        src: tau.src.clone(),
        tgt: tau.tgt.clone(),
        ob: tau.ob.clone(),
        lax_cmp: tau.lax_cmp.clone(),
        oplax_cmp: tau.oplax_cmp.clone(),
    }
}

// ---------------------------------------------------------------------------
// reversal of functors and transformations, for duality cross-checks

fn rev_of(d: &Instance) -> (Instance, &'static str) {
    (reverse_instance(d), "rev")
}

fn as_rev(d: &Instance) -> &ReverseInstance {
    d.as_any()
        .downcast_ref::<ReverseInstance>()
        .expect("reverse instance")
}

/// The functor between reverse instances induced by `F`: identical on
/// objects and arrows, with proarrows and cells translated through the
/// reversal. Laxators swap their arguments.
pub fn reverse_functor(f: &DoubleFunctor) -> DoubleFunctor {
    let (rsrc, _) = rev_of(&f.src);
    let (rtgt, _) = rev_of(&f.tgt);
    let (f1, rs1, rt1) = (f.clone(), rsrc.clone(), rtgt.clone());
    let (f2, rs2, rt2) = (f.clone(), rsrc.clone(), rtgt.clone());
    let (f3, rs3, rt3) = (f.clone(), rsrc.clone(), rtgt.clone());
    let (f4, rs4, rt4) = (f.clone(), rsrc.clone(), rtgt.clone());
    let (f5, rs5, rt5) = (f.clone(), rsrc.clone(), rtgt.clone());
    let (f6, rs6, rt6) = (f.clone(), rsrc.clone(), rtgt.clone());
    DoubleFunctor {
        name: format!("rev({})", f.name),
        src: rsrc.clone(),
        tgt: rtgt.clone(),
        class: f.class,
        normal: f.normal,
        ob: Arc::new(move |x| {
            let base = ObjectRef::new(f1.src.id().clone(), x.payload.clone());
            let fx = f1.apply_ob(&base)?;
            let _ = &rs1;
            Ok(ObjectRef::new(rt1.id().clone(), fx.payload))
        }),
        arr: Arc::new(move |a| {
            let rev = as_rev(&rs2);
            let base = rev.arr_to_base(a);
            let fa = f2.apply_arr(&base)?;
            Ok(as_rev(&rt2).arr_from_base(&fa))
        }),
        pro: Arc::new(move |m| {
            let rev = as_rev(&rs3);
            let base = rev.pro_to_base(m);
            let fm = f3.apply_pro(&base)?;
            Ok(as_rev(&rt3).pro_from_base(&fm))
        }),
        cell: Arc::new(move |c| {
            let rev = as_rev(&rs4);
            let base = rev.cell_to_base(c);
            let fc = f4.apply_cell(&base)?;
            Ok(as_rev(&rt4).cell_from_base(&fc))
        }),
        comp_comparison: Arc::new(move |m, n| {
            let rev = as_rev(&rs5);
            let mb = rev.pro_to_base(m);
            let nb = rev.pro_to_base(n);
            let lx = f5.laxator(&nb, &mb)?;
            Ok(as_rev(&rt5).cell_from_base(&lx))
        }),
        unit_comparison: Arc::new(move |x| {
            let base = ObjectRef::new(f6.src.id().clone(), x.payload.clone());
            let _ = &rs6;
            let u = f6.unit_cmp(&base)?;
            Ok(as_rev(&rt6).cell_from_base(&u))
        }),
    }
}

/// The natural transformation between reversed functors induced by `α`.
pub fn reverse_nat(alpha: &NaturalTransformation) -> NaturalTransformation {
    let rf = reverse_functor(&alpha.src);
    let rg = reverse_functor(&alpha.tgt);
    let (a1, rs1, rt1) = (alpha.clone(), rf.src.clone(), rf.tgt.clone());
    let (a2, rs2, rt2) = (alpha.clone(), rf.src.clone(), rf.tgt.clone());
    NaturalTransformation {
        name: format!("rev({})", alpha.name),
        src: rf.clone(),
        tgt: rg,
        ob: Arc::new(move |x| {
            let base = ObjectRef::new(
                as_rev(&rs1).base().id().clone(),
                x.payload.clone(),
            );
            let ax = a1.at_ob(&base)?;
            Ok(as_rev(&rt1).arr_from_base(&ax))
        }),
        pro: Arc::new(move |m| {
            let base = as_rev(&rs2).pro_to_base(m);
            let am = a2.at_pro(&base)?;
            Ok(as_rev(&rt2).cell_from_base(&am))
        }),
    }
}
