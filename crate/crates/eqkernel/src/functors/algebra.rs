//! Composition, identities and whiskering of protransformations and
//! modifications.

use super::{
    compose_functors, compose_nat, DoubleFunctor, FunctorClass, Modification,
    NaturalTransformation, Protransformation, Variant,
};
use crate::core::{vcomp_list, CoreError, CoreResult};
use std::sync::Arc;

/// The identity protransformation on a functor: unit proarrow components,
/// external identity cell components, unitor comparisons.
pub fn id_protrans(f: &DoubleFunctor) -> Protransformation {
    let e = f.tgt.clone();
    let variant = if e.is_strict() {
        Variant::Strict
    } else {
        Variant::Pseudo
    };
    let (f1, e1) = (f.clone(), e.clone());
    let (f2, e2) = (f.clone(), e.clone());
    let (f3, e3) = (f.clone(), e.clone());
    let (f4, e4) = (f.clone(), e);
    Protransformation {
        name: format!("id[{}]", f.name),
        variant,
        src: f.clone(),
        tgt: f.clone(),
        ob: Arc::new(move |x| Ok(e1.id_pro(&f1.apply_ob(x)?))),
        arr: Arc::new(move |a| Ok(e2.id_cell_on_arrow(&f2.apply_arr(a)?))),
        lax_cmp: Some(Arc::new(move |m| {
            let fm = f3.apply_pro(m)?;
            e3.vcomp(&e3.lunitor(&fm), &e3.runitor_inv(&fm))
        })),
        oplax_cmp: Some(Arc::new(move |m| {
            let fm = f4.apply_pro(m)?;
            e4.vcomp(&e4.runitor(&fm), &e4.lunitor_inv(&fm))
        })),
    }
}

fn joined_variant(a: Variant, b: Variant) -> CoreResult<Variant> {
    use Variant::*;
    Ok(match (a, b) {
        (Strict, Strict) => Strict,
        (Lax | Strict | Pseudo, Lax) | (Lax, Strict | Pseudo) => Lax,
        (Oplax | Strict | Pseudo, Oplax) | (Oplax, Strict | Pseudo) => Oplax,
        (Pseudo, Pseudo) | (Pseudo, Strict) | (Strict, Pseudo) => Pseudo,
        (Lax, Oplax) | (Oplax, Lax) => {
            return Err(CoreError::VariantMismatch(
                "cannot compose a lax with an oplax protransformation".into(),
            ))
        }
    })
}

/// External composite of protransformations `σ: F -|-> G` and
/// `τ: G -|-> H`, defined componentwise with the comparison pasting.
pub fn compose_protrans(
    sigma: &Protransformation,
    tau: &Protransformation,
) -> CoreResult<Protransformation> {
    if sigma.tgt.name != tau.src.name {
        return Err(CoreError::Boundary(format!(
            "middle functors differ: {} vs {}",
            sigma.tgt.name, tau.src.name
        )));
    }
    let variant = joined_variant(sigma.variant, tau.variant)?;
    let e = sigma.ambient().clone();
    let (s1, t1, e1) = (sigma.clone(), tau.clone(), e.clone());
    let (s2, t2, e2) = (sigma.clone(), tau.clone(), e.clone());
    let lax_cmp = if sigma.lax_cmp.is_some() && tau.lax_cmp.is_some() {
        let (s, t, e) = (sigma.clone(), tau.clone(), e.clone());
        let f = sigma.src.clone();
        let h = tau.tgt.clone();
        Some(Arc::new(move |m: &crate::core::Proarrow| {
            let sx = s.at_ob(&m.src)?;
            let sy = s.at_ob(&m.tgt)?;
            let tx = t.at_ob(&m.src)?;
            let ty = t.at_ob(&m.tgt)?;
            let fm = f.apply_pro(m)?;
            let gm = s.tgt.apply_pro(m)?;
            let hm = h.apply_pro(m)?;
            vcomp_list(
                &*e,
                &[
                    e.associator(&sx, &tx, &hm)?,
                    e.hcomp(&e.id_cell_on_pro(&sx), &t.lax_at(m)?)?,
                    e.associator_inv(&sx, &gm, &ty)?,
                    e.hcomp(&s.lax_at(m)?, &e.id_cell_on_pro(&ty))?,
                    e.associator(&fm, &sy, &ty)?,
                ],
            )
        }) as super::ProToCellMap)
    } else {
        None
    };
    let oplax_cmp = if sigma.oplax_cmp.is_some() && tau.oplax_cmp.is_some() {
        let (s, t, e) = (sigma.clone(), tau.clone(), e.clone());
        let f = sigma.src.clone();
        let h = tau.tgt.clone();
        Some(Arc::new(move |m: &crate::core::Proarrow| {
            let sx = s.at_ob(&m.src)?;
            let sy = s.at_ob(&m.tgt)?;
            let tx = t.at_ob(&m.src)?;
            let ty = t.at_ob(&m.tgt)?;
            let fm = f.apply_pro(m)?;
            let gm = s.tgt.apply_pro(m)?;
            let hm = h.apply_pro(m)?;
            vcomp_list(
                &*e,
                &[
                    e.associator_inv(&fm, &sy, &ty)?,
                    e.hcomp(&s.oplax_at(m)?, &e.id_cell_on_pro(&ty))?,
                    e.associator(&sx, &gm, &ty)?,
                    e.hcomp(&e.id_cell_on_pro(&sx), &t.oplax_at(m)?)?,
                    e.associator_inv(&sx, &tx, &hm)?,
                ],
            )
        }) as super::ProToCellMap)
    } else {
        None
    };
    Ok(Protransformation {
        name: format!("{}⊙{}", sigma.name, tau.name),
        variant,
        src: sigma.src.clone(),
        tgt: tau.tgt.clone(),
        ob: Arc::new(move |x| {
            let a = s1.at_ob(x)?;
            let b = t1.at_ob(x)?;
            e1.compose_pro(&a, &b)
        }),
        arr: Arc::new(move |f| {
            let a = s2.at_arr(f)?;
            let b = t2.at_arr(f)?;
            e2.hcomp(&a, &b)
        }),
        lax_cmp,
        oplax_cmp,
    })
}

/// Pre-whiskering `τ * F`: reindexing the components of `τ` along `F`.
pub fn pre_whisker(tau: &Protransformation, f: &DoubleFunctor) -> Protransformation {
    let (t1, f1) = (tau.clone(), f.clone());
    let (t2, f2) = (tau.clone(), f.clone());
    let lax_cmp = tau.lax_cmp.as_ref().map(|cmp| {
        let (cmp, f) = (cmp.clone(), f.clone());
        Arc::new(move |m: &crate::core::Proarrow| cmp(&f.apply_pro(m)?)) as super::ProToCellMap
    });
    let oplax_cmp = tau.oplax_cmp.as_ref().map(|cmp| {
        let (cmp, f) = (cmp.clone(), f.clone());
        Arc::new(move |m: &crate::core::Proarrow| cmp(&f.apply_pro(m)?)) as super::ProToCellMap
    });
    Protransformation {
        name: format!("{}*{}", tau.name, f.name),
        variant: tau.variant,
        src: compose_functors(f, &tau.src),
        tgt: compose_functors(f, &tau.tgt),
        ob: Arc::new(move |x| t1.at_ob(&f1.apply_ob(x)?)),
        arr: Arc::new(move |a| t2.at_arr(&f2.apply_arr(a)?)),
        lax_cmp,
        oplax_cmp,
    }
}

/// Pre-whiskering of a natural transformation.
pub fn pre_whisker_nat(alpha: &NaturalTransformation, f: &DoubleFunctor) -> NaturalTransformation {
    let (a1, f1) = (alpha.clone(), f.clone());
    let (a2, f2) = (alpha.clone(), f.clone());
    NaturalTransformation {
        name: format!("{}*{}", alpha.name, f.name),
        src: compose_functors(f, &alpha.src),
        tgt: compose_functors(f, &alpha.tgt),
        ob: Arc::new(move |x| a1.at_ob(&f1.apply_ob(x)?)),
        pro: Arc::new(move |m| a2.at_pro(&f2.apply_pro(m)?)),
    }
}

/// Pre-whiskering of a modification (componentwise reindexing).
pub fn pre_whisker_mod(mu: &Modification, f: &DoubleFunctor) -> Modification {
    let (m1, f1) = (mu.clone(), f.clone());
    Modification {
        name: format!("{}*{}", mu.name, f.name),
        top: pre_whisker(&mu.top, f),
        bottom: pre_whisker(&mu.bottom, f),
        left: pre_whisker_nat(&mu.left, f),
        right: pre_whisker_nat(&mu.right, f),
        component: Arc::new(move |x| m1.at_ob(&f1.apply_ob(x)?)),
    }
}

/// Post-whiskering `H * τ`, only defined when `H` is pseudo (or strict):
/// the comparison pasting needs H's inverse laxators. A properly lax `H`
/// is rejected with `NotPseudo`.
pub fn post_whisker(h: &DoubleFunctor, tau: &Protransformation) -> CoreResult<Protransformation> {
    if h.class == FunctorClass::Lax {
        return Err(CoreError::NotPseudo(format!(
            "cannot post-whisker by the properly lax functor {}",
            h.name
        )));
    }
    let e = h.tgt.clone();
    let (h1, t1) = (h.clone(), tau.clone());
    let (h2, t2) = (h.clone(), tau.clone());
    let fsrc = tau.src.clone();
    let gtgt = tau.tgt.clone();
    let lax_cmp = tau.lax_cmp.as_ref().map(|_| {
        let (h, t, e) = (h.clone(), tau.clone(), e.clone());
        let (f, g) = (fsrc.clone(), gtgt.clone());
        Arc::new(move |m: &crate::core::Proarrow| {
            let tx = t.at_ob(&m.src)?;
            let ty = t.at_ob(&m.tgt)?;
            let fm = f.apply_pro(m)?;
            let gm = g.apply_pro(m)?;
            vcomp_list(
                &*e,
                &[
                    h.laxator(&tx, &gm)?,
                    h.apply_cell(&t.lax_at(m)?)?,
                    h.laxator_inv(&fm, &ty)?,
                ],
            )
        }) as super::ProToCellMap
    });
    let oplax_cmp = tau.oplax_cmp.as_ref().map(|_| {
        let (h, t, e) = (h.clone(), tau.clone(), e.clone());
        let (f, g) = (fsrc.clone(), gtgt.clone());
        Arc::new(move |m: &crate::core::Proarrow| {
            let tx = t.at_ob(&m.src)?;
            let ty = t.at_ob(&m.tgt)?;
            let fm = f.apply_pro(m)?;
            let gm = g.apply_pro(m)?;
            vcomp_list(
                &*e,
                &[
                    h.laxator(&fm, &ty)?,
                    h.apply_cell(&t.oplax_at(m)?)?,
                    h.laxator_inv(&tx, &gm)?,
                ],
            )
        }) as super::ProToCellMap
    });
    Ok(Protransformation {
        name: format!("{}*{}", h.name, tau.name),
        variant: tau.variant,
        src: compose_functors(&tau.src, h),
        tgt: compose_functors(&tau.tgt, h),
        ob: Arc::new(move |x| h1.apply_pro(&t1.at_ob(x)?)),
        arr: Arc::new(move |a| h2.apply_cell(&t2.at_arr(a)?)),
        lax_cmp,
        oplax_cmp,
    })
}

/// Post-whiskering of a natural transformation (no laxators needed, so any
/// functor works).
pub fn post_whisker_nat(h: &DoubleFunctor, alpha: &NaturalTransformation) -> NaturalTransformation {
    let (h1, a1) = (h.clone(), alpha.clone());
    let (h2, a2) = (h.clone(), alpha.clone());
    NaturalTransformation {
        name: format!("{}*{}", h.name, alpha.name),
        src: compose_functors(&alpha.src, h),
        tgt: compose_functors(&alpha.tgt, h),
        ob: Arc::new(move |x| h1.apply_arr(&a1.at_ob(x)?)),
        pro: Arc::new(move |m| h2.apply_cell(&a2.at_pro(m)?)),
    }
}

/// Post-whiskering of a modification.
pub fn post_whisker_mod(h: &DoubleFunctor, mu: &Modification) -> CoreResult<Modification> {
    let (h1, m1) = (h.clone(), mu.clone());
    Ok(Modification {
        name: format!("{}*{}", h.name, mu.name),
        top: post_whisker(h, &mu.top)?,
        bottom: post_whisker(h, &mu.bottom)?,
        left: post_whisker_nat(h, &mu.left),
        right: post_whisker_nat(h, &mu.right),
        component: Arc::new(move |x| h1.apply_cell(&m1.at_ob(x)?)),
    })
}

/// Internal (vertical) composite of modifications.
pub fn vcomp_modifications(mu: &Modification, nu: &Modification) -> CoreResult<Modification> {
    let e = mu.ambient().clone();
    let (m1, n1) = (mu.clone(), nu.clone());
    Ok(Modification {
        name: format!("{}·{}", mu.name, nu.name),
        top: mu.top.clone(),
        bottom: nu.bottom.clone(),
        left: compose_nat(&mu.left, &nu.left),
        right: compose_nat(&mu.right, &nu.right),
        component: Arc::new(move |x| {
            let a = m1.at_ob(x)?;
            let b = n1.at_ob(x)?;
            e.vcomp(&a, &b)
        }),
    })
}

/// External (horizontal) composite of modifications.
pub fn hcomp_modifications(mu: &Modification, nu: &Modification) -> CoreResult<Modification> {
    let e = mu.ambient().clone();
    let (m1, n1) = (mu.clone(), nu.clone());
    Ok(Modification {
        name: format!("{}⊙{}", mu.name, nu.name),
        top: compose_protrans(&mu.top, &nu.top)?,
        bottom: compose_protrans(&mu.bottom, &nu.bottom)?,
        left: mu.left.clone(),
        right: nu.right.clone(),
        component: Arc::new(move |x| {
            let a = m1.at_ob(x)?;
            let b = n1.at_ob(x)?;
            e.hcomp(&a, &b)
        }),
    })
}

/// The identity modification on a protransformation.
pub fn id_modification(tau: &Protransformation) -> Modification {
    let (t1, e) = (tau.clone(), tau.ambient().clone());
    Modification {
        name: format!("1[{}]", tau.name),
        top: tau.clone(),
        bottom: tau.clone(),
        left: super::identity_nat(&tau.src),
        right: super::identity_nat(&tau.tgt),
        component: Arc::new(move |x| Ok(e.id_cell_on_pro(&t1.at_ob(x)?))),
    }
}

/// The external identity modification on a natural transformation,
/// bounded above and below by identity protransformations.
pub fn id_modification_on_nat(alpha: &NaturalTransformation) -> Modification {
    let (a1, e) = (alpha.clone(), alpha.src.tgt.clone());
    Modification {
        name: format!("id[{}]", alpha.name),
        top: id_protrans(&alpha.src),
        bottom: id_protrans(&alpha.tgt),
        left: alpha.clone(),
        right: alpha.clone(),
        component: Arc::new(move |x| Ok(e.id_cell_on_arrow(&a1.at_ob(x)?))),
    }
}
