//! Probe-relative verification of functor and transformation axioms.
//!
//! Each checker walks a probe universe of the source instance and returns
//! one report per axiom family. A composite pasting is compared against
//! its mate with all brackets normalized left-to-right, inserting
//! associators explicitly where a composite is built in a different order.

use super::{DoubleFunctor, FunctorClass, Modification, NaturalTransformation, OplaxNatTransData, Protransformation, Variant};
use crate::companions::LawReport;
use crate::core::{vcomp_list, Cell, CoreResult, Instance};
use crate::instances::probe::ProbeUniverse;
use serde_json::json;

pub fn all_pass(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.passed())
}

/// Runs `body` over probe items, recording the first counterexample.
fn sweep<T, I: IntoIterator<Item = T>>(
    law: &str,
    probe_id: &str,
    items: I,
    body: impl Fn(&T) -> CoreResult<Option<(Cell, Cell)>>,
    describe: impl Fn(&T) -> serde_json::Value,
) -> LawReport {
    for item in items {
        match body(&item) {
            Ok(None) => {}
            Ok(Some((lhs, rhs))) => {
                return LawReport::fail(
                    law,
                    probe_id,
                    json!({ "at": describe(&item), "lhs": lhs, "rhs": rhs }),
                );
            }
            Err(e) => {
                return LawReport::fail(
                    law,
                    probe_id,
                    json!({ "at": describe(&item), "error": e.to_string() }),
                );
            }
        }
    }
    LawReport::pass(law, probe_id)
}

fn neq(lhs: Cell, rhs: Cell) -> Option<(Cell, Cell)> {
    if lhs == rhs {
        None
    } else {
        Some((lhs, rhs))
    }
}

/// Verifies functoriality on arrows and cells, naturality of the
/// composition comparisons, and the associativity/unit coherence of the
/// laxators on all probe composites. Pseudo functors additionally get
/// invertibility checks.
pub fn check_double_functor(f: &DoubleFunctor, probe: &ProbeUniverse) -> Vec<LawReport> {
    let e = f.tgt.clone();
    let d = probe.instance.clone();
    let pid = format!("{}|{}", f.name, probe.digest());
    let mut out = Vec::new();

    // arrow functoriality
    let mut arrow_pairs = Vec::new();
    for a in &probe.arrows {
        for b in &probe.arrows {
            if a.tgt == b.src {
                arrow_pairs.push((a.clone(), b.clone()));
            }
        }
    }
    out.push(sweep(
        "functor.arrow-functoriality",
        &pid,
        arrow_pairs,
        |(a, b)| {
            let lhs = f.apply_arr(&d.compose_arrows(a, b)?)?;
            let rhs = e.compose_arrows(&f.apply_arr(a)?, &f.apply_arr(b)?)?;
            Ok(if lhs == rhs {
                None
            } else {
                Some((e.id_cell_on_arrow(&lhs), e.id_cell_on_arrow(&rhs)))
            })
        },
        |(a, b)| json!({ "f": a, "g": b }),
    ));
    out.push(sweep(
        "functor.identity-arrows",
        &pid,
        probe.objects.clone(),
        |x| {
            let lhs = f.apply_arr(&d.id_arrow(x))?;
            let rhs = e.id_arrow(&f.apply_ob(x)?);
            Ok(if lhs == rhs {
                None
            } else {
                Some((e.id_cell_on_arrow(&lhs), e.id_cell_on_arrow(&rhs)))
            })
        },
        |x| json!(x),
    ));

    // internal functoriality on cells
    out.push(sweep(
        "functor.cell-vcomp",
        &pid,
        probe.vcomposable_cell_pairs().into_iter().take(400).map(|(a, b)| (a.clone(), b.clone())),
        |(a, b)| {
            let lhs = f.apply_cell(&d.vcomp(a, b)?)?;
            let rhs = e.vcomp(&f.apply_cell(a)?, &f.apply_cell(b)?)?;
            Ok(neq(lhs, rhs))
        },
        |(a, b)| json!({ "upper": a, "lower": b }),
    ));
    out.push(sweep(
        "functor.identity-cells",
        &pid,
        probe.proarrows.clone(),
        |m| {
            let lhs = f.apply_cell(&d.id_cell_on_pro(m))?;
            let rhs = e.id_cell_on_pro(&f.apply_pro(m)?);
            Ok(neq(lhs, rhs))
        },
        |m| json!(m),
    ));

    // naturality of the laxators with respect to cells
    out.push(sweep(
        "functor.laxator-naturality",
        &pid,
        probe.hcomposable_cell_pairs().into_iter().take(400).map(|(a, b)| (a.clone(), b.clone())),
        |(a, b)| {
            let route1 = {
                let top = e.hcomp(&f.apply_cell(a)?, &f.apply_cell(b)?)?;
                e.vcomp(&top, &f.laxator(&a.bottom, &b.bottom)?)?
            };
            let route2 = {
                let lx = f.laxator(&a.top, &b.top)?;
                e.vcomp(&lx, &f.apply_cell(&d.hcomp(a, b)?)?)?
            };
            Ok(neq(route1, route2))
        },
        |(a, b)| json!({ "left": a, "right": b }),
    ));

    // coherence of laxators with associators
    out.push(sweep(
        "functor.laxator-associativity",
        &pid,
        probe
            .composable_pro_triples()
            .into_iter()
            .take(300)
            .map(|(m, n, p)| (m.clone(), n.clone(), p.clone())),
        |(m, n, p)| {
            let (fm, fn_, fp) = (f.apply_pro(m)?, f.apply_pro(n)?, f.apply_pro(p)?);
            let mn = d.compose_pro(m, n)?;
            let np = d.compose_pro(n, p)?;
            let route1 = vcomp_list(
                &*e,
                &[
                    e.hcomp(&f.laxator(m, n)?, &e.id_cell_on_pro(&fp))?,
                    f.laxator(&mn, p)?,
                    f.apply_cell(&d.associator(m, n, p)?)?,
                ],
            )?;
            let route2 = vcomp_list(
                &*e,
                &[
                    e.associator(&fm, &fn_, &fp)?,
                    e.hcomp(&e.id_cell_on_pro(&fm), &f.laxator(n, p)?)?,
                    f.laxator(m, &np)?,
                ],
            )?;
            Ok(neq(route1, route2))
        },
        |(m, n, p)| json!({ "m": m, "n": n, "p": p }),
    ));

    // coherence of the unit comparisons with unitors
    out.push(sweep(
        "functor.unit-coherence",
        &pid,
        probe.proarrows.clone(),
        |m| {
            let fm = f.apply_pro(m)?;
            let idm = d.id_pro(&m.src);
            let left1 = vcomp_list(
                &*e,
                &[
                    e.hcomp(&f.unit_cmp(&m.src)?, &e.id_cell_on_pro(&fm))?,
                    f.laxator(&idm, m)?,
                    f.apply_cell(&d.lunitor(m))?,
                ],
            )?;
            if let Some(bad) = neq(left1, e.lunitor(&fm)) {
                return Ok(Some(bad));
            }
            let idy = d.id_pro(&m.tgt);
            let right1 = vcomp_list(
                &*e,
                &[
                    e.hcomp(&e.id_cell_on_pro(&fm), &f.unit_cmp(&m.tgt)?)?,
                    f.laxator(m, &idy)?,
                    f.apply_cell(&d.runitor(m))?,
                ],
            )?;
            Ok(neq(right1, e.runitor(&fm)))
        },
        |m| json!(m),
    ));

    // pseudo class: comparisons invertible
    if f.class != FunctorClass::Lax {
        out.push(sweep(
            "functor.pseudo-invertibility",
            &pid,
            probe.composable_pro_pairs().into_iter().take(300).map(|(m, n)| (m.clone(), n.clone())),
            |(m, n)| {
                let lx = f.laxator(m, n)?;
                let inv = f.laxator_inv(m, n)?;
                let round = e.vcomp(&lx, &inv)?;
                Ok(neq(round, e.id_cell_on_pro(&lx.top)))
            },
            |(m, n)| json!({ "m": m, "n": n }),
        ));
    }
    if f.normal {
        out.push(sweep(
            "functor.normal-units",
            &pid,
            probe.objects.clone(),
            |x| {
                let u = f.unit_cmp(x)?;
                let inv = f.unit_cmp_inv(x)?;
                let round = e.vcomp(&u, &inv)?;
                Ok(neq(round, e.id_cell_on_pro(&u.top)))
            },
            |x| json!(x),
        ));
    }
    out
}

/// Verifies arrow naturality, cell naturality and the coherence of the
/// transformation's cell components with the functors' laxators.
pub fn check_natural_transformation(
    alpha: &NaturalTransformation,
    probe: &ProbeUniverse,
) -> Vec<LawReport> {
    let f = &alpha.src;
    let g = &alpha.tgt;
    let e = f.tgt.clone();
    let d = probe.instance.clone();
    let pid = format!("{}|{}", alpha.name, probe.digest());
    let mut out = Vec::new();

    let mut arrow_items = Vec::new();
    for a in &probe.arrows {
        arrow_items.push(a.clone());
    }
    out.push(sweep(
        "nat.arrow-naturality",
        &pid,
        arrow_items,
        |a| {
            let lhs = e.compose_arrows(&alpha.at_ob(&a.src)?, &g.apply_arr(a)?)?;
            let rhs = e.compose_arrows(&f.apply_arr(a)?, &alpha.at_ob(&a.tgt)?)?;
            Ok(if lhs == rhs {
                None
            } else {
                Some((e.id_cell_on_arrow(&lhs), e.id_cell_on_arrow(&rhs)))
            })
        },
        |a| json!(a),
    ));

    out.push(sweep(
        "nat.cell-naturality",
        &pid,
        probe.cells.iter().take(500).cloned(),
        |c| {
            let lhs = e.vcomp(&f.apply_cell(c)?, &alpha.at_pro(&c.bottom)?)?;
            let rhs = e.vcomp(&alpha.at_pro(&c.top)?, &g.apply_cell(c)?)?;
            Ok(neq(lhs, rhs))
        },
        |c| json!(c),
    ));

    out.push(sweep(
        "nat.laxator-coherence",
        &pid,
        probe.composable_pro_pairs().into_iter().take(300).map(|(m, n)| (m.clone(), n.clone())),
        |(m, n)| {
            let mn = d.compose_pro(m, n)?;
            let lhs = e.vcomp(
                &e.hcomp(&alpha.at_pro(m)?, &alpha.at_pro(n)?)?,
                &g.laxator(m, n)?,
            )?;
            let rhs = e.vcomp(&f.laxator(m, n)?, &alpha.at_pro(&mn)?)?;
            Ok(neq(lhs, rhs))
        },
        |(m, n)| json!({ "m": m, "n": n }),
    ));

    out.push(sweep(
        "nat.unit-coherence",
        &pid,
        probe.objects.clone(),
        |x| {
            let idx = d.id_pro(x);
            let lhs = e.vcomp(&f.unit_cmp(x)?, &alpha.at_pro(&idx)?)?;
            let rhs = e.vcomp(
                &e.id_cell_on_arrow(&alpha.at_ob(x)?),
                &g.unit_cmp(x)?,
            )?;
            Ok(neq(lhs, rhs))
        },
        |x| json!(x),
    ));
    out
}

/// Verifies the four axiom families of a protransformation, selecting the
/// comparison orientation from the variant. Pseudo protransformations get
/// both orientations checked plus mutual invertibility.
pub fn check_protransformation(
    tau: &Protransformation,
    probe: &ProbeUniverse,
) -> Vec<LawReport> {
    let f = &tau.src;
    let g = &tau.tgt;
    let e = f.tgt.clone();
    let d = probe.instance.clone();
    let pid = format!("{}|{}", tau.name, probe.digest());
    let mut out = Vec::new();

    // functoriality of components
    let mut arrow_pairs = Vec::new();
    for a in &probe.arrows {
        for b in &probe.arrows {
            if a.tgt == b.src {
                arrow_pairs.push((a.clone(), b.clone()));
            }
        }
    }
    out.push(sweep(
        "protrans.component-functoriality",
        &pid,
        arrow_pairs,
        |(a, b)| {
            let lhs = tau.at_arr(&d.compose_arrows(a, b)?)?;
            let rhs = e.vcomp(&tau.at_arr(a)?, &tau.at_arr(b)?)?;
            Ok(neq(lhs, rhs))
        },
        |(a, b)| json!({ "f": a, "g": b }),
    ));
    out.push(sweep(
        "protrans.component-identities",
        &pid,
        probe.objects.clone(),
        |x| {
            let lhs = tau.at_arr(&d.id_arrow(x))?;
            let rhs = e.id_cell_on_pro(&tau.at_ob(x)?);
            Ok(neq(lhs, rhs))
        },
        |x| json!(x),
    ));

    let orientations: Vec<Variant> = match tau.variant {
        Variant::Lax => vec![Variant::Lax],
        Variant::Oplax => vec![Variant::Oplax],
        Variant::Pseudo | Variant::Strict => vec![Variant::Lax, Variant::Oplax],
    };

    for orientation in orientations {
        let suffix = match orientation {
            Variant::Lax => "lax",
            _ => "oplax",
        };
        // naturality with respect to cells
        out.push(sweep(
            &format!("protrans.cell-naturality.{suffix}"),
            &pid,
            probe.cells.iter().take(400).cloned(),
            |c| {
                let lhs;
                let rhs;
                if orientation == Variant::Lax {
                    lhs = e.vcomp(
                        &tau.lax_at(&c.top)?,
                        &e.hcomp(&f.apply_cell(c)?, &tau.at_arr(&c.right)?)?,
                    )?;
                    rhs = e.vcomp(
                        &e.hcomp(&tau.at_arr(&c.left)?, &g.apply_cell(c)?)?,
                        &tau.lax_at(&c.bottom)?,
                    )?;
                } else {
                    lhs = e.vcomp(
                        &e.hcomp(&f.apply_cell(c)?, &tau.at_arr(&c.right)?)?,
                        &tau.oplax_at(&c.bottom)?,
                    )?;
                    rhs = e.vcomp(
                        &tau.oplax_at(&c.top)?,
                        &e.hcomp(&tau.at_arr(&c.left)?, &g.apply_cell(c)?)?,
                    )?;
                }
                Ok(neq(lhs, rhs))
            },
            |c| json!(c),
        ));

        // coherence with respect to external composition
        out.push(sweep(
            &format!("protrans.composition-coherence.{suffix}"),
            &pid,
            probe.composable_pro_pairs().into_iter().take(250).map(|(m, n)| (m.clone(), n.clone())),
            |(m, n)| {
                let mn = d.compose_pro(m, n)?;
                let (fm, fn_) = (f.apply_pro(m)?, f.apply_pro(n)?);
                let (gm, gn) = (g.apply_pro(m)?, g.apply_pro(n)?);
                let tx = tau.at_ob(&m.src)?;
                let ty = tau.at_ob(&m.tgt)?;
                let tz = tau.at_ob(&n.tgt)?;
                if orientation == Variant::Lax {
                    let lhs = vcomp_list(
                        &*e,
                        &[
                            e.hcomp(&tau.lax_at(m)?, &e.id_cell_on_pro(&gn))?,
                            e.associator(&fm, &ty, &gn)?,
                            e.hcomp(&e.id_cell_on_pro(&fm), &tau.lax_at(n)?)?,
                            e.associator_inv(&fm, &fn_, &tz)?,
                            e.hcomp(&f.laxator(m, n)?, &e.id_cell_on_pro(&tz))?,
                        ],
                    )?;
                    let rhs = vcomp_list(
                        &*e,
                        &[
                            e.associator(&tx, &gm, &gn)?,
                            e.hcomp(&e.id_cell_on_pro(&tx), &g.laxator(m, n)?)?,
                            tau.lax_at(&mn)?,
                        ],
                    )?;
                    Ok(neq(lhs, rhs))
                } else {
                    let lhs = vcomp_list(
                        &*e,
                        &[
                            e.associator(&fm, &fn_, &tz)?,
                            e.hcomp(&e.id_cell_on_pro(&fm), &tau.oplax_at(n)?)?,
                            e.associator_inv(&fm, &ty, &gn)?,
                            e.hcomp(&tau.oplax_at(m)?, &e.id_cell_on_pro(&gn))?,
                            e.associator(&tx, &gm, &gn)?,
                            e.hcomp(&e.id_cell_on_pro(&tx), &g.laxator(m, n)?)?,
                        ],
                    )?;
                    let rhs = vcomp_list(
                        &*e,
                        &[
                            e.hcomp(&f.laxator(m, n)?, &e.id_cell_on_pro(&tz))?,
                            tau.oplax_at(&mn)?,
                        ],
                    )?;
                    Ok(neq(lhs, rhs))
                }
            },
            |(m, n)| json!({ "m": m, "n": n }),
        ));

        // coherence with respect to external identities
        out.push(sweep(
            &format!("protrans.identity-coherence.{suffix}"),
            &pid,
            probe.objects.clone(),
            |x| {
                let idx = d.id_pro(x);
                let tx = tau.at_ob(x)?;
                if orientation == Variant::Lax {
                    let lhs = vcomp_list(
                        &*e,
                        &[
                            e.runitor_inv(&tx),
                            e.hcomp(&e.id_cell_on_pro(&tx), &g.unit_cmp(x)?)?,
                            tau.lax_at(&idx)?,
                        ],
                    )?;
                    let rhs = vcomp_list(
                        &*e,
                        &[
                            e.lunitor_inv(&tx),
                            e.hcomp(&f.unit_cmp(x)?, &e.id_cell_on_pro(&tx))?,
                        ],
                    )?;
                    Ok(neq(lhs, rhs))
                } else {
                    let lhs = vcomp_list(
                        &*e,
                        &[
                            e.lunitor_inv(&tx),
                            e.hcomp(&f.unit_cmp(x)?, &e.id_cell_on_pro(&tx))?,
                            tau.oplax_at(&idx)?,
                        ],
                    )?;
                    let rhs = vcomp_list(
                        &*e,
                        &[
                            e.runitor_inv(&tx),
                            e.hcomp(&e.id_cell_on_pro(&tx), &g.unit_cmp(x)?)?,
                        ],
                    )?;
                    Ok(neq(lhs, rhs))
                }
            },
            |x| json!(x),
        ));
    }

    if matches!(tau.variant, Variant::Pseudo | Variant::Strict) {
        out.push(sweep(
            "protrans.pseudo-invertibility",
            &pid,
            probe.proarrows.clone(),
            |m| {
                let lax = tau.lax_at(m)?;
                let opl = tau.oplax_at(m)?;
                let round = e.vcomp(&opl, &lax)?;
                Ok(neq(round, e.id_cell_on_pro(&opl.top)))
            },
            |m| json!(m),
        ));
    }
    out
}

/// Verifies the two equivariance axioms of a modification, in the
/// orientation common to its bounding protransformations.
pub fn check_modification(mu: &Modification, probe: &ProbeUniverse) -> Vec<LawReport> {
    let sigma = &mu.top;
    let tau = &mu.bottom;
    let alpha = &mu.left;
    let beta = &mu.right;
    let e: Instance = mu.ambient().clone();
    let pid = format!("{}|{}", mu.name, probe.digest());
    let mut out = Vec::new();

    out.push(sweep(
        "modification.internal-equivariance",
        &pid,
        probe.arrows.clone(),
        |a| {
            let lhs = e.vcomp(&mu.at_ob(&a.src)?, &tau.at_arr(a)?)?;
            let rhs = e.vcomp(&sigma.at_arr(a)?, &mu.at_ob(&a.tgt)?)?;
            Ok(neq(lhs, rhs))
        },
        |a| json!(a),
    ));

    let lax_side = sigma.lax_cmp.is_some() && tau.lax_cmp.is_some();
    let oplax_side = sigma.oplax_cmp.is_some() && tau.oplax_cmp.is_some();
    if lax_side {
        out.push(sweep(
            "modification.external-equivariance.lax",
            &pid,
            probe.proarrows.clone(),
            |m| {
                let lhs = e.vcomp(
                    &e.hcomp(&mu.at_ob(&m.src)?, &beta.at_pro(m)?)?,
                    &tau.lax_at(m)?,
                )?;
                let rhs = e.vcomp(
                    &sigma.lax_at(m)?,
                    &e.hcomp(&alpha.at_pro(m)?, &mu.at_ob(&m.tgt)?)?,
                )?;
                Ok(neq(lhs, rhs))
            },
            |m| json!(m),
        ));
    }
    if oplax_side {
        out.push(sweep(
            "modification.external-equivariance.oplax",
            &pid,
            probe.proarrows.clone(),
            |m| {
                let lhs = e.vcomp(
                    &sigma.oplax_at(m)?,
                    &e.hcomp(&mu.at_ob(&m.src)?, &beta.at_pro(m)?)?,
                )?;
                let rhs = e.vcomp(
                    &e.hcomp(&alpha.at_pro(m)?, &mu.at_ob(&m.tgt)?)?,
                    &tau.oplax_at(m)?,
                )?;
                Ok(neq(lhs, rhs))
            },
            |m| json!(m),
        ));
    }
    if !lax_side && !oplax_side {
        out.push(LawReport::fail(
            "modification.external-equivariance",
            &pid,
            json!("bounding protransformations share no orientation"),
        ));
    }
    out
}

/// Bicategorical axioms for the underlying (op)lax natural transformation.
///
/// The axioms are exactly the protransformation axioms restricted to the
/// globular fragment: arrows collapse to identities, cells to globular
/// cells, and the component at every identity arrow is the identity cell
/// on the component proarrow. The protransformation checker is reused over
/// that restricted probe.
pub fn check_oplax_nat_data(data: &OplaxNatTransData, probe: &ProbeUniverse) -> Vec<LawReport> {
    let d = probe.instance.clone();
    let restricted = ProbeUniverse {
        instance: probe.instance.clone(),
        config: probe.config.clone(),
        objects: probe.objects.clone(),
        arrows: probe.objects.iter().map(|x| d.id_arrow(x)).collect(),
        proarrows: probe.proarrows.clone(),
        cells: probe
            .cells
            .iter()
            .filter(|c| c.left == d.id_arrow(&c.top.src) && c.right == d.id_arrow(&c.top.tgt))
            .cloned()
            .collect(),
    };
    let ob = data.ob.clone();
    let e = data.src.tgt.clone();
    let as_protrans = Protransformation {
        name: format!("{}#globular", data.name),
        variant: data.variant,
        src: data.src.clone(),
        tgt: data.tgt.clone(),
        ob: data.ob.clone(),
        arr: std::sync::Arc::new(move |f: &crate::core::Arrow| {
            let tx = ob(&f.src)?;
            Ok(e.id_cell_on_pro(&tx))
        }),
        lax_cmp: data.lax_cmp.clone(),
        oplax_cmp: data.oplax_cmp.clone(),
    };
    check_protransformation(&as_protrans, &restricted)
}
