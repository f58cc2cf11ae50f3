//! Core double-category laws checked by enumeration: interchange, strict
//! unit/associativity, coherence of associators and unitors, and the
//! behavior of the duality constructions on probes.

use eqkernel::core::dualities::{
    opposite_instance, power_instance, reverse_instance, transpose_strict_instance,
};
use eqkernel::core::{CellBoundary, CoreError, Instance};
use eqkernel::instances::probe::{ProbeConfig, ProbeUniverse};
use eqkernel::instances::{
    make_mat_instance, make_rel_instance, make_span_instance, OrderedSemiring,
};

fn rel() -> Instance {
    make_rel_instance()
}

fn span() -> Instance {
    make_span_instance()
}

fn nat() -> Instance {
    make_mat_instance(OrderedSemiring::NatMaxTimes { cap: 7 }).unwrap()
}

fn small_probe(d: &Instance) -> ProbeUniverse {
    ProbeUniverse::build(d, &ProbeConfig::seeded(2, 5, 6))
}

/// Interchange: (α ⊙ β) · (γ ⊙ δ) = (α · γ) ⊙ (β · δ) for matching probe
/// quadruples, found through boundary indexes and capped to keep the unit
/// test fast (the acceptance suite runs the larger version).
fn check_interchange(d: &Instance, probe: &ProbeUniverse) {
    let by_left = probe.cells_by_left();
    let by_top = probe.cells_by_top();
    let mut checked = 0usize;
    'outer: for a in &probe.cells {
        let Some(bs) = by_left.get(&a.right) else { continue };
        for b in bs {
            let (Some(cs), Some(es)) = (by_top.get(&a.bottom), by_top.get(&b.bottom)) else {
                continue;
            };
            for c in cs {
                for e in es {
                    if c.right != e.left {
                        continue;
                    }
                    let lhs = d
                        .vcomp(&d.hcomp(a, b).unwrap(), &d.hcomp(c, e).unwrap())
                        .unwrap();
                    let rhs = d
                        .hcomp(&d.vcomp(a, c).unwrap(), &d.vcomp(b, e).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "interchange failed in {}", d.id());
                    checked += 1;
                    if checked >= 3000 {
                        break 'outer;
                    }
                }
            }
        }
    }
    assert!(checked > 0, "no interchange quadruples found in {}", d.id());
}

#[test]
fn interchange_rel_and_span() {
    for d in [rel(), span()] {
        let probe = small_probe(&d);
        check_interchange(&d, &probe);
    }
}

#[test]
fn strict_instances_have_identity_coherence_cells() {
    for d in [rel(), nat()] {
        assert!(d.is_strict());
        let probe = small_probe(&d);
        for (m, n, p) in probe.composable_pro_triples().into_iter().take(200) {
            let a = d.associator(m, n, p).unwrap();
            let mn = d.compose_pro(m, n).unwrap();
            let mnp = d.compose_pro(&mn, p).unwrap();
            assert_eq!(a, d.id_cell_on_pro(&mnp));
            let np = d.compose_pro(n, p).unwrap();
            assert_eq!(mnp, d.compose_pro(m, &np).unwrap(), "strict associativity");
        }
        for m in &probe.proarrows {
            assert_eq!(d.lunitor(m), d.id_cell_on_pro(m));
            assert_eq!(d.runitor(m), d.id_cell_on_pro(m));
            assert_eq!(
                d.compose_pro(&d.id_pro(&m.src), m).unwrap(),
                m.clone(),
                "strict left unit"
            );
            assert_eq!(
                d.compose_pro(m, &d.id_pro(&m.tgt)).unwrap(),
                m.clone(),
                "strict right unit"
            );
        }
    }
}

/// Pentagon and triangle coherence for the span associators/unitors on
/// composable triples with small apexes.
#[test]
fn span_pentagon_and_triangle() {
    let d = span();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 11, 5));
    let mut pentagons = 0usize;
    for (m, n, p) in probe.composable_pro_triples() {
        for q in &probe.proarrows {
            if p.tgt != q.src {
                continue;
            }
            // pentagon: two routes ((mn)p)q => m(n(pq))
            let mn = d.compose_pro(m, n).unwrap();
            let np = d.compose_pro(n, p).unwrap();
            let pq = d.compose_pro(p, q).unwrap();
            let route1 = {
                let s1 = d.associator(&mn, p, q).unwrap();
                let s2 = d.associator(m, n, &pq).unwrap();
                d.vcomp(&s1, &s2).unwrap()
            };
            let route2 = {
                let s1 = d
                    .hcomp(&d.associator(m, n, p).unwrap(), &d.id_cell_on_pro(q))
                    .unwrap();
                let s2 = d.associator(m, &np, q).unwrap();
                let s3 = d
                    .hcomp(&d.id_cell_on_pro(m), &d.associator(n, p, q).unwrap())
                    .unwrap();
                d.vcomp(&d.vcomp(&s1, &s2).unwrap(), &s3).unwrap()
            };
            assert_eq!(route1, route2, "pentagon failed");
            pentagons += 1;
            if pentagons > 60 {
                break;
            }
        }
        // triangle: (m id) n => m n directly vs through the associator
        let idy = d.id_pro(&m.tgt);
        let r1 = d
            .hcomp(&d.runitor(m), &d.id_cell_on_pro(n))
            .unwrap();
        let r2 = {
            let s1 = d.associator(m, &idy, n).unwrap();
            let s2 = d.hcomp(&d.id_cell_on_pro(m), &d.lunitor(n)).unwrap();
            d.vcomp(&s1, &s2).unwrap()
        };
        assert_eq!(r1, r2, "triangle failed");
    }
    assert!(pentagons > 0);
}

/// Naturality of associators and unitors with respect to hcomp of cells.
#[test]
fn span_coherence_naturality() {
    let d = span();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 23, 4));
    let by_left = probe.cells_by_left();
    let mut checked = 0usize;
    for (a, b) in probe.hcomposable_cell_pairs() {
        let Some(cs) = by_left.get(&b.right) else { continue };
        for c in cs.iter().copied() {
            // associator naturality: assoc then (a ⊙ (b ⊙ c)) equals
            // ((a ⊙ b) ⊙ c) then assoc
            let abc_left = d.hcomp(&d.hcomp(a, b).unwrap(), c).unwrap();
            let abc_right = d.hcomp(a, &d.hcomp(b, c).unwrap()).unwrap();
            let top_assoc = d.associator(&a.top, &b.top, &c.top).unwrap();
            let bottom_assoc = d.associator(&a.bottom, &b.bottom, &c.bottom).unwrap();
            let lhs = d.vcomp(&top_assoc, &abc_right).unwrap();
            let rhs = d.vcomp(&abc_left, &bottom_assoc).unwrap();
            assert_eq!(lhs, rhs, "associator naturality failed");
            checked += 1;
            if checked > 80 {
                return;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn unitor_naturality_span() {
    let d = span();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 31, 5));
    let mut checked = 0;
    for cell in &probe.cells {
        // lunitor: (id_f ⊙ cell) then lunitor(bottom) = lunitor(top) then cell
        let idl = d.id_cell_on_arrow(&cell.left);
        let padded = d.hcomp(&idl, cell).unwrap();
        let lhs = d.vcomp(&padded, &d.lunitor(&cell.bottom)).unwrap();
        let rhs = d.vcomp(&d.lunitor(&cell.top), cell).unwrap();
        assert_eq!(lhs, rhs, "lunitor naturality failed");
        let idr = d.id_cell_on_arrow(&cell.right);
        let padded_r = d.hcomp(cell, &idr).unwrap();
        let lhs_r = d.vcomp(&padded_r, &d.runitor(&cell.bottom)).unwrap();
        let rhs_r = d.vcomp(&d.runitor(&cell.top), cell).unwrap();
        assert_eq!(lhs_r, rhs_r, "runitor naturality failed");
        checked += 1;
    }
    assert!(checked > 0);
}

/// Compares two instances that should behave identically on probes, up to
/// the instance tag.
fn assert_probe_agreement(d1: &Instance, d2: &Instance, cfg: &ProbeConfig) {
    use eqkernel::instances::{transport_arrow, transport_cell, transport_pro};
    let p1 = ProbeUniverse::build(d1, cfg);
    // composition agreement on proarrows
    for (m, n) in p1.composable_pro_pairs() {
        let r1 = d1.compose_pro(m, n).unwrap();
        let r2 = d2
            .compose_pro(&transport_pro(m, d2), &transport_pro(n, d2))
            .unwrap();
        assert_eq!(transport_pro(&r1, d2), r2);
    }
    for (a, b) in p1.hcomposable_cell_pairs().into_iter().take(800) {
        let r1 = d1.hcomp(a, b).unwrap();
        let r2 = d2
            .hcomp(&transport_cell(a, d2), &transport_cell(b, d2))
            .unwrap();
        assert_eq!(transport_cell(&r1, d2), r2);
    }
    for f in &p1.arrows {
        for g in &p1.arrows {
            if f.tgt != g.src {
                continue;
            }
            let r1 = d1.compose_arrows(f, g).unwrap();
            let r2 = d2
                .compose_arrows(&transport_arrow(f, d2), &transport_arrow(g, d2))
                .unwrap();
            assert_eq!(transport_arrow(&r1, d2), r2);
        }
    }
}

#[test]
fn reverse_is_an_involution_on_probes() {
    for d in [rel(), span()] {
        let rev2 = reverse_instance(&reverse_instance(&d));
        assert_probe_agreement(&d, &rev2, &ProbeConfig::seeded(2, 7, 5));
    }
}

#[test]
fn opposite_is_an_involution_on_probes() {
    for d in [rel(), span()] {
        let op2 = opposite_instance(&opposite_instance(&d));
        assert_probe_agreement(&d, &op2, &ProbeConfig::seeded(2, 7, 5));
    }
}

#[test]
fn transpose_is_an_involution_on_probes() {
    let d = rel();
    let t = transpose_strict_instance(&d).unwrap();
    let tt = transpose_strict_instance(&t).unwrap();
    assert_probe_agreement(&d, &tt, &ProbeConfig::exhaustive(1));
}

#[test]
fn transpose_rejects_pseudo_instances() {
    let err = transpose_strict_instance(&span());
    assert!(matches!(err, Err(CoreError::NotStrict(_))));
}

/// Arrows of the transpose of rel are relations; a hand-built square is
/// accepted exactly when the transposed containment holds.
#[test]
fn transpose_rel_square_condition() {
    use eqkernel::instances::finset_object;
    let d = rel();
    let t = transpose_strict_instance(&d).unwrap();
    let x = finset_object(&t, &["a", "b"]);
    let y = finset_object(&t, &["0"]);
    // arrows of the transpose between x and y = relations: 2^2 of them
    let arrows = t.enumerate_arrows(&x, &y);
    assert_eq!(arrows.len(), 4);
    // proarrows of the transpose = functions
    let pros = t.enumerate_proarrows(&x, &y, &ProbeConfig::exhaustive(2));
    assert_eq!(pros.len(), 1);
    // a square exists iff the base containment condition holds after
    // exchanging the roles of the boundary sides
    let full = arrows
        .iter()
        .find(|a| {
            a.payload.as_mat().map(|m| m.to_pairs().len()) == Some(2)
        })
        .unwrap();
    let empty = arrows
        .iter()
        .find(|a| a.payload.as_mat().map(|m| m.to_pairs().len()) == Some(0))
        .unwrap();
    let cells_ok = t.enumerate_cells(&CellBoundary {
        top: pros[0].clone(),
        bottom: pros[0].clone(),
        left: empty.clone(),
        right: full.clone(),
    });
    assert_eq!(cells_ok.len(), 1, "empty ≤ pushforward of full fails");
    let cells_bad = t.enumerate_cells(&CellBoundary {
        top: pros[0].clone(),
        bottom: pros[0].clone(),
        left: full.clone(),
        right: empty.clone(),
    });
    assert_eq!(cells_bad.len(), 0);
}

#[test]
fn power_instances_act_componentwise() {
    let d = rel();
    let d2 = power_instance(&d, 2);
    let probe = ProbeUniverse::build(&d2, &ProbeConfig::seeded(1, 3, 3));
    check_interchange(&d2, &probe);
    // D^1 agrees with D on probes up to wrapping
    let d1 = power_instance(&d, 1);
    let p = ProbeUniverse::build(&d1, &ProbeConfig::exhaustive(1));
    assert!(!p.cells.is_empty());
    // D^0 is terminal: exactly one object, arrow, proarrow and cell
    let d0 = power_instance(&d, 0);
    let p0 = ProbeUniverse::build(&d0, &ProbeConfig::exhaustive(2));
    assert_eq!(p0.objects.len(), 1);
    assert_eq!(p0.arrows.len(), 1);
    assert_eq!(p0.proarrows.len(), 1);
    assert_eq!(p0.cells.len(), 1);
    assert!(d0.is_strict());
}

/// Degenerate inputs are first-class: the empty set appears in probes and
/// composes.
#[test]
fn empty_objects_compose() {
    for d in [rel(), span()] {
        let probe = ProbeUniverse::build(&d, &ProbeConfig::exhaustive(1));
        let empty = probe
            .objects
            .iter()
            .find(|o| match &o.payload {
                eqkernel::Payload::Set(s) => s.is_empty(),
                _ => false,
            })
            .expect("empty object in probe");
        let id = d.id_pro(empty);
        assert_eq!(d.compose_pro(&id, &id).unwrap(), id);
    }
}
