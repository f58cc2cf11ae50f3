//! Companion/conjoint search, sliding bijections and the Comp
//! construction, checked against independent oracles.
//!
//! The oracle for relation instances is a standalone pair-list algebra:
//! relations are sets of label pairs, composition and containment are
//! computed directly, without the matrix engine.

use eqkernel::companions::{
    companion_comparison, companion_of, comp_instance, composite_companion, conjoint_of,
    counit_functor_eval, identity_companion, is_cocommuter, is_commuter, mates_adjunction,
    perturb_companion, slide_general, slide_general_inv, slide_globular, slide_globular_conj,
    slide_globular_conj_inv, slide_globular_inv, verify_companion, verify_conjoint, CompanionPair,
};
use eqkernel::core::dualities::{reverse_instance, transpose_strict_instance};
use eqkernel::core::{Arrow, Cell, CellBoundary, Instance, ObjectRef, Payload, Proarrow};
use eqkernel::instances::finset::{all_functions, FinFunction, FinSet};
use eqkernel::instances::probe::{ProbeConfig, ProbeUniverse};
use eqkernel::instances::{finset_object, make_rel_instance, make_span_instance, QMatrix};
use std::collections::BTreeSet;

// ---------------------------------------------------------------------------
// independent pair-list oracle

type Rel = BTreeSet<(String, String)>;

fn rel_of(pairs: &[(&str, &str)]) -> Rel {
    pairs
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn all_relations(xs: &[&str], ys: &[&str]) -> Vec<Rel> {
    let cells: Vec<(String, String)> = xs
        .iter()
        .flat_map(|a| ys.iter().map(move |b| (a.to_string(), b.to_string())))
        .collect();
    let mut out = Vec::new();
    for mask in 0..(1u32 << cells.len()) {
        let mut r = Rel::new();
        for (i, c) in cells.iter().enumerate() {
            if mask & (1 << i) != 0 {
                r.insert(c.clone());
            }
        }
        out.push(r);
    }
    out
}

fn rel() -> Instance {
    make_rel_instance()
}

fn span() -> Instance {
    make_span_instance()
}

fn rel_pro(d: &Instance, xs: &[&str], ys: &[&str], r: &Rel) -> Proarrow {
    let m = QMatrix::from_pairs(
        FinSet::new(xs.to_vec()),
        FinSet::new(ys.to_vec()),
        r.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )
    .unwrap();
    Proarrow::new(
        finset_object(d, xs),
        finset_object(d, ys),
        Payload::Mat(m),
    )
}

fn rel_arrow(d: &Instance, xs: &[&str], ys: &[&str], pairs: &[(&str, &str)]) -> Arrow {
    let f = FinFunction::from_pairs(
        FinSet::new(xs.to_vec()),
        FinSet::new(ys.to_vec()),
        pairs.iter().copied(),
    )
    .unwrap();
    Arrow::new(finset_object(d, xs), finset_object(d, ys), Payload::Map(f))
}

/// Oracle: among all 16 relations {a,b} -|-> {0,1}, exactly the graph of f
/// admits both binding cells for a companion. In the locally posetal case
/// the two companion equations reduce to the existence of the binding
/// cells: the unit exists iff every (a, f a) is related, the counit iff
/// only such pairs are.
#[test]
fn companion_search_oracle_rel() {
    let f_table = [("a", "0"), ("b", "1")];
    let apply = |l: &str| {
        f_table
            .iter()
            .find(|(a, _)| *a == l)
            .map(|(_, b)| b.to_string())
            .unwrap()
    };
    let survivors: Vec<Rel> = all_relations(&["a", "b"], &["0", "1"])
        .into_iter()
        .filter(|c| {
            let unit_exists = ["a", "b"].iter().all(|l| c.contains(&(l.to_string(), apply(l))));
            let counit_exists = c.iter().all(|(a, b)| apply(a) == *b);
            unit_exists && counit_exists
        })
        .collect();
    assert_eq!(survivors.len(), 1);
    assert_eq!(survivors[0], rel_of(&[("a", "0"), ("b", "1")]));

    // the engine's chosen companion matches the oracle's unique survivor
    let d = rel();
    let f = rel_arrow(&d, &["a", "b"], &["0", "1"], &f_table);
    let pair = companion_of(&d, &f).unwrap();
    assert_eq!(
        pair.pro,
        rel_pro(&d, &["a", "b"], &["0", "1"], &survivors[0])
    );
    assert!(verify_companion(&d, &pair).passed());
}

#[test]
fn conjoint_is_the_converse_graph() {
    let d = rel();
    let f = rel_arrow(&d, &["a", "b"], &["0", "1"], &[("a", "0"), ("b", "1")]);
    let pair = conjoint_of(&d, &f).unwrap();
    assert_eq!(
        pair.pro,
        rel_pro(&d, &["0", "1"], &["a", "b"], &rel_of(&[("0", "a"), ("1", "b")]))
    );
    assert!(verify_conjoint(&d, &pair).passed());

    // and equals the companion computed in the reverse instance
    let rev = reverse_instance(&d);
    let frev = Arrow::new(
        ObjectRef::new(rev.id().clone(), f.src.payload.clone()),
        ObjectRef::new(rev.id().clone(), f.tgt.payload.clone()),
        f.payload.clone(),
    );
    let crev = companion_of(&rev, &frev).unwrap();
    assert_eq!(crev.pro.payload, pair.pro.payload);
    assert_eq!(crev.unit.payload, pair.unit.payload);
}

#[test]
fn identity_arrow_has_identity_companion() {
    for d in [rel(), span()] {
        let x = finset_object(&d, &["a", "b"]);
        let idx = d.id_arrow(&x);
        let pair = companion_of(&d, &idx).unwrap();
        assert_eq!(pair.pro, d.id_pro(&x));
        assert_eq!(pair.unit, d.id_cell_on_arrow(&idx));
        assert_eq!(pair.counit, d.id_cell_on_arrow(&idx));
        // degenerate案: empty object
        let e = finset_object(&d, &[]);
        assert!(companion_of(&d, &d.id_arrow(&e)).is_ok());
    }
}

/// FinSpan companions: the left-leg-identity span, with binding equations
/// checked here by direct table computation.
#[test]
fn span_companion_oracle() {
    let d = span();
    let x = FinSet::new(["a", "b"]);
    let y = FinSet::new(["0", "1"]);
    let fun = FinFunction::from_pairs(x.clone(), y.clone(), [("a", "1"), ("b", "1")]).unwrap();
    let f = Arrow::new(
        finset_object(&d, &["a", "b"]),
        finset_object(&d, &["0", "1"]),
        Payload::Map(fun.clone()),
    );
    let pair = companion_of(&d, &f).unwrap();
    let s = pair.pro.payload.as_span().unwrap();
    assert!(s.left.is_identity());
    assert_eq!(s.right, fun);
    // unit witness: identity on x; check leg equations by hand:
    // w ; bottom.left = top.left ; id  and  w ; bottom.right = top.right ; f
    let w = pair.unit.payload.as_map().unwrap();
    assert!(w.is_identity());
    let lhs = w.then(&s.left).unwrap();
    assert!(lhs.is_identity());
    let rhs = w.then(&s.right).unwrap();
    assert_eq!(rhs, fun);
    // counit witness is f on apexes
    assert_eq!(pair.counit.payload.as_map().unwrap(), &fun);
    assert!(verify_companion(&d, &pair).passed());

    // conjoint: right-leg-identity span, dual equations
    let conj = conjoint_of(&d, &f).unwrap();
    let cs = conj.pro.payload.as_span().unwrap();
    assert_eq!(cs.left, fun);
    assert!(cs.right.is_identity());
    assert!(verify_conjoint(&d, &conj).passed());
}

#[test]
fn corrupted_unit_fails_verification() {
    let d = rel();
    let f = rel_arrow(&d, &["a", "b"], &["0", "1"], &[("a", "0"), ("b", "1")]);
    let good = companion_of(&d, &f).unwrap();
    // wrong relation: the full relation admits a unit but not a counit
    let full = rel_pro(
        &d,
        &["a", "b"],
        &["0", "1"],
        &rel_of(&[("a", "0"), ("a", "1"), ("b", "0"), ("b", "1")]),
    );
    let bad = CompanionPair {
        arrow: f.clone(),
        pro: full.clone(),
        unit: Cell::new(
            d.id_pro(&f.src),
            full.clone(),
            d.id_arrow(&f.src),
            f.clone(),
            Payload::Posetal,
        ),
        counit: Cell::new(
            full,
            d.id_pro(&f.tgt),
            f.clone(),
            d.id_arrow(&f.tgt),
            Payload::Posetal,
        ),
        ..good.clone()
    };
    let report = verify_companion(&d, &bad);
    assert!(!report.passed());
    assert!(report.counterexample.is_some());
}

// ---------------------------------------------------------------------------
// sliding

/// All factored FinRel cells on size-≤2 boundaries slide round-trip to
/// themselves; a larger exhaustive run lives in the acceptance suite.
#[test]
fn sliding_round_trips_rel() {
    let d = rel();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::exhaustive(2));
    let mut count = 0usize;
    for cell in probe.cells.iter().take(600) {
        // trivial factorizations: left = id · left, right = right · id
        let f = d.id_arrow(&cell.top.src);
        let fp = companion_of(&d, &cell.left).unwrap();
        let g = companion_of(&d, &cell.right).unwrap();
        let gp = d.id_arrow(&cell.bottom.tgt);
        let slid = slide_general(&d, cell, &f, &fp, &g, &gp).unwrap();
        let back =
            slide_general_inv(&d, &slid, &cell.top, &cell.bottom, &f, &fp, &g, &gp).unwrap();
        assert_eq!(&back, cell, "general slide round trip");
        let slid2 = slide_globular(&d, cell, &fp, &g).unwrap();
        let back2 =
            slide_globular_inv(&d, &slid2, &cell.top, &cell.bottom, &fp, &g).unwrap();
        assert_eq!(&back2, cell, "globular slide round trip");
        // conjoint side
        let fc = conjoint_of(&d, &cell.left).unwrap();
        let gc = conjoint_of(&d, &cell.right).unwrap();
        let slid3 = slide_globular_conj(&d, cell, &fc, &gc).unwrap();
        let back3 =
            slide_globular_conj_inv(&d, &slid3, &cell.top, &cell.bottom, &fc, &gc).unwrap();
        assert_eq!(&back3, cell, "conjoint slide round trip");
        count += 1;
    }
    assert!(count > 100);
}

#[test]
fn sliding_round_trips_span() {
    let d = span();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 41, 5));
    let mut count = 0usize;
    for cell in &probe.cells {
        let fp = companion_of(&d, &cell.left).unwrap();
        let g = companion_of(&d, &cell.right).unwrap();
        let slid = slide_globular(&d, cell, &fp, &g).unwrap();
        let back = slide_globular_inv(&d, &slid, &cell.top, &cell.bottom, &fp, &g).unwrap();
        assert_eq!(&back, cell);
        count += 1;
    }
    assert!(count > 10, "span probe produced {count} cells");
}

/// With all-identity boundaries the slide is the identity reshaping up to
/// unitors, so sliding a globular cell and normalizing gives it back.
#[test]
fn identity_boundary_slide_is_unitor_conjugation() {
    let d = rel();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::exhaustive(2));
    for cell in probe.cells.iter().filter(|c| {
        c.left == d.id_arrow(&c.top.src) && c.right == d.id_arrow(&c.top.tgt)
    }) {
        let fp = identity_companion(&d, &cell.left.src);
        let g = identity_companion(&d, &cell.right.src);
        let slid = slide_globular(&d, cell, &fp, &g).unwrap();
        // strict instance: m ⊙ id = m, so the slid cell is the cell itself
        assert_eq!(&slid, cell);
    }
}

/// A hand-built span square checked against a manual pasting: sliding the
/// square must produce exactly the witness computed by composing the
/// pasting by hand.
#[test]
fn span_hand_square_manual_pasting() {
    let d = span();
    let x = FinSet::new(["a", "b"]);
    let y = FinSet::new(["0"]);
    let f = FinFunction::from_pairs(x.clone(), y.clone(), [("a", "0"), ("b", "0")]).unwrap();
    let arrow_f = Arrow::new(
        finset_object(&d, &["a", "b"]),
        finset_object(&d, &["0"]),
        Payload::Map(f.clone()),
    );
    // cell: identity span on x over f, witnessed by f
    let top = d.id_pro(&arrow_f.src);
    let bottom = d.id_pro(&arrow_f.tgt);
    let cell = Cell::new(top, bottom, arrow_f.clone(), arrow_f.clone(), Payload::Map(f.clone()));
    let fp = companion_of(&d, &arrow_f).unwrap();
    let slid = slide_globular(&d, &cell, &fp, &fp).unwrap();
    // manual pasting: the slid witness sends (u, v) with v in the graph
    // apex to (u', v') in the companion-composite; for the identity span
    // the expected map is (a,a) ↦ (a,0)-side pairing computed by hand
    let w = slid.payload.as_map().unwrap();
    assert_eq!(w.apply("(a,a)"), Some("(a,0)"));
    assert_eq!(w.apply("(b,b)"), Some("(b,0)"));
    // id_f slides to the identity on the companion up to unitors: here the
    // slid cell is the canonical relabeling, hence invertible
    assert!(d.invert_cell(&slid).is_some());
}

// ---------------------------------------------------------------------------
// commuters

#[test]
fn identity_cells_are_commuters() {
    for d in [rel(), span()] {
        let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 3, 4));
        for f in probe.arrows.iter().take(40) {
            let v = is_commuter(&d, &d.id_cell_on_arrow(f)).unwrap();
            assert!(v.holds, "id_f must be a commuter in {}", d.id());
        }
    }
}

#[test]
fn invertible_cells_are_commuters_and_cocommuters() {
    for d in [rel(), span()] {
        let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 13, 5));
        let mut found = 0usize;
        for c in &probe.cells {
            if d.invert_cell(c).is_some() {
                assert!(is_commuter(&d, c).unwrap().holds);
                assert!(is_cocommuter(&d, c).unwrap().holds);
                found += 1;
            }
        }
        assert!(found > 0, "no invertible probe cells in {}", d.id());
    }
}

/// Posetal counterexample: a strict inclusion along identities is not a
/// commuter, because only one containment holds.
#[test]
fn strict_inclusion_is_not_a_commuter() {
    let d = rel();
    let m = rel_pro(&d, &["a"], &["0", "1"], &rel_of(&[("a", "0")]));
    let n = rel_pro(&d, &["a"], &["0", "1"], &rel_of(&[("a", "0"), ("a", "1")]));
    let cell = Cell::new(
        m,
        n,
        d.id_arrow(&finset_object(&d, &["a"])),
        d.id_arrow(&finset_object(&d, &["0", "1"])),
        Payload::Posetal,
    );
    assert!(d.check_cell(&cell));
    let v = is_commuter(&d, &cell).unwrap();
    assert!(!v.holds);
}

// ---------------------------------------------------------------------------
// uniqueness, composites, perturbed choices, mates

#[test]
fn companion_uniqueness_up_to_canonical_iso() {
    let d = span();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 19, 4));
    let mut tried = 0usize;
    for f in probe.arrows.iter().take(25) {
        let pair = companion_of(&d, f).unwrap();
        if let Some(pair2) = perturb_companion(&d, &pair, 7 + tried as u64) {
            assert!(verify_companion(&d, &pair2).passed());
            let cmp = companion_comparison(&d, &pair, &pair2).unwrap();
            let cmp_back = companion_comparison(&d, &pair2, &pair).unwrap();
            let round = d.vcomp(&cmp, &cmp_back).unwrap();
            assert_eq!(round, d.id_cell_on_pro(&pair.pro));
            let round2 = d.vcomp(&cmp_back, &cmp).unwrap();
            assert_eq!(round2, d.id_cell_on_pro(&pair2.pro));
            tried += 1;
        }
    }
    assert!(tried > 0);

    // and in rel, where companions are literally unique, the comparison is
    // the identity
    let r = rel();
    let f = rel_arrow(&r, &["a", "b"], &["0"], &[("a", "0"), ("b", "0")]);
    let p = companion_of(&r, &f).unwrap();
    assert_eq!(
        companion_comparison(&r, &p, &p).unwrap(),
        r.id_cell_on_pro(&p.pro)
    );
}

/// Key sliding laws re-run under perturbed companion choices.
#[test]
fn sliding_round_trip_under_perturbed_choices() {
    let d = span();
    let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 47, 4));
    let mut count = 0;
    for cell in probe.cells.iter().take(30) {
        let fp0 = companion_of(&d, &cell.left).unwrap();
        let g0 = companion_of(&d, &cell.right).unwrap();
        let fp = perturb_companion(&d, &fp0, 101).unwrap_or(fp0);
        let g = perturb_companion(&d, &g0, 202).unwrap_or(g0);
        let slid = slide_globular(&d, cell, &fp, &g).unwrap();
        let back = slide_globular_inv(&d, &slid, &cell.top, &cell.bottom, &fp, &g).unwrap();
        assert_eq!(&back, cell);
        count += 1;
    }
    assert!(count > 0);
}

#[test]
fn composite_companions_verify() {
    for d in [rel(), span()] {
        let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 29, 4));
        let mut found = 0;
        'outer: for f in &probe.arrows {
            for g in &probe.arrows {
                if f.tgt != g.src {
                    continue;
                }
                let fp = companion_of(&d, f).unwrap();
                let gp = companion_of(&d, g).unwrap();
                let comp = composite_companion(&d, &fp, &gp).unwrap();
                assert!(verify_companion(&d, &comp).passed());
                found += 1;
                if found > 20 {
                    break 'outer;
                }
            }
        }
        assert!(found > 0);
    }
}

#[test]
fn mates_form_adjunctions() {
    for d in [rel(), span()] {
        let probe = ProbeUniverse::build(&d, &ProbeConfig::seeded(2, 37, 4));
        for f in probe.arrows.iter().take(25) {
            let comp = companion_of(&d, f).unwrap();
            let conj = conjoint_of(&d, f).unwrap();
            let report = mates_adjunction(&d, &comp, &conj).unwrap();
            assert!(report.passed(), "mates failed in {}: {:?}", d.id(), report);
        }
    }
}

// ---------------------------------------------------------------------------
// the Comp construction and the counit functor

#[test]
fn comp_rel_arrows_are_all_functions() {
    // every function's graph is a companion, so Comp(rel) keeps them all
    let d = rel();
    let c = comp_instance(&d);
    let x = finset_object(&c, &["a", "b"]);
    let y = finset_object(&c, &["0", "1"]);
    assert_eq!(c.enumerate_arrows(&x, &y).len(), 4);
    assert_eq!(
        c.enumerate_arrows(&x, &y).len(),
        all_functions(&FinSet::new(["a", "b"]), &FinSet::new(["0", "1"])).len()
    );
}

#[test]
fn comp_identities_compose_strictly() {
    let d = rel();
    let c = comp_instance(&d);
    assert!(c.is_strict());
    let probe = ProbeUniverse::build(&c, &ProbeConfig::exhaustive(1));
    for m in &probe.proarrows {
        assert_eq!(c.compose_pro(&c.id_pro(&m.src), m).unwrap(), *m);
        assert_eq!(c.compose_pro(m, &c.id_pro(&m.tgt)).unwrap(), *m);
    }
    for (a, b) in probe.vcomposable_cell_pairs() {
        let ab = c.vcomp(a, b).unwrap();
        assert!(c.check_cell(&ab));
    }
    for (a, b) in probe.hcomposable_cell_pairs() {
        let ab = c.hcomp(a, b).unwrap();
        assert!(c.check_cell(&ab));
    }
    // every Comp arrow is its own companion via external identities
    for f in probe.arrows.iter().take(10) {
        let pair = companion_of(&c, f).unwrap();
        assert_eq!(pair.pro.payload, f.payload);
    }
}

/// Cell existence in Comp(rel) for a hand-picked square agrees with the
/// special-square shape computed by hand: the square exists iff
/// h · g = f · k as functions (the posetal special cell from id to id
/// exists iff the two composite arrows agree entrywise on graphs, which
/// for total functions means equality).
#[test]
fn comp_cell_existence_hand_square() {
    let d = rel();
    let c = comp_instance(&d);
    let x = finset_object(&c, &["a", "b"]);
    let arrows = c.enumerate_arrows(&x, &x);
    let mut seen_exists = false;
    let mut seen_missing = false;
    for h in &arrows {
        for k in &arrows {
            for f in &arrows {
                for g in &arrows {
                    let pro_h = Proarrow::new(h.src.clone(), h.tgt.clone(), h.payload.clone());
                    let pro_k = Proarrow::new(k.src.clone(), k.tgt.clone(), k.payload.clone());
                    let cells = c.enumerate_cells(&CellBoundary {
                        top: pro_h,
                        bottom: pro_k,
                        left: f.clone(),
                        right: g.clone(),
                    });
                    let hg = d
                        .compose_arrows(
                            &Arrow::new(
                                finset_object(&d, &["a", "b"]),
                                finset_object(&d, &["a", "b"]),
                                h.payload.clone(),
                            ),
                            &Arrow::new(
                                finset_object(&d, &["a", "b"]),
                                finset_object(&d, &["a", "b"]),
                                g.payload.clone(),
                            ),
                        )
                        .unwrap();
                    let fk = d
                        .compose_arrows(
                            &Arrow::new(
                                finset_object(&d, &["a", "b"]),
                                finset_object(&d, &["a", "b"]),
                                f.payload.clone(),
                            ),
                            &Arrow::new(
                                finset_object(&d, &["a", "b"]),
                                finset_object(&d, &["a", "b"]),
                                k.payload.clone(),
                            ),
                        )
                        .unwrap();
                    let expected = hg == fk;
                    assert_eq!(!cells.is_empty(), expected);
                    seen_exists |= expected;
                    seen_missing |= !expected;
                }
            }
        }
    }
    assert!(seen_exists && seen_missing);
}

#[test]
fn counit_functor_identity_square() {
    let d = rel();
    let comp = comp_instance(&d);
    let t = transpose_strict_instance(&comp).unwrap();
    let x = finset_object(&t, &["a", "b"]);
    // the identity square on the identity proarrow at x
    let sq = t.id_cell_on_pro(&t.id_pro(&x));
    let img = counit_functor_eval(&d, &sq).unwrap();
    let xd = finset_object(&d, &["a", "b"]);
    assert_eq!(img, d.id_cell_on_pro(&d.id_pro(&xd)));
}

/// Functoriality of the counit: composites of squares map to composites of
/// images, in both directions (small version; the exhaustive run is in the
/// acceptance suite).
#[test]
fn counit_functor_preserves_composition() {
    let d = rel();
    let comp = comp_instance(&d);
    let t = transpose_strict_instance(&comp).unwrap();
    let probe = ProbeUniverse::build(&t, &ProbeConfig::exhaustive(1));
    let mut v = 0usize;
    for (a, b) in probe.vcomposable_cell_pairs() {
        let lhs = counit_functor_eval(&d, &t.vcomp(a, b).unwrap()).unwrap();
        let rhs = d
            .vcomp(
                &counit_functor_eval(&d, a).unwrap(),
                &counit_functor_eval(&d, b).unwrap(),
            )
            .unwrap();
        assert_eq!(lhs, rhs, "internal functoriality of the counit");
        v += 1;
    }
    assert!(v > 0);
    let mut h = 0usize;
    for (a, b) in probe.hcomposable_cell_pairs() {
        // external composition maps to the composite through the composite
        // companion; with graph companions in rel the chosen companion of a
        // composite is the composite of companions, so images compose
        // strictly
        let lhs = counit_functor_eval(&d, &t.hcomp(a, b).unwrap()).unwrap();
        let rhs = d
            .hcomp(
                &counit_functor_eval(&d, a).unwrap(),
                &counit_functor_eval(&d, b).unwrap(),
            )
            .unwrap();
        assert_eq!(lhs, rhs, "external functoriality of the counit");
        h += 1;
    }
    assert!(h > 0);
}
