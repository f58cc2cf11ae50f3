//! Reshaping cells by sliding arrows around corners.
//!
//! Given factorizations `left = f · f'` and `right = g · g'` of a cell's
//! boundary arrows, with chosen companions of `f'` and `g`, sliding turns
//! the cell into one bounded by `m ⊙ g_!` on top and `f'_! ⊙ m''` below,
//! with boundary arrows `f` and `g'`. The assignment is a bijection; both
//! directions are implemented as explicit pastings with unitors inserted
//! under left-to-right normalization. The conjoint rules are the mirror.

use super::{companion_of, conjoint_of, CompanionPair, ConjointPair};
use crate::core::{
    boundary_error, hcomp_list, vcomp_list, Arrow, Cell, CoreResult, Instance, Proarrow,
};

/// Forward slide: from a cell `α` with `α.left = f · fp.arrow` and
/// `α.right = g.arrow · gprime` to the reshaped cell
/// `α.top ⊙ g_! => fp_! ⊙ α.bottom` bounded by `f` and `gprime`.
pub fn slide_general(
    d: &Instance,
    alpha: &Cell,
    f: &Arrow,
    fp: &CompanionPair,
    g: &CompanionPair,
    gprime: &Arrow,
) -> CoreResult<Cell> {
    let left = d.compose_arrows(f, &fp.arrow)?;
    let right = d.compose_arrows(&g.arrow, gprime)?;
    if alpha.left != left || alpha.right != right {
        return Err(boundary_error(
            "slide_general",
            "boundary arrows do not factor as required",
        ));
    }
    let l = d.vcomp(&d.id_cell_on_arrow(f), &fp.unit)?;
    let r = d.vcomp(&g.counit, &d.id_cell_on_arrow(gprime))?;
    let core = hcomp_list(&**d, &[l, alpha.clone(), r])?;
    let pre = d.hcomp(&d.lunitor_inv(&alpha.top), &d.id_cell_on_pro(&g.pro))?;
    let bottom = d.compose_pro(&fp.pro, &alpha.bottom)?;
    let post = d.runitor(&bottom);
    vcomp_list(&**d, &[pre, core, post])
}

/// Inverse slide: recovers the original cell from its slid form. The
/// original top and bottom proarrows must be supplied since composite
/// payloads cannot be decomposed.
pub fn slide_general_inv(
    d: &Instance,
    slid: &Cell,
    m: &Proarrow,
    mpp: &Proarrow,
    f: &Arrow,
    fp: &CompanionPair,
    g: &CompanionPair,
    gprime: &Arrow,
) -> CoreResult<Cell> {
    let top = d.compose_pro(m, &g.pro)?;
    let bottom = d.compose_pro(&fp.pro, mpp)?;
    if slid.top != top || slid.bottom != bottom || slid.left != *f || slid.right != *gprime {
        return Err(boundary_error(
            "slide_general_inv",
            "slid cell does not have the expected boundary",
        ));
    }
    let s1 = d.runitor_inv(m);
    let s2 = d.hcomp(&d.id_cell_on_pro(m), &g.unit)?;
    let s4 = d.hcomp(&fp.counit, &d.id_cell_on_pro(mpp))?;
    let s5 = d.lunitor(mpp);
    vcomp_list(&**d, &[s1, s2, slid.clone(), s4, s5])
}

/// Globular slide of a cell along companions of both boundary arrows:
/// `α: m => n` along `(f, g)` becomes `α_!: m ⊙ g_! => f_! ⊙ n`.
pub fn slide_globular(
    d: &Instance,
    alpha: &Cell,
    f: &CompanionPair,
    g: &CompanionPair,
) -> CoreResult<Cell> {
    let id_src = d.id_arrow(&alpha.top.src);
    let id_tgt = d.id_arrow(&alpha.bottom.tgt);
    slide_general(d, alpha, &id_src, f, g, &id_tgt)
}

pub fn slide_globular_inv(
    d: &Instance,
    slid: &Cell,
    m: &Proarrow,
    n: &Proarrow,
    f: &CompanionPair,
    g: &CompanionPair,
) -> CoreResult<Cell> {
    let id_src = d.id_arrow(&m.src);
    let id_tgt = d.id_arrow(&n.tgt);
    slide_general_inv(d, slid, m, n, &id_src, f, g, &id_tgt)
}

/// Conjoint-side slide: from `α` with `α.left = fpair.arrow · fprime` and
/// `α.right = g · gp.arrow` to `fpair^* ⊙ α.top => α.bottom ⊙ gp^*`
/// bounded by `fprime` and `g`.
pub fn slide_general_conj(
    d: &Instance,
    alpha: &Cell,
    fpair: &ConjointPair,
    fprime: &Arrow,
    g: &Arrow,
    gp: &ConjointPair,
) -> CoreResult<Cell> {
    let left = d.compose_arrows(&fpair.arrow, fprime)?;
    let right = d.compose_arrows(g, &gp.arrow)?;
    if alpha.left != left || alpha.right != right {
        return Err(boundary_error(
            "slide_general_conj",
            "boundary arrows do not factor as required",
        ));
    }
    let col1 = d.vcomp(&fpair.counit, &d.id_cell_on_arrow(fprime))?;
    let col3 = d.vcomp(&d.id_cell_on_arrow(g), &gp.unit)?;
    let core = hcomp_list(&**d, &[col1, alpha.clone(), col3])?;
    let top = d.compose_pro(&fpair.pro, &alpha.top)?;
    let pre = d.runitor_inv(&top);
    let post = d.hcomp(&d.lunitor(&alpha.bottom), &d.id_cell_on_pro(&gp.pro))?;
    vcomp_list(&**d, &[pre, core, post])
}

pub fn slide_general_conj_inv(
    d: &Instance,
    slid: &Cell,
    m: &Proarrow,
    mpp: &Proarrow,
    fpair: &ConjointPair,
    fprime: &Arrow,
    g: &Arrow,
    gp: &ConjointPair,
) -> CoreResult<Cell> {
    let top = d.compose_pro(&fpair.pro, m)?;
    let bottom = d.compose_pro(mpp, &gp.pro)?;
    if slid.top != top || slid.bottom != bottom || slid.left != *fprime || slid.right != *g {
        return Err(boundary_error(
            "slide_general_conj_inv",
            "slid cell does not have the expected boundary",
        ));
    }
    let s1 = d.lunitor_inv(m);
    let s2 = d.hcomp(&fpair.unit, &d.id_cell_on_pro(m))?;
    let s4 = d.hcomp(&d.id_cell_on_pro(mpp), &gp.counit)?;
    let s5 = d.runitor(mpp);
    vcomp_list(&**d, &[s1, s2, slid.clone(), s4, s5])
}

/// Globular conjoint slide: `α: m => n` along `(f, g)` becomes
/// `α^*: f^* ⊙ m => n ⊙ g^*`.
pub fn slide_globular_conj(
    d: &Instance,
    alpha: &Cell,
    f: &ConjointPair,
    g: &ConjointPair,
) -> CoreResult<Cell> {
    let id_mid_left = d.id_arrow(&alpha.bottom.src);
    let id_mid_right = d.id_arrow(&alpha.top.tgt);
    slide_general_conj(d, alpha, f, &id_mid_left, &id_mid_right, g)
}

pub fn slide_globular_conj_inv(
    d: &Instance,
    slid: &Cell,
    m: &Proarrow,
    n: &Proarrow,
    f: &ConjointPair,
    g: &ConjointPair,
) -> CoreResult<Cell> {
    let id_mid_left = d.id_arrow(&n.src);
    let id_mid_right = d.id_arrow(&m.tgt);
    slide_general_conj_inv(d, slid, m, n, f, &id_mid_left, &id_mid_right, g)
}

/// Result of a commuter or cocommuter test: the slid globular cell and its
/// two-sided inverse when one exists.
#[derive(Clone, Debug)]
pub struct CommuterVerdict {
    pub holds: bool,
    pub slid: Cell,
    pub inverse: Option<Cell>,
}

fn two_sided_inverse(d: &Instance, c: &Cell) -> Option<Cell> {
    let inv = d.invert_cell(c)?;
    let a = d.vcomp(c, &inv).ok()?;
    let b = d.vcomp(&inv, c).ok()?;
    if a == d.id_cell_on_pro(&c.top) && b == d.id_cell_on_pro(&c.bottom) {
        Some(inv)
    } else {
        None
    }
}

/// A cell is a commuter when its companion-slid globular form is
/// invertible. Requires chosen companions of both boundary arrows.
pub fn is_commuter(d: &Instance, alpha: &Cell) -> CoreResult<CommuterVerdict> {
    let f = companion_of(d, &alpha.left)?;
    let g = companion_of(d, &alpha.right)?;
    let slid = slide_globular(d, alpha, &f, &g)?;
    let inverse = two_sided_inverse(d, &slid);
    Ok(CommuterVerdict {
        holds: inverse.is_some(),
        slid,
        inverse,
    })
}

/// Dually, a cell is a cocommuter when its conjoint-slid form is
/// invertible.
pub fn is_cocommuter(d: &Instance, alpha: &Cell) -> CoreResult<CommuterVerdict> {
    let f = conjoint_of(d, &alpha.left)?;
    let g = conjoint_of(d, &alpha.right)?;
    let slid = slide_globular_conj(d, alpha, &f, &g)?;
    let inverse = two_sided_inverse(d, &slid);
    Ok(CommuterVerdict {
        holds: inverse.is_some(),
        slid,
        inverse,
    })
}
