//! Double functors, natural transformations, protransformations and
//! modifications.
//!
//! Functors and transformations are intensional: they are computation
//! rules (closures) rather than tables, since instances have unboundedly
//! many objects. All verification is therefore probe-relative and every
//! law report records the probe universe it quantified over.

pub mod algebra;
pub mod check;
pub mod transpose;

pub use algebra::{
    compose_protrans, hcomp_modifications, id_protrans, post_whisker, post_whisker_mod,
    post_whisker_nat, pre_whisker, pre_whisker_mod, pre_whisker_nat, vcomp_modifications,
};
pub use check::{
    all_pass, check_double_functor, check_modification, check_natural_transformation,
    check_oplax_nat_data, check_protransformation,
};
pub use transpose::{
    companion_is_pseudo, companion_protrans, companion_protrans_with_bindings,
    components_at_companions_check, conjoint_protrans, conjoint_protrans_with_bindings,
    functor_companion, functor_conjoint, globular_fragment, reverse_functor, reverse_nat,
};

use crate::core::dualities::PowerInstance;
use crate::core::{
    Arrow, Cell, CoreError, CoreResult, Instance, ObjectRef, Payload, Proarrow,
};
use std::sync::Arc;

pub type ObMap = Arc<dyn Fn(&ObjectRef) -> CoreResult<ObjectRef> + Send + Sync>;
pub type ArrMap = Arc<dyn Fn(&Arrow) -> CoreResult<Arrow> + Send + Sync>;
pub type ProMap = Arc<dyn Fn(&Proarrow) -> CoreResult<Proarrow> + Send + Sync>;
pub type CellMap = Arc<dyn Fn(&Cell) -> CoreResult<Cell> + Send + Sync>;
pub type LaxatorMap = Arc<dyn Fn(&Proarrow, &Proarrow) -> CoreResult<Cell> + Send + Sync>;
pub type UnitCmpMap = Arc<dyn Fn(&ObjectRef) -> CoreResult<Cell> + Send + Sync>;
pub type ObToArrMap = Arc<dyn Fn(&ObjectRef) -> CoreResult<Arrow> + Send + Sync>;
pub type ObToProMap = Arc<dyn Fn(&ObjectRef) -> CoreResult<Proarrow> + Send + Sync>;
pub type ArrToCellMap = Arc<dyn Fn(&Arrow) -> CoreResult<Cell> + Send + Sync>;
pub type ProToCellMap = Arc<dyn Fn(&Proarrow) -> CoreResult<Cell> + Send + Sync>;
pub type ObToCellMap = Arc<dyn Fn(&ObjectRef) -> CoreResult<Cell> + Send + Sync>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctorClass {
    Strict,
    Pseudo,
    Lax,
}

/// A lax double functor, carrying its composition comparisons
/// `F m ⊙ F n => F(m ⊙ n)` and unit comparisons `id_{Fx} => F id_x`.
#[derive(Clone)]
pub struct DoubleFunctor {
    pub name: String,
    pub src: Instance,
    pub tgt: Instance,
    pub class: FunctorClass,
    pub normal: bool,
    pub ob: ObMap,
    pub arr: ArrMap,
    pub pro: ProMap,
    pub cell: CellMap,
    pub comp_comparison: LaxatorMap,
    pub unit_comparison: UnitCmpMap,
}

impl DoubleFunctor {
    pub fn apply_ob(&self, x: &ObjectRef) -> CoreResult<ObjectRef> {
        (self.ob)(x)
    }

    pub fn apply_arr(&self, f: &Arrow) -> CoreResult<Arrow> {
        (self.arr)(f)
    }

    pub fn apply_pro(&self, m: &Proarrow) -> CoreResult<Proarrow> {
        (self.pro)(m)
    }

    pub fn apply_cell(&self, c: &Cell) -> CoreResult<Cell> {
        (self.cell)(c)
    }

    pub fn laxator(&self, m: &Proarrow, n: &Proarrow) -> CoreResult<Cell> {
        (self.comp_comparison)(m, n)
    }

    /// Inverse laxator; only available for pseudo (or strict) functors.
    pub fn laxator_inv(&self, m: &Proarrow, n: &Proarrow) -> CoreResult<Cell> {
        if self.class == FunctorClass::Lax {
            return Err(CoreError::NotPseudo(format!(
                "functor {} is properly lax",
                self.name
            )));
        }
        let lx = self.laxator(m, n)?;
        self.tgt.invert_cell(&lx).ok_or_else(|| {
            CoreError::NotPseudo(format!("laxator of {} is not invertible", self.name))
        })
    }

    pub fn unit_cmp(&self, x: &ObjectRef) -> CoreResult<Cell> {
        (self.unit_comparison)(x)
    }

    pub fn unit_cmp_inv(&self, x: &ObjectRef) -> CoreResult<Cell> {
        let u = self.unit_cmp(x)?;
        self.tgt.invert_cell(&u).ok_or_else(|| {
            CoreError::NotPseudo(format!(
                "unit comparison of {} is not invertible",
                self.name
            ))
        })
    }
}

/// The identity double functor.
pub fn identity_functor(d: &Instance) -> DoubleFunctor {
    let d1 = d.clone();
    let d2 = d.clone();
    DoubleFunctor {
        name: format!("1_{}", d.id()),
        src: d.clone(),
        tgt: d.clone(),
        class: FunctorClass::Strict,
        normal: true,
        ob: Arc::new(|x| Ok(x.clone())),
        arr: Arc::new(|f| Ok(f.clone())),
        pro: Arc::new(|m| Ok(m.clone())),
        cell: Arc::new(|c| Ok(c.clone())),
        comp_comparison: Arc::new(move |m, n| {
            let mn = d1.compose_pro(m, n)?;
            Ok(d1.id_cell_on_pro(&mn))
        }),
        unit_comparison: Arc::new(move |x| Ok(d2.id_cell_on_pro(&d2.id_pro(x)))),
    }
}

/// Diagrammatic composite: apply `f` first, then `g`.
pub fn compose_functors(f: &DoubleFunctor, g: &DoubleFunctor) -> DoubleFunctor {
    let class = match (f.class, g.class) {
        (FunctorClass::Strict, FunctorClass::Strict) => FunctorClass::Strict,
        (FunctorClass::Lax, _) | (_, FunctorClass::Lax) => FunctorClass::Lax,
        _ => FunctorClass::Pseudo,
    };
    let (f1, g1) = (f.clone(), g.clone());
    let (f2, g2) = (f.clone(), g.clone());
    let (f3, g3) = (f.clone(), g.clone());
    let (f4, g4) = (f.clone(), g.clone());
    let (f5, g5) = (f.clone(), g.clone());
    let (f6, g6) = (f.clone(), g.clone());
    DoubleFunctor {
        name: format!("{};{}", f.name, g.name),
        src: f.src.clone(),
        tgt: g.tgt.clone(),
        class,
        normal: f.normal && g.normal,
        ob: Arc::new(move |x| g1.apply_ob(&f1.apply_ob(x)?)),
        arr: Arc::new(move |a| g2.apply_arr(&f2.apply_arr(a)?)),
        pro: Arc::new(move |m| g3.apply_pro(&f3.apply_pro(m)?)),
        cell: Arc::new(move |c| g4.apply_cell(&f4.apply_cell(c)?)),
        comp_comparison: Arc::new(move |m, n| {
            let fm = f5.apply_pro(m)?;
            let fn_ = f5.apply_pro(n)?;
            let outer = g5.laxator(&fm, &fn_)?;
            let inner = g5.apply_cell(&f5.laxator(m, n)?)?;
            g5.tgt.vcomp(&outer, &inner)
        }),
        unit_comparison: Arc::new(move |x| {
            let fx = f6.apply_ob(x)?;
            let outer = g6.unit_cmp(&fx)?;
            let inner = g6.apply_cell(&f6.unit_cmp(x)?)?;
            g6.tgt.vcomp(&outer, &inner)
        }),
    }
}

/// The diagonal functor `D -> D^n`, duplicating every datum.
pub fn diagonal_functor(d: &Instance, n: usize) -> DoubleFunctor {
    let power = crate::core::dualities::power_instance(d, n);
    let pid = power.id().clone();
    let dup = move |p: &Payload| Payload::Tuple(vec![p.clone(); n]);
    let pid1 = pid.clone();
    let dup1 = dup.clone();
    let pid2 = pid.clone();
    let dup2 = dup.clone();
    let pid3 = pid.clone();
    let dup3 = dup.clone();
    let pid4 = pid.clone();
    let dup4 = dup;
    let power1 = power.clone();
    let power2 = power.clone();
    DoubleFunctor {
        name: format!("Δ{}[{}]", n, d.id()),
        src: d.clone(),
        tgt: power.clone(),
        class: FunctorClass::Strict,
        normal: true,
        ob: Arc::new(move |x| Ok(ObjectRef::new(pid1.clone(), dup1(&x.payload)))),
        arr: Arc::new(move |f| {
            Ok(Arrow::new(
                ObjectRef::new(pid2.clone(), dup2(&f.src.payload)),
                ObjectRef::new(pid2.clone(), dup2(&f.tgt.payload)),
                dup2(&f.payload),
            ))
        }),
        pro: Arc::new(move |m| {
            Ok(Proarrow::new(
                ObjectRef::new(pid3.clone(), dup3(&m.src.payload)),
                ObjectRef::new(pid3.clone(), dup3(&m.tgt.payload)),
                dup3(&m.payload),
            ))
        }),
        cell: Arc::new(move |c| {
            let obj = |o: &ObjectRef| ObjectRef::new(pid4.clone(), dup4(&o.payload));
            Ok(Cell::new(
                Proarrow::new(obj(&c.top.src), obj(&c.top.tgt), dup4(&c.top.payload)),
                Proarrow::new(obj(&c.bottom.src), obj(&c.bottom.tgt), dup4(&c.bottom.payload)),
                Arrow::new(obj(&c.left.src), obj(&c.left.tgt), dup4(&c.left.payload)),
                Arrow::new(obj(&c.right.src), obj(&c.right.tgt), dup4(&c.right.payload)),
                dup4(&c.payload),
            ))
        }),
        comp_comparison: Arc::new(move |m, n| {
            let mn = power1.compose_pro(m, n)?;
            Ok(power1.id_cell_on_pro(&mn))
        }),
        unit_comparison: Arc::new(move |x| Ok(power2.id_cell_on_pro(&power2.id_pro(x)))),
    }
}

/// The reindexing functor `D^I -> D^J` along `f0: J -> I` (picking the
/// `f0(j)`-th component for each `j`).
pub fn reindex_functor(d: &Instance, i_size: usize, f0: &[usize]) -> DoubleFunctor {
    assert!(f0.iter().all(|&i| i < i_size), "reindexing out of range");
    let src = crate::core::dualities::power_instance(d, i_size);
    let tgt = crate::core::dualities::power_instance(d, f0.len());
    let tid = tgt.id().clone();
    let f0 = f0.to_vec();
    let pick = move |p: &Payload| -> Payload {
        let parts = p.as_tuple().expect("power payload");
        Payload::Tuple(f0.iter().map(|&i| parts[i].clone()).collect())
    };
    let (tid1, pick1) = (tid.clone(), pick.clone());
    let (tid2, pick2) = (tid.clone(), pick.clone());
    let (tid3, pick3) = (tid.clone(), pick.clone());
    let (tid4, pick4) = (tid.clone(), pick.clone());
    let tgt1 = tgt.clone();
    let tgt2 = tgt.clone();
    let pro_map = {
        let tid = tid.clone();
        let pick = pick.clone();
        move |m: &Proarrow| {
            Proarrow::new(
                ObjectRef::new(tid.clone(), pick(&m.src.payload)),
                ObjectRef::new(tid.clone(), pick(&m.tgt.payload)),
                pick(&m.payload),
            )
        }
    };
    let ob_map = {
        let tid = tid.clone();
        let pick = pick.clone();
        move |x: &ObjectRef| ObjectRef::new(tid.clone(), pick(&x.payload))
    };
    DoubleFunctor {
        name: format!("reindex[{}]", d.id()),
        src,
        tgt: tgt.clone(),
        class: FunctorClass::Strict,
        normal: true,
        ob: Arc::new(move |x| Ok(ObjectRef::new(tid1.clone(), pick1(&x.payload)))),
        arr: Arc::new(move |f| {
            Ok(Arrow::new(
                ObjectRef::new(tid2.clone(), pick2(&f.src.payload)),
                ObjectRef::new(tid2.clone(), pick2(&f.tgt.payload)),
                pick2(&f.payload),
            ))
        }),
        pro: Arc::new(move |m| {
            Ok(Proarrow::new(
                ObjectRef::new(tid3.clone(), pick3(&m.src.payload)),
                ObjectRef::new(tid3.clone(), pick3(&m.tgt.payload)),
                pick3(&m.payload),
            ))
        }),
        cell: Arc::new(move |c| {
            let obj = |o: &ObjectRef| ObjectRef::new(tid4.clone(), pick4(&o.payload));
            Ok(Cell::new(
                Proarrow::new(obj(&c.top.src), obj(&c.top.tgt), pick4(&c.top.payload)),
                Proarrow::new(obj(&c.bottom.src), obj(&c.bottom.tgt), pick4(&c.bottom.payload)),
                Arrow::new(obj(&c.left.src), obj(&c.left.tgt), pick4(&c.left.payload)),
                Arrow::new(obj(&c.right.src), obj(&c.right.tgt), pick4(&c.right.payload)),
                pick4(&c.payload),
            ))
        }),
        comp_comparison: Arc::new(move |m, n| {
            let mn = tgt1.compose_pro(&pro_map(m), &pro_map(n))?;
            Ok(tgt1.id_cell_on_pro(&mn))
        }),
        unit_comparison: Arc::new(move |x| Ok(tgt2.id_cell_on_pro(&tgt2.id_pro(&ob_map(x))))),
    }
}

/// A (tight) natural transformation between lax double functors: arrows
/// `α_x: Fx -> Gx` with cell components `α_m: Fm => Gm` along them.
#[derive(Clone)]
pub struct NaturalTransformation {
    pub name: String,
    pub src: DoubleFunctor,
    pub tgt: DoubleFunctor,
    pub ob: ObToArrMap,
    pub pro: ProToCellMap,
}

impl NaturalTransformation {
    pub fn at_ob(&self, x: &ObjectRef) -> CoreResult<Arrow> {
        (self.ob)(x)
    }

    pub fn at_pro(&self, m: &Proarrow) -> CoreResult<Cell> {
        (self.pro)(m)
    }
}

/// The identity natural transformation on a functor.
pub fn identity_nat(f: &DoubleFunctor) -> NaturalTransformation {
    let f1 = f.clone();
    let f2 = f.clone();
    NaturalTransformation {
        name: format!("1_({})", f.name),
        src: f.clone(),
        tgt: f.clone(),
        ob: Arc::new(move |x| {
            let fx = f1.apply_ob(x)?;
            Ok(f1.tgt.id_arrow(&fx))
        }),
        pro: Arc::new(move |m| {
            let fm = f2.apply_pro(m)?;
            Ok(f2.tgt.id_cell_on_pro(&fm))
        }),
    }
}

/// Vertical composite of natural transformations.
pub fn compose_nat(
    a: &NaturalTransformation,
    b: &NaturalTransformation,
) -> NaturalTransformation {
    let (a1, b1) = (a.clone(), b.clone());
    let (a2, b2) = (a.clone(), b.clone());
    NaturalTransformation {
        name: format!("{};{}", a.name, b.name),
        src: a.src.clone(),
        tgt: b.tgt.clone(),
        ob: Arc::new(move |x| {
            let f = a1.at_ob(x)?;
            let g = b1.at_ob(x)?;
            a1.src.tgt.compose_arrows(&f, &g)
        }),
        pro: Arc::new(move |m| {
            let f = a2.at_pro(m)?;
            let g = b2.at_pro(m)?;
            a2.src.tgt.vcomp(&f, &g)
        }),
    }
}

/// Orientation/invertibility tag of a protransformation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Lax,
    Oplax,
    Pseudo,
    Strict,
}

/// A protransformation `τ: F -|-> G`: proarrow components `τ_x`, cell
/// components `τ_f`, and globular naturality comparisons whose orientation
/// depends on the variant. Lax comparisons have shape
/// `τ_x ⊙ Gm => Fm ⊙ τ_y`; oplax ones the reverse. Pseudo and strict
/// protransformations carry both orientations, mutually inverse.
#[derive(Clone)]
pub struct Protransformation {
    pub name: String,
    pub variant: Variant,
    pub src: DoubleFunctor,
    pub tgt: DoubleFunctor,
    pub ob: ObToProMap,
    pub arr: ArrToCellMap,
    pub lax_cmp: Option<ProToCellMap>,
    pub oplax_cmp: Option<ProToCellMap>,
}

impl Protransformation {
    pub fn at_ob(&self, x: &ObjectRef) -> CoreResult<Proarrow> {
        (self.ob)(x)
    }

    pub fn at_arr(&self, f: &Arrow) -> CoreResult<Cell> {
        (self.arr)(f)
    }

    pub fn lax_at(&self, m: &Proarrow) -> CoreResult<Cell> {
        match &self.lax_cmp {
            Some(c) => c(m),
            None => Err(CoreError::VariantMismatch(format!(
                "{} has no lax comparisons",
                self.name
            ))),
        }
    }

    pub fn oplax_at(&self, m: &Proarrow) -> CoreResult<Cell> {
        match &self.oplax_cmp {
            Some(c) => c(m),
            None => Err(CoreError::VariantMismatch(format!(
                "{} has no oplax comparisons",
                self.name
            ))),
        }
    }

    /// The instance the components live in.
    pub fn ambient(&self) -> &Instance {
        &self.src.tgt
    }
}

/// A modification bounded by protransformations on top and bottom and
/// natural transformations on the sides.
#[derive(Clone)]
pub struct Modification {
    pub name: String,
    pub top: Protransformation,
    pub bottom: Protransformation,
    pub left: NaturalTransformation,
    pub right: NaturalTransformation,
    pub component: ObToCellMap,
}

impl Modification {
    pub fn at_ob(&self, x: &ObjectRef) -> CoreResult<Cell> {
        (self.component)(x)
    }

    pub fn ambient(&self) -> &Instance {
        &self.top.src.tgt
    }
}

/// The underlying (op)lax natural transformation of a protransformation:
/// component proarrows and naturality comparisons only, the data visible
/// in the underlying bicategory.
#[derive(Clone)]
pub struct OplaxNatTransData {
    pub name: String,
    pub variant: Variant,
    pub src: DoubleFunctor,
    pub tgt: DoubleFunctor,
    pub ob: ObToProMap,
    pub lax_cmp: Option<ProToCellMap>,
    pub oplax_cmp: Option<ProToCellMap>,
}

/// Helper for downcasting to a power instance.
pub fn as_power(d: &Instance) -> Option<&PowerInstance> {
    d.as_any().downcast_ref::<PowerInstance>()
}
