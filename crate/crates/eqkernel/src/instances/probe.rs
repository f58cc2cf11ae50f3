//! Probe universes: finite, reproducible collections of objects, arrows,
//! proarrows and cells over which universally quantified laws are checked.

use crate::core::{Arrow, Cell, CellBoundary, Instance, ObjectRef, Proarrow};
use serde::{Deserialize, Serialize};

/// Enumeration policy for a probe universe.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProbeMode {
    Exhaustive,
    Seeded,
}

/// Size bounds and sampling policy for probe generation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProbeConfig {
    pub max_object_size: usize,
    pub max_apex_size: usize,
    pub mode: ProbeMode,
    pub seed: u64,
    pub budget: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            max_object_size: 2,
            max_apex_size: 2,
            mode: ProbeMode::Exhaustive,
            seed: 17,
            budget: 24,
        }
    }
}

impl ProbeConfig {
    pub fn exhaustive(max_object_size: usize) -> Self {
        ProbeConfig {
            max_object_size,
            max_apex_size: max_object_size.max(2),
            mode: ProbeMode::Exhaustive,
            seed: 17,
            budget: 24,
        }
    }

    pub fn seeded(max_object_size: usize, seed: u64, budget: usize) -> Self {
        ProbeConfig {
            max_object_size,
            max_apex_size: max_object_size.max(2),
            mode: ProbeMode::Seeded,
            seed,
            budget,
        }
    }

    /// Identity string recorded in law reports, so every verdict names the
    /// quantification domain it was checked over.
    pub fn digest(&self, instance: &str) -> String {
        format!(
            "{instance}:size≤{}/apex≤{}/{:?}/seed={}/budget={}",
            self.max_object_size, self.max_apex_size, self.mode, self.seed, self.budget
        )
    }
}

/// A reproducible verification surface for one instance.
#[derive(Clone)]
pub struct ProbeUniverse {
    pub instance: Instance,
    pub config: ProbeConfig,
    pub objects: Vec<ObjectRef>,
    pub arrows: Vec<Arrow>,
    pub proarrows: Vec<Proarrow>,
    pub cells: Vec<Cell>,
}

impl ProbeUniverse {
    /// Builds the universe from the instance's enumerators. Deterministic
    /// given the config (including the seed); always includes the empty set
    /// and singletons among objects when the instance has them.
    pub fn build(instance: &Instance, config: &ProbeConfig) -> ProbeUniverse {
        let objects = instance.enumerate_objects(config);
        let mut arrows = Vec::new();
        for x in &objects {
            for y in &objects {
                arrows.extend(instance.enumerate_arrows(x, y));
            }
        }
        let mut proarrows = Vec::new();
        for x in &objects {
            // units first so every law that needs them sees them
            proarrows.push(instance.id_pro(x));
        }
        for x in &objects {
            for y in &objects {
                for p in instance.enumerate_proarrows(x, y, config) {
                    if !proarrows.contains(&p) {
                        proarrows.push(p);
                    }
                }
            }
        }
        let mut cells = Vec::new();
        for m in &proarrows {
            for n in &proarrows {
                for f in instance.enumerate_arrows(&m.src, &n.src) {
                    for g in instance.enumerate_arrows(&m.tgt, &n.tgt) {
                        cells.extend(instance.enumerate_cells(&CellBoundary {
                            top: m.clone(),
                            bottom: n.clone(),
                            left: f.clone(),
                            right: g.clone(),
                        }));
                    }
                }
            }
        }
        ProbeUniverse {
            instance: instance.clone(),
            config: config.clone(),
            objects,
            arrows,
            proarrows,
            cells,
        }
    }

    pub fn digest(&self) -> String {
        self.config.digest(self.instance.id().as_str())
    }

    /// Composable proarrow pairs (m.tgt = n.src).
    pub fn composable_pro_pairs(&self) -> Vec<(&Proarrow, &Proarrow)> {
        let mut out = Vec::new();
        for m in &self.proarrows {
            for n in &self.proarrows {
                if m.tgt == n.src {
                    out.push((m, n));
                }
            }
        }
        out
    }

    /// Composable proarrow triples.
    pub fn composable_pro_triples(&self) -> Vec<(&Proarrow, &Proarrow, &Proarrow)> {
        let mut out = Vec::new();
        for m in &self.proarrows {
            for n in &self.proarrows {
                if m.tgt != n.src {
                    continue;
                }
                for p in &self.proarrows {
                    if n.tgt == p.src {
                        out.push((m, n, p));
                    }
                }
            }
        }
        out
    }

    /// Index of cells by their left boundary arrow.
    pub fn cells_by_left(&self) -> std::collections::HashMap<&Arrow, Vec<&Cell>> {
        let mut map: std::collections::HashMap<&Arrow, Vec<&Cell>> =
            std::collections::HashMap::new();
        for c in &self.cells {
            map.entry(&c.left).or_default().push(c);
        }
        map
    }

    /// Index of cells by their top boundary proarrow.
    pub fn cells_by_top(&self) -> std::collections::HashMap<&Proarrow, Vec<&Cell>> {
        let mut map: std::collections::HashMap<&Proarrow, Vec<&Cell>> =
            std::collections::HashMap::new();
        for c in &self.cells {
            map.entry(&c.top).or_default().push(c);
        }
        map
    }

    /// Horizontally composable cell pairs (a.right = b.left).
    pub fn hcomposable_cell_pairs(&self) -> Vec<(&Cell, &Cell)> {
        let by_left = self.cells_by_left();
        let mut out = Vec::new();
        for a in &self.cells {
            if let Some(bs) = by_left.get(&a.right) {
                for b in bs {
                    out.push((a, *b));
                }
            }
        }
        out
    }

    /// Vertically composable cell pairs (a.bottom = b.top).
    pub fn vcomposable_cell_pairs(&self) -> Vec<(&Cell, &Cell)> {
        let by_top = self.cells_by_top();
        let mut out = Vec::new();
        for a in &self.cells {
            if let Some(bs) = by_top.get(&a.bottom) {
                for b in bs {
                    out.push((a, *b));
                }
            }
        }
        out
    }
}

/// Deterministic splitmix-style generator for seeded sampling. Kept local
/// so sampled universes are stable across platforms and rand versions.
#[derive(Clone)]
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value below `bound` (bound must be nonzero).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}
