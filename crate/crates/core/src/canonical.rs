//! Canonical labelling of flag systems.
//!
//! From each start flag, flags are renumbered in breadth-first order visiting
//! generators `r0, r1, r2` in turn; the code is the renumbered image table.
//! The canonical form is the least code over all start flags, so two systems
//! are isomorphic (generator labels preserved) exactly when their canonical
//! forms agree.

use std::cmp::Ordering;
use std::fmt;

use crate::flags::{FlagSystem, Kind};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Writes the breadth-first code from `start` into `code`, aborting as soon
/// as it compares greater than `bound`. Returns the ordering against `bound`
/// (`Less` when no bound is given and the code is complete).
fn bfs_code(
    fs: &FlagSystem,
    start: usize,
    bound: Option<&[u32]>,
    code: &mut Vec<u32>,
    label: &mut [u32],
    order: &mut Vec<usize>,
) -> Ordering {
    const UNSET: u32 = u32::MAX;
    let n = fs.flags();
    label.iter_mut().for_each(|l| *l = UNSET);
    order.clear();
    code.clear();
    label[start] = 0;
    order.push(start);
    let mut head = 0;
    let mut state = if bound.is_some() {
        Ordering::Equal
    } else {
        Ordering::Less
    };
    while head < order.len() {
        let x = order[head];
        head += 1;
        for i in 0..3 {
            let y = fs.act(x, i);
            if label[y] == UNSET {
                label[y] = order.len() as u32;
                order.push(y);
            }
            let v = label[y];
            if state == Ordering::Equal {
                let b = bound.unwrap()[code.len()];
                state = v.cmp(&b);
                if state == Ordering::Greater {
                    return state;
                }
            }
            code.push(v);
        }
    }
    debug_assert_eq!(order.len(), n);
    state
}

/// Least breadth-first code over all start flags.
pub fn canonical_code(fs: &FlagSystem) -> Vec<u32> {
    let n = fs.flags();
    let mut best: Vec<u32> = Vec::with_capacity(3 * n);
    let mut code = Vec::with_capacity(3 * n);
    let mut label = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    bfs_code(fs, 0, None, &mut best, &mut label, &mut order);
    for start in 1..n {
        if bfs_code(fs, start, Some(&best), &mut code, &mut label, &mut order) == Ordering::Less {
            std::mem::swap(&mut best, &mut code);
        }
    }
    best
}

/// Whether the breadth-first code from flag 0 is the canonical code.
pub(crate) fn is_canonical_from_zero(fs: &FlagSystem) -> bool {
    let n = fs.flags();
    let mut base = Vec::with_capacity(3 * n);
    let mut code = Vec::with_capacity(3 * n);
    let mut label = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    bfs_code(fs, 0, None, &mut base, &mut label, &mut order);
    (1..n)
        .all(|s| bfs_code(fs, s, Some(&base), &mut code, &mut label, &mut order) != Ordering::Less)
}

/// The system relabelled in breadth-first order from its canonical start.
pub fn canonical_relabel(fs: &FlagSystem) -> FlagSystem {
    let code = canonical_code(fs);
    let tables: [Vec<usize>; 3] = [0, 1, 2].map(|i| {
        code.iter()
            .skip(i)
            .step_by(3)
            .map(|&v| v as usize)
            .collect()
    });
    FlagSystem::from_tables(fs.kind(), tables).expect("relabelling preserves validity")
}

pub fn canonical_form(fs: &FlagSystem) -> CanonicalForm {
    let code = canonical_code(fs);
    let mut bytes = Vec::with_capacity(8 + 4 * code.len());
    bytes.push(match fs.kind() {
        Kind::Map => 0,
        Kind::Hypermap => 1,
    });
    bytes.extend_from_slice(&(fs.flags() as u32).to_be_bytes());
    for v in code {
        bytes.extend_from_slice(&v.to_be_bytes());
    }
    CanonicalForm(bytes)
}

pub fn is_isomorphic(a: &FlagSystem, b: &FlagSystem) -> bool {
    a.kind() == b.kind() && a.flags() == b.flags() && canonical_code(a) == canonical_code(b)
}
