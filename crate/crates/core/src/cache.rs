//! Process-wide memo of enumerations, keyed by size. Entries are immutable
//! once filled and identical to a fresh enumeration.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::partitions::{self, NcPartition, NclPartition};
use crate::trees::{self, BicolorPlanarTree, PlanarTree};

type Table<T> = OnceLock<Mutex<HashMap<usize, Arc<Vec<T>>>>>;

fn get_or_fill<T>(
    table: &'static Table<T>,
    n: usize,
    fill: impl FnOnce(usize) -> Vec<T>,
) -> Arc<Vec<T>> {
    let map = table.get_or_init(Default::default);
    if let Some(v) = map.lock().expect("cache poisoned").get(&n) {
        return Arc::clone(v);
    }
    // computed outside the lock; fills may recurse into other tables
    let value = Arc::new(fill(n));
    let mut guard = map.lock().expect("cache poisoned");
    Arc::clone(guard.entry(n).or_insert(value))
}

pub(crate) fn nc(n: usize) -> Arc<Vec<NcPartition>> {
    static T: Table<NcPartition> = OnceLock::new();
    get_or_fill(&T, n, partitions::enumerate::generate_nc)
}

pub(crate) fn ncl(n: usize) -> Arc<Vec<NclPartition>> {
    static T: Table<NclPartition> = OnceLock::new();
    get_or_fill(&T, n, partitions::enumerate::generate_ncl)
}

pub(crate) fn ncs(n: usize) -> Arc<Vec<NcPartition>> {
    static T: Table<NcPartition> = OnceLock::new();
    get_or_fill(&T, n, partitions::enumerate::generate_ncs)
}

pub(crate) fn ncls(n: usize) -> Arc<Vec<NclPartition>> {
    static T: Table<NclPartition> = OnceLock::new();
    get_or_fill(&T, n, partitions::enumerate::generate_ncls)
}

/// `[1_k]` on `{1..k}`.
pub(crate) fn one_class(k: usize) -> Arc<Vec<NclPartition>> {
    static T: Table<NclPartition> = OnceLock::new();
    get_or_fill(&T, k, partitions::enumerate::generate_one_class)
}

/// Pairs `(gamma, Kr(gamma))` over `NC(n)`.
pub(crate) fn nc_with_kreweras(n: usize) -> Arc<Vec<(NcPartition, NcPartition)>> {
    static T: Table<(NcPartition, NcPartition)> = OnceLock::new();
    get_or_fill(&T, n, |n| {
        nc(n)
            .iter()
            .map(|g| (g.clone(), partitions::kreweras(g)))
            .collect()
    })
}

pub(crate) fn planar_trees(n: usize) -> Arc<Vec<PlanarTree>> {
    static T: Table<PlanarTree> = OnceLock::new();
    get_or_fill(&T, n, trees::generate_planar_trees)
}

pub(crate) fn bicolor(n: usize) -> Arc<Vec<BicolorPlanarTree>> {
    static T: Table<BicolorPlanarTree> = OnceLock::new();
    get_or_fill(&T, n, trees::generate_bicolor)
}
