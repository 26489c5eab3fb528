//! Process-wide, initialise-once tables keyed by value type and precision.
//!
//! Tables (Bernoulli numbers, quadrature nodes, finite-difference weights,
//! zeta constants) are built on first use and shared read-only afterwards.
//! Two threads racing on the same key may both build it; the first insert wins
//! and both results are identical.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

type Key = (TypeId, &'static str, u32, u64);
type Slot = Arc<dyn Any + Send + Sync>;

fn store() -> &'static RwLock<HashMap<Key, Slot>> {
    static STORE: OnceLock<RwLock<HashMap<Key, Slot>>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Returns the table stored under (`V`, `kind`, `bits`, `key`), building it
/// with `build` on first request.
pub fn shared<V, F>(kind: &'static str, bits: u32, key: u64, build: F) -> Arc<V>
where
    V: Any + Send + Sync,
    F: FnOnce() -> V,
{
    let k = (TypeId::of::<V>(), kind, bits, key);
    if let Some(slot) = store().read().expect("cache lock").get(&k) {
        return slot.clone().downcast::<V>().expect("cache type");
    }
    let built: Slot = Arc::new(build());
    let mut guard = store().write().expect("cache lock");
    let slot = guard.entry(k).or_insert(built).clone();
    slot.downcast::<V>().expect("cache type")
}
