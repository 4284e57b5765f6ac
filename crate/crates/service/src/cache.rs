//! LRU cache of serialized view responses.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use lru::LruCache;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
}

struct CacheEntry {
    value: Arc<[u8]>,
    #[allow(dead_code)]
    computed_at: chrono::DateTime<chrono::Utc>,
}

/// Thread-safe LRU map from canonical request key to response bytes. The
/// producer runs outside the lock, so concurrent misses on one key may both
/// compute; they produce identical bytes and the later insert wins.
pub struct ViewCache {
    inner: Mutex<LruCache<String, CacheEntry>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl ViewCache {
    pub fn new(capacity: NonZeroUsize) -> Self {
        ViewCache {
            inner: Mutex::new(LruCache::new(capacity)),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    /// Returns the cached bytes for `key`, or runs `producer` and stores its
    /// output. Producer errors are returned and not cached.
    pub fn get_or_compute<E>(
        &self,
        key: &str,
        producer: impl FnOnce() -> Result<Vec<u8>, E>,
    ) -> Result<(Arc<[u8]>, Lookup), E> {
        if let Some(entry) = self.inner.lock().expect("cache lock").get(key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok((entry.value.clone(), Lookup::Hit));
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let value: Arc<[u8]> = producer()?.into();
        let entry = CacheEntry {
            value: value.clone(),
            computed_at: chrono::Utc::now(),
        };
        self.inner.lock().expect("cache lock").put(key.to_string(), entry);
        Ok((value, Lookup::Miss))
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            entries: self.inner.lock().expect("cache lock").len(),
        }
    }
}
