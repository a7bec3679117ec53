//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! pool; without it every strategy runs on the calling thread.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Map every item and fold the results with an associative `merge`.
    pub fn map_reduce<T, R, M, F>(self, items: Vec<T>, map: M, identity: F, merge: fn(R, R) -> R) -> R
    where
        T: Send,
        R: Send,
        M: Fn(T) -> R + Sync + Send,
        F: Fn() -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(map).reduce(identity, merge)
            }
            _ => items.into_iter().map(map).fold(identity(), merge),
        }
    }

    /// Map every item, keeping input order.
    pub fn map_collect<T, R, M>(self, items: Vec<T>, map: M) -> Vec<R>
    where
        T: Send,
        R: Send,
        M: Fn(T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(map).collect()
            }
            _ => items.into_iter().map(map).collect(),
        }
    }
}
