/// Execution strategy for enumeration-heavy work.
///
/// `Parallel` splits an enumeration into lexicographically contiguous shards
/// and aggregates them on the rayon pool. When the crate is built without the
/// `parallel` feature it silently behaves like `Sequential`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Maps `f` over `items` and returns the results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Folds each item to an accumulator and merges the accumulators.
    ///
    /// `merge` must be associative and commutative: the parallel path makes
    /// no promise about the order in which partial results meet.
    pub fn fold<T, A, Init, F, M>(self, items: &[T], init: Init, fold: F, merge: M) -> A
    where
        T: Sync,
        A: Send,
        Init: Fn() -> A + Sync + Send,
        F: Fn(A, &T) -> A + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().fold(&init, &fold).reduce(&init, &merge)
            }
            _ => items.iter().fold(init(), fold),
        }
    }
}
