//! Optional data parallelism.
//!
//! With the `parallel` feature, [`map`] spreads work over the rayon pool
//! when asked to; otherwise it runs sequentially. Output order always
//! follows input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether this build can run in parallel at all.
pub const AVAILABLE: bool = cfg!(feature = "parallel");

pub fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn order_is_preserved() {
        let xs: Vec<u64> = (0..1000).collect();
        let seq = super::map(&xs, false, |x| x * x);
        let par = super::map(&xs, true, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 998001);
    }
}
