//! Data-parallel helpers. With the `parallel` feature these run on rayon's
//! global pool; without it they are plain sequential loops with identical
//! results and ordering.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

pub(crate) fn any<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().any(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().any(f)
    }
}

/// First `Some` in index order, regardless of evaluation order.
pub(crate) fn find_map_first<R, F>(range: std::ops::Range<u64>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.into_iter().find_map(f)
    }
}

pub(crate) fn map_range<R, F>(range: std::ops::Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.into_iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..1000).collect();
        assert_eq!(
            super::map(&v, |x| x * 2),
            (0..1000).map(|x| x * 2).collect::<Vec<_>>()
        );
        assert_eq!(super::map_range(0..50, |i| i), (0..50).collect::<Vec<_>>());
    }

    #[test]
    fn first_hit_is_lowest_index() {
        let hit = super::find_map_first(0..10_000, |i| (i % 97 == 13).then_some(i));
        assert_eq!(hit, Some(13));
        assert!(super::any(&[1, 3, 5, 6], |x| x % 2 == 0));
    }
}
