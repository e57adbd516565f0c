//! Fixed-width vertex sets used by the hot loops (canonical labelling and
//! the packing search). Width `W` is the number of 64-bit words, so a set
//! holds up to `64 * W` vertices.

use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Set<const W: usize>(pub [u64; W]);

impl<const W: usize> Set<W> {
    pub const EMPTY: Self = Set([0; W]);

    #[inline]
    pub fn full(n: usize) -> Self {
        let mut s = Self::EMPTY;
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1 << (v & 63));
    }

    #[inline]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn and(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= *b;
        }
        out
    }

    #[inline]
    pub fn and_not(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !*b;
        }
        out
    }

    #[inline]
    pub fn or(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= *b;
        }
        out
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.0.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    pub fn iter(&self) -> SetIter<W> {
        SetIter { words: self.0, idx: 0 }
    }
}

pub(crate) struct SetIter<const W: usize> {
    words: [u64; W],
    idx: usize,
}

impl<const W: usize> Iterator for SetIter<W> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < W {
            let w = self.words[self.idx];
            if w != 0 {
                self.words[self.idx] = w & (w - 1);
                return Some(self.idx * 64 + w.trailing_zeros() as usize);
            }
            self.idx += 1;
        }
        None
    }
}

/// Adjacency rows of `g` as fixed-width sets. Caller guarantees `g.order() <= 64 * W`.
pub(crate) fn rows<const W: usize>(g: &Graph) -> Vec<Set<W>> {
    (0..g.order())
        .map(|v| {
            let mut s = Set::<W>::EMPTY;
            for (dst, src) in s.0.iter_mut().zip(g.row(v)) {
                *dst = *src;
            }
            s
        })
        .collect()
}

/// Runs `$body` with `$w` bound to the smallest supported word width that
/// holds `$n` vertices.
macro_rules! with_width {
    ($n:expr, $w:ident => $body:expr) => {{
        let n: usize = $n;
        if n <= 64 {
            const $w: usize = 1;
            $body
        } else if n <= 128 {
            const $w: usize = 2;
            $body
        } else if n <= 256 {
            const $w: usize = 4;
            $body
        } else {
            const $w: usize = 8;
            $body
        }
    }};
}
pub(crate) use with_width;
