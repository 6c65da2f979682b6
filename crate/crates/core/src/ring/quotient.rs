use super::{Elem, FiniteRing, Ideal, TABLE_CAP};
use crate::{Error, Result};

/// `R/I` as a table ring, with the projection `R → R/I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// `projection[r]` is the class of `r`.
    pub projection: Vec<Elem>,
    /// Smallest-index representative of each class.
    pub representatives: Vec<Elem>,
}

impl Quotient {
    pub fn project(&self, r: Elem) -> Elem {
        self.projection[r.0]
    }

    pub fn lift(&self, c: Elem) -> Elem {
        self.representatives[c.0]
    }
}

/// Coset construction of `R/I`. Improper `I` yields the zero ring.
pub fn quotient(ring: &FiniteRing, ideal: &Ideal) -> Result<Quotient> {
    let n = ring.order();
    let size = n / ideal.len().max(1);
    if size > TABLE_CAP {
        return Err(Error::capacity("quotient ring", size, TABLE_CAP));
    }
    let members: Vec<Elem> = ideal.elements().collect();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for r in ring.elements() {
        if class_of[r.0] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(r);
        for &i in &members {
            class_of[ring.add(r, i).0] = c;
        }
    }
    let m = reps.len();
    debug_assert_eq!(m, size);
    let mut add = vec![0u16; m * m];
    let mut mul = vec![0u16; m * m];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            add[a * m + b] = class_of[ring.add(ra, rb).0] as u16;
            mul[a * m + b] = class_of[ring.mul(ra, rb).0] as u16;
        }
    }
    let zero = class_of[ring.zero().0];
    let one = class_of[ring.one().0];
    Ok(Quotient {
        ring: FiniteRing::from_tables_unchecked(m, add, mul, zero, one),
        projection: class_of.into_iter().map(Elem).collect(),
        representatives: reps,
    })
}
