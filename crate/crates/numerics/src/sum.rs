//! Neumaier compensated summation.
//!
//! Panel sums in the adaptive integrator and coefficient sums in the spectral
//! transforms run through this accumulator so that summation order roundoff
//! stays at one ulp of the true sum instead of growing with the term count.

/// Running compensated sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of an iterator of terms.
pub fn sum_compensated<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut acc = Accumulator::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}
