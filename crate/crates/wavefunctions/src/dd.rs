//! Double-double arithmetic for the oscillatory confluent series.
//!
//! The Taylor series of the confluent hypergeometric function at large
//! imaginary argument cancels down from terms of size `exp(|z|)`, so plain
//! f64 accumulation loses all digits near the asymptotic switch point.
//! Carrying the recurrence and the sum in unevaluated double-double pairs
//! keeps roughly thirty-two significant digits and leaves a few good ones
//! after the cancellation.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd { hi: s, lo: (a - (s - bb)) + (b - bb) }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd { hi: p, lo: a.mul_add(b, -p) }
}

impl Dd {
    pub(crate) fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact double-double sum of two f64 values.
    pub(crate) fn from_sum(a: f64, b: f64) -> Dd {
        two_sum(a, b)
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let mid = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(mid.hi, mid.lo + t.lo)
    }

    pub(crate) fn sub(self, o: Dd) -> Dd {
        self.add(Dd { hi: -o.hi, lo: -o.lo })
    }

    pub(crate) fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    pub(crate) fn div(self, o: Dd) -> Dd {
        let q0 = self.hi / o.hi;
        let r0 = self.sub(o.mul(Dd::from_f64(q0)));
        let q1 = r0.hi / o.hi;
        let r1 = r0.sub(o.mul(Dd::from_f64(q1)));
        let q2 = r1.hi / o.hi;
        quick_two_sum(q0, q1).add(Dd::from_f64(q2))
    }
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CDd {
    pub(crate) re: Dd,
    pub(crate) im: Dd,
}

impl CDd {
    pub(crate) fn from_complex(z: Complex64) -> CDd {
        CDd { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    pub(crate) fn one() -> CDd {
        CDd { re: Dd::from_f64(1.0), im: Dd::from_f64(0.0) }
    }

    pub(crate) fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub(crate) fn add(self, o: CDd) -> CDd {
        CDd { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    pub(crate) fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub(crate) fn div(self, o: CDd) -> CDd {
        let denom = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(CDd { re: o.re, im: Dd::from_f64(0.0).sub(o.im) });
        CDd { re: num.re.div(denom), im: num.im.div(denom) }
    }

    pub(crate) fn norm(self) -> f64 {
        self.to_complex().norm()
    }
}
