use crate::rational::Rational;

use super::GeometryError;

/// Open interval `(lo, hi)`; the projection of a rectangle interior onto one
/// axis of the plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, GeometryError> {
        if lo >= hi {
            return Err(GeometryError::DegenerateInterval(Box::new((lo, hi))));
        }
        Ok(Interval { lo, hi })
    }

    pub fn len(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn open_overlap(&self, other: &Interval) -> bool {
        std::cmp::max(&self.lo, &other.lo) < std::cmp::min(&self.hi, &other.hi)
    }
}

/// Open arc on a circle of circumference `period`: the points
/// `start + t (mod period)` for `0 < t < length`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircularArc {
    pub start: Rational,
    pub length: Rational,
    pub period: Rational,
}

impl CircularArc {
    /// `start` is reduced into `[0, period)`.
    pub fn new(start: Rational, length: Rational, period: Rational) -> Result<Self, GeometryError> {
        if !period.is_positive() {
            return Err(GeometryError::BadPeriod(period));
        }
        if !length.is_positive() || length >= period {
            return Err(GeometryError::BadArcLength(Box::new((length, period))));
        }
        let start = start.rem_euclid(&period);
        Ok(CircularArc {
            start,
            length,
            period,
        })
    }

    pub fn end(&self) -> Rational {
        &self.start + &self.length
    }

    pub fn wraps(&self) -> bool {
        self.end() > self.period
    }

    /// Unrolls `other` by -1, 0 and +1 periods against `self`; with both
    /// starts in `[0, P)` and both lengths below `P` no other shift can meet.
    pub fn open_overlap(&self, other: &CircularArc) -> bool {
        let a_end = self.end();
        [-1i64, 0, 1].iter().any(|&k| {
            let b_lo = &other.start + &(&self.period * k);
            let b_hi = &b_lo + &other.length;
            std::cmp::max(&self.start, &b_lo) < std::cmp::min(&a_end, &b_hi)
        })
    }
}

/// The extent of a rectangle along one axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Span {
    Interval(Interval),
    Arc(CircularArc),
}

impl Span {
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, GeometryError> {
        Interval::new(lo, hi).map(Span::Interval)
    }

    pub fn arc(start: Rational, length: Rational, period: Rational) -> Result<Self, GeometryError> {
        CircularArc::new(start, length, period).map(Span::Arc)
    }

    /// Lower endpoint (arc start).
    pub fn lo(&self) -> &Rational {
        match self {
            Span::Interval(i) => &i.lo,
            Span::Arc(a) => &a.start,
        }
    }

    /// Upper endpoint; for arcs `start + length`, which may exceed the period.
    pub fn hi(&self) -> Rational {
        match self {
            Span::Interval(i) => i.hi.clone(),
            Span::Arc(a) => a.end(),
        }
    }

    pub fn len(&self) -> Rational {
        match self {
            Span::Interval(i) => i.len(),
            Span::Arc(a) => a.length.clone(),
        }
    }

    pub fn as_interval(&self) -> Option<&Interval> {
        match self {
            Span::Interval(i) => Some(i),
            Span::Arc(_) => None,
        }
    }

    pub fn as_arc(&self) -> Option<&CircularArc> {
        match self {
            Span::Arc(a) => Some(a),
            Span::Interval(_) => None,
        }
    }

    /// Open-interior intersection of two projections of the same kind.
    pub fn open_overlap(&self, other: &Span) -> Result<bool, GeometryError> {
        match (self, other) {
            (Span::Interval(a), Span::Interval(b)) => Ok(a.open_overlap(b)),
            (Span::Arc(a), Span::Arc(b)) => {
                if a.period != b.period {
                    return Err(GeometryError::PeriodMismatch(Box::new((a.period.clone(), b.period.clone()))));
                }
                Ok(a.open_overlap(b))
            }
            _ => Err(GeometryError::MixedSpans),
        }
    }
}
