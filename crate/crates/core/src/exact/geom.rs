use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Rational::new(1, 2);
        Point::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point::new(
            &self.x + &(t * &(&other.x - &self.x)),
            &self.y + &(t * &(&other.y - &self.y)),
        )
    }

    pub fn centroid(a: &Point, b: &Point, c: &Point) -> Point {
        let third = Rational::new(1, 3);
        Point::new(
            (&(&a.x + &b.x) + &c.x) * &third,
            (&(&a.y + &b.y) + &c.y) * &third,
        )
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    /// Panics if the endpoints coincide.
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a != b, "degenerate segment at {a}");
        Segment { a, b }
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(&self.b)
    }

    /// Closed-segment membership.
    pub fn contains(&self, p: &Point) -> bool {
        on_segment(&self.a, &self.b, p)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Exact `(q - p) x (r - p)`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    let l = &(&q.x - &p.x) * &(&r.y - &p.y);
    let rr = &(&q.y - &p.y) * &(&r.x - &p.x);
    l - rr
}

pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    match cross(p, q, r).signum() {
        std::cmp::Ordering::Greater => Orientation::Left,
        std::cmp::Ordering::Less => Orientation::Right,
        std::cmp::Ordering::Equal => Orientation::Collinear,
    }
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orientation(a, b, p) == Orientation::Collinear && in_box(a, b, p)
}

fn in_box(a: &Point, b: &Point, p: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (ly, hy) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    lx <= &p.x && &p.x <= hx && ly <= &p.y && &p.y <= hy
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Intersection {
    Empty,
    /// `proper` is true when the point is interior to both segments.
    Point {
        at: Point,
        proper: bool,
    },
    Overlap(Segment),
}

/// Exact intersection of two closed segments.
pub fn segment_intersection(s1: &Segment, s2: &Segment) -> Intersection {
    let (a, b, c, d) = (&s1.a, &s1.b, &s2.a, &s2.b);
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        // collinear points are totally ordered lexicographically along the line
        let (lo1, hi1) = if a <= b { (a, b) } else { (b, a) };
        let (lo2, hi2) = if c <= d { (c, d) } else { (d, c) };
        let lo = if lo1 >= lo2 { lo1 } else { lo2 };
        let hi = if hi1 <= hi2 { hi1 } else { hi2 };
        return match lo.cmp(hi) {
            std::cmp::Ordering::Greater => Intersection::Empty,
            std::cmp::Ordering::Equal => Intersection::Point {
                at: lo.clone(),
                proper: false,
            },
            std::cmp::Ordering::Less => Intersection::Overlap(Segment::new(lo.clone(), hi.clone())),
        };
    }

    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    let straddles = |x: Orientation, y: Orientation| {
        x == Orientation::Collinear || y == Orientation::Collinear || x != y
    };
    if !straddles(o1, o2) || !straddles(o3, o4) {
        return Intersection::Empty;
    }

    // touching configurations: the shared point is an endpoint
    if o1 == Orientation::Collinear {
        return touch_or_empty(c, a, b);
    }
    if o2 == Orientation::Collinear {
        return touch_or_empty(d, a, b);
    }
    if o3 == Orientation::Collinear {
        return touch_or_empty(a, c, d);
    }
    if o4 == Orientation::Collinear {
        return touch_or_empty(b, c, d);
    }

    // proper crossing
    let denom = &(&(&b.x - &a.x) * &(&d.y - &c.y)) - &(&(&b.y - &a.y) * &(&d.x - &c.x));
    let t = cross(c, d, a) / denom;
    Intersection::Point {
        at: a.lerp(b, &t),
        proper: true,
    }
}

fn touch_or_empty(p: &Point, a: &Point, b: &Point) -> Intersection {
    if in_box(a, b, p) {
        Intersection::Point {
            at: p.clone(),
            proper: false,
        }
    } else {
        Intersection::Empty
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum PointLocation {
    Inside,
    OnBoundary,
    Outside,
}

/// Classifies `q` against the closed region bounded by the cyclic vertex list.
pub fn locate_point(q: &Point, vertices: &[Point]) -> PointLocation {
    let n = vertices.len();
    let mut winding = 0i32;
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        if a.y <= q.y {
            if b.y > q.y {
                match orientation(a, b, q) {
                    Orientation::Left => winding += 1,
                    Orientation::Collinear => return PointLocation::OnBoundary,
                    Orientation::Right => {}
                }
            } else if on_segment(a, b, q) {
                return PointLocation::OnBoundary;
            }
        } else if b.y <= q.y {
            match orientation(a, b, q) {
                Orientation::Right => winding -= 1,
                Orientation::Collinear => return PointLocation::OnBoundary,
                Orientation::Left => {}
            }
        } else if on_segment(a, b, q) {
            return PointLocation::OnBoundary;
        }
    }
    if winding != 0 {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

/// Twice the signed shoelace area; positive for counterclockwise order.
pub fn signed_area2(vertices: &[Point]) -> Rational {
    let n = vertices.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        acc = acc + (&(&a.x * &b.y) - &(&b.x * &a.y));
    }
    acc
}

/// Unsigned area of the region bounded by the vertex cycle.
pub fn area(vertices: &[Point]) -> Rational {
    signed_area2(vertices).abs() * Rational::new(1, 2)
}

pub fn triangle_area(a: &Point, b: &Point, c: &Point) -> Rational {
    cross(a, b, c).abs() * Rational::new(1, 2)
}

/// `p` lies in the closed triangle `abc` (either orientation).
pub fn in_closed_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    let o1 = orientation(a, b, p);
    let o2 = orientation(b, c, p);
    let o3 = orientation(c, a, p);
    let has_left = [o1, o2, o3].contains(&Orientation::Left);
    let has_right = [o1, o2, o3].contains(&Orientation::Right);
    !(has_left && has_right)
}

/// `p` lies strictly inside the non-degenerate triangle `abc`.
pub fn in_open_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    let o1 = orientation(a, b, p);
    o1 != Orientation::Collinear && orientation(b, c, p) == o1 && orientation(c, a, p) == o1
}
