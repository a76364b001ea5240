//! Square-root bounds from the continuous relaxations of the block-size
//! minimizations. Decisions are exact; the float value is reported and must
//! agree with the exact decision up to [`FLOAT_TOLERANCE`].

/// Tolerance for the floating-point cross-check.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClosedForm {
    pub lhs: f64,
    pub rhs: f64,
    /// Exact decision of the inequality.
    pub holds: bool,
    /// The float evaluation agrees with `holds` (or is within tolerance of
    /// the boundary).
    pub float_agrees: bool,
}

fn isqrt(d: i128) -> i128 {
    debug_assert!(d >= 0);
    let mut s = libm::sqrt(d as f64) as i128;
    while s * s > d {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= d {
        s += 1;
    }
    s
}

/// `√d` as a float, exact when `d` is a perfect square.
fn sqrt_value(d: i128) -> f64 {
    let s = isqrt(d);
    if s * s == d {
        s as f64
    } else {
        libm::sqrt(d as f64)
    }
}

/// `√d ≥ r` (or `> r` when `strict`), decided exactly.
fn sqrt_cmp(d: i128, r: i128, strict: bool) -> bool {
    if r < 0 {
        return true;
    }
    if strict {
        d > r * r
    } else {
        d >= r * r
    }
}

fn agrees(lhs: f64, rhs: f64, holds: bool, strict: bool) -> bool {
    let diff = lhs - rhs;
    if diff.abs() <= FLOAT_TOLERANCE {
        return true;
    }
    let float_holds = if strict { diff > 0.0 } else { diff >= 0.0 };
    float_holds == holds
}

/// `l n/2 + ½ √((l²−2l) n² + 2 l n) ≥ (l−1) n + 2`.
pub fn prop4_closed_form(n: u32, l: u32) -> ClosedForm {
    let (n, l) = (i128::from(n), i128::from(l));
    let d = (l * l - 2 * l) * n * n + 2 * l * n;
    let lhs = (l * n) as f64 / 2.0 + sqrt_value(d) / 2.0;
    let rhs = ((l - 1) * n + 2) as f64;
    // ⇔ √d ≥ 2((l−1)n + 2) − l n = (l−2) n + 4
    let holds = sqrt_cmp(d, (l - 2) * n + 4, false);
    ClosedForm {
        lhs,
        rhs,
        holds,
        float_agrees: agrees(lhs, rhs, holds, false),
    }
}

/// At `m = n/2 + √((l−1)² n² − 2 n (l−1)(q−1)) / (2(l−1))`,
/// `(l−1) m − (l−2) n − 1 > n − q + 1`.
///
/// `None` when the discriminant is negative.
pub fn prop5_closed_form(n: u32, q: u32, l: u32) -> Option<ClosedForm> {
    let (n, q, l) = (i128::from(n), i128::from(q), i128::from(l));
    let d = (l - 1) * (l - 1) * n * n - 2 * n * (l - 1) * (q - 1);
    if d < 0 {
        return None;
    }
    let m = n as f64 / 2.0 + sqrt_value(d) / (2 * (l - 1)) as f64;
    let lhs = (l - 1) as f64 * m - ((l - 2) * n + 1) as f64;
    let rhs = (n - q + 1) as f64;
    // ⇔ ½√d > (l−1) n/2 − q + 2  ⇔  √d > (l−1) n − 2q + 4
    let holds = sqrt_cmp(d, (l - 1) * n - 2 * q + 4, true);
    Some(ClosedForm {
        lhs,
        rhs,
        holds,
        float_agrees: agrees(lhs, rhs, holds, true),
    })
}
