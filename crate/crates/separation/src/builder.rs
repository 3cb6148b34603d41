use crate::Error;

/// Systems whose separation constants this crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// Two-dimensional hydrogen atom in elliptic coordinates.
    H2Elliptic,
    /// Three-dimensional hydrogen atom in prolate spheroidal coordinates.
    H3Spheroidal,
    /// Charge-dyon system in prolate spheroidal coordinates.
    MicSpheroidal,
    /// Two-dimensional circular oscillator in elliptic coordinates.
    Osc2Elliptic,
    /// Four-dimensional oscillator in Eulerian spheroidal coordinates.
    Osc4Spheroidal,
}

impl SystemKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SystemKind::H2Elliptic => "H2_elliptic",
            SystemKind::H3Spheroidal => "H3_spheroidal",
            SystemKind::MicSpheroidal => "MIC_spheroidal",
            SystemKind::Osc2Elliptic => "OSC2_elliptic",
            SystemKind::Osc4Spheroidal => "OSC4_spheroidal",
        }
    }
}

/// Reflection parity class of the separated solution.
///
/// The planar systems split into decoupled chains under reflection of the
/// coordinate transverse to the focal axis.  `Plus` collects the states that
/// are even under that reflection (cosine-type angular factors), `Minus` the
/// odd ones (sine-type).  The three-dimensional systems have no such split
/// and use `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    None,
    Plus,
    Minus,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::None => "none",
            Parity::Plus => "plus",
            Parity::Minus => "minus",
        }
    }
}

/// Which coordinate side the tridiagonal chain acts on.
///
/// `Rotational` is the polar / spherical / Eulerian chain that diagonalises
/// the angular momentum part at `R = 0`; `Parabolic` is the parabolic or
/// Cartesian chain that diagonalises the linear-in-`R` part at large `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Rotational,
    Parabolic,
}

/// A symmetric tridiagonal eigenproblem for a separation constant.
///
/// `diag` holds the `dim` diagonal entries, `offdiag` the `dim - 1`
/// couplings.  `label_map[i]` names the basis state carried by component `i`
/// of an eigenvector.  `fold_note` records how reflection-paired components
/// were folded into the stored chain, so that eigenvector components can be
/// unfolded into signed coefficients over the full basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSystem {
    pub kind: SystemKind,
    pub side: Side,
    pub n: u32,
    pub m: i32,
    pub s: i32,
    pub parity: Parity,
    pub r: f64,
    pub dim: usize,
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub label_map: Vec<String>,
    pub fold_note: String,
}

impl TridiagonalSystem {
    /// Infinity norm of the matrix.
    pub fn norm_inf(&self) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.dim {
            let mut row = self.diag[i].abs();
            if i > 0 {
                row += self.offdiag[i - 1].abs();
            }
            if i + 1 < self.dim {
                row += self.offdiag[i].abs();
            }
            best = best.max(row);
        }
        best
    }

    /// Apply the matrix to a vector.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![0.0; self.dim];
        for i in 0..self.dim {
            let mut acc = self.diag[i] * v[i];
            if i > 0 {
                acc += self.offdiag[i - 1] * v[i - 1];
            }
            if i + 1 < self.dim {
                acc += self.offdiag[i] * v[i + 1];
            }
            out[i] = acc;
        }
        out
    }
}

fn check_common(n: u32, r: f64) -> Result<(), Error> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::Domain(format!(
            "inter-center distance must be finite and non-negative, got {r}"
        )));
    }
    if n > 120 {
        return Err(Error::Domain(format!(
            "principal quantum number {n} too large for dense construction"
        )));
    }
    Ok(())
}

/// Build the rotational-side chain for `(system, n, m, s, parity, R)`.
///
/// Eigenvalues of the returned matrix are the separation constants with the
/// sign convention that at `R = 0` they reduce to minus the squared angular
/// momentum eigenvalue of the chain label (for example `-l(l+1)` for the
/// spheroidal systems, `-m^2` for the elliptic ones).
pub fn build_system(
    kind: SystemKind,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    r: f64,
) -> Result<TridiagonalSystem, Error> {
    build_side(kind, Side::Rotational, n, m, s, parity, r)
}

/// Build the chain on the opposite (parabolic or Cartesian) coordinate side.
///
/// The eigenvalue set is identical to the rotational side; the eigenvectors
/// give the expansion of the two-center eigenfunctions over the parabolic or
/// Cartesian basis instead.
pub fn build_system_dual(
    kind: SystemKind,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    r: f64,
) -> Result<TridiagonalSystem, Error> {
    build_side(kind, Side::Parabolic, n, m, s, parity, r)
}

pub(crate) fn build_side(
    kind: SystemKind,
    side: Side,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    r: f64,
) -> Result<TridiagonalSystem, Error> {
    check_common(n, r)?;
    match kind {
        SystemKind::H2Elliptic => build_h2(side, n, m, s, parity, r),
        SystemKind::H3Spheroidal => build_spheroidal(kind, side, n, m, s, parity, r),
        SystemKind::MicSpheroidal => build_spheroidal(kind, side, n, m, s, parity, r),
        SystemKind::Osc2Elliptic => build_osc2(side, n, m, s, parity, r),
        SystemKind::Osc4Spheroidal => build_osc4(side, n, m, s, parity, r),
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn build_h2(
    side: Side,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    r: f64,
) -> Result<TridiagonalSystem, Error> {
    require(m == 0 && s == 0, || {
        "planar hydrogen chains take m = 0 and s = 0".into()
    })?;
    require(parity != Parity::None, || {
        "planar hydrogen requires a reflection parity class".into()
    })?;
    require(parity == Parity::Plus || n >= 1, || {
        "the odd class is empty for n = 0".into()
    })?;
    let nf = f64::from(n);
    let omega = 2.0 / (2.0 * nf + 1.0);
    match side {
        Side::Rotational => {
            let (m_lo, dim) = match parity {
                Parity::Plus => (0u32, n as usize + 1),
                Parity::Minus => (1u32, n as usize),
                Parity::None => unreachable!(),
            };
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim.saturating_sub(1));
            let mut labels = Vec::with_capacity(dim);
            for i in 0..dim {
                let mq = m_lo + i as u32;
                let mf = f64::from(mq);
                diag.push(-mf * mf);
                let tag = if parity == Parity::Plus { "cos" } else { "sin" };
                labels.push(format!("{tag} m={mq}"));
                if i + 1 < dim {
                    let c = if mq == 0 {
                        0.5 * omega * r * (2.0 * nf * (nf + 1.0)).sqrt()
                    } else {
                        0.5 * omega * r * ((nf - mf) * (nf + mf + 1.0)).sqrt()
                    };
                    off.push(c);
                }
            }
            let fold_note = match parity {
                Parity::Plus => "even class: component m=0 stores W_0, components m>=1 store \
                                 sqrt(2)*W_m with W_{-m} = W_m; the m=0 coupling carries the \
                                 sqrt(2) fold weight"
                    .to_string(),
                _ => "odd class: components m>=1 store sqrt(2)*W_m with W_{-m} = -W_m".to_string(),
            };
            Ok(TridiagonalSystem {
                kind: SystemKind::H2Elliptic,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note,
            })
        }
        Side::Parabolic => {
            let p_lo: i64 = match parity {
                Parity::Plus => -i64::from(n),
                Parity::Minus => -i64::from(n) + 1,
                Parity::None => unreachable!(),
            };
            let dim = match parity {
                Parity::Plus => n as usize + 1,
                _ => n as usize,
            };
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim.saturating_sub(1));
            let mut labels = Vec::with_capacity(dim);
            for i in 0..dim {
                let p = p_lo + 2 * i as i64;
                let pf = p as f64;
                diag.push(-omega * pf * r - 0.5 * (nf * nf + nf - pf * pf));
                labels.push(format!("p={p}"));
                if i + 1 < dim {
                    let c = 0.25
                        * ((nf - pf)
                            * (nf - pf - 1.0)
                            * (nf + pf + 1.0)
                            * (nf + pf + 2.0))
                            .sqrt();
                    off.push(c);
                }
            }
            Ok(TridiagonalSystem {
                kind: SystemKind::H2Elliptic,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note: "parabolic chain p = n1 - n2 steps by 2 inside one parity class; \
                            no fold weights"
                    .to_string(),
            })
        }
    }
}

fn build_spheroidal(
    kind: SystemKind,
    side: Side,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    r: f64,
) -> Result<TridiagonalSystem, Error> {
    require(parity == Parity::None, || {
        "spheroidal chains have no reflection parity classes".into()
    })?;
    if kind == SystemKind::H3Spheroidal {
        require(s == 0, || "hydrogen has no dyon charge: s must be 0".into())?;
    }
    require(n >= 1, || "principal quantum number must be at least 1".into())?;
    let am1 = (m + s).unsigned_abs();
    let am2 = (m - s).unsigned_abs();
    let m_plus = (am1 + am2) / 2;
    let m_minus = (am1 as i64 - am2 as i64) / 2;
    require(m_plus < n, || {
        format!("empty chain: need max(|m+s|,|m-s|)/2 + ... <= n-1, got m={m}, s={s}, n={n}")
    })?;
    let dim = (n - m_plus) as usize;
    let nf = f64::from(n);
    let mpf = f64::from(m_plus);
    let mmf = m_minus as f64;
    match side {
        Side::Rotational => {
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim - 1);
            let mut labels = Vec::with_capacity(dim);
            for i in 0..dim {
                let j = mpf + i as f64;
                let mut d = -j * (j + 1.0);
                if m_plus != 0 && m_minus != 0 {
                    d -= r * mpf * mmf / (j * (j + 1.0));
                }
                diag.push(d);
                let letter = if kind == SystemKind::H3Spheroidal { "l" } else { "j" };
                labels.push(format!("{letter}={}", m_plus + i as u32));
                if i + 1 < dim {
                    let jp = j + 1.0;
                    let num = (jp * jp - mpf * mpf)
                        * (jp * jp - mmf * mmf)
                        * (nf * nf - jp * jp);
                    let den = jp * jp * (2.0 * j + 1.0) * (2.0 * j + 3.0);
                    off.push(r / nf * (num / den).sqrt());
                }
            }
            Ok(TridiagonalSystem {
                kind,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note: "no fold; chain label is the orbital quantum number".to_string(),
            })
        }
        Side::Parabolic => {
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim - 1);
            let mut labels = Vec::with_capacity(dim);
            let am1f = f64::from(am1);
            let am2f = f64::from(am2);
            for i in 0..dim {
                let k = i as f64;
                let n2 = (dim - 1 - i) as f64;
                let a1 = 0.5 * (k + n2 + am2f);
                let al1 = 0.5 * (n2 - k + am2f);
                let a2 = 0.5 * (k + n2 + am1f);
                let al2 = 0.5 * (k - n2 + am1f);
                let dcon = a1 * (a1 + 1.0) + a2 * (a2 + 1.0) + 2.0 * al1 * al2;
                diag.push(-(dcon + r / nf * (k - n2 + mmf)));
                labels.push(format!("n1={} n2={}", i, dim - 1 - i));
                if i + 1 < dim {
                    let c = ((k + 1.0) * n2 * (n2 + am2f) * (k + am1f + 1.0)).sqrt();
                    off.push(c);
                }
            }
            Ok(TridiagonalSystem {
                kind,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note: "no fold; chain label is the first parabolic quantum number"
                    .to_string(),
            })
        }
    }
}

/// Cosine/sine structure of a planar oscillator class in the Cartesian limit.
fn osc2_class(n: u32, parity: Parity) -> Result<&'static str, Error> {
    match (n % 2, parity) {
        (0, Parity::Plus) => Ok("cc"),
        (1, Parity::Plus) => Ok("sc"),
        (1, Parity::Minus) => Ok("cs"),
        (0, Parity::Minus) => Ok("ss"),
        _ => Err(Error::Domain(
            "planar oscillator requires a reflection parity class".into(),
        )),
    }
}

fn build_osc2(
    side: Side,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    r: f64,
) -> Result<TridiagonalSystem, Error> {
    require(m == 0 && s == 0, || {
        "planar oscillator chains take m = 0 and s = 0".into()
    })?;
    require(parity != Parity::None, || {
        "planar oscillator requires a reflection parity class".into()
    })?;
    let class = osc2_class(n, parity)?;
    let dim = match class {
        "cc" => n as usize / 2 + 1,
        "sc" | "cs" => (n as usize + 1) / 2,
        _ => n as usize / 2,
    };
    require(dim >= 1, || format!("empty class for N={n}"))?;
    let nf = f64::from(n);
    match side {
        Side::Rotational => {
            let m_lo: u32 = match class {
                "cc" => 0,
                "sc" | "cs" => 1,
                _ => 2,
            };
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim - 1);
            let mut labels = Vec::with_capacity(dim);
            for i in 0..dim {
                let mq = m_lo + 2 * i as u32;
                let mf = f64::from(mq);
                let mut d = -mf * mf;
                if mq == 1 {
                    let shift = r * r / 8.0 * (nf + 1.0);
                    d += if class == "sc" { -shift } else { shift };
                }
                diag.push(d);
                let tag = if parity == Parity::Plus { "cos" } else { "sin" };
                labels.push(format!("{tag} m={mq}"));
                if i + 1 < dim {
                    let mut c = -r * r / 8.0 * ((nf + mf + 2.0) * (nf - mf)).sqrt();
                    if mq == 0 {
                        c *= std::f64::consts::SQRT_2;
                    }
                    off.push(c);
                }
            }
            let fold_note = match parity {
                Parity::Plus if class == "cc" => {
                    "even class: component m=0 stores W_0, components m>=2 store sqrt(2)*W_m \
                     with W_{-m} = W_m; the m=0 coupling carries the sqrt(2) fold weight"
                        .to_string()
                }
                Parity::Plus => "components store sqrt(2)*W_m with W_{-m} = W_m; the folded \
                                 m=1 coupling appears as a diagonal shift"
                    .to_string(),
                _ => "components store sqrt(2)*W_m with W_{-m} = -W_m; for odd N the folded \
                      m=1 coupling appears as a diagonal shift"
                    .to_string(),
            };
            Ok(TridiagonalSystem {
                kind: SystemKind::Osc2Elliptic,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note,
            })
        }
        Side::Parabolic => {
            let nn = match class {
                "cc" => f64::from(n / 2),
                "sc" | "cs" => f64::from((n - 1) / 2),
                _ => f64::from(n / 2 - 1),
            };
            let r2 = r * r;
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim - 1);
            let mut labels = Vec::with_capacity(dim);
            for i in 0..dim {
                let k = i as f64;
                let (d, nx, ny) = match class {
                    "cc" => (
                        -(8.0 * k * (nn - k) + 2.0 * nn + 0.5 * r2 * (2.0 * k - nn)),
                        2 * i,
                        2 * (nn as usize - i),
                    ),
                    "sc" => (
                        -(4.0 * (nn - k) * (2.0 * k + 1.0)
                            + 2.0 * nn
                            + 1.0
                            + 0.25 * r2 * (4.0 * k - 2.0 * nn + 1.0)),
                        2 * i + 1,
                        2 * (nn as usize - i),
                    ),
                    "cs" => (
                        -(4.0 * k * (2.0 * nn - 2.0 * k + 1.0)
                            + 2.0 * nn
                            + 1.0
                            + 0.25 * r2 * (4.0 * k - 2.0 * nn - 1.0)),
                        2 * i,
                        2 * (nn as usize - i) + 1,
                    ),
                    _ => (
                        -(2.0 * (2.0 * k + 1.0) * (2.0 * nn - 2.0 * k + 1.0)
                            + 2.0 * nn
                            + 2.0
                            + 0.5 * r2 * (2.0 * k - nn)),
                        2 * i + 1,
                        2 * (nn as usize - i) + 1,
                    ),
                };
                diag.push(d);
                labels.push(format!("nx={nx} ny={ny}"));
                if i + 1 < dim {
                    let c = match class {
                        "cc" => {
                            ((k + 1.0)
                                * (2.0 * k + 1.0)
                                * (nn - k)
                                * (2.0 * nn - 2.0 * k - 1.0))
                                .sqrt()
                        }
                        "sc" => {
                            ((k + 1.0)
                                * (2.0 * k + 3.0)
                                * (nn - k)
                                * (2.0 * nn - 2.0 * k - 1.0))
                                .sqrt()
                        }
                        "cs" => {
                            ((k + 1.0)
                                * (2.0 * k + 1.0)
                                * (nn - k)
                                * (2.0 * nn - 2.0 * k + 1.0))
                                .sqrt()
                        }
                        _ => {
                            ((k + 1.0)
                                * (2.0 * k + 3.0)
                                * (nn - k)
                                * (2.0 * nn - 2.0 * k + 1.0))
                                .sqrt()
                        }
                    };
                    off.push(-2.0 * c);
                }
            }
            Ok(TridiagonalSystem {
                kind: SystemKind::Osc2Elliptic,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note: "Cartesian chain (nx, ny) with fixed nx + ny = N and fixed parities; \
                            no fold weights"
                    .to_string(),
            })
        }
    }
}

fn build_osc4(
    side: Side,
    n: u32,
    m: i32,
    s: i32,
    parity: Parity,
    r: f64,
) -> Result<TridiagonalSystem, Error> {
    require(parity == Parity::None, || {
        "the Eulerian spheroidal chains have no reflection parity classes".into()
    })?;
    require(n % 2 == 0, || {
        format!("integer azimuthal pairs need an even principal level, got N={n}")
    })?;
    let am1 = (m + s).unsigned_abs();
    let am2 = (m - s).unsigned_abs();
    let m_plus = (am1 + am2) / 2;
    let m_minus = (am1 as i64 - am2 as i64) / 2;
    require(m_plus <= n / 2, || {
        format!("empty chain: need (|M+M'|+|M-M'|)/2 <= N/2, got M={m}, M'={s}, N={n}")
    })?;
    let dim = (n / 2 - m_plus) as usize + 1;
    let nf = f64::from(n);
    let mpf = f64::from(m_plus);
    let mmf = m_minus as f64;
    match side {
        Side::Rotational => {
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim.saturating_sub(1));
            let mut labels = Vec::with_capacity(dim);
            for i in 0..dim {
                let l = mpf + i as f64;
                let mut d = l * (l + 1.0);
                if m_plus != 0 && m_minus != 0 {
                    d += 0.25 * r * mpf * mmf * (nf + 2.0) / (l * (l + 1.0));
                }
                diag.push(-d);
                labels.push(format!("L={}", m_plus + i as u32));
                if i + 1 < dim {
                    let lp = l + 1.0;
                    let num = ((nf + 2.0) * (nf + 2.0) - 4.0 * lp * lp)
                        * (lp * lp - mpf * mpf)
                        * (lp * lp - mmf * mmf);
                    let den = lp * lp * (2.0 * lp - 1.0) * (2.0 * lp + 1.0);
                    off.push(0.25 * r * (num / den).sqrt());
                }
            }
            Ok(TridiagonalSystem {
                kind: SystemKind::Osc4Spheroidal,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note: "no fold; chain label is the global angular momentum".to_string(),
            })
        }
        Side::Parabolic => {
            let am1f = f64::from(am1);
            let am2f = f64::from(am2);
            let mut diag = Vec::with_capacity(dim);
            let mut off = Vec::with_capacity(dim.saturating_sub(1));
            let mut labels = Vec::with_capacity(dim);
            for i in 0..dim {
                let k = i as f64;
                let n2 = (dim - 1 - i) as f64;
                let a1 = 0.5 * (k + n2 + am2f);
                let al1 = 0.5 * (n2 - k + am2f);
                let a2 = 0.5 * (k + n2 + am1f);
                let al2 = 0.5 * (k - n2 + am1f);
                let dcon = a1 * (a1 + 1.0) + a2 * (a2 + 1.0) + 2.0 * al1 * al2;
                let pk = 2.0 * k - 2.0 * n2 + am1f - am2f;
                diag.push(-(dcon + 0.25 * r * pk));
                labels.push(format!("nr1={} nr2={}", i, dim - 1 - i));
                if i + 1 < dim {
                    let c = ((k + 1.0) * n2 * (n2 + am2f) * (k + am1f + 1.0)).sqrt();
                    off.push(c);
                }
            }
            Ok(TridiagonalSystem {
                kind: SystemKind::Osc4Spheroidal,
                side,
                n,
                m,
                s,
                parity,
                r,
                dim,
                diag,
                offdiag: off,
                label_map: labels,
                fold_note: "double polar chain (nr1, nr2) at fixed N; no fold weights"
                    .to_string(),
            })
        }
    }
}
