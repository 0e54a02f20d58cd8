//! The named identities and the polynomials `U`, `V`, `W` they are built from.

use std::fmt;
use std::str::FromStr;

use super::{join, meet, var, Identity, Term};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    S,
    U,
    B,
    L2,
    D2D,
    H(usize),
    Hmn(usize, usize),
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityKind::S => write!(f, "S"),
            IdentityKind::U => write!(f, "U"),
            IdentityKind::B => write!(f, "B"),
            IdentityKind::L2 => write!(f, "L2"),
            IdentityKind::D2D => write!(f, "D2D"),
            IdentityKind::H(n) => write!(f, "H:{n}"),
            IdentityKind::Hmn(m, n) => write!(f, "Hmn:{m},{n}"),
        }
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadArity(format!("bad number `{t}` in `{s}`")))
        };
        match s {
            "S" => Ok(IdentityKind::S),
            "U" => Ok(IdentityKind::U),
            "B" => Ok(IdentityKind::B),
            "L2" => Ok(IdentityKind::L2),
            "D2D" => Ok(IdentityKind::D2D),
            _ => {
                if let Some(rest) = s.strip_prefix("Hmn:") {
                    let (m, n) = rest
                        .split_once(',')
                        .ok_or_else(|| Error::BadArity(format!("expected `Hmn:m,n`, got `{s}`")))?;
                    Ok(IdentityKind::Hmn(num(m)?, num(n)?))
                } else if let Some(rest) = s.strip_prefix("H:") {
                    Ok(IdentityKind::H(num(rest)?))
                } else {
                    Err(Error::BadArity(format!("unknown identity `{s}`")))
                }
            }
        }
    }
}

/// `U(i,n)` over `x[0..=n]`, `xp[1..=n]` (`xp[0]` is ignored).
pub fn polynomial_u(i: usize, n: usize, x: &[Term], xp: &[Term]) -> Term {
    if i == n {
        x[n].clone()
    } else {
        meet([
            x[i].clone(),
            join([polynomial_u(i + 1, n, x, xp), xp[i + 1].clone()]),
        ])
    }
}

/// `V(i,j,n)` for `j <= i <= n-1`.
pub fn polynomial_v(i: usize, j: usize, n: usize, x: &[Term], xp: &[Term]) -> Term {
    if j == i {
        join([
            meet([x[i].clone(), polynomial_u(i + 1, n, x, xp)]),
            meet([x[i].clone(), xp[i + 1].clone()]),
        ])
    } else {
        meet([
            x[j].clone(),
            join([polynomial_v(i, j + 1, n, x, xp), xp[j + 1].clone()]),
        ])
    }
}

/// `W(i,j,n)` for `j <= i <= n-2`.
pub fn polynomial_w(i: usize, j: usize, n: usize, x: &[Term], xp: &[Term]) -> Term {
    if j == i {
        meet([
            x[i].clone(),
            join([xp[i + 1].clone(), xp[i + 2].clone()]),
            join([
                meet([
                    polynomial_u(i + 1, n, x, xp),
                    join([x[i].clone(), xp[i + 2].clone()]),
                ]),
                xp[i + 1].clone(),
            ]),
        ])
    } else {
        meet([
            x[j].clone(),
            join([polynomial_w(i, j + 1, n, x, xp), xp[j + 1].clone()]),
        ])
    }
}

/// The joinands `V(i,0,n)` for `i < n` and `W(i,0,n)` for `i < n-1`.
fn v_and_w(n: usize, x: &[Term], xp: &[Term]) -> Vec<Term> {
    let mut out: Vec<Term> = (0..n).map(|i| polynomial_v(i, 0, n, x, xp)).collect();
    out.extend((0..n.saturating_sub(1)).map(|i| polynomial_w(i, 0, n, x, xp)));
    out
}

fn names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn vars_of(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn build_identity(kind: IdentityKind) -> Result<Identity> {
    let v = var;
    let (name, vars, lhs, rhs, guard) = match kind {
        IdentityKind::S => {
            let b_prime = meet([v("b"), join([v("b0"), v("b1")])]);
            let lhs = meet([v("a"), join([b_prime.clone(), v("c")])]);
            let mut parts = vec![meet([v("a"), b_prime.clone()])];
            for bi in ["b0", "b1"] {
                parts.push(meet([
                    v("a"),
                    join([v(bi), v("c")]),
                    join([meet([b_prime.clone(), join([v("a"), v(bi)])]), v("c")]),
                ]));
            }
            (
                "S".to_string(),
                vars_of(&["a", "b", "b0", "b1", "c"]),
                lhs,
                join(parts),
                "a",
            )
        }
        IdentityKind::U => {
            let lhs = meet([
                v("x"),
                join([v("x0"), v("x1")]),
                join([v("x1"), v("x2")]),
                join([v("x0"), v("x2")]),
            ]);
            let rhs = join([
                meet([v("x"), v("x0"), join([v("x1"), v("x2")])]),
                meet([v("x"), v("x1"), join([v("x0"), v("x2")])]),
                meet([v("x"), v("x2"), join([v("x0"), v("x1")])]),
            ]);
            (
                "U".to_string(),
                vars_of(&["x", "x0", "x1", "x2"]),
                lhs,
                rhs,
                "x",
            )
        }
        IdentityKind::B => {
            let a = join([v("a0"), v("a1")]);
            let b = join([v("b0"), v("b1")]);
            let lhs = meet([v("x"), a.clone(), b.clone()]);
            let mut parts = Vec::new();
            for i in 0..2 {
                parts.push(join([
                    meet([v("x"), v(&format!("a{i}")), b.clone()]),
                    meet([v("x"), v(&format!("b{i}")), a.clone()]),
                ]));
            }
            for i in 0..2 {
                parts.push(meet([
                    v("x"),
                    a.clone(),
                    b.clone(),
                    join([v("a0"), v(&format!("b{i}"))]),
                    join([v("a1"), v(&format!("b{}", 1 - i))]),
                ]));
            }
            (
                "B".to_string(),
                vars_of(&["x", "a0", "a1", "b0", "b1"]),
                lhs,
                join(parts),
                "x",
            )
        }
        IdentityKind::L2 => {
            let cc = join([v("c"), v("c'")]);
            let lhs = meet([v("a"), join([meet([v("b"), cc.clone()]), v("b'")])]);
            let rhs = join([
                meet([v("a"), v("b"), cc]),
                meet([v("a"), join([meet([v("b"), v("c")]), v("b'")])]),
                meet([v("a"), join([meet([v("b"), v("c'")]), v("b'")])]),
            ]);
            (
                "L2".to_string(),
                vars_of(&["a", "b", "b'", "c", "c'"]),
                lhs,
                rhs,
                "a",
            )
        }
        IdentityKind::D2D => {
            let lhs = meet([v("a"), join([v("x"), v("y"), v("z")])]);
            let rhs = join([
                meet([v("a"), join([v("x"), v("y")])]),
                meet([v("a"), join([v("x"), v("z")])]),
                meet([v("a"), join([v("y"), v("z")])]),
            ]);
            (
                "D2D".to_string(),
                vars_of(&["a", "x", "y", "z"]),
                lhs,
                rhs,
                "a",
            )
        }
        IdentityKind::H(n) => {
            if n == 0 {
                return Err(Error::BadArity("H(n) needs n >= 1".into()));
            }
            let x: Vec<Term> = names("x", 0..=n).iter().map(|s| v(s)).collect();
            let mut xp = vec![v("x'0")];
            xp.extend(names("x'", 1..=n).iter().map(|s| v(s)));
            let lhs = polynomial_u(0, n, &x, &xp);
            let rhs = join(v_and_w(n, &x, &xp));
            let mut vars = names("x", 0..=n);
            vars.extend(names("x'", 1..=n));
            (format!("H({n})"), vars, lhs, rhs, "x0")
        }
        IdentityKind::Hmn(m, n) => {
            if m == 0 || n == 0 {
                return Err(Error::BadArity("H(m,n) needs m, n >= 1".into()));
            }
            let mut x = vec![v("t")];
            x.extend(names("x", 1..=m).iter().map(|s| v(s)));
            let mut xp = vec![v("x'0")];
            xp.extend(names("x'", 1..=m).iter().map(|s| v(s)));
            let mut y = vec![v("t")];
            y.extend(names("y", 1..=n).iter().map(|s| v(s)));
            let mut yp = vec![v("y'0")];
            yp.extend(names("y'", 1..=n).iter().map(|s| v(s)));
            let um = polynomial_u(0, m, &x, &xp);
            let un = polynomial_u(0, n, &y, &yp);
            let lhs = meet([um.clone(), un.clone()]);
            let mut parts = Vec::new();
            parts.extend(
                v_and_w(m, &x, &xp)
                    .into_iter()
                    .map(|t| meet([t, un.clone()])),
            );
            parts.extend(
                v_and_w(n, &y, &yp)
                    .into_iter()
                    .map(|t| meet([um.clone(), t])),
            );
            parts.push(meet([
                um.clone(),
                un.clone(),
                join([x[1].clone(), yp[1].clone()]),
                join([xp[1].clone(), y[1].clone()]),
            ]));
            let mut vars = vec!["t".to_string()];
            vars.extend(names("x", 1..=m));
            vars.extend(names("x'", 1..=m));
            vars.extend(names("y", 1..=n));
            vars.extend(names("y'", 1..=n));
            (format!("H({m},{n})"), vars, lhs, join(parts), "t")
        }
    };
    let mut id = Identity::new(&name, vars, lhs, rhs)?;
    id.guard = Some(guard.to_string());
    Ok(id)
}
