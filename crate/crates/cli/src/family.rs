//! Family specs accepted on the command line.

use std::fmt;
use std::str::FromStr;

use riordan_core::families;
use riordan_core::{QMatrix, QPair, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    R(i64),
    TildeR(i64),
    RInv(i64),
    Example1,
    AsmClassical,
    Vertex20,
    Catalan,
    Pascal,
    A361654,
}

pub const SPECS: &str = "R:<r>, tildeR:<r>, Rinv:<r>, example1, asm-classical, vertex20, catalan, pascal, A361654";

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("unknown family '{s}' (expected one of {SPECS})");
        if let Some((head, r)) = s.split_once(':') {
            let r: i64 = r.trim().parse().map_err(|_| format!("bad parameter in '{s}': expected an integer"))?;
            return match head {
                "R" => Ok(Family::R(r)),
                "tildeR" => Ok(Family::TildeR(r)),
                "Rinv" => Ok(Family::RInv(r)),
                _ => Err(bad()),
            };
        }
        match s {
            "example1" => Ok(Family::Example1),
            "asm-classical" => Ok(Family::AsmClassical),
            "vertex20" => Ok(Family::Vertex20),
            "catalan" => Ok(Family::Catalan),
            "pascal" => Ok(Family::Pascal),
            "A361654" => Ok(Family::A361654),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::R(r) => write!(f, "R:{r}"),
            Family::TildeR(r) => write!(f, "tildeR:{r}"),
            Family::RInv(r) => write!(f, "Rinv:{r}"),
            Family::Example1 => f.write_str("example1"),
            Family::AsmClassical => f.write_str("asm-classical"),
            Family::Vertex20 => f.write_str("vertex20"),
            Family::Catalan => f.write_str("catalan"),
            Family::Pascal => f.write_str("pascal"),
            Family::A361654 => f.write_str("A361654"),
        }
    }
}

impl Family {
    /// The Riordan pair, for the families that are one.
    pub fn pair(&self, order: usize) -> Option<QPair> {
        Some(match *self {
            Family::R(r) => families::make_r(r, order),
            Family::TildeR(r) => families::make_tilde_r(r, order),
            Family::RInv(r) => families::make_r_inverse_closed(r, order),
            Family::Example1 => families::make_example1(order),
            Family::Catalan => families::catalan_pair(order),
            Family::Pascal => families::pascal(order),
            Family::A361654 => families::make_a361654_embed(order),
            Family::AsmClassical | Family::Vertex20 => return None,
        })
    }

    /// The N×N matrix; `order` is the series truncation for pairs.
    pub fn matrix(&self, n: usize, order: usize) -> riordan_core::Result<QMatrix> {
        match self {
            Family::AsmClassical => Ok(families::classical_asm_matrix::<Rational>(n)),
            Family::Vertex20 => Ok(families::twenty_vertex_matrix::<Rational>(n)),
            _ => self.pair(order).expect("remaining families are pairs").matrix(n),
        }
    }
}
