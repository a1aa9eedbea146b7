//! Closed-form `E_T` for three symmetric biased trees.
//!
//! Each tree carries bias `b` on its leaf edges and a common bias on the
//! internal edges. The optimal `b` is the unique root of a polynomial in a
//! known open interval, and `E_T` is a rational function of `b`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::tree::{BiasedTree, TreeShape};
use crate::error::{Error, Result};

/// Root tolerance for the bisection.
pub const ROOT_TOLERANCE: f64 = 1e-12;

/// Polynomial with coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial(pub Vec<f64>);

impl Polynomial {
    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// Bisection for a root of `f` strictly inside `(lo, hi)`.
///
/// Requires `f(lo)` and `f(hi)` to be nonzero with opposite signs; stops once
/// the bracket is narrower than `tol`. Every step must halve the bracket.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo * f_hi >= 0.0 {
        return Err(Error::Internal(format!(
            "root not bracketed on ({lo}, {hi}); f = ({f_lo}, {f_hi})"
        )));
    }
    let mut width = hi - lo;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        let new_width = hi - lo;
        if !(new_width < width) {
            return Err(Error::Internal("bisection failed to shrink the bracket".into()));
        }
        width = new_width;
    }
    Ok(0.5 * (lo + hi))
}

/// The trees with closed-form `E_T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StandardTree {
    T5,
    T7,
    T9,
}

impl StandardTree {
    pub const ALL: [StandardTree; 3] = [StandardTree::T5, StandardTree::T7, StandardTree::T9];

    pub fn name(self) -> &'static str {
        match self {
            StandardTree::T5 => "T5",
            StandardTree::T7 => "T7",
            StandardTree::T9 => "T9",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(name))
    }

    pub fn edge_count(self) -> usize {
        match self {
            StandardTree::T5 => 5,
            StandardTree::T7 => 7,
            StandardTree::T9 => 9,
        }
    }

    pub fn shape(self) -> TreeShape {
        match self {
            StandardTree::T5 => TreeShape::t5(),
            StandardTree::T7 => TreeShape::t7(),
            StandardTree::T9 => TreeShape::t9(),
        }
    }

    /// Polynomial whose root in [`Self::interval`] is the optimal leaf bias.
    pub fn polynomial(self) -> Polynomial {
        match self {
            // 105b^3 - 90b^2 + 24b - 2
            StandardTree::T5 => Polynomial(vec![-2.0, 24.0, -90.0, 105.0]),
            // 1452b^5 - 3993b^4 + 2765b^3 - 804b^2 + 105b - 5
            StandardTree::T7 => Polynomial(vec![-5.0, 105.0, -804.0, 2765.0, -3993.0, 1452.0]),
            StandardTree::T9 => Polynomial(vec![
                128.0, -4224.0, 56016.0, -389232.0, 1501416.0, -3013200.0, 2372895.0,
            ]),
        }
    }

    /// Open interval containing exactly one root of the polynomial.
    pub fn interval(self) -> (f64, f64) {
        match self {
            StandardTree::T5 => (0.0, 0.25),
            StandardTree::T7 => (0.0, 0.2),
            StandardTree::T9 => (0.0, 1.0 / 6.0),
        }
    }

    /// `E_T` as a function of the leaf bias `b`.
    pub fn value_at(self, b: f64) -> f64 {
        match self {
            StandardTree::T5 => {
                4.0 * (1.0 - 3.0 * b) * (5.0 * b * b - 5.0 * b + 1.0) / ((7.0 * b - 2.0) * (7.0 * b - 2.0))
            }
            StandardTree::T7 => {
                let num = Polynomial(vec![5.0, -55.0, 245.0, -601.0, 726.0]).eval(b);
                num / (5.0 * (1.0 - b) * (4.0 * b - 1.0) * (4.0 * b - 1.0))
            }
            StandardTree::T9 => {
                let num = Polynomial(vec![-128.0, 2448.0, -17856.0, 60372.0, -88938.0, 37665.0]).eval(b);
                let den = Polynomial(vec![32.0, -600.0, 4212.0, -13122.0, 15309.0]).eval(b);
                -2.0 * num / (9.0 * den)
            }
        }
    }

    /// Bias vector for leaf bias `b`, in the shape's edge order.
    pub fn biases(self, b: f64) -> Vec<f64> {
        let shape = self.shape();
        let leaf_edges = (0..shape.edge_count()).filter(|&i| shape.is_leaf_edge(i)).count();
        let internal_edges = shape.edge_count() - leaf_edges;
        let inner = (1.0 - leaf_edges as f64 * b) / internal_edges as f64;
        (0..shape.edge_count())
            .map(|i| if shape.is_leaf_edge(i) { b } else { inner })
            .collect()
    }

    /// The biased tree at leaf bias `b`.
    pub fn tree(self, b: f64) -> Result<BiasedTree> {
        BiasedTree::new(self.shape(), self.biases(b))
    }
}

/// Optimal leaf bias and the resulting constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    pub tree: StandardTree,
    pub b_star: f64,
    pub value: f64,
}

impl ClosedForm {
    pub fn biased_tree(&self) -> BiasedTree {
        self.tree.tree(self.b_star).expect("closed-form biases are valid")
    }
}

pub fn e_t_closed_form(tree: StandardTree) -> Result<ClosedForm> {
    let poly = tree.polynomial();
    let (lo, hi) = tree.interval();
    let b_star = bisect(|b| poly.eval(b), lo, hi, ROOT_TOLERANCE)?;
    Ok(ClosedForm {
        tree,
        b_star,
        value: tree.value_at(b_star),
    })
}

/// `E_T` of the 3-edge star with uniform biases: a third of the expected sum
/// of the two largest of three unit exponentials, `(3 - 1/3) / 3`.
pub const STAR_UNIFORM_E_T: f64 = 8.0 / 9.0;
