//! The eight reduction rules, leaf-block classification, rule selection and
//! the reduction loop that produces the marked set `S`.

mod engine;
mod residual;
mod rules;
mod select;

pub use engine::{reduce, Mode, ReductionOutcome};
pub(crate) use residual::Residual;
pub use rules::{apply_rule, check_rule};
pub use select::{classify_leaf_block, select_rule, LeafProperty};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{decompose, GraphError, Vertex, Weight, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("rule {0} does not apply to this graph")]
    PreconditionViolated(u8),
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex set is not a leaf block with the given cut vertex")]
    NotALeafBlock,
    #[error("no rule found for the leaf block {0:?}")]
    SelectionFailed(Vec<Vertex>),
}

/// One applicable reduction, with the witnesses it was found with.
///
/// For Rules 2–5, `rest` is the leaf block minus its cut vertex `v`. For
/// Rule 8, `component` is the clique side of `G − {x, y}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum RuleInstance {
    #[serde(rename = "1")]
    Rule1 { x: Vertex, y: Vertex, z: Vertex },
    #[serde(rename = "2")]
    Rule2 { rest: Vec<Vertex>, v: Vertex },
    #[serde(rename = "3")]
    Rule3 { rest: Vec<Vertex>, v: Vertex },
    #[serde(rename = "4")]
    Rule4 { rest: Vec<Vertex>, v: Vertex },
    #[serde(rename = "5")]
    Rule5 {
        rest: Vec<Vertex>,
        v: Vertex,
        x: Vertex,
        y: Vertex,
        c: Weight,
    },
    #[serde(rename = "6")]
    Rule6 { a: Vertex, b: Vertex, c: Vertex },
    #[serde(rename = "7")]
    Rule7 {
        v: Vertex,
        a: Vertex,
        b: Vertex,
        c: Vertex,
    },
    #[serde(rename = "8")]
    Rule8 {
        component: Vec<Vertex>,
        x: Vertex,
        y: Vertex,
        v: Vertex,
        c: Weight,
    },
}

impl RuleInstance {
    pub fn rule_id(&self) -> u8 {
        match self {
            RuleInstance::Rule1 { .. } => 1,
            RuleInstance::Rule2 { .. } => 2,
            RuleInstance::Rule3 { .. } => 3,
            RuleInstance::Rule4 { .. } => 4,
            RuleInstance::Rule5 { .. } => 5,
            RuleInstance::Rule6 { .. } => 6,
            RuleInstance::Rule7 { .. } => 7,
            RuleInstance::Rule8 { .. } => 8,
        }
    }

    /// All vertex ids mentioned by the witnesses.
    pub fn vertices(&self) -> Vec<Vertex> {
        use RuleInstance::*;
        match self {
            Rule1 { x, y, z } => vec![*x, *y, *z],
            Rule2 { rest, v } | Rule3 { rest, v } | Rule4 { rest, v } => {
                let mut all = rest.clone();
                all.push(*v);
                all
            }
            Rule5 { rest, v, x, y, .. } => {
                let mut all = rest.clone();
                all.extend([*v, *x, *y]);
                all
            }
            Rule6 { a, b, c } => vec![*a, *b, *c],
            Rule7 { v, a, b, c } => vec![*v, *a, *b, *c],
            Rule8 {
                component, x, y, v, ..
            } => {
                let mut all = component.clone();
                all.extend([*x, *y, *v]);
                all
            }
        }
    }

    /// Vertices deleted by the rule.
    pub fn removed(&self) -> Vec<Vertex> {
        use RuleInstance::*;
        let mut r = match self {
            Rule1 { x, y, .. } => vec![*x, *y],
            Rule2 { rest, .. } | Rule3 { rest, .. } | Rule4 { rest, .. } | Rule5 { rest, .. } => {
                rest.clone()
            }
            Rule6 { a, b, c } | Rule7 { a, b, c, .. } => vec![*a, *b, *c],
            Rule8 {
                component, x, y, ..
            } => {
                let mut all = component.clone();
                all.extend([*x, *y]);
                all
            }
        };
        r.sort_unstable();
        r
    }

    /// Vertices added to `S`; at most three, and none for Rule 2.
    pub fn marked(&self) -> Vec<Vertex> {
        use RuleInstance::*;
        let mut m = match self {
            Rule1 { x, y, .. } => vec![*x, *y],
            Rule2 { .. } => vec![],
            Rule3 { v, .. } | Rule4 { v, .. } => vec![*v],
            Rule5 { v, x, y, .. } => vec![*v, *x, *y],
            Rule6 { a, b, c } | Rule7 { a, b, c, .. } => vec![*a, *b, *c],
            Rule8 { x, y, .. } => vec![*x, *y],
        };
        m.sort_unstable();
        m
    }

    /// Excess consumed by the rule, in quarters.
    pub fn k_delta_quarters(&self) -> i64 {
        match self {
            RuleInstance::Rule2 { .. } => 0,
            _ => 1,
        }
    }

    /// Applies `f` to every vertex id.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> RuleInstance {
        use RuleInstance::*;
        let set = |s: &Vec<Vertex>| s.iter().map(|&u| f(u)).collect::<Vec<_>>();
        match self {
            Rule1 { x, y, z } => Rule1 {
                x: f(*x),
                y: f(*y),
                z: f(*z),
            },
            Rule2 { rest, v } => Rule2 {
                rest: set(rest),
                v: f(*v),
            },
            Rule3 { rest, v } => Rule3 {
                rest: set(rest),
                v: f(*v),
            },
            Rule4 { rest, v } => Rule4 {
                rest: set(rest),
                v: f(*v),
            },
            Rule5 { rest, v, x, y, c } => Rule5 {
                rest: set(rest),
                v: f(*v),
                x: f(*x),
                y: f(*y),
                c: *c,
            },
            Rule6 { a, b, c } => Rule6 {
                a: f(*a),
                b: f(*b),
                c: f(*c),
            },
            Rule7 { v, a, b, c } => Rule7 {
                v: f(*v),
                a: f(*a),
                b: f(*b),
                c: f(*c),
            },
            Rule8 {
                component,
                x,
                y,
                v,
                c,
            } => Rule8 {
                component: set(component),
                x: f(*x),
                y: f(*y),
                v: f(*v),
                c: *c,
            },
        }
    }
}

/// A witnessed rule application and what it removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub instance: RuleInstance,
    pub removed: Vec<Vertex>,
    pub marked: Vec<Vertex>,
    pub k_delta_quarters: i64,
    /// Every edge with at least one removed endpoint, as `(u, v, w)` with `u < v`,
    /// taken from the graph just before the step.
    pub payload: Vec<(Vertex, Vertex, Weight)>,
}

impl ReductionStep {
    pub fn rule_id(&self) -> u8 {
        self.instance.rule_id()
    }

    /// `w(G) − w(G')` for this step.
    pub fn removed_weight(&self) -> Weight {
        self.payload.iter().map(|&(_, _, w)| w).sum()
    }
}

/// True if every block of `g` is a clique whose edges share one weight.
pub fn verify_ucf(g: &WeightedGraph) -> bool {
    let (blocks, _) = decompose(g, 0..g.n());
    blocks.iter().all(|b| b.edges == 0 || b.is_uniform_clique())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ucf_examples() {
        let tree = WeightedGraph::from_edges(4, &[(0, 1, 2), (1, 2, 2), (1, 3, 2)]).unwrap();
        assert!(verify_ucf(&tree));
        let tri = WeightedGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        assert!(!verify_ucf(&tri));
        let bowtie = WeightedGraph::from_edges(
            5,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 7), (3, 4, 7), (2, 4, 7)],
        )
        .unwrap();
        assert!(verify_ucf(&bowtie));
        let c4 = WeightedGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
            .unwrap();
        assert!(!verify_ucf(&c4));
    }

    #[test]
    fn marks_follow_rule_table() {
        let r5 = RuleInstance::Rule5 {
            rest: vec![1, 2, 3],
            v: 0,
            x: 1,
            y: 2,
            c: 1,
        };
        assert_eq!(r5.marked(), vec![0, 1, 2]);
        assert_eq!(r5.removed(), vec![1, 2, 3]);
        let r2 = RuleInstance::Rule2 {
            rest: vec![1],
            v: 0,
        };
        assert!(r2.marked().is_empty());
        assert_eq!(r2.k_delta_quarters(), 0);
    }

    #[test]
    fn instance_json_shape() {
        let r = RuleInstance::Rule1 { x: 0, y: 1, z: 2 };
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"rule":"1","x":0,"y":1,"z":2}"#);
    }
}
