//! Operator tree for closed-form integrands. Division is deliberately
//! absent so the dense positivity scan at construction time is the only
//! guard the evaluator needs.

/// Expression over the angle variable `t`.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprNode {
    Const(f64),
    /// cos(k t), integer frequency k >= 1.
    Cos(u32),
    /// sin(k t), integer frequency k >= 1.
    Sin(u32),
    Abs(Box<ExprNode>),
    Add(Box<ExprNode>, Box<ExprNode>),
    Sub(Box<ExprNode>, Box<ExprNode>),
    Mul(Box<ExprNode>, Box<ExprNode>),
    Max(Box<ExprNode>, Box<ExprNode>),
    Min(Box<ExprNode>, Box<ExprNode>),
}

impl ExprNode {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            ExprNode::Const(c) => *c,
            ExprNode::Cos(k) => (*k as f64 * t).cos(),
            ExprNode::Sin(k) => (*k as f64 * t).sin(),
            ExprNode::Abs(e) => e.eval(t).abs(),
            ExprNode::Add(a, b) => a.eval(t) + b.eval(t),
            ExprNode::Sub(a, b) => a.eval(t) - b.eval(t),
            ExprNode::Mul(a, b) => a.eval(t) * b.eval(t),
            ExprNode::Max(a, b) => a.eval(t).max(b.eval(t)),
            ExprNode::Min(a, b) => a.eval(t).min(b.eval(t)),
        }
    }
}
