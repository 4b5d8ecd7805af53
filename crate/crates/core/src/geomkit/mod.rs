//! Small dense linear programming, cone predicates and convex hulls.

mod cone;
mod hull;
mod lp;

pub use cone::{cone_member, cones_meet, separating_functional, ConeMeeting};
pub use hull::{
    convex_hull, face_limit_regression, in_convex_hull, quadrilateral, Face, FaceLimitReport,
    Facet, Polytope, Vertex, MAX_HULL_CANDIDATES, MAX_HULL_DIM, MAX_HULL_POINTS,
};
pub use lp::{lp_feasible, Constraint, LinearProgram, LpSolution, LpStatus, Relation};
