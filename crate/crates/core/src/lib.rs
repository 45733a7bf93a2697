//! Critical ideals of trees over the integers.
//!
//! The library computes generating sets of the determinantal ideals of the
//! generalized Laplacian of a tree from minimal 2-matchings of its looped
//! view, verifies them against brute-force minor enumeration and Groebner
//! machinery over Z, and carries the results into integer linear algebra:
//! Smith normal forms, critical groups of wired regular trees and
//! arithmetical graphs.

pub mod ideal;
pub mod intalg;
pub mod laplacian;
pub mod matching;
pub mod poly;
pub mod report;
pub mod tree;
pub mod verify;

pub use ideal::{
    all_minor_ideal, conjecture_scan, critical_ideal, expand_nonminimal, gamma, gamma_certified,
    groebner_check_paths, star_ideal, verify_identities, CriticalIdeal, IdealError,
};
pub use intalg::{
    critical_group_of_arithmetical, critical_group_of_graph, evaluate_ideal, smith_normal_form,
    spanning_tree_count, validate_arithmetical, wired_tree_report, AbelianGroup, ArithmeticalGraph,
    IntAlgError, IntMatrix, SmithNormalForm,
};
pub use laplacian::{
    d_of_matching, generalized_laplacian, generalized_laplacian_tree, matching_determinant, minor,
    minor_to_matching, MinorError, SymbolicMatrix,
};
pub use matching::{
    enumerate_minimal, enumerate_two_matchings, heads_tails, is_minimal, is_two_matching, nu2,
    saturation, structural_checks, HeadsTails, MatchingError, TwoMatching,
};
pub use poly::{
    deglex_compare, groebner_complete, is_groebner_basis, is_reduced_groebner_basis, s_polynomial,
    strong_reduce, GeneratorSet, Limits, Monomial, PolyError, Polynomial, Var,
};
pub use report::{CheckRecord, Status};
pub use tree::{
    enumerate_labeled_trees, parse_multigraph, parse_tree, random_tree, serialize_multigraph,
    serialize_tree, Forest, GraphError, MultiGraph, PathSpec, Tree,
};
