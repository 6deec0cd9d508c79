//! Small worked instances shared by tests, examples and documentation.

use crate::graph::{Graph, Matching};
use crate::proofnet::{EdgePair, LinkKind, PairedGraph, ProofStructure};

/// A square `w-x-z-y` with the chord `x-y` and the perfect matching
/// `{wy, xz}`. The other perfect matching is `{wx, yz}`; the outer square is
/// an alternating cycle for both.
///
/// Vertices: w=0, x=1, y=2, z=3. Edges: 0=yx, 1=wy, 2=xz, 3=wx, 4=yz.
pub fn chorded_square() -> (Graph, Matching) {
    let g = Graph::from_edges(4, [(2, 1), (0, 2), (1, 3), (0, 1), (2, 3)]).unwrap();
    let m = Matching::new(&g, [1, 2]).unwrap();
    (g, m)
}

/// Two triangles joined by a middle edge, with its unique perfect matching:
/// one matching edge per triangle plus the middle edge, which is the only
/// bridge.
///
/// Vertices: w=0, y=1, t=2, s=3, x=4, z=5.
/// Edges: 0=wy, 1=xz, 2=ts (the middle edge), 3=wt, 4=yt, 5=xs, 6=zs.
pub fn linked_triangles() -> (Graph, Matching) {
    let g = Graph::from_edges(
        6,
        [(0, 1), (4, 5), (2, 3), (0, 2), (1, 2), (4, 3), (5, 3)],
    )
    .unwrap();
    let m = Matching::new(&g, [0, 1, 2]).unwrap();
    (g, m)
}

pub const LINKED_TRIANGLES_MIDDLE: usize = 2;

/// The one-link proof net.
pub fn single_ax() -> ProofStructure {
    ProofStructure::new(vec![LinkKind::Ax], vec![]).unwrap()
}

/// An ax-link whose two outputs feed the same ⅋-link. Correct.
pub fn par_of_ax() -> ProofStructure {
    ProofStructure::new(vec![LinkKind::Ax, LinkKind::Par], vec![(0, 1), (0, 1)]).unwrap()
}

/// An ax-link whose two outputs feed the same ⊗-link. A valid structure but
/// never a proof net.
pub fn tensor_of_ax() -> ProofStructure {
    ProofStructure::new(vec![LinkKind::Ax, LinkKind::Tensor], vec![(0, 1), (0, 1)]).unwrap()
}

/// Two ax-links joined by a ⊗-link; three conclusions once made explicit.
///
/// Links: 0=ax, 1=ax, 2=⊗.
pub fn tensor_of_two_axes() -> ProofStructure {
    ProofStructure::new(
        vec![LinkKind::Ax, LinkKind::Ax, LinkKind::Tensor],
        vec![(0, 2), (1, 2)],
    )
    .unwrap()
}

/// The net with two ax-links over a ⊗ and a ⅋ joined by a final ⅋. Correct
/// for plain multiplicative logic; its unique conclusion reads
/// `(A ⊗ B) ⅋ (A⊥ ⅋ B⊥)`.
///
/// Links: 0=ax, 1=ax, 2=⊗, 3=⅋, 4=⅋ (terminal).
/// Edges: 0=(0→2), 1=(1→2), 2=(0→3), 3=(1→3), 4=(3→4), 5=(2→4).
pub fn double_par_net() -> ProofStructure {
    ProofStructure::new(
        vec![
            LinkKind::Ax,
            LinkKind::Ax,
            LinkKind::Tensor,
            LinkKind::Par,
            LinkKind::Par,
        ],
        vec![(0, 2), (1, 2), (0, 3), (1, 3), (3, 4), (2, 4)],
    )
    .unwrap()
}

/// Three ax-links fanned over ⅋, ⊗, ⅋, with the middle ⊗ sharing an ax with
/// each ⅋. Correct only with Mix (two switching components). Its dependency
/// relation is empty and the ⊗-link can never be introduced last.
///
/// Links: 0=ax, 1=ax, 2=ax, 3=⅋, 4=⊗, 5=⅋.
/// Edges: 0=(1→3), 1=(1→5), 2=(0→3), 3=(0→4), 4=(2→4), 5=(2→5).
pub fn fan_net() -> ProofStructure {
    ProofStructure::new(
        vec![
            LinkKind::Ax,
            LinkKind::Ax,
            LinkKind::Ax,
            LinkKind::Par,
            LinkKind::Tensor,
            LinkKind::Par,
        ],
        vec![(1, 3), (1, 5), (0, 3), (0, 4), (2, 4), (2, 5)],
    )
    .unwrap()
}

/// Proofification input for [`fan_net`]-style dependency studies: the
/// [`linked_triangles`] instance run through the matching-to-net translation.
pub fn linked_triangles_net() -> ProofStructure {
    let (g, m) = linked_triangles();
    crate::translate::proofification(&g, &m).0
}

/// A four-spoke star inside a square, with the two opposite spoke pairs
/// paired at the hub. It has two compatible closed trails through the hub
/// but no compatible cycle.
///
/// Vertices: w=0, x=1, y=2, z=3, hub=4.
/// Edges: 0=xz, 1=wy, 2=x·hub, 3=z·hub, 4=w·hub, 5=y·hub.
/// Pairs: {2,3} and {4,5}, both anchored at the hub.
pub fn star_with_pairs() -> PairedGraph {
    PairedGraph {
        vertices: 5,
        edges: vec![(1, 3), (0, 2), (1, 4), (3, 4), (0, 4), (2, 4)],
        pairs: vec![
            EdgePair {
                first: 2,
                second: 3,
                anchor: 4,
            },
            EdgePair {
                first: 4,
                second: 5,
                anchor: 4,
            },
        ],
    }
}
