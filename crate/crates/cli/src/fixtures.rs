//! Model files shipped inside the binary.

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub source: &'static str,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "dim2",
        description: "2-dim algebra [e1,e2]=e1, <e1,e2,e2>=e1; R = [[0,0],[0,1]]; trivial order-1 deformation from e1∧e2",
        source: include_str!("../examples/dim2.lyat"),
    },
    Fixture {
        name: "dim2_obstructed",
        description: "2-dim algebra with the order-1 deformation R + t E11, whose obstruction class is nonzero",
        source: include_str!("../examples/dim2_obstructed.lyat"),
    },
    Fixture {
        name: "dim2_explicit",
        description: "2-dim algebra with its adjoint representation written out; R = [[0,3/2],[0,-2]]",
        source: include_str!("../examples/dim2_explicit.lyat"),
    },
    Fixture {
        name: "dim4",
        description: "4-dim algebra [e1,e2]=2e4, <e1,e2,e1>=e4 with a patterned R and the six basis wedges",
        source: include_str!("../examples/dim4.lyat"),
    },
    Fixture {
        name: "broken_algebra",
        description: "2-dim brackets violating the Lie-Yamaguti identities",
        source: include_str!("../examples/broken_algebra.lyat"),
    },
    Fixture {
        name: "broken_rep",
        description: "adjoint representation of the 2-dim algebra with mu(e2,e2) corrupted to the identity",
        source: include_str!("../examples/broken_rep.lyat"),
    },
    Fixture {
        name: "broken_rbo",
        description: "identity map on the 2-dim algebra, which is not a Rota-Baxter operator",
        source: include_str!("../examples/broken_rbo.lyat"),
    },
];

pub fn get(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
