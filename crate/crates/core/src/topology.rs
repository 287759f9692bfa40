//! Interaction-graph catalog: open chain, closed chain, supercube,
//! diagonal-augmented supercubes, and the three 12-qubit geometries.
//!
//! Sites are 1-based. Supercube vertices are labeled so that vertex `v`
//! corresponds to the binary word `v - 1` (bit 1 most significant); under
//! that labeling cube edges differ in exactly one bit, face diagonals in
//! two, body diagonals in three.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Structural class of a coupling in an interaction graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeClass {
    Edge,
    FaceDiagonal,
    BodyDiagonal,
}

impl EdgeClass {
    pub fn label(self) -> &'static str {
        match self {
            EdgeClass::Edge => "edge",
            EdgeClass::FaceDiagonal => "face_diagonal",
            EdgeClass::BodyDiagonal => "body_diagonal",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(EdgeClass::Edge),
            "face_diagonal" => Ok(EdgeClass::FaceDiagonal),
            "body_diagonal" => Ok(EdgeClass::BodyDiagonal),
            other => Err(Error::domain(format!(
                "unknown edge class `{other}` (expected edge, face_diagonal, or body_diagonal)"
            ))),
        }
    }
}

/// Undirected coupling between two sites, stored with `i < j`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub class: EdgeClass,
}

impl Edge {
    pub fn new(i: usize, j: usize, class: EdgeClass) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::domain("sites are 1-based; 0 is not a valid site"));
        }
        if i == j {
            return Err(Error::domain(format!("self-loop at site {i} is not a valid edge")));
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Ok(Edge { i, j, class })
    }
}

/// A named interaction graph over `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinTopology {
    n: usize,
    edges: Vec<Edge>,
    name: String,
}

impl SpinTopology {
    /// Validate and build a topology. Edges keep their given order;
    /// endpoints must lie in `1..=n`, pairs must be unique, and the graph
    /// must be connected.
    pub fn new(name: impl Into<String>, n: usize, edges: Vec<Edge>) -> Result<Self> {
        let name = name.into();
        if n < 1 {
            return Err(Error::domain("topology needs at least one site"));
        }
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.j > n {
                return Err(Error::domain(format!(
                    "edge ({}, {}) out of range for {n} sites",
                    e.i, e.j
                )));
            }
            if !seen.insert((e.i, e.j)) {
                return Err(Error::domain(format!("duplicate edge ({}, {})", e.i, e.j)));
            }
        }
        let topo = SpinTopology { n, edges, name };
        if !topo.is_connected() {
            return Err(Error::domain(format!(
                "topology `{}` is not connected",
                topo.name
            )));
        }
        Ok(topo)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Degree of every vertex, indexed by `site - 1`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.i - 1] += 1;
            deg[e.j - 1] += 1;
        }
        deg
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.i == v {
                out.push(e.j);
            } else if e.j == v {
                out.push(e.i);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn has_pair(&self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.edges.iter().any(|e| e.i == i && e.j == j)
    }

    fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut visited = vec![false; self.n + 1];
        let mut stack = vec![1usize];
        visited[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Plain-text edge list: first line `n <count>`, then one
    /// `i j class` triple per line, in stored edge order.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.i, e.j, e.class.label()));
        }
        out
    }

    /// Parse the plain-text edge-list format produced by
    /// [`to_edge_list_text`](Self::to_edge_list_text).
    pub fn from_edge_list_text(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::domain("empty edge list"))?;
        let mut parts = header.split_whitespace();
        let n = match (parts.next(), parts.next(), parts.next()) {
            (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| {
                Error::domain(format!("invalid qubit count `{count}` in edge-list header"))
            })?,
            _ => {
                return Err(Error::domain(format!(
                    "edge-list header must be `n <count>`, got `{header}`"
                )))
            }
        };
        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::domain(format!(
                    "edge-list line {}: expected `i j class`, got `{line}`",
                    lineno + 1
                )));
            }
            let i = fields[0].parse::<usize>().map_err(|_| {
                Error::domain(format!("edge-list line {}: bad site `{}`", lineno + 1, fields[0]))
            })?;
            let j = fields[1].parse::<usize>().map_err(|_| {
                Error::domain(format!("edge-list line {}: bad site `{}`", lineno + 1, fields[1]))
            })?;
            edges.push(Edge::new(i, j, EdgeClass::parse(fields[2])?)?);
        }
        SpinTopology::new(name, n, edges)
    }
}

/// Linear chain with open boundaries: edges `(i, i+1)` for `i < n`.
pub fn open_chain(n: usize) -> Result<SpinTopology> {
    if n < 2 {
        return Err(Error::domain(format!("open chain needs n >= 2, got {n}")));
    }
    let edges = (1..n)
        .map(|i| Edge::new(i, i + 1, EdgeClass::Edge).expect("valid by construction"))
        .collect();
    SpinTopology::new(format!("open-chain-{n}"), n, edges)
}

/// Ring: the open chain plus the wrap-around edge `(1, n)`.
pub fn closed_chain(n: usize) -> Result<SpinTopology> {
    if n < 3 {
        return Err(Error::domain(format!(
            "closed chain needs n >= 3 (a 2-cycle duplicates an edge), got {n}"
        )));
    }
    let mut edges: Vec<Edge> = (1..n)
        .map(|i| Edge::new(i, i + 1, EdgeClass::Edge).expect("valid by construction"))
        .collect();
    edges.push(Edge::new(1, n, EdgeClass::Edge).expect("valid by construction"));
    SpinTopology::new(format!("closed-chain-{n}"), n, edges)
}

/// The 8-qubit cube: pairs `(i, i+1)` for odd `i`, `(i, i+2)` for
/// `i in {1,2,5,6}`, and `(i, i+4)` for `i in 1..=4`. Twelve edges,
/// every vertex of degree 3, isomorphic to the 3-cube under binary labels.
pub fn supercube() -> SpinTopology {
    let mut edges = Vec::with_capacity(12);
    for i in [1usize, 3, 5, 7] {
        edges.push(Edge::new(i, i + 1, EdgeClass::Edge).expect("valid by construction"));
    }
    for i in [1usize, 2, 5, 6] {
        edges.push(Edge::new(i, i + 2, EdgeClass::Edge).expect("valid by construction"));
    }
    for i in 1..=4usize {
        edges.push(Edge::new(i, i + 4, EdgeClass::Edge).expect("valid by construction"));
    }
    SpinTopology::new("supercube", 8, edges).expect("valid by construction")
}

/// The four body diagonals of the supercube (bit-complement pairs).
pub const BODY_DIAGONALS: [(usize, usize); 4] = [(1, 8), (2, 7), (3, 6), (4, 5)];

/// The twelve face diagonals of the supercube (two-bit-differing pairs).
pub const FACE_DIAGONALS: [(usize, usize); 12] = [
    (1, 4),
    (1, 6),
    (1, 7),
    (2, 3),
    (2, 5),
    (2, 8),
    (3, 5),
    (3, 8),
    (4, 6),
    (4, 7),
    (5, 8),
    (6, 7),
];

/// Diagonals of the top face `{5, 6, 7, 8}` (vertices with leading bit 1).
pub const TOP_FACE_DIAGONALS: [(usize, usize); 2] = [(5, 8), (6, 7)];

/// Supercube plus a chosen subset of its canonical body and face
/// diagonals. Requested pairs must belong to the canonical sets.
pub fn supercube_augmented(
    body_diagonals: &[(usize, usize)],
    face_diagonals: &[(usize, usize)],
) -> Result<SpinTopology> {
    let base = supercube();
    let mut edges = base.edges().to_vec();
    for &(i, j) in body_diagonals {
        let e = Edge::new(i, j, EdgeClass::BodyDiagonal)?;
        if !BODY_DIAGONALS.contains(&(e.i, e.j)) {
            return Err(Error::domain(format!(
                "({i}, {j}) is not a body diagonal of the supercube"
            )));
        }
        edges.push(e);
    }
    for &(i, j) in face_diagonals {
        let e = Edge::new(i, j, EdgeClass::FaceDiagonal)?;
        if !FACE_DIAGONALS.contains(&(e.i, e.j)) {
            return Err(Error::domain(format!(
                "({i}, {j}) is not a face diagonal of the supercube"
            )));
        }
        edges.push(e);
    }
    SpinTopology::new(
        format!("supercube+{}bd+{}fd", body_diagonals.len(), face_diagonals.len()),
        8,
        edges,
    )
}

/// Twelve-qubit extension of the supercube: two unit cubes sharing the
/// face `{5, 6, 7, 8}`. Twenty edges; shared-face vertices have degree 4.
pub fn cube_extension_12() -> SpinTopology {
    let mut edges = supercube().edges().to_vec();
    // Second cube: 9..=12 mirror 5..=8 across the shared face.
    let mirrored = [(9usize, 10usize), (11, 12), (9, 11), (10, 12)];
    for (i, j) in mirrored {
        edges.push(Edge::new(i, j, EdgeClass::Edge).expect("valid by construction"));
    }
    for k in 5..=8usize {
        edges.push(Edge::new(k, k + 4, EdgeClass::Edge).expect("valid by construction"));
    }
    SpinTopology::new("cube-extension-12", 12, edges).expect("valid by construction")
}

fn polyhedron_from_coords(
    name: &str,
    coords: Vec<[f64; 3]>,
    edge_sq_dist: f64,
) -> SpinTopology {
    let mut coords = coords;
    coords.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    let m = coords.len();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            let d2: f64 = (0..3).map(|k| (coords[a][k] - coords[b][k]).powi(2)).sum();
            if (d2 - edge_sq_dist).abs() < 1e-9 {
                edges.push(Edge::new(a + 1, b + 1, EdgeClass::Edge).expect("valid by construction"));
            }
        }
    }
    SpinTopology::new(name, m, edges).expect("valid by construction")
}

/// Cuboctahedron skeleton: the 12 permutations of `(+-1, +-1, 0)`,
/// edges between vertices at squared distance 2. Degree 4 throughout.
pub fn cuboctahedron_12() -> SpinTopology {
    let mut coords = Vec::with_capacity(12);
    for zero_pos in 0..3 {
        for s1 in [-1.0, 1.0] {
            for s2 in [-1.0, 1.0] {
                let mut c = [0.0f64; 3];
                let mut signs = [s1, s2].into_iter();
                for (k, slot) in c.iter_mut().enumerate() {
                    if k != zero_pos {
                        *slot = signs.next().expect("two signed slots");
                    }
                }
                coords.push(c);
            }
        }
    }
    polyhedron_from_coords("cuboctahedron-12", coords, 2.0)
}

/// Icosahedron skeleton: cyclic permutations of `(0, +-1, +-phi)` with
/// phi the golden ratio, edges between nearest neighbors (squared
/// distance 4). Degree 5 throughout.
pub fn icosahedron_12() -> SpinTopology {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    let mut coords = Vec::with_capacity(12);
    for s1 in [-1.0, 1.0] {
        for s2 in [-1.0, 1.0] {
            coords.push([0.0, s1, s2 * phi]);
            coords.push([s1, s2 * phi, 0.0]);
            coords.push([s1 * phi, 0.0, s2]);
        }
    }
    polyhedron_from_coords("icosahedron-12", coords, 4.0)
}

/// Preset augmentations and 12-qubit geometries addressable by name in
/// configs, the CLI, and presets.
pub fn by_name(name: &str) -> Result<SpinTopology> {
    if let Some(rest) = name.strip_prefix("open-chain-") {
        let n = rest
            .parse::<usize>()
            .map_err(|_| unknown_topology(name))?;
        return open_chain(n);
    }
    if let Some(rest) = name.strip_prefix("closed-chain-") {
        let n = rest
            .parse::<usize>()
            .map_err(|_| unknown_topology(name))?;
        return closed_chain(n);
    }
    match name {
        "supercube" => Ok(supercube()),
        "supercube-body2" => {
            supercube_augmented(&BODY_DIAGONALS[0..2], &[]).map(|t| t.with_name(name))
        }
        "supercube-body4" => {
            supercube_augmented(&BODY_DIAGONALS, &[]).map(|t| t.with_name(name))
        }
        "supercube-facetop" => {
            supercube_augmented(&[], &TOP_FACE_DIAGONALS).map(|t| t.with_name(name))
        }
        "supercube-faceall" => {
            supercube_augmented(&[], &FACE_DIAGONALS).map(|t| t.with_name(name))
        }
        "supercube-body4-faceall" => {
            supercube_augmented(&BODY_DIAGONALS, &FACE_DIAGONALS).map(|t| t.with_name(name))
        }
        "cube-extension-12" => Ok(cube_extension_12()),
        "cuboctahedron-12" => Ok(cuboctahedron_12()),
        "icosahedron-12" => Ok(icosahedron_12()),
        _ => Err(unknown_topology(name)),
    }
}

/// Names accepted by [`by_name`].
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "open-chain-<n>",
        "closed-chain-<n>",
        "supercube",
        "supercube-body2",
        "supercube-body4",
        "supercube-facetop",
        "supercube-faceall",
        "supercube-body4-faceall",
        "cube-extension-12",
        "cuboctahedron-12",
        "icosahedron-12",
    ]
}

fn unknown_topology(name: &str) -> Error {
    Error::UnknownName {
        kind: "topology",
        name: name.to_string(),
        listing: catalog_names().join("\n"),
    }
}
