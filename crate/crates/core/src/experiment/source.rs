use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{
    complete_graph, cycle_graph, kite6, line_graph, misc_graph, parse_graph, Graph, GraphRng,
    MiscGraph,
};

/// Graph families with one size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Open chain `L_n`.
    Line,
    /// Periodic chain `P_n`.
    Cycle,
    /// Complete graph `K_n`.
    Complete,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Line, Family::Cycle, Family::Complete];

    pub fn letter(self) -> char {
        match self {
            Family::Line => 'L',
            Family::Cycle => 'P',
            Family::Complete => 'K',
        }
    }

    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            Family::Line => line_graph(n),
            Family::Cycle => cycle_graph(n),
            Family::Complete => complete_graph(n),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "L" | "LINE" => Ok(Family::Line),
            "P" | "CYCLE" | "PERIODIC" => Ok(Family::Cycle),
            "K" | "COMPLETE" => Ok(Family::Complete),
            _ => Err(Error::invalid(format!("unknown family {s:?} (L, P, K)"))),
        }
    }
}

/// `count` Erdős–Rényi graphs `G(n, p)`. Graph `k` uses the `k`-th `u64`
/// drawn from a ChaCha8 stream seeded with `seed`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub p: f64,
    pub count: usize,
    pub seed: u64,
}

impl RandomSpec {
    pub fn graph_seeds(&self) -> Vec<u64> {
        let mut rng = GraphRng::seed_from_u64(self.seed);
        (0..self.count).map(|_| rng.next_u64()).collect()
    }

    /// Parses `n=8,p=0.5,count=10,seed=3`; `count` defaults to 1 and `seed`
    /// to `default_seed`.
    pub fn parse(text: &str, default_seed: u64) -> Result<Self> {
        let mut n = None;
        let mut p = None;
        let mut count = 1;
        let mut seed = default_seed;
        for field in text.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("random spec field {field:?} is not key=value")))?;
            let bad = || Error::invalid(format!("bad value in random spec field {field:?}"));
            match key.trim() {
                "n" => n = Some(value.trim().parse().map_err(|_| bad())?),
                "p" => p = Some(value.trim().parse().map_err(|_| bad())?),
                "count" => count = value.trim().parse().map_err(|_| bad())?,
                "seed" => seed = value.trim().parse().map_err(|_| bad())?,
                other => return Err(Error::invalid(format!("unknown random spec key {other:?}"))),
            }
        }
        let spec = RandomSpec {
            n: n.ok_or_else(|| Error::invalid("random spec needs n="))?,
            p: p.ok_or_else(|| Error::invalid("random spec needs p="))?,
            count,
            seed,
        };
        if spec.count == 0 {
            return Err(Error::invalid("random spec count must be positive"));
        }
        Ok(spec)
    }
}

/// Where the graphs of an experiment come from.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    Family(Family, usize),
    Kite6,
    Misc(MiscGraph),
    File(PathBuf),
    Random(RandomSpec),
}

/// A graph with the identifier used in output rows.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedGraph {
    pub id: String,
    pub graph: Graph,
}

impl GraphSource {
    /// Accepts `L9`, `P12`, `K4`, `kite6`, `G1`, `random:n=8,p=0.5,count=3`,
    /// `file:PATH`, or a bare path to an existing file.
    pub fn parse(text: &str, default_seed: u64) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("random:") {
            return RandomSpec::parse(rest, default_seed).map(GraphSource::Random);
        }
        if let Some(path) = text.strip_prefix("file:") {
            return Ok(GraphSource::File(PathBuf::from(path)));
        }
        if Path::new(text).is_file() {
            return Ok(GraphSource::File(PathBuf::from(text)));
        }
        if text.eq_ignore_ascii_case("kite6") {
            return Ok(GraphSource::Kite6);
        }
        if let Ok(id) = text.parse::<MiscGraph>() {
            return Ok(GraphSource::Misc(id));
        }
        let mut chars = text.chars();
        if let Some(first) = chars.next() {
            if let (Ok(family), Ok(n)) = (first.to_string().parse::<Family>(), chars.as_str().parse()) {
                return Ok(GraphSource::Family(family, n));
            }
        }
        Err(Error::invalid(format!(
            "{text:?} is neither a graph file nor a graph name (L9, P9, K9, kite6, G1, random:n=..,p=..)"
        )))
    }

    pub fn resolve(&self) -> Result<Vec<NamedGraph>> {
        let one = |id: String, graph: Graph| Ok(vec![NamedGraph { id, graph }]);
        match self {
            GraphSource::Family(f, n) => one(format!("{}{n}", f.letter()), f.build(*n)?),
            GraphSource::Kite6 => one("kite6".into(), kite6()),
            GraphSource::Misc(id) => one(id.to_string(), misc_graph(*id)?),
            GraphSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::file(path, e))?;
                let id = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                one(id, parse_graph(&text)?)
            }
            GraphSource::Random(spec) => spec
                .graph_seeds()
                .into_iter()
                .enumerate()
                .map(|(k, seed)| {
                    Ok(NamedGraph {
                        id: format!("R{}-s{}-{k}", spec.n, spec.seed),
                        graph: crate::graph::random_graph(spec.n, spec.p, seed)?,
                    })
                })
                .collect(),
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Family(fam, n) => write!(f, "{}{n}", fam.letter()),
            GraphSource::Kite6 => f.write_str("kite6"),
            GraphSource::Misc(id) => write!(f, "{id}"),
            GraphSource::File(p) => write!(f, "file:{}", p.display()),
            GraphSource::Random(s) => {
                write!(f, "random:n={},p={},count={},seed={}", s.n, s.p, s.count, s.seed)
            }
        }
    }
}

/// Loads a graph named on the command line: a file path or a built-in name.
pub fn load_graph(arg: &str) -> Result<Graph> {
    let mut graphs = GraphSource::parse(arg, 0)?.resolve()?;
    if graphs.len() != 1 {
        return Err(Error::invalid(format!("{arg:?} names {} graphs, expected one", graphs.len())));
    }
    Ok(graphs.remove(0).graph)
}

/// `L_n`, `P_n`, `K_n` for `n` in `sizes`, then kite6 and G1-G3.
pub fn bundled_sources(sizes: std::ops::RangeInclusive<usize>) -> Vec<GraphSource> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for n in sizes.clone() {
            out.push(GraphSource::Family(family, n));
        }
    }
    out.push(GraphSource::Kite6);
    out.extend(MiscGraph::ALL.map(GraphSource::Misc));
    out
}
