use std::fs;
use std::io::{self, Read};

use dirdom::graph::{
    complete, cycle, directed_cycle, parse_digraphs, parse_edge_lists, parse_graph6_lines, path,
    petersen, qr_tournament_7, random_digraph, random_gnp, random_tournament, star,
    transitive_tournament,
};
use dirdom::{Digraph, Graph, Seed};

use crate::args::{Format, InputArgs};
use crate::Failure;

pub enum Instance {
    Graph(Graph),
    Digraph(Digraph),
}

impl Instance {
    /// The instance as a digraph; a graph becomes its symmetric digraph.
    pub fn into_digraph(self) -> Digraph {
        match self {
            Instance::Graph(g) => g.to_symmetric_digraph(),
            Instance::Digraph(d) => d,
        }
    }
}

fn number<T: std::str::FromStr>(recipe: &str, field: &str) -> Result<T, Failure> {
    field
        .parse()
        .map_err(|_| Failure::usage(format!("bad --gen {recipe:?}: {field:?} is not a number")))
}

fn generate(recipe: &str, seed: u64) -> Result<Instance, Failure> {
    let fields: Vec<&str> = recipe.split(':').collect();
    let n = |i: usize| -> Result<usize, Failure> {
        let f = fields
            .get(i)
            .ok_or_else(|| Failure::usage(format!("bad --gen {recipe:?}: missing order")))?;
        let n: usize = number(recipe, f)?;
        if n > dirdom::graph::MAX_ORDER {
            return Err(dirdom::Error::OrderTooLarge(n).into());
        }
        Ok(n)
    };
    let seed = Seed(seed);
    Ok(match fields[0] {
        "empty" => Instance::Graph(Graph::empty(n(1)?)),
        "complete" => Instance::Graph(complete(n(1)?)),
        "cycle" => Instance::Graph(cycle(n(1)?)),
        "path" => Instance::Graph(path(n(1)?)),
        "star" => Instance::Graph(star(n(1)?)),
        "petersen" => Instance::Graph(petersen()),
        "gnp" => {
            let p: f64 = number(recipe, fields.get(2).copied().unwrap_or("0.5"))?;
            Instance::Graph(random_gnp(n(1)?, p, seed))
        }
        "digraph" => {
            let p: f64 = number(recipe, fields.get(2).copied().unwrap_or("0.5"))?;
            Instance::Digraph(random_digraph(n(1)?, p, seed))
        }
        "tournament" => Instance::Digraph(random_tournament(n(1)?, seed)),
        "dicycle" => Instance::Digraph(directed_cycle(n(1)?)),
        "transitive" => Instance::Digraph(transitive_tournament(n(1)?)),
        "qr7" => Instance::Digraph(qr_tournament_7()),
        other => return Err(Failure::usage(format!("unknown generator {other:?}"))),
    })
}

/// All instances named by the input flags, in input order.
pub fn read_instances(args: &InputArgs) -> Result<Vec<Instance>, Failure> {
    if let Some(recipe) = &args.gen {
        return Ok(vec![generate(recipe, args.seed)?]);
    }
    let text = match &args.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(match args.format {
        Format::Graph6 => parse_graph6_lines(&text)?.into_iter().map(Instance::Graph).collect(),
        Format::Edgelist => parse_edge_lists(&text)?.into_iter().map(Instance::Graph).collect(),
        Format::Digraph => parse_digraphs(&text)?.into_iter().map(Instance::Digraph).collect(),
    })
}

/// Input instances that must be undirected graphs.
pub fn read_graphs(args: &InputArgs) -> Result<Vec<Graph>, Failure> {
    read_instances(args)?
        .into_iter()
        .map(|i| match i {
            Instance::Graph(g) => Ok(g),
            Instance::Digraph(_) => Err(Failure::usage("this command expects undirected graphs")),
        })
        .collect()
}
