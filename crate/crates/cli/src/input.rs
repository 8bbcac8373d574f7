use clap::ValueEnum;
use tribound_core::enumerate::{enumerate, ingest_graph6, ClassConstraints};
use tribound_core::{from_graph6, to_graph6, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    G13,
    C5,
    Petersen,
    G13Complement,
}

impl Builtin {
    /// graph6 of the builtin, as produced by the matching constructor.
    pub fn graph6(self) -> &'static str {
        match self {
            Builtin::G13 => "LhEIHEPQHGaPaP",
            Builtin::C5 => "Dhc",
            Builtin::Petersen => "IheA@GUAo",
            Builtin::G13Complement => "LUxtuxmluv\\m\\m",
        }
    }

    pub fn graph(self) -> Graph {
        from_graph6(self.graph6().as_bytes()).expect("builtin graph6 is valid")
    }
}

/// One line of input: a decoded graph or the decode error.
pub enum Input {
    Graph { text: String, graph: Graph },
    Bad { text: String, error: String },
}

impl Input {
    fn from_graph(graph: Graph) -> Input {
        Input::Graph {
            text: to_graph6(&graph),
            graph,
        }
    }
}

pub enum Source {
    Builtin(Builtin),
    Enumerate(ClassConstraints),
    Stdin,
}

impl Source {
    /// The inputs in order. Fails only on I/O errors or invalid constraints.
    pub fn inputs(self) -> Result<Box<dyn Iterator<Item = std::io::Result<Input>>>, String> {
        Ok(match self {
            Source::Builtin(b) => Box::new(std::iter::once(Ok(Input::from_graph(b.graph())))),
            Source::Enumerate(c) => Box::new(
                enumerate(&c)
                    .map_err(|e| e.to_string())?
                    .map(|g| Ok(Input::from_graph(g))),
            ),
            Source::Stdin => Box::new(ingest_graph6(std::io::stdin().lock()).map(|item| {
                item.map(|item| match item.graph {
                    Ok(graph) => Input::Graph {
                        text: item.text,
                        graph,
                    },
                    Err(e) => Input::Bad {
                        error: format!("line {}: {e}", item.line),
                        text: item.text,
                    },
                })
            })),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_match_constructors() {
        let g13 = Graph::circulant(13, &[1, 5, 8, 12]).unwrap();
        assert_eq!(Builtin::G13.graph(), g13);
        assert_eq!(Builtin::C5.graph(), Graph::cycle(5).unwrap());
        assert_eq!(Builtin::Petersen.graph(), Graph::petersen());
        assert_eq!(Builtin::G13Complement.graph(), g13.complement());
    }
}
