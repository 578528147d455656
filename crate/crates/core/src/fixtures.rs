//! The bundled example sets with their arcs, subspaces and expected results.
//! The same files live under `fixtures/` in this crate for use with the CLI.

use std::path::PathBuf;

use serde::Deserialize;

use crate::cones::ConeKind;
use crate::error::Result;
use crate::ideal::{Budget, Ideal, Variety};
use crate::io::{from_json, ArcFile, VarietyFile};
use crate::poly::VariableContext;
use crate::witness::{Pairing, WitnessArc};

#[derive(Clone, Debug, Deserialize)]
pub struct ExpectedCone {
    pub generators: Vec<String>,
    pub dim: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Expected {
    pub k: i64,
    pub degree: u64,
    pub cones: std::collections::BTreeMap<String, ExpectedCone>,
    #[serde(default)]
    pub secant_pairing: Option<Pairing>,
}

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    variety: &'static str,
    arc: Option<&'static str>,
    arc2: Option<&'static str>,
    expected: &'static str,
}

macro_rules! fixture {
    ($name:literal) => {
        fixture!($name, None, None)
    };
    ($name:literal, arc) => {
        fixture!(
            $name,
            Some(include_str!(concat!("../fixtures/", $name, "/arc.json"))),
            None
        )
    };
    ($name:literal, arc, arc2) => {
        fixture!(
            $name,
            Some(include_str!(concat!("../fixtures/", $name, "/arc.json"))),
            Some(include_str!(concat!("../fixtures/", $name, "/arc2.json")))
        )
    };
    ($name:literal, $arc:expr, $arc2:expr) => {
        Fixture {
            name: $name,
            variety: include_str!(concat!("../fixtures/", $name, "/variety.json")),
            arc: $arc,
            arc2: $arc2,
            expected: include_str!(concat!("../fixtures/", $name, "/expected.json")),
        }
    };
}

pub const LINE: Fixture = fixture!("line", arc);
pub const PLANE2: Fixture = fixture!("plane2", arc);
pub const PARABOLA: Fixture = fixture!("parabola", arc, arc2);
pub const HYPERBOLA: Fixture = fixture!("hyperbola");
pub const CUSP: Fixture = fixture!("cusp", arc);
pub const TWISTED: Fixture = fixture!("twisted", arc);

pub const ALL: [Fixture; 6] = [LINE, PLANE2, PARABOLA, HYPERBOLA, CUSP, TWISTED];

impl Fixture {
    pub fn variety_file(&self) -> VarietyFile {
        from_json(self.variety, "fixture variety").expect("bundled fixture parses")
    }

    pub fn variety(&self, budget: &Budget) -> Result<Variety> {
        self.variety_file().build(budget)
    }

    pub fn expected(&self) -> Expected {
        from_json(self.expected, "fixture expectations").expect("bundled fixture parses")
    }

    /// The arcs: none (no polynomial curve lies on the set), one, or a pair
    /// for secant sampling.
    pub fn arcs(&self, x: &Variety) -> Result<Vec<WitnessArc>> {
        [self.arc, self.arc2]
            .into_iter()
            .flatten()
            .map(|text| from_json::<ArcFile>(text, "fixture arc")?.build(x))
            .collect()
    }

    /// Expected cone ideal in the direction variables.
    pub fn expected_cone(&self, which: ConeKind, x: &Variety) -> Result<(Ideal, i64)> {
        let e = &self.expected().cones[which.name()];
        let names: Vec<String> = x.ctx().names().iter().map(|n| format!("v_{n}")).collect();
        let ctx = VariableContext::new(&names)?;
        Ok((Ideal::parse(&ctx, &e.generators)?, e.dim))
    }

    /// Directory holding this fixture's files in the source tree.
    pub fn dir(&self) -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures")
            .join(self.name)
    }
}
