//! Top elements: permutations whose lower weak interval is a minimal cell
//! carrying an irreducible representation.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::cells::{standard_relabelings, Functional};
use crate::error::Result;
use crate::groups::{self, GroupType, Permutation};
use crate::reps::{build_on_cell, is_irreducible, Normalization};
use crate::tableaux::{enumerate_standard, partitions, SkewShape, Tableau};

/// `(σ, Q)` with `σ⁻¹·[id, π] = B_Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopWitness {
    pub sigma: Permutation,
    pub tableau: Tableau,
}

/// `B_Q` for every standard tableau of straight shape of size `n`.
fn straight_bases(n: usize) -> Result<HashMap<Vec<Permutation>, Tableau>> {
    let mut out = HashMap::new();
    for lambda in partitions(n) {
        for q in enumerate_standard(&SkewShape::straight(lambda)?)? {
            let mut key = standard_relabelings(&q)?;
            key.sort();
            out.entry(key).or_insert(q);
        }
    }
    Ok(out)
}

fn irreducible_on(q: &Tableau) -> Result<bool> {
    let f = Functional::new(q.content_vector()?);
    let cell = crate::cells::Cell::new(standard_relabelings(q)?)?;
    is_irreducible(&build_on_cell(&f, &cell, Normalization::Seminormal)?)
}

fn witness_in(pi: &Permutation, bases: &HashMap<Vec<Permutation>, Tableau>) -> Result<Option<TopWitness>> {
    let interval = groups::weak_interval(pi);
    for sigma in &interval {
        let inv = sigma.inverse();
        let mut moved: Vec<Permutation> = interval.iter().map(|w| inv.compose(w)).collect();
        moved.sort();
        if let Some(q) = bases.get(&moved) {
            if irreducible_on(q)? {
                return Ok(Some(TopWitness {
                    sigma: sigma.clone(),
                    tableau: q.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Brute force: some `σ ∈ [id, π]` and straight standard `Q` have
/// `σ⁻¹·[id, π] = B_Q`, and the representation on `B_Q` is irreducible.
pub fn is_top_brute(pi: &Permutation) -> Result<Option<TopWitness>> {
    groups::Caps::from_env().check(GroupType::A, pi.n())?;
    witness_in(pi, &straight_bases(pi.n())?)
}

#[derive(Clone, Debug, Serialize)]
pub struct TopRow {
    pub shape: Vec<usize>,
    /// Column word of the row tableau, columns read top to bottom.
    pub sigma_down: Permutation,
    /// Column word of the row tableau, columns read bottom to top.
    pub sigma_up: Permutation,
    pub interval_size: usize,
    pub syt_count: usize,
    pub irreducible: bool,
    pub down_certified: bool,
    pub up_certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TopReport {
    pub n: usize,
    pub rows: Vec<TopRow>,
    /// Every permutation certified by the brute-force oracle, with a witness.
    pub oracle: Vec<(Permutation, TopWitness)>,
    pub partition_count: usize,
    pub distinct_down: usize,
    pub distinct_up: usize,
    /// The oracle set equals `{σ_λ}` read top to bottom.
    pub down_matches_oracle: bool,
    pub up_matches_oracle: bool,
    pub discrepancies: Vec<String>,
}

impl TopReport {
    pub fn oracle_set(&self) -> BTreeSet<Permutation> {
        self.oracle.iter().map(|(p, _)| p.clone()).collect()
    }
}

/// Candidates `σ_λ` from both column readings of each row tableau, certified
/// against the oracle over all of `S_n`.
pub fn top_elements(n: usize) -> Result<TopReport> {
    let group = groups::symmetric_group(n)?;
    let bases = straight_bases(n)?;
    let mut oracle = Vec::new();
    for pi in &group {
        if let Some(w) = witness_in(pi, &bases)? {
            oracle.push((pi.clone(), w));
        }
    }
    let certified: BTreeSet<&Permutation> = oracle.iter().map(|(p, _)| p).collect();
    let mut rows = Vec::new();
    for lambda in partitions(n) {
        let shape = SkewShape::straight(lambda.clone())?;
        let r = Tableau::row_tableau(&shape);
        let down = r.column_word_down()?;
        let up = r.column_word_up()?;
        rows.push(TopRow {
            shape: lambda,
            interval_size: groups::weak_interval(&down).len(),
            syt_count: enumerate_standard(&shape)?.len(),
            irreducible: irreducible_on(&r)?,
            down_certified: certified.contains(&down),
            up_certified: certified.contains(&up),
            sigma_down: down,
            sigma_up: up,
        });
    }
    let down: BTreeSet<&Permutation> = rows.iter().map(|r| &r.sigma_down).collect();
    let up: BTreeSet<&Permutation> = rows.iter().map(|r| &r.sigma_up).collect();
    let partition_count = rows.len();
    let mut discrepancies = Vec::new();
    if certified.len() != partition_count {
        discrepancies.push(format!(
            "oracle certifies {} top elements of S_{n}; there are {partition_count} partitions of {n}",
            certified.len()
        ));
    }
    let mut by_element: HashMap<&Permutation, Vec<String>> = HashMap::new();
    for r in &rows {
        by_element
            .entry(&r.sigma_down)
            .or_default()
            .push(format!("{:?}", r.shape));
    }
    let mut shared: Vec<String> = by_element
        .iter()
        .filter(|(_, shapes)| shapes.len() > 1)
        .map(|(p, shapes)| format!("shapes {} all give {p}", shapes.join(", ")))
        .collect();
    shared.sort();
    discrepancies.extend(shared);
    if up != certified {
        discrepancies.push("bottom-to-top column reading disagrees with the oracle".into());
    }
    Ok(TopReport {
        n,
        distinct_down: down.len(),
        distinct_up: up.len(),
        down_matches_oracle: down == certified,
        up_matches_oracle: up == certified,
        rows,
        oracle,
        partition_count,
        discrepancies,
    })
}
