//! Bumping schemes: for every shape λ, an injection β_λ from the removable
//! squares of λ into its addible squares. The single addible square left
//! out of the image is the *lone square* of λ.
//!
//! The injection may depend on the shape only. Everything downstream
//! (insertion, its inverse, the correspondence) is parametrized by a scheme.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{all_partitions, Shape, Square};

pub trait BumpingScheme: Send + Sync {
    fn name(&self) -> String;

    /// Images of `shape.removable_squares()`, index for index.
    fn injection(&self, shape: &Shape) -> Result<Vec<Square>>;

    /// β_λ(sq).
    fn bump(&self, shape: &Shape, sq: Square) -> Result<Square> {
        let idx = shape
            .removable_squares()
            .iter()
            .position(|&r| r == sq)
            .ok_or_else(|| Error::NotRemovable { shape: shape.clone(), square: sq })?;
        Ok(self.injection(shape)?[idx])
    }

    /// The addible square of `shape` outside the image of β_λ.
    fn lone_square(&self, shape: &Shape) -> Result<Square> {
        let image = self.injection(shape)?;
        shape
            .addible_squares()
            .into_iter()
            .find(|a| !image.contains(a))
            .ok_or_else(|| Error::InvalidTable(vec![format!("({shape}): no lone square")]))
    }

    /// β_λ⁻¹(sq) for an addible square other than the lone square.
    fn unbump(&self, shape: &Shape, sq: Square) -> Result<Square> {
        if !shape.is_addible(sq) {
            return Err(Error::NotAddible { shape: shape.clone(), square: sq });
        }
        let image = self.injection(shape)?;
        match image.iter().position(|&a| a == sq) {
            Some(idx) => Ok(shape.removable_squares()[idx]),
            None => Err(Error::LoneSquare { shape: shape.clone(), square: sq }),
        }
    }
}

impl<S: BumpingScheme + ?Sized> BumpingScheme for Box<S> {
    fn name(&self) -> String {
        (**self).name()
    }

    fn injection(&self, shape: &Shape) -> Result<Vec<Square>> {
        (**self).injection(shape)
    }
}

/// Each removable square goes to the addible square one row higher, so the
/// lone square is always at the end of the bottom row. Induces Schensted
/// row insertion.
#[derive(Debug, Clone, Copy, Default)]
pub struct RowScheme;

impl BumpingScheme for RowScheme {
    fn name(&self) -> String {
        "row".into()
    }

    fn injection(&self, shape: &Shape) -> Result<Vec<Square>> {
        Ok(shape
            .removable_squares()
            .into_iter()
            .map(|sq| Square::new(sq.row + 1, shape.row_len(sq.row + 1) + 1))
            .collect())
    }
}

/// The row scheme transported through conjugation: a removable square in
/// column c goes to the addible square in column c + 1, and the lone square
/// tops column 1. Induces column insertion.
#[derive(Debug, Clone, Copy, Default)]
pub struct ColumnScheme;

impl BumpingScheme for ColumnScheme {
    fn name(&self) -> String {
        "column".into()
    }

    fn injection(&self, shape: &Shape) -> Result<Vec<Square>> {
        Ok(shape
            .removable_squares()
            .into_iter()
            .map(|sq| Square::new(shape.col_len(sq.col + 1) + 1, sq.col + 1))
            .collect())
    }
}

/// The k-th lowest removable square goes to the k-th highest addible
/// square. The lone square is again at the end of the bottom row.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReversingScheme;

impl BumpingScheme for ReversingScheme {
    fn name(&self) -> String {
        "reversing".into()
    }

    fn injection(&self, shape: &Shape) -> Result<Vec<Square>> {
        let addible = shape.addible_squares();
        let m = addible.len() - 1;
        Ok((0..m).map(|k| addible[m - k]).collect())
    }
}

/// A pseudorandom injection per shape, determined by `(seed, λ)` alone.
///
/// The addible squares are shuffled by a ChaCha8 stream keyed on the seed
/// and the parts of λ; the first `m` become the images of the removable
/// squares in bottom-to-top order.
#[derive(Debug)]
pub struct RandomScheme {
    seed: u64,
    cache: RwLock<HashMap<Shape, Vec<Square>>>,
}

impl RandomScheme {
    pub fn new(seed: u64) -> Self {
        RandomScheme { seed, cache: RwLock::default() }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn key(&self, shape: &Shape) -> u64 {
        // FNV-1a over the seed and the parts; stable across processes.
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let words = std::iter::once(self.seed)
            .chain(std::iter::once(shape.rows() as u64))
            .chain(shape.parts().iter().map(|&p| p as u64));
        for word in words {
            for byte in word.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(PRIME);
            }
        }
        h
    }

    fn draw(&self, shape: &Shape) -> Vec<Square> {
        let mut addible = shape.addible_squares();
        let m = addible.len() - 1;
        let mut rng = ChaCha8Rng::seed_from_u64(self.key(shape));
        addible.shuffle(&mut rng);
        addible.truncate(m);
        addible
    }
}

impl BumpingScheme for RandomScheme {
    fn name(&self) -> String {
        format!("random:{}", self.seed)
    }

    fn injection(&self, shape: &Shape) -> Result<Vec<Square>> {
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(shape) {
            return Ok(hit.clone());
        }
        let drawn = self.draw(shape);
        Ok(self
            .cache
            .write()
            .expect("cache poisoned")
            .entry(shape.clone())
            .or_insert(drawn)
            .clone())
    }
}

/// An explicit injection for every shape up to `max_size`.
///
/// JSON form: `{"max_size": N, "shapes": {"3,3,2": [[[2,3],[3,3]], …]}}`,
/// each pair mapping a removable square to an addible square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeTable {
    pub max_size: usize,
    pub shapes: BTreeMap<Shape, Vec<(Square, Square)>>,
}

impl SchemeTable {
    /// Tabulates `scheme` on every shape of size `<= max_size`.
    pub fn from_scheme<S: BumpingScheme + ?Sized>(scheme: &S, max_size: usize) -> Result<Self> {
        let mut shapes = BTreeMap::new();
        for n in 1..=max_size {
            for shape in all_partitions(n) {
                let image = scheme.injection(&shape)?;
                let pairs = shape.removable_squares().into_iter().zip(image).collect();
                shapes.insert(shape, pairs);
            }
        }
        Ok(SchemeTable { max_size, shapes })
    }

    /// Lists every problem with the table: missing or oversized shapes,
    /// keys that are not removable, images that are not addible, and
    /// non-injective maps.
    pub fn problems(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for n in 1..=self.max_size {
            for shape in all_partitions(n) {
                if !self.shapes.contains_key(&shape) {
                    problems.push(format!("({shape}): missing"));
                }
            }
        }
        for (shape, pairs) in &self.shapes {
            if shape.size() > self.max_size {
                problems.push(format!("({shape}): larger than max_size {}", self.max_size));
                continue;
            }
            let removable = shape.removable_squares();
            let mut keys: Vec<Square> = pairs.iter().map(|p| p.0).collect();
            keys.sort();
            let mut expected = removable.clone();
            expected.sort();
            if keys != expected {
                problems.push(format!("({shape}): must map exactly the removable squares"));
            }
            for &(_, image) in pairs {
                if !shape.is_addible(image) {
                    problems.push(format!("({shape}): {image} is not addible"));
                }
            }
            let mut images: Vec<Square> = pairs.iter().map(|p| p.1).collect();
            images.sort();
            if images.windows(2).any(|w| w[0] == w[1]) {
                problems.push(format!("({shape}): not injective"));
            }
        }
        problems
    }

    pub fn validate(&self) -> Result<()> {
        match self.problems() {
            p if p.is_empty() => Ok(()),
            p => Err(Error::InvalidTable(p)),
        }
    }
}

/// A scheme read from a validated [`SchemeTable`]. Shapes beyond the table
/// are an error.
#[derive(Debug, Clone)]
pub struct TableScheme {
    table: SchemeTable,
}

impl TableScheme {
    pub fn new(table: SchemeTable) -> Result<Self> {
        table.validate()?;
        Ok(TableScheme { table })
    }

    pub fn table(&self) -> &SchemeTable {
        &self.table
    }
}

impl BumpingScheme for TableScheme {
    fn name(&self) -> String {
        format!("table(max_size={})", self.table.max_size)
    }

    fn injection(&self, shape: &Shape) -> Result<Vec<Square>> {
        if shape.is_empty() {
            return Ok(Vec::new());
        }
        let pairs = self.table.shapes.get(shape).ok_or_else(|| Error::ShapeNotCovered {
            scheme: self.name(),
            shape: shape.clone(),
        })?;
        shape
            .removable_squares()
            .into_iter()
            .map(|r| {
                pairs.iter().find(|p| p.0 == r).map(|p| p.1).ok_or_else(|| {
                    Error::ShapeNotCovered { scheme: self.name(), shape: shape.clone() }
                })
            })
            .collect()
    }
}

/// Built-in scheme names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinScheme {
    Row,
    Column,
    Reversing,
    Random(u64),
}

impl BuiltinScheme {
    pub fn build(self) -> Box<dyn BumpingScheme> {
        match self {
            BuiltinScheme::Row => Box::new(RowScheme),
            BuiltinScheme::Column => Box::new(ColumnScheme),
            BuiltinScheme::Reversing => Box::new(ReversingScheme),
            BuiltinScheme::Random(seed) => Box::new(RandomScheme::new(seed)),
        }
    }
}

impl std::str::FromStr for BuiltinScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "row" => Ok(BuiltinScheme::Row),
            "column" => Ok(BuiltinScheme::Column),
            "reversing" => Ok(BuiltinScheme::Reversing),
            other => other
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(BuiltinScheme::Random)
                .ok_or_else(|| Error::Parse(format!("unknown scheme `{other}`"))),
        }
    }
}

impl fmt::Display for BuiltinScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinScheme::Row => f.write_str("row"),
            BuiltinScheme::Column => f.write_str("column"),
            BuiltinScheme::Reversing => f.write_str("reversing"),
            BuiltinScheme::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}
