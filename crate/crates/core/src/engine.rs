//! The iteration engine: boolean cell states, strategies, and the
//! one-cell-per-step maps that drive everything else in this crate.
//!
//! A system is `N` boolean cells, indexed 1 through `N`. A [`Strategy`] is a
//! finite sequence of cell indices; at each step exactly the cell named by the
//! current strategy term is rewritten through the iteration function, every
//! other cell is left alone. [`step`] performs one such step on a
//! [`SystemPoint`], [`iterate`] composes several.

use std::fmt;

use crate::error::{Error, Result};

/// A fixed-width vector of boolean cells, 1-indexed.
///
/// Two states of different widths are never equal and never combined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitState {
    cells: Vec<bool>,
}

impl BitState {
    /// All-zero state of the given width. Width must be at least 1.
    pub fn zero(width: usize) -> Self {
        assert!(width >= 1, "state width must be at least 1");
        BitState { cells: vec![false; width] }
    }

    /// Builds a state from its cells. The vector must be non-empty.
    pub fn from_cells(cells: Vec<bool>) -> Self {
        assert!(!cells.is_empty(), "state width must be at least 1");
        BitState { cells }
    }

    /// Convenience constructor from 0/1 literals, e.g. `&[0, 1, 1]`.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_cells(bits.iter().map(|&b| b != 0).collect())
    }

    pub fn width(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// Reads cell `k` (1-based).
    pub fn get(&self, k: usize) -> Result<bool> {
        self.check_cell(k)?;
        Ok(self.cells[k - 1])
    }

    /// Returns a copy with cell `k` (1-based) set to `value`.
    pub fn with_cell(&self, k: usize, value: bool) -> Result<BitState> {
        self.check_cell(k)?;
        let mut cells = self.cells.clone();
        cells[k - 1] = value;
        Ok(BitState { cells })
    }

    /// Number of cells in which the two states differ.
    pub fn hamming(&self, other: &BitState) -> Result<u32> {
        if self.width() != other.width() {
            return Err(Error::WidthMismatch { left: self.width(), right: other.width() });
        }
        Ok(self
            .cells
            .iter()
            .zip(&other.cells)
            .filter(|(a, b)| a != b)
            .count() as u32)
    }

    fn check_cell(&self, k: usize) -> Result<()> {
        if k < 1 || k > self.width() {
            return Err(Error::CellOutOfRange { cell: k, width: self.width() });
        }
        Ok(())
    }

    pub(crate) fn set_raw(&mut self, k: usize, value: bool) {
        self.cells[k - 1] = value;
    }
}

impl fmt::Debug for BitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitState(")?;
        for (i, &c) in self.cells.iter().enumerate() {
            if i > 0 && i % 8 == 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", c as u8)?;
        }
        write!(f, ")")
    }
}

/// A finite sequence of cell indices, each in `1..=width`.
///
/// The empty strategy is legal and directs zero iterations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Strategy {
    terms: Vec<usize>,
    width: usize,
}

impl Strategy {
    pub fn new(terms: Vec<usize>, width: usize) -> Result<Self> {
        assert!(width >= 1, "strategy width must be at least 1");
        for &t in &terms {
            if t < 1 || t > width {
                return Err(Error::TermOutOfRange { term: t, width });
            }
        }
        Ok(Strategy { terms, width })
    }

    pub fn empty(width: usize) -> Self {
        Strategy::new(Vec::new(), width).unwrap()
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The strategy term at 1-based position `pos`, if represented.
    pub fn term(&self, pos: usize) -> Option<usize> {
        if pos == 0 {
            return None;
        }
        self.terms.get(pos - 1).copied()
    }

    /// First term of the strategy (the initial function).
    pub fn initial(&self) -> Result<usize> {
        self.terms.first().copied().ok_or(Error::EmptyStrategy)
    }

    /// The strategy with its first term removed (the shift).
    pub fn shift(&self) -> Result<Strategy> {
        if self.terms.is_empty() {
            return Err(Error::EmptyStrategy);
        }
        Ok(Strategy { terms: self.terms[1..].to_vec(), width: self.width })
    }

    /// Expands the strategy cyclically to `len` terms, reading it as one
    /// full period of an infinitely repeating sequence.
    pub fn repeat_to(&self, len: usize) -> Result<Strategy> {
        if self.terms.is_empty() {
            return Err(Error::EmptyStrategy);
        }
        let terms = (0..len).map(|i| self.terms[i % self.terms.len()]).collect();
        Ok(Strategy { terms, width: self.width })
    }
}

/// One point of the phase space: a strategy paired with a state of the same width.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemPoint {
    strategy: Strategy,
    state: BitState,
}

impl SystemPoint {
    pub fn new(strategy: Strategy, state: BitState) -> Result<Self> {
        if strategy.width() != state.width() {
            return Err(Error::WidthMismatch { left: strategy.width(), right: state.width() });
        }
        Ok(SystemPoint { strategy, state })
    }

    pub fn strategy(&self) -> &Strategy {
        &self.strategy
    }

    pub fn state(&self) -> &BitState {
        &self.state
    }

    pub fn width(&self) -> usize {
        self.state.width()
    }
}

/// A named total map on states, width-preserving.
///
/// `Negation` flips every cell; it is the function the chaos results and the
/// hash function are built on. `Identity` leaves the state unchanged and is
/// mostly useful as a null case in tests.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IterationFunction {
    Negation,
    Identity,
}

impl IterationFunction {
    pub fn name(&self) -> &'static str {
        match self {
            IterationFunction::Negation => "negation",
            IterationFunction::Identity => "identity",
        }
    }

    /// Applies the full map to a state.
    pub fn apply(&self, state: &BitState) -> BitState {
        match self {
            IterationFunction::Negation => {
                BitState::from_cells(state.cells().iter().map(|&c| !c).collect())
            }
            IterationFunction::Identity => state.clone(),
        }
    }

    /// Cell `k` of the image, without materializing the whole image.
    /// Must agree with `self.apply(state).get(k)`.
    pub fn image_cell(&self, state: &BitState, k: usize) -> Result<bool> {
        let current = state.get(k)?;
        Ok(match self {
            IterationFunction::Negation => !current,
            IterationFunction::Identity => current,
        })
    }
}

/// Rewrites cell `k` of `state` through `f`, leaving every other cell alone.
pub fn update_cell(f: IterationFunction, k: usize, state: &BitState) -> Result<BitState> {
    let value = f.image_cell(state, k)?;
    state.with_cell(k, value)
}

/// One iteration step: update the cell named by the first strategy term,
/// then shift the strategy.
pub fn step(f: IterationFunction, point: &SystemPoint) -> Result<SystemPoint> {
    if point.strategy().is_empty() {
        return Err(Error::StrategyExhausted { needed: 1, available: 0 });
    }
    let k = point.strategy().initial()?;
    let state = update_cell(f, k, point.state())?;
    SystemPoint::new(point.strategy().shift()?, state)
}

/// `n`-fold composition of [`step`]. `n` may not exceed the strategy length.
pub fn iterate(f: IterationFunction, point: &SystemPoint, n: usize) -> Result<SystemPoint> {
    let available = point.strategy().len();
    if n > available {
        return Err(Error::StrategyExhausted { needed: n, available });
    }
    let mut state = point.state().clone();
    for &k in &point.strategy().terms()[..n] {
        let value = f.image_cell(&state, k)?;
        state.set_raw(k, value);
    }
    let strategy = Strategy {
        terms: point.strategy().terms()[n..].to_vec(),
        width: point.strategy().width(),
    };
    SystemPoint::new(strategy, state)
}
