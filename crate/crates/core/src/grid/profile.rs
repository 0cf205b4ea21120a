//! Whole-row occupancy profiles and the shift-and-intersect kernel that the
//! checkers and the exact solvers share.
//!
//! Bit `j` of a profile is column `j + 1`. Every light rule is phrased on
//! three consecutive rows (above, current, south) so that one evaluation
//! answers the question for a whole row at once.

/// A set of occupied columns in one row.
pub trait Profile: Clone {
    /// All columns set to `value`.
    fn filled(width: usize, value: bool) -> Self;
    fn and(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    /// `self & !other`.
    fn and_not(&self, other: &Self) -> Self;
    /// Bit `j` holds bit `j - 1`; column 1 receives `fill`.
    fn west_neighbors(&self, width: usize, fill: bool) -> Self;
    /// Bit `j` holds bit `j + 1`; the last column receives `fill`.
    fn east_neighbors(&self, width: usize, fill: bool) -> Self;
    fn is_clear(&self) -> bool;
    /// Lowest set column at or after `col`.
    fn first_at_or_after(&self, col: usize) -> Option<usize>;
    fn insert(&mut self, col: usize);
}

#[inline]
pub(crate) fn width_mask(width: usize) -> u64 {
    debug_assert!(width <= 64);
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl Profile for u64 {
    #[inline]
    fn filled(width: usize, value: bool) -> Self {
        if value {
            width_mask(width)
        } else {
            0
        }
    }

    #[inline]
    fn and(&self, other: &Self) -> Self {
        self & other
    }

    #[inline]
    fn or(&self, other: &Self) -> Self {
        self | other
    }

    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }

    #[inline]
    fn west_neighbors(&self, width: usize, fill: bool) -> Self {
        ((self << 1) | fill as u64) & width_mask(width)
    }

    #[inline]
    fn east_neighbors(&self, width: usize, fill: bool) -> Self {
        (self >> 1) | ((fill as u64) << (width - 1))
    }

    #[inline]
    fn is_clear(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn first_at_or_after(&self, col: usize) -> Option<usize> {
        if col >= 64 {
            return None;
        }
        let rest = self >> col;
        (rest != 0).then(|| col + rest.trailing_zeros() as usize)
    }

    #[inline]
    fn insert(&mut self, col: usize) {
        *self |= 1 << col;
    }
}

/// Multi-word row profile for configurations wider than a machine word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowSet {
    words: Vec<u64>,
}

impl RowSet {
    fn word_count(width: usize) -> usize {
        width.div_ceil(64).max(1)
    }

    pub fn empty(width: usize) -> Self {
        Self {
            words: vec![0; Self::word_count(width)],
        }
    }

    /// Builds a profile from a single-word mask (`width <= 64`).
    pub fn from_mask(width: usize, mask: u64) -> Self {
        let mut row = Self::empty(width);
        row.words[0] = mask & width_mask(width.min(64));
        row
    }

    /// The profile as a single-word mask; only meaningful for `width <= 64`.
    pub fn as_mask(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn contains(&self, col: usize) -> bool {
        self.words[col / 64] >> (col % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, col: usize, value: bool) {
        let bit = 1u64 << (col % 64);
        if value {
            self.words[col / 64] |= bit;
        } else {
            self.words[col / 64] &= !bit;
        }
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Occupied columns, 0-based, west to east.
    pub fn columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            })
        })
    }

    fn trim(&mut self, width: usize) {
        let tail = width % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Profile for RowSet {
    fn filled(width: usize, value: bool) -> Self {
        let mut row = Self {
            words: vec![if value { u64::MAX } else { 0 }; Self::word_count(width)],
        };
        row.trim(width);
        row
    }

    fn and(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    fn or(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    fn and_not(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    fn west_neighbors(&self, width: usize, fill: bool) -> Self {
        let mut carry = fill as u64;
        let mut out = self.clone();
        for word in &mut out.words {
            let next = *word >> 63;
            *word = (*word << 1) | carry;
            carry = next;
        }
        out.trim(width);
        out
    }

    fn east_neighbors(&self, width: usize, fill: bool) -> Self {
        let mut carry = 0u64;
        let mut out = self.clone();
        for word in out.words.iter_mut().rev() {
            let next = *word & 1;
            *word = (*word >> 1) | (carry << 63);
            carry = next;
        }
        if fill {
            out.set(width - 1, true);
        }
        out
    }

    fn is_clear(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first_at_or_after(&self, col: usize) -> Option<usize> {
        let mut w = col / 64;
        if w >= self.words.len() {
            return None;
        }
        let mut word = self.words[w] & (u64::MAX << (col % 64));
        loop {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
            w += 1;
            word = *self.words.get(w)?;
        }
    }

    fn insert(&mut self, col: usize) {
        self.set(col, true);
    }
}

/// Row-local light rules for a fixed width and border fill.
///
/// `fill` is the value an off-grid lot to the east, south or west takes:
/// `false` for an open border, `true` for a bricked one. A missing row above
/// is always passed as an empty profile.
#[derive(Clone, Copy, Debug)]
pub struct RowKernel {
    pub width: usize,
    pub fill: bool,
}

impl RowKernel {
    pub fn new(width: usize, fill: bool) -> Self {
        Self { width, fill }
    }

    /// The row standing in for the lots south of the last row.
    pub fn south_border<P: Profile>(&self) -> P {
        P::filled(self.width, self.fill)
    }

    fn west<P: Profile>(&self, row: &P) -> P {
        row.west_neighbors(self.width, self.fill)
    }

    fn east<P: Profile>(&self, row: &P) -> P {
        row.east_neighbors(self.width, self.fill)
    }

    /// Columns whose own lot and both horizontal neighbours are occupied.
    /// A house there is blocked exactly when the lot south of it is occupied.
    pub fn triple<P: Profile>(&self, row: &P) -> P {
        row.and(&self.west(row)).and(&self.east(row))
    }

    /// Houses of `row` that receive no light given the row south of it.
    pub fn blocked<P: Profile>(&self, row: &P, south: &P) -> P {
        self.triple(row).and(south)
    }

    /// P^C: east, west and south of the lot are all occupied.
    pub fn prop_center<P: Profile>(&self, row: &P, south: &P) -> P {
        self.west(row).and(&self.east(row)).and(south)
    }

    /// P^E: the eastern neighbour exists, is occupied, and its other two
    /// light sources (east of it, south of it) are occupied.
    pub fn prop_east<P: Profile>(&self, row: &P, south: &P) -> P {
        let neighbour = row.east_neighbors(self.width, false);
        let beyond = self.east(&self.east(row));
        let below = south.east_neighbors(self.width, false);
        neighbour.and(&beyond).and(&below)
    }

    /// P^W, the mirror image of [`Self::prop_east`].
    pub fn prop_west<P: Profile>(&self, row: &P, south: &P) -> P {
        let neighbour = row.west_neighbors(self.width, false);
        let beyond = self.west(&self.west(row));
        let below = south.west_neighbors(self.width, false);
        neighbour.and(&beyond).and(&below)
    }

    /// P^N: the northern neighbour is occupied with both of its horizontal
    /// neighbours occupied, so the lot below is its only light.
    pub fn prop_north<P: Profile>(&self, above: &P) -> P {
        self.triple(above)
    }

    /// Lots of `row` satisfying P^E, P^W or P^C; the part of the maximality
    /// condition that does not depend on the row above.
    pub fn supported_from_row<P: Profile>(&self, row: &P, south: &P) -> P {
        self.prop_east(row, south)
            .or(&self.prop_west(row, south))
            .or(&self.prop_center(row, south))
    }

    /// Empty lots that still need P^N from the row above to stay empty.
    pub fn needs_north<P: Profile>(&self, row: &P, south: &P) -> P {
        P::filled(self.width, true)
            .and_not(row)
            .and_not(&self.supported_from_row(row, south))
    }

    /// Empty lots where a house could be added without blocking anything.
    pub fn addable<P: Profile>(&self, above: &P, row: &P, south: &P) -> P {
        self.needs_north(row, south)
            .and_not(&self.prop_north(above))
    }

    /// Permissible and maximal on this row given both neighbours.
    pub fn row_is_settled<P: Profile>(&self, above: &P, row: &P, south: &P) -> bool {
        self.blocked(row, south).is_clear() && self.addable(above, row, south).is_clear()
    }

    fn neighbours<P: Profile>(&self, rows: &[P], i: usize) -> (P, P) {
        let above = if i == 0 {
            P::filled(self.width, false)
        } else {
            rows[i - 1].clone()
        };
        let south = rows.get(i + 1).cloned().unwrap_or_else(|| self.south_border());
        (above, south)
    }

    /// No house in the grid (rows listed north first) is blocked.
    pub fn grid_is_permissible<P: Profile>(&self, rows: &[P]) -> bool {
        (0..rows.len()).all(|i| {
            let (_, south) = self.neighbours(rows, i);
            self.blocked(&rows[i], &south).is_clear()
        })
    }

    pub fn grid_is_maximal<P: Profile>(&self, rows: &[P]) -> bool {
        (0..rows.len()).all(|i| {
            let (above, south) = self.neighbours(rows, i);
            self.row_is_settled(&above, &rows[i], &south)
        })
    }

    /// Adds a house on every addable lot, scanning west to east within each
    /// row and rows north to south. Addability only shrinks as houses are
    /// added, so one pass leaves a permissible grid maximal.
    pub fn complete_greedily<P: Profile>(&self, rows: &mut [P]) {
        for i in 0..rows.len() {
            let mut col = 0;
            loop {
                let (above, south) = self.neighbours(rows, i);
                let open = self.addable(&above, &rows[i], &south);
                match open.first_at_or_after(col) {
                    Some(j) => {
                        rows[i].insert(j);
                        col = j + 1;
                    }
                    None => break,
                }
            }
        }
    }
}
