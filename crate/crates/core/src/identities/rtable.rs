use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::polyring::IntPoly;

/// How an `r_{m,n}` value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    DeterminantRatio,
    Recurrence,
    ClosedForm,
    SumFormula,
    SeriesInversion,
    Condensation,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::DeterminantRatio => "determinant-ratio",
            Route::Recurrence => "recurrence",
            Route::ClosedForm => "closed-form",
            Route::SumFormula => "sum-formula",
            Route::SeriesInversion => "series-inversion",
            Route::Condensation => "condensation",
        })
    }
}

#[derive(Debug, Clone)]
struct Cell {
    value: IntPoly,
    routes: BTreeSet<Route>,
}

/// Append-only table of `r_{m,n}` values. Inserting a value a second time,
/// along any route, must reproduce it exactly; independent cells may be
/// filled from several threads.
#[derive(Debug, Default)]
pub struct RTable {
    cells: RwLock<BTreeMap<(usize, usize), Cell>>,
}

impl RTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&self, m: usize, n: usize, route: Route, value: IntPoly) -> Result<()> {
        let mut cells = self.cells.write().expect("r table lock poisoned");
        match cells.get_mut(&(m, n)) {
            Some(cell) if cell.value != value => Err(Error::TableConflict {
                m,
                n,
                existing: cell.value.clone(),
                inserted: value,
            }),
            Some(cell) => {
                cell.routes.insert(route);
                Ok(())
            }
            None => {
                cells.insert(
                    (m, n),
                    Cell {
                        value,
                        routes: BTreeSet::from([route]),
                    },
                );
                Ok(())
            }
        }
    }

    pub fn get(&self, m: usize, n: usize) -> Option<IntPoly> {
        self.cells.read().expect("r table lock poisoned").get(&(m, n)).map(|c| c.value.clone())
    }

    pub fn require(&self, m: usize, n: usize) -> Result<IntPoly> {
        self.get(m, n).ok_or(Error::MissingTableEntry { m, n })
    }

    pub fn routes(&self, m: usize, n: usize) -> Vec<Route> {
        self.cells
            .read()
            .expect("r table lock poisoned")
            .get(&(m, n))
            .map(|c| c.routes.iter().copied().collect())
            .unwrap_or_default()
    }

    /// At least two routes produced this value.
    pub fn is_verified(&self, m: usize, n: usize) -> bool {
        self.routes(m, n).len() >= 2
    }

    pub fn len(&self) -> usize {
        self.cells.read().expect("r table lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshot of `(m, n, value, routes)` in key order.
    pub fn entries(&self) -> Vec<(usize, usize, IntPoly, Vec<Route>)> {
        self.cells
            .read()
            .expect("r table lock poisoned")
            .iter()
            .map(|(&(m, n), c)| (m, n, c.value.clone(), c.routes.iter().copied().collect()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_routes_must_agree() {
        let t = RTable::new();
        let r11 = IntPoly::from_i64s(&[-1, 1, 1]);
        t.insert(1, 1, Route::DeterminantRatio, r11.clone()).unwrap();
        assert!(!t.is_verified(1, 1));
        t.insert(1, 1, Route::ClosedForm, r11.clone()).unwrap();
        assert!(t.is_verified(1, 1));
        assert_eq!(t.routes(1, 1), vec![Route::DeterminantRatio, Route::ClosedForm]);
        let err = t.insert(1, 1, Route::Recurrence, IntPoly::one()).unwrap_err();
        assert!(matches!(err, Error::TableConflict { m: 1, n: 1, .. }));
        assert_eq!(t.get(1, 1), Some(r11));
        assert_eq!(t.require(4, 4), Err(Error::MissingTableEntry { m: 4, n: 4 }));
    }

    #[test]
    fn concurrent_fills() {
        let t = RTable::new();
        std::thread::scope(|s| {
            for m in 0..4usize {
                let t = &t;
                s.spawn(move || {
                    for n in 0..8usize {
                        t.insert(m, n, Route::Recurrence, IntPoly::monomial(1, m * n)).unwrap();
                        t.insert(m, n, Route::ClosedForm, IntPoly::monomial(1, m * n)).unwrap();
                    }
                });
            }
        });
        assert_eq!(t.len(), 32);
        assert!(t.entries().iter().all(|(_, _, _, routes)| routes.len() == 2));
    }
}
