use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{ProblemKind, Sense};

pub type ExactRatio = Ratio<u64>;

/// `opt / value` for maximization and `value / opt` for minimization, as an
/// exact reduced fraction. Both zero (the empty graph) gives 1.
pub fn approximation_ratio(kind: ProblemKind, opt: usize, achieved: usize) -> Result<ExactRatio> {
    match (opt, achieved) {
        (0, 0) => return Ok(Ratio::from_integer(1)),
        (0, _) | (_, 0) => return Err(Error::UndefinedRatio { opt, achieved }),
        _ => {}
    }
    let (num, den) = match kind.sense() {
        Sense::Max => (opt, achieved),
        Sense::Min => (achieved, opt),
    };
    Ok(Ratio::new(num as u64, den as u64))
}

pub fn ratio_to_f64(ratio: &ExactRatio) -> f64 {
    *ratio.numer() as f64 / *ratio.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula() {
        assert_eq!(approximation_ratio(ProblemKind::Mis, 9, 5).unwrap(), Ratio::new(9, 5));
        assert_eq!(approximation_ratio(ProblemKind::Mds, 3, 3).unwrap(), Ratio::from_integer(1));
        assert_eq!(approximation_ratio(ProblemKind::Mids, 2, 3).unwrap(), Ratio::new(3, 2));
        assert_eq!(approximation_ratio(ProblemKind::Mis, 4, 2).unwrap(), Ratio::from_integer(2));
    }

    #[test]
    fn degenerate_zeros() {
        for kind in ProblemKind::ALL {
            assert_eq!(approximation_ratio(kind, 0, 0).unwrap(), Ratio::from_integer(1));
            assert!(approximation_ratio(kind, 0, 2).is_err());
        }
        assert!(approximation_ratio(ProblemKind::Mis, 3, 0).is_err());
    }
}
