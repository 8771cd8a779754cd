//! Small worked instances used by tests, examples and the CLI.

use crate::election::Election;

/// Four alternatives, three voters:
/// `a1>a2>a3>a4`, `a1>a2>a4>a3`, `a3>a2>a1>a4`.
/// Its unique Kemeny ranking is `a1>a2>a3>a4` with score 4.
pub fn kemeny_example() -> Election {
    Election::from_rankings(4, &[&[0, 1, 2, 3], &[0, 1, 3, 2], &[2, 1, 0, 3]]).expect("valid fixture")
}

/// Five alternatives, three voters, single-peaked along `a1 a2 a3 a4 a5`
/// and along `a4 a3 a2 a1 a5`.
pub fn single_peaked_example() -> Election {
    Election::from_rankings(5, &[&[0, 1, 2, 3, 4], &[2, 3, 1, 0, 4], &[2, 1, 0, 3, 4]])
        .expect("valid fixture")
}
